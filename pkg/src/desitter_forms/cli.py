"""Console entry point: classify, sweep, reduce, orbit, farey, render.

Exit codes: 0 on success (an empty class list is still success), 1 for
usage errors and invalid values, 2 when a discriminant exceeds the
DESITTER_MAX_DELTA bound (default 10**6), 3 when writing the output
file fails.

Sweeps emit per-discriminant results in ascending order whether run
serially or with --parallel N; the bytes are identical either way.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .action import LETTERS, apply_word, mirror_word
from .classify import enumerate_classes, reduce_form
from .farey import (
    generation_of_rational,
    pythagorean_of_rational,
    rational_of_word,
    word_of_rational,
)
from .forms import Form, classify_discriminant, discriminant, form, to_kds
from .partition import classify_region
from .render import SceneSpec, render_scene

_DEFAULT_MAX_DELTA = 10**6

_NOTE_EMPTY = "no forms: discriminant is 2 or 3 mod 4"
_NOTE_PARABOLIC = (
    "parabolic: each nonzero form is a*(alpha*x+beta*y)^2, classified by "
    "its signed content a rather than a finite class list"
)


class _UsageError(Exception):
    pass


class _BoundsError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _max_delta() -> int:
    raw = os.environ.get("DESITTER_MAX_DELTA", "").strip()
    if not raw:
        return _DEFAULT_MAX_DELTA
    return int(raw)


def _check_bound(*deltas: int) -> None:
    cap = _max_delta()
    for d in deltas:
        if abs(d) > cap:
            raise _BoundsError(
                "discriminant %d exceeds the bound %d (DESITTER_MAX_DELTA)" % (d, cap)
            )


def _classify_payload(delta: int) -> Dict:
    """JSON-ready summary of one discriminant; the sweep worker."""
    d = classify_discriminant(delta)
    classes = []
    for c in enumerate_classes(d):
        classes.append(
            {
                "representative": list(c.representative),
                "cycle_or_chain": [list(p) for p in c.points],
                "word": c.word,
                "tA": c.tA,
                "tB": c.tB,
                "n_upper": c.n_upper,
                "n_lower": c.n_lower,
                "symmetry": c.symmetry,
            }
        )
    if delta % 4 in (2, 3):
        note = _NOTE_EMPTY
    elif delta == 0:
        note = _NOTE_PARABOLIC
    else:
        note = ""
    return {"discriminant": delta, "kind": d.kind, "classes": classes, "note": note}


_CSV_HEADER = "delta,kind,num_classes,class_index,rep_m,rep_n,rep_k,len,tA,tB,symmetry"


def _csv_rows(payload: Dict) -> List[str]:
    rows = []
    classes = payload["classes"]
    for i, c in enumerate(classes):
        rm, rn, rk = c["representative"]
        rows.append(
            "%d,%s,%d,%d,%d,%d,%d,%d,%d,%d,%s"
            % (
                payload["discriminant"],
                payload["kind"],
                len(classes),
                i,
                rm,
                rn,
                rk,
                len(c["cycle_or_chain"]),
                c["tA"],
                c["tB"],
                c["symmetry"],
            )
        )
    return rows


def _text_block(payload: Dict) -> List[str]:
    classes = payload["classes"]
    lines = [
        "discriminant %d (%s): %d classes"
        % (payload["discriminant"], payload["kind"], len(classes))
    ]
    if payload["note"]:
        lines.append("  note: %s" % payload["note"])
    for i, c in enumerate(classes):
        lines.append(
            "  class %d: rep=(%d,%d,%d) points=%d word=%s tA=%d tB=%d "
            "n_upper=%d n_lower=%d symmetry=%s"
            % (
                i,
                c["representative"][0],
                c["representative"][1],
                c["representative"][2],
                len(c["cycle_or_chain"]),
                c["word"] or "-",
                c["tA"],
                c["tB"],
                c["n_upper"],
                c["n_lower"],
                c["symmetry"],
            )
        )
    return lines


def _format_payloads(payloads: List[Dict], fmt: str) -> str:
    if fmt == "json":
        doc = payloads[0] if len(payloads) == 1 else payloads
        return json.dumps(doc, indent=2)
    n_classes = sum(len(p["classes"]) for p in payloads)
    summary = "# summary: deltas=%d classes=%d" % (len(payloads), n_classes)
    if fmt == "csv":
        lines = [_CSV_HEADER]
        for p in payloads:
            lines.extend(_csv_rows(p))
        lines.append(summary)
        return "\n".join(lines)
    lines = []
    for p in payloads:
        lines.extend(_text_block(p))
    lines.append(summary)
    return "\n".join(lines)


def _cmd_classify(args) -> str:
    _check_bound(args.delta)
    return _format_payloads([_classify_payload(args.delta)], args.format)


def _cmd_sweep(args) -> str:
    if args.dmin > args.dmax:
        raise ValueError("empty range: %d > %d" % (args.dmin, args.dmax))
    _check_bound(args.dmin, args.dmax)
    deltas = range(args.dmin, args.dmax + 1)
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            payloads = list(pool.map(_classify_payload, deltas))
    else:
        payloads = [_classify_payload(d) for d in deltas]
    return _format_payloads(payloads, args.format)


def _cmd_reduce(args) -> str:
    f = form(args.m, args.n, args.k)
    d = discriminant(f)
    _check_bound(d)
    label = classify_region(to_kds(f), classify_discriminant(d))
    reduced, word = reduce_form(f)
    if args.format == "json":
        return json.dumps(
            {
                "form": list(f),
                "discriminant": d,
                "region": label.serialize(),
                "reduced": list(reduced),
                "word": word,
            },
            indent=2,
        )
    return "input (%d,%d,%d) discriminant %d region %s\nreduced (%d,%d,%d) word %s" % (
        f.m, f.n, f.k, d, label.serialize(), reduced.m, reduced.n, reduced.k,
        word or "-",
    )


def _cmd_orbit(args) -> str:
    bad = set(args.word) - set(LETTERS)
    if bad:
        raise ValueError("word letters must come from %s" % LETTERS)
    f = form(args.m, args.n, args.k)
    image = apply_word(f, args.word)
    if args.format == "json":
        return json.dumps(
            {
                "form": list(f),
                "kds": list(to_kds(f)),
                "word": args.word,
                "image": list(image),
                "image_kds": list(to_kds(image)),
            },
            indent=2,
        )
    return "form (%d,%d,%d) kds (%d,%d,%d)\nword %s\nimage (%d,%d,%d) kds (%d,%d,%d)" % (
        (*f, *to_kds(f), args.word or "-", *image, *to_kds(image))
    )


def _parse_fraction(text: str):
    p_str, _, q_str = text.partition("/")
    p, q = int(p_str), int(q_str)
    if q < 0:
        p, q = -p, -q
    return p, q


def _cmd_farey(args) -> str:
    arg = args.value
    if "/" in arg:
        p, q = _parse_fraction(arg)
        if p < 0:
            word = mirror_word(word_of_rational(q, -p))
            K, D, S = pythagorean_of_rational(q, -p)
            num, den, triple, gen = p, q, (-K, -D, S), generation_of_rational(q, -p)
        else:
            word = word_of_rational(p, q)
            num, den, triple, gen = p, q, tuple(pythagorean_of_rational(p, q)), (
                generation_of_rational(p, q))
    elif arg and set(arg) <= set("AB"):
        word = arg
        num, den = rational_of_word(arg)
        triple = tuple(pythagorean_of_rational(num, den))
        gen = generation_of_rational(num, den)
    elif arg and set(arg) <= set("ab"):
        word = arg
        p, q = rational_of_word(mirror_word(arg))
        K, D, S = pythagorean_of_rational(p, q)
        num, den, triple, gen = -q, p, (-K, -D, S), generation_of_rational(p, q)
    else:
        raise ValueError(
            "expected a fraction like 3/2 or a one-case word over AB or ab, got %r"
            % (arg,)
        )
    if args.format == "json":
        return json.dumps(
            {
                "word": word,
                "numerator": num,
                "denominator": den,
                "triple": list(triple),
                "generation": gen,
            },
            indent=2,
        )
    return "word=%s fraction=%d/%d triple=(%d,%d,%d) generation=%d" % (
        (word, num, den) + tuple(triple) + (gen,)
    )


def _cmd_render(args) -> str:
    _check_bound(args.delta)
    spec = SceneSpec(
        discriminant=args.delta,
        model=args.model,
        max_generation=args.max_generation,
        size=args.size,
        seam=args.seam,
        hemisphere=args.hemisphere,
    )
    classes = enumerate_classes(classify_discriminant(args.delta))
    return render_scene(spec, classes)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="desitter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("json", "csv", "text")):
        p.add_argument("--format", choices=choices, default="text")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("classify", help="enumerate the classes of one discriminant")
    p.add_argument("delta", type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("sweep", help="classify every discriminant in a range")
    p.add_argument("dmin", type=int)
    p.add_argument("dmax", type=int)
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    add_format(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("reduce", help="descend a form to its normal position")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_format(p, choices=("json", "text"))
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("orbit", help="apply a word to a form")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--word", default="", help="letters over %s, rightmost first" % LETTERS)
    add_format(p, choices=("json", "text"))
    p.set_defaults(handler=_cmd_orbit)

    p = sub.add_parser("farey", help="translate between words, fractions and triples")
    p.add_argument("value", help="a fraction like 3/2 (or -3/2), or a word like AB")
    add_format(p, choices=("json", "text"))
    p.set_defaults(handler=_cmd_farey)

    p = sub.add_parser("render", help="draw a scene as SVG")
    p.add_argument("delta", type=int)
    p.add_argument("--model", choices=("disc", "cylinder", "eclipse"), required=True)
    p.add_argument("--max-generation", type=int, default=3)
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--seam", type=float, default=0.0)
    p.add_argument("--hemisphere", choices=("upper", "lower"), default="upper")
    p.add_argument("--out", default=None, help="write the SVG to this file")
    p.set_defaults(handler=_cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    try:
        text = args.handler(args)
    except _BoundsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    try:
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
                if not text.endswith("\n"):
                    fh.write("\n")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
