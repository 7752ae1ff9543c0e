"""Class enumeration per discriminant: cycles, chains, and reductions.

For a positive non-square discriminant every good point of the fundamental
region H0 = {m>0, n<0} walks a periodic A/B-itinerary: with s = m+n+k,
A keeps the point in H0 when s < 0 and B keeps it there when s > 0,
while the other generator exits to a first-generation strip.  The walk's
letter counts (tA, tB) equal the per-domain point counts of the class
(tB in each upper domain, tA in each lower one).

For square discriminants rho^2 the itineraries are finite chains that
enter from the boundary segment {(r,0,-rho)} and exit to {(r,0,rho)} and
{(0,-r,-rho)}; together with the two apexes (0,0,+-rho) they account for
every good point of the closure of H0.

Negative discriminants get the classical reduced-representative
enumeration; zero-discriminant forms collapse to a*x^2 individually.
"""

from math import gcd, isqrt
from typing import List, NamedTuple, Optional, Tuple

from .action import Sl2, apply_generator, apply_tmatrix, lift_sl2
from .forms import (
    Discriminant,
    Form,
    apply_involution,
    check_range,
    discriminant,
)
from .partition import STRIP_STEP, descend, quadrant_family

SYMMETRY_TAGS = (
    "asymmetric",
    "k-symmetric",
    "m-plus-n-symmetric",
    "antisymmetric",
    "supersymmetric",
)


class Cycle(NamedTuple):
    points: Tuple[Form, ...]
    word: str
    tA: int
    tB: int


class Chain(NamedTuple):
    points: Tuple[Form, ...]
    word: str
    tA: int
    tB: int
    entry: Tuple[Form, Form]
    exit: Tuple[Form, Form]
    label: int


class OrbitClass(NamedTuple):
    """One equivalence class of forms, with its itinerary payload.

    kind is "cycle", "chain", "apex", or "elliptic".  points holds the
    cycle, the chain interior, the two apexes, or the single reduced
    elliptic representative.  boundary holds a chain's entry and exit
    forms.  n_upper and n_lower are the per-domain point counts.
    label is the square-case class index (m of the exit point on the
    k>0, n=0 segment; 0 for the apex class).
    """

    discriminant: int
    kind: str
    representative: Form
    points: Tuple[Form, ...]
    word: str
    tA: int
    tB: int
    n_upper: int
    n_lower: int
    symmetry: str
    label: Optional[int] = None
    boundary: Tuple[Form, ...] = ()


def in_h0(f: Form) -> bool:
    return f.m > 0 and f.n < 0


def _divisors(x: int) -> List[int]:
    small, large = [], []
    i = 1
    while i * i <= x:
        if x % i == 0:
            small.append(i)
            if i != x // i:
                large.append(x // i)
        i += 1
    return small + large[::-1]


def enumerate_h0(d: Discriminant, include_boundary: bool = False) -> List[Form]:
    """All good points of H0 (and optionally its boundary) for d > 0.

    Interior points come from k^2 < d with k^2 = d (mod 4) and the
    divisor pairs of (d - k^2)/4; they are sorted by (k, m).  With the
    flag set and d a square, the boundary segments (r,0,+-rho) and
    (0,-r,+-rho) for 0 < r < rho plus the two apexes are appended.
    """
    if d.value <= 0:
        raise ValueError("H0 enumeration needs a positive discriminant")
    out = []
    for k in range(-isqrt(d.value), isqrt(d.value) + 1):
        if k * k >= d.value or (d.value - k * k) % 4 != 0:
            continue
        p = (d.value - k * k) // 4
        for m in _divisors(p):
            out.append(Form(m, -(p // m), k))
    out.sort(key=lambda f: (f.k, f.m))
    if include_boundary and d.kind == "hyperbolic-square":
        rho = d.root
        edge = []
        for r in range(1, rho):
            for sk in (rho, -rho):
                edge.append(Form(r, 0, sk))
                edge.append(Form(0, -r, sk))
        edge.append(Form(0, 0, rho))
        edge.append(Form(0, 0, -rho))
        edge.sort(key=lambda f: (f.k, f.m, f.n))
        out.extend(edge)
    return out


def seed_point(d: Discriminant) -> Form:
    """A guaranteed good point of H0: (d/4,-1,0) or ((d-1)/4,-1,1).

    Only discriminants = 0 or 1 (mod 4) carry forms at all.  Cycle
    walks additionally want d non-square; the seed itself is valid for
    squares too.
    """
    if d.value <= 0:
        raise ValueError("seed point needs a positive discriminant")
    if d.value % 4 == 0:
        return Form(d.value // 4, -1, 0)
    if d.value % 4 == 1:
        return Form((d.value - 1) // 4, -1, 1)
    raise ValueError("no form has discriminant %d (= 2 or 3 mod 4)" % d.value)


def _step_in_h0(f: Form) -> Tuple[str, Form]:
    """The unique generator that keeps f inside H0, asserted unique."""
    fa = apply_generator(f, "A")
    fb = apply_generator(f, "B")
    a_in, b_in = in_h0(fa), in_h0(fb)
    assert a_in != b_in, "itinerary tie at %r" % (f,)
    return ("A", fa) if a_in else ("B", fb)


def cycle_of(f: Form) -> Cycle:
    """The periodic itinerary through f, for non-square d > 0."""
    d = discriminant(f)
    kind = "hyperbolic-nonsquare"
    r = isqrt(d) if d > 0 else 0
    if d <= 0 or r * r == d:
        raise ValueError("cycles need a positive non-square discriminant, got %d" % d)
    if not in_h0(f):
        raise ValueError("cycle start %r is not in H0" % (f,))
    cap = d + 16
    points = [f]
    letters = []
    cur = f
    while True:
        letter, nxt = _step_in_h0(cur)
        letters.append(letter)
        if nxt == f:
            break
        points.append(nxt)
        cur = nxt
        if len(points) > cap:
            raise AssertionError("runaway itinerary from %r" % (f,))
    word = "".join(letters)
    return Cycle(tuple(points), word, word.count("A"), word.count("B"))


def chain_of(start: Form) -> Chain:
    """The finite itinerary seeded from a boundary point (r,0,-rho).

    Applies A once to enter H0, then walks like a cycle until s = m+n+k
    hits zero, where A exits to (r',0,rho) and B to (0,-r'',-rho).
    entry holds (Abar, Bbar) images of the first interior point, exit
    the (A, B) images of the last; label is m of the A-exit.
    """
    if start.n != 0 or start.m <= 0 or start.k >= 0 or start.m >= -start.k:
        raise ValueError("chain start %r is not on the entry segment" % (start,))
    cur = apply_generator(start, "A")
    assert in_h0(cur)
    points = [cur]
    letters = []
    while cur.m + cur.n + cur.k != 0:
        letter, cur = _step_in_h0(cur)
        letters.append(letter)
        points.append(cur)
        assert len(points) <= start.k * start.k + 16
    word = "".join(letters)
    first, last = points[0], points[-1]
    entry = (apply_generator(first, "a"), apply_generator(first, "b"))
    exit_ = (apply_generator(last, "A"), apply_generator(last, "B"))
    assert entry[0] == start
    assert exit_[0].n == 0 and exit_[0].k > 0
    assert exit_[1].m == 0 and exit_[1].k < 0
    return Chain(
        tuple(points), word, word.count("A"), word.count("B"), entry, exit_, exit_[0].m
    )


def _set_symmetry(point_set) -> str:
    """Which involutions preserve the set: none, one, or (then all) three."""
    held = []
    for kind in ("conjugate", "adjoint", "antipodal"):
        if all(apply_involution(f, kind) in point_set for f in point_set):
            held.append(kind)
    if len(held) >= 2:
        return "supersymmetric"
    if not held:
        return "asymmetric"
    return {
        "conjugate": "k-symmetric",
        "adjoint": "m-plus-n-symmetric",
        "antipodal": "antisymmetric",
    }[held[0]]


def _gauss_reduce(a: int, b: int, c: int) -> Tuple[int, int, int]:
    """Classical reduction of a positive-definite (a, b, c) triple
    (meaning ax^2 + bxy + cy^2) to |b| <= a <= c with the edge rule
    b >= 0 when |b| = a or a = c."""
    assert a > 0 and c > 0
    while True:
        if b <= -a or b > a:
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            t = (r - b) // (2 * a)
            c = a * t * t + b * t + c
            b = r
        if a > c:
            a, b, c = c, -b, a
            continue
        if b < 0 and (-b == a or a == c):
            b = -b
        return (a, b, c)


def _reduce_elliptic(f: Form) -> Form:
    """Canonical reduced representative of an elliptic form's class."""
    neg = f.m < 0
    a, b, c = (-f.m, -f.k, -f.n) if neg else (f.m, f.k, f.n)
    a, b, c = _gauss_reduce(a, b, c)
    if neg:
        a, b, c = -a, -b, -c
    return Form(a, c, b)


def symmetry_type(c: OrbitClass) -> str:
    """Re-derive the symmetry tag of a class from its payload."""
    if c.kind == "elliptic":
        conj = apply_involution(c.representative, "conjugate")
        if _reduce_elliptic(conj) == c.representative:
            return "k-symmetric"
        return "asymmetric"
    return _set_symmetry(set(c.points) | set(c.boundary))


def _rotate_to_representative(cyc: Cycle) -> Cycle:
    rep = min(cyc.points, key=lambda f: (f.k, f.m, f.n))
    j = cyc.points.index(rep)
    return Cycle(
        cyc.points[j:] + cyc.points[:j], cyc.word[j:] + cyc.word[:j], cyc.tA, cyc.tB
    )


def _class_of_cycle(dval: int, cyc: Cycle) -> OrbitClass:
    cyc = _rotate_to_representative(cyc)
    return OrbitClass(
        discriminant=dval,
        kind="cycle",
        representative=cyc.points[0],
        points=cyc.points,
        word=cyc.word,
        tA=cyc.tA,
        tB=cyc.tB,
        n_upper=cyc.tB,
        n_lower=cyc.tA,
        symmetry=_set_symmetry(set(cyc.points)),
    )


def _class_of_chain(dval: int, ch: Chain) -> OrbitClass:
    rep = min(ch.points, key=lambda f: (f.k, f.m, f.n))
    boundary = ch.entry + ch.exit
    return OrbitClass(
        discriminant=dval,
        kind="chain",
        representative=rep,
        points=ch.points,
        word=ch.word,
        tA=ch.tA,
        tB=ch.tB,
        n_upper=ch.tB,
        n_lower=ch.tA,
        symmetry=_set_symmetry(set(ch.points) | set(boundary)),
        label=ch.label,
        boundary=boundary,
    )


def _apex_class(dval: int, rho: int) -> OrbitClass:
    apexes = (Form(0, 0, rho), Form(0, 0, -rho))
    return OrbitClass(
        discriminant=dval,
        kind="apex",
        representative=apexes[0],
        points=apexes,
        word="",
        tA=0,
        tB=0,
        n_upper=0,
        n_lower=0,
        symmetry=_set_symmetry(set(apexes)),
        label=0,
    )


def enumerate_classes_elliptic(d: Discriminant) -> List[OrbitClass]:
    """Reduced positive-definite representatives for d < 0.

    Scans |k| <= m <= n with k >= 0 on the edge cases |k| = m or m = n,
    bounded by 3k^2 <= -d.  Residues 2 and 3 mod 4 carry no forms.
    """
    if d.value >= 0:
        raise ValueError("elliptic enumeration needs a negative discriminant")
    if d.value % 4 not in (0, 1):
        return []
    out = []
    kmax = isqrt(-d.value // 3)
    for k in range(-kmax, kmax + 1):
        if (k - d.value) % 2 != 0:
            continue
        mn = (k * k - d.value) // 4
        for m in _divisors(mn):
            n = mn // m
            if not (abs(k) <= m <= n):
                continue
            if k < 0 and (-k == m or m == n):
                continue
            rep = Form(m, n, k)
            out.append(
                OrbitClass(
                    discriminant=d.value,
                    kind="elliptic",
                    representative=rep,
                    points=(rep,),
                    word="",
                    tA=0,
                    tB=0,
                    n_upper=1,
                    n_lower=1,
                    symmetry="",
                )
            )
    out.sort(key=lambda c: (c.representative.m, c.representative.n, c.representative.k))
    return [c._replace(symmetry=symmetry_type(c)) for c in out]


def enumerate_classes(d: Discriminant) -> List[OrbitClass]:
    """Every class of the discriminant, deterministically ordered.

    Non-square d > 0: the cycles through enumerate_h0, ordered by their
    lexicographically least (k,m,n) representative.  Square d = rho^2:
    the apex class (label 0) followed by the rho-1 chain classes in
    label order.  d < 0: the elliptic list.  d = 0: empty (parabolic
    classes are indexed by an integer rule, not a finite list).
    """
    if d.value == 0:
        return []
    if d.value < 0:
        return enumerate_classes_elliptic(d)
    if d.kind == "hyperbolic-square":
        rho = d.root
        chains = [chain_of(Form(r, 0, -rho)) for r in range(1, rho)]
        classes = [_apex_class(d.value, rho)]
        classes.extend(
            _class_of_chain(d.value, ch) for ch in sorted(chains, key=lambda ch: ch.label)
        )
        return classes
    seen = set()
    classes = []
    for p in enumerate_h0(d):
        if p in seen:
            continue
        cyc = cycle_of(p)
        seen.update(cyc.points)
        classes.append(_class_of_cycle(d.value, cyc))
    classes.sort(key=lambda c: (c.representative.k, c.representative.m, c.representative.n))
    return classes


def reduce_form(f: Form) -> Tuple[Form, str]:
    """Descend f to its normal position, with a replayable certificate.

    The result lies in H0, H0R, or (square case) on a boundary segment
    or apex; the returned word satisfies apply_word(f, word) == result.
    Points already in normal position return unchanged with the empty
    word.
    """
    d = discriminant(f)
    if d <= 0:
        raise ValueError("reduction needs a positive discriminant, got %d" % d)
    if (f.m > 0 and f.n < 0) or (f.m < 0 and f.n > 0):
        return f, ""
    family = quadrant_family(f)
    terminal, applied, _ = descend(f, family)
    if terminal.m != 0 and terminal.n != 0:
        step = STRIP_STEP[family]
        terminal = apply_generator(terminal, step)
        applied += step
    return terminal, applied[::-1]


def classify_parabolic(f: Form) -> Tuple[int, Sl2]:
    """Write a zero-discriminant form as a*(alpha*x + beta*y)^2.

    Returns the signed content a and a determinant-one matrix L whose
    lifted action carries f exactly onto (a, 0, 0).
    """
    if f == (0, 0, 0):
        raise ValueError("the zero form is its own degenerate class")
    if discriminant(f) != 0:
        raise ValueError("form %r is not parabolic" % (f,))
    g = gcd(gcd(abs(f.m), abs(f.n)), abs(f.k))
    lead = f.m if f.m != 0 else f.n
    a = g if lead > 0 else -g
    alpha = isqrt(f.m // a)
    beta = isqrt(f.n // a)
    if f.k != 2 * a * alpha * beta:
        beta = -beta
    assert f.k == 2 * a * alpha * beta, "not a perfect square form: %r" % (f,)
    # extended Euclid for alpha*delta - beta*gamma = 1
    old_r, r = alpha, beta
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    assert old_r == 1, "alpha and beta are not coprime"
    delta, gamma = old_u, -old_v
    L: Sl2 = (delta, -beta, -gamma, alpha)
    check_range(*L)
    assert apply_tmatrix(lift_sl2(L), f) == Form(a, 0, 0)
    return a, L
