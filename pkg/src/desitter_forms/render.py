"""Deterministic SVG scenes: disc tiling, unrolled cylinder, eclipse ring.

The SVG is assembled by hand so output is byte-stable across runs.
Figure convention: screen x is the K direction and screen y is the D
direction (a reflection across the diagonal of the (D, K) chart); this
is recorded in the <desc> of every scene.

Models
  disc      d < 0   ideal-triangle tiling of the unit disc, one tile per
                    positive word up to the depth plus the R mirror of
                    each, class markers per tile.
  cylinder  d > 0   unrolled (phi, s) rectangle, boundary rulings for
                    Pythagorean directions up to the generation bound,
                    one marker group per class.
  eclipse   d > 0   ring image of one hemisphere under the eclipse
                    composite, moon disc of radius sqrt(2)-1.
"""

from math import atan2, gcd, pi, sqrt
from typing import List, NamedTuple, Sequence, Tuple

from .action import M_R, Sl2, homography_of_word, mat_mul
from .classify import OrbitClass
from .farey import pythagorean_of_rational
from .forms import Form, to_kds
from .projections import (
    apply_homography,
    disc_to_halfplane,
    eclipse_project,
    halfplane_to_disc,
    project_one_sheet,
    project_two_sheet,
)

MARKER_SHAPES = ("circle", "rect", "diamond", "cross")

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


class SceneSpec(NamedTuple):
    """What to draw; validated by render_scene."""

    discriminant: int
    model: str = "disc"
    max_generation: int = 3
    size: int = 800
    seam: float = 0.0
    hemisphere: str = "upper"


def _fmt(x: float) -> str:
    s = "%.6f" % (x,)
    return "0.000000" if s == "-0.000000" else s


def _marker(shape: str, x: float, y: float, css: str) -> str:
    r = 5.0
    if shape == "circle":
        return '<circle class="%s" cx="%s" cy="%s" r="%s"/>' % (
            css, _fmt(x), _fmt(y), _fmt(r))
    if shape == "rect":
        return '<rect class="%s" x="%s" y="%s" width="%s" height="%s"/>' % (
            css, _fmt(x - r), _fmt(y - r), _fmt(2 * r), _fmt(2 * r))
    if shape == "diamond":
        pts = ((x, y - r), (x + r, y), (x, y + r), (x - r, y))
        body = " ".join("%s,%s" % (_fmt(px), _fmt(py)) for px, py in pts)
        return '<polygon class="%s" points="%s"/>' % (css, body)
    # cross
    return ('<path class="%s" d="M %s %s L %s %s M %s %s L %s %s"/>' % (
        css, _fmt(x - r), _fmt(y - r), _fmt(x + r), _fmt(y + r),
        _fmt(x - r), _fmt(y + r), _fmt(x + r), _fmt(y - r)))


def _style(n_classes: int, depth: int) -> str:
    rules = [
        "path,polyline,circle.outline{fill:none;stroke-width:1.5}",
        "text{font:12px sans-serif;fill:#333;text-anchor:middle}",
    ]
    for g in range(depth + 1):
        shade = 40 + (160 * g) // max(1, depth)
        rules.append(".gen-%d{stroke:rgb(%d,%d,%d)}" % (g, shade, shade, shade))
    for i in range(max(1, n_classes)):
        color = _PALETTE[i % len(_PALETTE)]
        rules.append(".orbit-%d{fill:%s;stroke:%s}" % (i, color, color))
    rules.append(".sym-asymmetric{fill-opacity:0.55}")
    return "<style>%s</style>" % "".join(rules)


def _svg(size: int, desc: str, body: List[str]) -> str:
    head = ('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
            'viewBox="0 0 %d %d">' % (size, size, size, size))
    return "\n".join([head, "<desc>%s</desc>" % desc] + body + ["</svg>"])


# ---------------------------------------------------------------- disc model

def _positive_words(depth: int) -> List[str]:
    words = [""]
    frontier = [""]
    for _ in range(depth):
        frontier = [w + c for w in frontier for c in "AB"]
        words.extend(frontier)
    return words


def _canon(M: Sl2) -> Sl2:
    for entry in M:
        if entry != 0:
            return M if entry > 0 else tuple(-v for v in M)  # type: ignore[return-value]
    raise ValueError("zero matrix")


def _tile_matrices(depth: int) -> List[Tuple[str, bool, Sl2]]:
    """(word, mirrored, matrix) for every tile, deterministic order."""
    tiles = []
    seen = set()
    for word in _positive_words(depth):
        M = homography_of_word(word)
        for mirrored, N in ((False, M), (True, mat_mul(M_R, M))):
            key = _canon(N)
            assert key not in seen, "duplicate tile for %r" % (word,)
            seen.add(key)
            tiles.append((word, mirrored, N))
    return tiles


def _vertex_on_disc(M: Sl2, p: int, q: int) -> complex:
    """Image on the unit circle of the boundary point p/q under M."""
    a, b, c, d = M
    num, den = a * p + b * q, c * p + d * q
    if den == 0:
        return complex(-1, 0)
    return halfplane_to_disc(complex(num / den, 0))


def _to_px(w: complex, cx: float, cy: float, scale: float) -> Tuple[float, float]:
    # screen x = K direction = Im w, screen y = D direction = Re w
    return cx + scale * w.imag, cy - scale * w.real


def _geodesic_arc(w1: complex, w2: complex, cx: float, cy: float,
                  scale: float) -> str:
    """SVG path fragment from w1 to w2 along the circle orthogonal to the
    unit circle, falling back to a chord when the two points are
    (anti)diametral."""
    det = w1.real * w2.imag - w1.imag * w2.real
    x2, y2 = _to_px(w2, cx, cy, scale)
    if abs(det) < 1e-9:
        return "L %s %s" % (_fmt(x2), _fmt(y2))
    # center c solves Re(c * conj(w_i)) = 1 for both endpoints
    creal = (w2.imag - w1.imag) / det
    cimag = (w1.real - w2.real) / det
    c = complex(creal, cimag)
    r = sqrt(abs(c) ** 2 - 1)
    # pick the arc through the point of the circle nearest the origin
    deepest = c * (1 - r / abs(c))
    t1 = atan2((w1 - c).imag, (w1 - c).real)
    t2 = atan2((w2 - c).imag, (w2 - c).real)
    tp = atan2((deepest - c).imag, (deepest - c).real)
    ccw_span = (t2 - t1) % (2 * pi)
    on_ccw = (tp - t1) % (2 * pi) <= ccw_span
    span = ccw_span if on_ccw else (2 * pi) - ccw_span
    large = 1 if span > pi else 0
    # the screen map rotates rather than reflects, so ccw stays sweep 1
    sweep = 1 if on_ccw else 0
    return "A %s %s 0 %d %d %s %s" % (
        _fmt(r * scale), _fmt(r * scale), large, sweep, _fmt(x2), _fmt(y2))


def _render_disc(spec: SceneSpec, classes: Sequence[OrbitClass]) -> str:
    size = spec.size
    cx = cy = size / 2.0
    scale = size * 0.475
    depth = spec.max_generation
    tiles = _tile_matrices(depth)
    body = [_style(len(classes), depth)]
    body.append('<circle class="outline disc-boundary" cx="%s" cy="%s" r="%s"/>'
                % (_fmt(cx), _fmt(cy), _fmt(scale)))

    labels = []
    tile_paths = []
    for word, mirrored, M in tiles:
        verts = [_vertex_on_disc(M, 0, 1), _vertex_on_disc(M, 1, 1),
                 _vertex_on_disc(M, 1, 0)]
        x0, y0 = _to_px(verts[0], cx, cy, scale)
        frags = ["M %s %s" % (_fmt(x0), _fmt(y0))]
        for i in range(3):
            frags.append(_geodesic_arc(verts[i], verts[(i + 1) % 3], cx, cy, scale))
        css = "tile gen-%d%s" % (len(word), " mirror" if mirrored else "")
        tile_paths.append('<path class="%s" d="%s"/>' % (css, " ".join(frags)))
        if not mirrored and 1 <= len(word) <= 2:
            mid = sum(verts, complex(0, 0)) / 3
            lx, ly = _to_px(mid, cx, cy, scale)
            labels.append('<text x="%s" y="%s">%s</text>' % (_fmt(lx), _fmt(ly), word))
    body.append('<g class="tiles">%s</g>' % "".join(tile_paths))
    if labels:
        body.append('<g class="labels">%s</g>' % "".join(labels))

    for idx, cls in enumerate(classes):
        rep = Form(*cls.representative)
        K, D, S = to_kds(rep)
        w0 = project_two_sheet((float(K), float(D), float(S)), spec.discriminant)
        z0 = disc_to_halfplane(complex(w0.Dtilde, w0.Ktilde))
        shape = MARKER_SHAPES[idx % len(MARKER_SHAPES)]
        css = "orbit-%d sym-%s" % (idx, cls.symmetry)
        marks = []
        for _, _, M in tiles:
            w = halfplane_to_disc(apply_homography(M, z0))
            px, py = _to_px(w, cx, cy, scale)
            marks.append(_marker(shape, px, py, css))
        body.append('<g class="orbit-%d">%s</g>' % (idx, "".join(marks)))

    desc = ("Disc tiling for discriminant %d, depth %d; screen x is the K "
            "direction, screen y the D direction." % (spec.discriminant, depth))
    return _svg(size, desc, body)


# ------------------------------------------------------------ cylinder model

def _ruling_directions(max_gen: int) -> List[Tuple[int, Tuple[int, int, int]]]:
    """(generation, simple Pythagorean triple) for every boundary ruling
    direction up to max_gen, mirrors included, deterministic order."""
    rationals = [(0, (0, 1)), (0, (1, 0))]
    frontier = [(1, 1)]
    gen = 1
    while gen <= max_gen:
        rationals.extend((gen, pq) for pq in frontier)
        frontier = [t for pq in frontier
                    for t in ((pq[0] + pq[1], pq[1]), (pq[0], pq[0] + pq[1]))]
        gen += 1
    out = []
    seen = set()
    for g, (p, q) in sorted(rationals):
        K, D, S = pythagorean_of_rational(p, q)
        common = gcd(gcd(abs(K), abs(D)), S)
        triple = (K // common, D // common, S // common)
        for cand in (triple, (-triple[0], -triple[1], triple[2])):
            if cand not in seen:
                seen.add(cand)
                out.append((g, cand))
    return out


def _cyl_px(phi: float, s: float, spec: SceneSpec) -> Tuple[float, float]:
    width = float(spec.size)
    height = float(spec.size)
    u = (phi - spec.seam) % (2 * pi)
    x = u / (2 * pi) * width
    y = height / 2.0 - s * (height / 2.0) * 0.98
    return x, y


def _render_cylinder(spec: SceneSpec, classes: Sequence[OrbitClass]) -> str:
    d = spec.discriminant
    rho = sqrt(d)
    body = [_style(len(classes), spec.max_generation)]
    body.append('<rect class="frame" x="0" y="0" width="%d" height="%d" '
                'fill="none" stroke="#999"/>' % (spec.size, spec.size))

    rulings = []
    samples = [(-0.98 + 1.96 * i / 63.0) for i in range(64)]
    for g, (K0, D0, S0) in _ruling_directions(spec.max_generation):
        b0 = rho / S0
        for sign in (1, -1):
            pts = []
            for sigma in samples:
                a = 2 * b0 * sigma / (1 - sigma * sigma)
                K = sign * b0 * (-D0) + a * K0
                D = sign * b0 * K0 + a * D0
                S = a * S0
                pts.append(project_one_sheet((K, D, S), d))
            # break the polyline where it crosses the seam
            runs, run = [], [pts[0]]
            for prev, cur in zip(pts, pts[1:]):
                du = (cur.phi - spec.seam) % (2 * pi) - (prev.phi - spec.seam) % (2 * pi)
                if abs(du) > pi:
                    runs.append(run)
                    run = [cur]
                else:
                    run.append(cur)
            runs.append(run)
            lines = []
            for run in runs:
                if len(run) < 2:
                    continue
                coords = " ".join("%s,%s" % (_fmt(x), _fmt(y))
                                  for x, y in (_cyl_px(p.phi, p.s, spec) for p in run))
                lines.append('<polyline class="boundary" points="%s"/>' % coords)
            rulings.append('<g class="ruling gen-%d">%s</g>' % (g, "".join(lines)))
    body.append('<g class="boundaries">%s</g>' % "".join(rulings))

    for idx, cls in enumerate(classes):
        shape = MARKER_SHAPES[idx % len(MARKER_SHAPES)]
        css = "orbit-%d sym-%s" % (idx, cls.symmetry)
        marks = []
        for f in cls.points:
            K, D, S = to_kds(Form(*f))
            p = project_one_sheet((float(K), float(D), float(S)), d)
            x, y = _cyl_px(p.phi, p.s, spec)
            marks.append(_marker(shape, x, y, css))
        body.append('<g class="orbit-%d">%s</g>' % (idx, "".join(marks)))

    desc = ("Unrolled cylinder for discriminant %d, rulings through "
            "generation %d, seam at %s; screen x is phi, screen y is s."
            % (d, spec.max_generation, _fmt(spec.seam)))
    return _svg(spec.size, desc, body)


# ------------------------------------------------------------- eclipse model

def _render_eclipse(spec: SceneSpec, classes: Sequence[OrbitClass]) -> str:
    d = spec.discriminant
    rho = sqrt(d)
    size = spec.size
    cx = cy = size / 2.0
    scale = size * 0.475
    lower = spec.hemisphere == "lower"
    body = [_style(len(classes), spec.max_generation)]
    body.append('<circle class="outline ring-outer" cx="%s" cy="%s" r="%s"/>'
                % (_fmt(cx), _fmt(cy), _fmt(scale)))
    body.append('<circle class="moon" cx="%s" cy="%s" r="%s" fill="#ddd"/>'
                % (_fmt(cx), _fmt(cy), _fmt(scale * (sqrt(2) - 1))))

    rulings = []
    samples = [0.98 * i / 63.0 for i in range(64)]
    for g, (K0, D0, S0) in _ruling_directions(spec.max_generation):
        b0 = rho / S0
        for sign in (1, -1):
            pts = []
            for sigma in samples:
                a = 2 * b0 * sigma / (1 - sigma * sigma)
                K = sign * b0 * (-D0) + a * K0
                D = sign * b0 * K0 + a * D0
                S = -a * S0 if lower else a * S0
                q = eclipse_project((K, D, S), d, lower=lower)
                pts.append(_to_px(complex(q.Dtilde, q.Ktilde), cx, cy, scale))
            coords = " ".join("%s,%s" % (_fmt(x), _fmt(y)) for x, y in pts)
            rulings.append('<g class="ruling gen-%d"><polyline class="boundary" '
                           'points="%s"/></g>' % (g, coords))
    body.append('<g class="boundaries">%s</g>' % "".join(rulings))

    for idx, cls in enumerate(classes):
        shape = MARKER_SHAPES[idx % len(MARKER_SHAPES)]
        css = "orbit-%d sym-%s" % (idx, cls.symmetry)
        marks = []
        for f in cls.points:
            K, D, S = to_kds(Form(*f))
            if (S < 0) != lower and S != 0:
                continue
            q = eclipse_project((float(K), float(D), float(S)), d, lower=lower)
            x, y = _to_px(complex(q.Dtilde, q.Ktilde), cx, cy, scale)
            marks.append(_marker(shape, x, y, css))
        body.append('<g class="orbit-%d">%s</g>' % (idx, "".join(marks)))

    desc = ("Eclipse ring for discriminant %d, %s hemisphere; moon radius "
            "sqrt(2)-1 of the outer radius; screen x is the K direction, "
            "screen y the D direction." % (d, spec.hemisphere))
    return _svg(size, desc, body)


def render_scene(spec: SceneSpec, classes: Sequence[OrbitClass] = ()) -> str:
    """Build the SVG for a scene.  classes should come from
    enumerate_classes(spec.discriminant) or be a subset of it; pass an
    empty sequence for boundaries only."""
    if spec.model not in ("disc", "cylinder", "eclipse"):
        raise ValueError("unknown model %r" % (spec.model,))
    if not 0 <= spec.max_generation <= 10:
        raise ValueError("max_generation must be between 0 and 10")
    if spec.size < 64:
        raise ValueError("size below 64 is not drawable")
    if spec.hemisphere not in ("upper", "lower"):
        raise ValueError("hemisphere must be 'upper' or 'lower'")
    if spec.model == "disc":
        if spec.discriminant >= 0:
            raise ValueError("disc model needs a negative discriminant")
        return _render_disc(spec, classes)
    if spec.discriminant <= 0:
        raise ValueError("%s model needs a positive discriminant" % spec.model)
    if spec.model == "cylinder":
        return _render_cylinder(spec, classes)
    return _render_eclipse(spec, classes)
