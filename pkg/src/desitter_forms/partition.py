"""Region membership on the one-sheeted hyperboloid K^2 + D^2 - S^2 = d > 0.

The surface splits into two fundamental regions (mn < 0), four quadrant
regions (the sign combinations of m, n with the sign of k), and, when the
discriminant is a perfect square, boundary loci with m = 0 or n = 0.
Each quadrant region is tiled by semigroup images of a first-generation
strip; a point's tile is found by inverse descent: repeatedly apply the
single generator that keeps the point inside the quadrant's closure.

Tags used here:

    H0, H0R          the fundamental regions m>0,n<0 and m<0,n>0
    HA, HAbar,
    HB, HBbar        the first-generation strips (empty descent word)
    GA, GAbar,
    GB, GBbar        deeper tiles; the label carries the positive word
    FA, FAbar,
    FB, FBbar        boundary segments (square discriminant only)
    apex+ / apex-    the two points with m = n = 0

The word stored for a GAbar/GBbar tile is the word of the R-mirror tile
in GA/GB, so R-symmetry maps labels to mirror labels with equal words.
"""

from typing import NamedTuple, Optional, Tuple

from .action import apply_generator
from .forms import Discriminant, Form, KdsPoint, from_kds


class RegionLabel(NamedTuple):
    tag: str
    word: Optional[str] = None

    def serialize(self) -> str:
        if self.word is None:
            return self.tag
        return "%s:%s" % (self.tag, self.word)


# family -> (closure test, peel moves as (applied letter, recorded letter)).
# GA and GB are tiled by positive words, so descent applies inverses; the
# barred families are tiled by negative words and descent applies A, B
# directly, recording the R-mirror letter (RaR = B, RbR = A).
_FAMILIES = {
    "GA": (lambda m, n, k: m >= 0 and n >= 0 and k > 0, (("a", "A"), ("b", "B"))),
    "GAbar": (lambda m, n, k: m >= 0 and n >= 0 and k < 0, (("A", "B"), ("B", "A"))),
    "GB": (lambda m, n, k: m <= 0 and n <= 0 and k < 0, (("a", "A"), ("b", "B"))),
    "GBbar": (lambda m, n, k: m <= 0 and n <= 0 and k > 0, (("A", "B"), ("B", "A"))),
}

_STRIP_TAG = {"GA": "HA", "GAbar": "HAbar", "GB": "HB", "GBbar": "HBbar"}

# one inverse step from a first-generation strip into the fundamental region
STRIP_STEP = {"GA": "a", "GAbar": "A", "GB": "b", "GBbar": "B"}


def quadrant_family(f: Form) -> Optional[str]:
    """The quadrant region containing f, or None on the fundamental side.

    Points with m = n = 0 (apexes) sort into the closure of GA or GB by
    the sign of k; callers that care treat them first.
    """
    if f.m > 0 and f.n < 0:
        return None
    if f.m < 0 and f.n > 0:
        return None
    if f.m >= 0 and f.n >= 0:
        return "GA" if f.k > 0 else "GAbar"
    return "GB" if f.k < 0 else "GBbar"


def descend(f: Form, family: str) -> Tuple[Form, str, str]:
    """Inverse descent to the family's terminal tile.

    Returns (terminal, applied, recorded): the point where no peel move
    stays inside the closure, the letters applied (chronological), and
    the positive domain letters recorded (chronological).  At most one
    move is ever admissible; two at once would force the closure's sign
    constraints into a contradiction.
    """
    inside, moves = _FAMILIES[family]
    applied = []
    recorded = []
    while True:
        step = None
        for app, rec in moves:
            g = apply_generator(f, app)
            if inside(g.m, g.n, g.k):
                assert step is None, "two admissible peels at %r" % (f,)
                step = (g, app, rec)
        if step is None:
            return f, "".join(applied), "".join(recorded)
        f = step[0]
        applied.append(step[1])
        recorded.append(step[2])


def _boundary_tag(t: Form) -> str:
    if t.m == 0 and t.n == 0:
        return "apex+" if t.k > 0 else "apex-"
    w = t.m if t.m != 0 else t.n
    if t.k > 0:
        return "FA" if w > 0 else "FBbar"
    return "FAbar" if w > 0 else "FB"


def _require_on_surface(p: KdsPoint, d: Discriminant) -> Form:
    if d.value <= 0:
        raise ValueError("partition is defined for positive discriminants")
    if p.K * p.K + p.D * p.D - p.S * p.S != d.value:
        raise ValueError("point %r not on the hyperboloid of %d" % (tuple(p), d.value))
    return from_kds(p)


def classify_region(p: KdsPoint, d: Discriminant) -> RegionLabel:
    """The unique region label of a good point on the hyperboloid.

    Fundamental points are labeled by sign pattern alone.  Everything
    else descends: an empty descent word means the point lies in a
    first-generation strip, a nonempty one names its G-domain tile, and
    a terminal with m or n zero puts the point on the boundary orbit,
    which inherits the terminal's F-segment or apex tag.
    """
    f = _require_on_surface(p, d)
    if f.m > 0 and f.n < 0:
        return RegionLabel("H0")
    if f.m < 0 and f.n > 0:
        return RegionLabel("H0R")
    if f.m == 0 and f.n == 0:
        return RegionLabel("apex+" if f.k > 0 else "apex-")
    family = quadrant_family(f)
    terminal, _, word = descend(f, family)
    if terminal.m != 0 and terminal.n != 0:
        if word:
            return RegionLabel(family, word)
        return RegionLabel(_STRIP_TAG[family])
    return RegionLabel(_boundary_tag(terminal))


def domain_word(p: KdsPoint, d: Discriminant) -> Tuple[str, str]:
    """(family, positive word) of the tile containing p.

    The word is empty exactly on the first-generation strips.  Raises on
    fundamental-domain points and on the boundary orbit, which belong to
    no tile.
    """
    f = _require_on_surface(p, d)
    if (f.m > 0 and f.n < 0) or (f.m < 0 and f.n > 0):
        raise ValueError("fundamental-domain point %r has no domain word" % (f,))
    if f.m == 0 and f.n == 0:
        raise ValueError("apex %r has no domain word" % (f,))
    family = quadrant_family(f)
    terminal, _, word = descend(f, family)
    if terminal.m == 0 or terminal.n == 0:
        raise ValueError("boundary point %r has no domain word" % (f,))
    return family, word


def generation_of(p: KdsPoint, d: Discriminant) -> int:
    """Tree depth: 0 on the fundamental regions, 1 on the strips,
    1 + word length beyond."""
    f = _require_on_surface(p, d)
    if (f.m > 0 and f.n < 0) or (f.m < 0 and f.n > 0):
        return 0
    if f.m == 0 and f.n == 0:
        return 1
    _, _, word = descend(f, quadrant_family(f))
    return 1 + len(word)
