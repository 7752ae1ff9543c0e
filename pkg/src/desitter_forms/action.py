"""The modular group acting on forms by substitution.

Words are plain strings over "ABabR": uppercase A and B are the two
generators, lowercase a and b their inverses, R the order-two rotation.
A word acts with its rightmost letter first, so apply_word(f, "AB")
applies B and then A.

Each letter has a closed form on (m, n, k):

    A: (m, n, k) -> (m, m+n+k, k+2m)        a: (m, n, k) -> (m, m+n-k, k-2m)
    B: (m, n, k) -> (m+n+k, n, k+2n)        b: (m, n, k) -> (m+n-k, n, k-2n)
    R: (m, n, k) -> (n, m, -k)

These come from substituting x, y by a 2x2 integer matrix of determinant
one; lift_sl2 gives the induced 3x3 matrix on (m, n, k) column vectors.
The lift is an anti-homomorphism: lift(L1 @ L2) = lift(L2) . lift(L1).
"""

from typing import Iterable, Optional, Tuple

from .forms import Form, check_range

Sl2 = Tuple[int, int, int, int]  # row-major (a, b, c, d)
TMatrix = Tuple[Tuple[int, int, int], ...]

LETTERS = "ABabR"

# 2x2 shadows of the letters, all of determinant +1.  R squares to -I as a
# matrix but to the identity on forms, since L and -L induce the same lift.
M_A: Sl2 = (1, 1, 0, 1)
M_B: Sl2 = (1, 0, 1, 1)
M_A_INV: Sl2 = (1, -1, 0, 1)
M_B_INV: Sl2 = (1, 0, -1, 1)
M_R: Sl2 = (0, 1, -1, 0)
M_I: Sl2 = (1, 0, 0, 1)

SHADOWS = {"A": M_A, "B": M_B, "a": M_A_INV, "b": M_B_INV, "R": M_R}

INVERSE_LETTER = {"A": "a", "a": "A", "B": "b", "b": "B", "R": "R"}

# Conjugation by R swaps the generator families.
R_MIRROR = {"A": "b", "b": "A", "B": "a", "a": "B", "R": "R"}


def apply_generator(f: Form, letter: str) -> Form:
    m, n, k = f
    if letter == "A":
        g = Form(m, m + n + k, k + 2 * m)
    elif letter == "B":
        g = Form(m + n + k, n, k + 2 * n)
    elif letter == "a":
        g = Form(m, m + n - k, k - 2 * m)
    elif letter == "b":
        g = Form(m + n - k, n, k - 2 * n)
    elif letter == "R":
        g = Form(n, m, -k)
    else:
        raise ValueError("unknown letter %r" % (letter,))
    check_range(*g)
    return g


def apply_word(f: Form, word: str) -> Form:
    """Apply a word over ABabR, rightmost letter first."""
    for letter in reversed(word):
        f = apply_generator(f, letter)
    return f


def invert_word(word: str) -> str:
    return "".join(INVERSE_LETTER[c] for c in reversed(word))


def mirror_word(word: str) -> str:
    """Conjugate a word by R letterwise: A<->b, B<->a, R fixed."""
    return "".join(R_MIRROR[c] for c in word)


def is_positive_word(word: str) -> bool:
    return all(c in "AB" for c in word)


def mat_mul(x: Sl2, y: Sl2) -> Sl2:
    a, b, c, d = x
    e, f, g, h = y
    out = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    check_range(*out)
    return out


def mat_det(x: Sl2) -> int:
    return x[0] * x[3] - x[1] * x[2]


def shadow_of_word(word: str) -> Sl2:
    """2x2 matrix L with lift(L) . f = apply_word(f, word).

    Because the lift is an anti-homomorphism, the first-applied
    (rightmost) letter lands leftmost in the product.
    """
    acc = M_I
    for letter in reversed(word):
        acc = mat_mul(acc, SHADOWS[letter])
    return acc


def homography_of_word(word: str) -> Sl2:
    """2x2 matrix acting on the disc/half-plane side, display order.

    This is the reverse product of shadow_of_word: the projection to the
    disc intertwines the form action of a word with the homography of the
    letters multiplied left to right as written.
    """
    acc = M_I
    for letter in word:
        acc = mat_mul(acc, SHADOWS[letter])
    return acc


def lift_sl2(L: Sl2) -> TMatrix:
    """3x3 action on (m, n, k) columns induced by x -> ax+by, y -> cx+dy.

    Only determinant-one matrices are accepted; L and -L lift identically.
    """
    a, b, c, d = L
    if a * d - b * c != 1:
        raise ValueError("matrix %r has determinant != 1" % (L,))
    rows = (
        (a * a, c * c, a * c),
        (b * b, d * d, b * d),
        (2 * a * b, 2 * c * d, a * d + b * c),
    )
    for row in rows:
        check_range(*row)
    return rows


def apply_tmatrix(T: TMatrix, f: Form) -> Form:
    cols = (f.m, f.n, f.k)
    out = tuple(sum(T[i][j] * cols[j] for j in range(3)) for i in range(3))
    check_range(*out)
    return Form(*out)


def _mat_neg(x: Sl2) -> Sl2:
    return (-x[0], -x[1], -x[2], -x[3])


def _nonneg(x: Sl2) -> bool:
    return all(v >= 0 for v in x)


def _peel_positive(N: Sl2) -> Tuple[str, ...]:
    """Stern-Brocot peel of a nonnegative determinant-1 matrix.

    Repeatedly strips A (top row minus bottom row) or B (bottom minus top)
    from the left until the identity remains.  For a nonnegative matrix of
    determinant one exactly one of the two strips stays nonnegative at each
    step, so the factorization is forced.  Letters come out in peel order,
    which is application order (last-applied first).
    """
    a, b, c, d = N
    peels = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a >= c and b >= d and (a, b) != (c, d):
            a, b = a - c, b - d
            peels.append("A")
        elif c >= a and d >= b:
            c, d = c - a, d - b
            peels.append("B")
        else:
            raise ValueError("matrix %r is not a positive word" % ((a, b, c, d),))
    return tuple(peels)


def vsu_normal_form(word: str) -> Tuple[Optional[str], str, Optional[str]]:
    """Write a word as V S U with S positive and V, U each empty or R.

    Every word over ABabR equals, up to overall sign of its shadow, a
    product R^eps1 . S . R^eps2 with S a positive word; the (V, S, U)
    triple returned here reproduces the word in display order, so
    apply_word(f, word) == apply_word(f, (V or "") + S + (U or "")).
    Returns (V, S, U) with V and U either "R" or None and S possibly "".
    """
    M = shadow_of_word(word)
    for V, U in ((None, None), ("R", None), (None, "R"), ("R", "R")):
        N = M
        # strip U (applied first, so leftmost in the shadow product)
        if U is not None:
            N = mat_mul(M_R, N)
        if V is not None:
            N = mat_mul(N, M_R)
        for cand in (N, _mat_neg(N)):
            if _nonneg(cand) and mat_det(cand) == 1:
                peels = _peel_positive(cand)
                # peel order is application order; display order reverses it
                S = "".join(reversed(peels))
                return (V, S, U)
    raise ValueError("no VSU decomposition for %r" % (word,))
