"""The Farey / Stern-Brocot hierarchy of positive rationals.

A positive word over A and B names a rational: starting from 1/1,
A moves x -> x + 1 and B moves x -> x / (x + 1).  On fraction pairs
(p, q) that is A: (p, q) -> (p + q, q) and B: (p, q) -> (p, p + q),
applied rightmost letter first like every other word in this package.

Each reduced p/q > 0 is reached by exactly one word; generation is
word length + 1, with the endpoints 0/1 and 1/0 forming generation 0.
Sons of neighbouring fractions are mediants, and every simple rational
corresponds to a primitive Pythagorean-style triple (K, D, S) =
(2pq, p^2 - q^2, p^2 + q^2).
"""

from math import gcd, isqrt
from typing import Tuple

from .forms import KdsPoint, check_range

Rational = Tuple[int, int]


def rational_of_word(word: str) -> Rational:
    """Evaluate a positive word at the root 1/1, rightmost letter first."""
    p, q = 1, 1
    for letter in reversed(word):
        if letter == "A":
            p = p + q
        elif letter == "B":
            q = p + q
        else:
            raise ValueError("positive words use only A and B, got %r" % (letter,))
        check_range(p, q)
    return (p, q)


def word_of_rational(p: int, q: int) -> str:
    """The unique positive word reaching p/q from 1/1.

    Subtractive Euclid: while p > q the leading move was A, while q > p
    it was B.  Letters are collected leftmost first, so the returned
    string is already in display order.
    """
    if p <= 0 or q <= 0:
        raise ValueError("need a positive rational, got %d/%d" % (p, q))
    if gcd(p, q) != 1:
        raise ValueError("%d/%d is not reduced" % (p, q))
    letters = []
    while p != q:
        if p > q:
            letters.append("A")
            p -= q
        else:
            letters.append("B")
            q -= p
    return "".join(letters)


def generation_of_rational(p: int, q: int) -> int:
    """Depth in the hierarchy; 1/1 has generation 1, endpoints 0."""
    if (p, q) in ((0, 1), (1, 0)):
        return 0
    return len(word_of_rational(p, q)) + 1


def farey_son(left: Rational, right: Rational) -> Rational:
    """Mediant of two fractions, demanding they are Farey neighbours."""
    (p1, q1), (p2, q2) = left, right
    if abs(p1 * q2 - p2 * q1) != 1:
        raise ValueError(
            "%d/%d and %d/%d are not neighbours" % (p1, q1, p2, q2)
        )
    s = (p1 + p2, q1 + q2)
    check_range(*s)
    return s


def pythagorean_of_rational(p: int, q: int) -> KdsPoint:
    """(K, D, S) = (2pq, p^2 - q^2, p^2 + q^2); simple iff p, q coprime
    and of opposite parity."""
    if p < 0 or q < 0:
        raise ValueError("need a nonnegative rational")
    t = KdsPoint(2 * p * q, p * p - q * q, p * p + q * q)
    check_range(*t)
    return t


def is_simple(t: KdsPoint) -> bool:
    return gcd(gcd(abs(t.K), abs(t.D)), abs(t.S)) == 1


def rational_of_pythagorean(t: KdsPoint) -> Rational:
    """Invert pythagorean_of_rational on simple triples with K >= 0.

    p^2 = (S + D) / 2 and q^2 = (S - D) / 2 must both be perfect squares.
    """
    if t.K < 0:
        raise ValueError("triple has K < 0; mirror it first")
    if not is_simple(t):
        raise ValueError("triple %r is not simple" % (t,))
    if (t.S + t.D) % 2 != 0:
        raise ValueError("triple %r has odd S + D" % (t,))
    p2 = (t.S + t.D) // 2
    q2 = (t.S - t.D) // 2
    if p2 < 0 or q2 < 0:
        raise ValueError("triple %r is not on the positive cone" % (t,))
    p, q = isqrt(p2), isqrt(q2)
    if p * p != p2 or q * q != q2:
        raise ValueError("triple %r is not a squared-pair triple" % (t,))
    if 2 * p * q != t.K:
        raise ValueError("triple %r fails the cross check" % (t,))
    return (p, q)


def mirror_rational(p: int, q: int) -> Rational:
    """The x -> -1/x mirror on fraction pairs, used for the negative side."""
    return (q, p)
