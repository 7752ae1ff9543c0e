"""Class enumeration oracles: cycles, chains, elliptic lists, reduction."""

import random

import pytest

from desitter_forms.action import apply_tmatrix, apply_word, lift_sl2, mat_det
from desitter_forms.classify import (
    chain_of,
    classify_parabolic,
    cycle_of,
    enumerate_classes,
    enumerate_classes_elliptic,
    enumerate_h0,
    in_h0,
    reduce_form,
    seed_point,
    symmetry_type,
)
from desitter_forms.forms import Form, classify_discriminant, discriminant


def _d(value):
    return classify_discriminant(value)


# ---------------------------------------------------------------- delta = 32

H0_32 = [
    Form(1, -4, -4), Form(2, -2, -4), Form(4, -1, -4),
    Form(1, -7, -2), Form(7, -1, -2),
    Form(1, -8, 0), Form(2, -4, 0), Form(4, -2, 0), Form(8, -1, 0),
    Form(1, -7, 2), Form(7, -1, 2),
    Form(1, -4, 4), Form(2, -2, 4), Form(4, -1, 4),
]


def test_enumerate_h0_32():
    assert enumerate_h0(_d(32)) == H0_32
    assert all(in_h0(f) and discriminant(f) == 32 for f in H0_32)


def test_classes_32():
    classes = enumerate_classes(_d(32))
    assert len(classes) == 3
    c0, c1, c2 = classes

    assert c0.representative == Form(1, -4, -4)
    assert c0.points == (Form(1, -4, -4), Form(1, -7, -2), Form(1, -8, 0),
                         Form(1, -7, 2), Form(1, -4, 4))
    assert c0.word == "AAAAB"
    assert (c0.tA, c0.tB) == (4, 1)
    assert (c0.n_upper, c0.n_lower) == (1, 4)
    assert c0.symmetry == "k-symmetric"

    assert c1.representative == Form(2, -2, -4)
    assert c1.points == (Form(2, -2, -4), Form(2, -4, 0), Form(2, -2, 4),
                         Form(4, -2, 0))
    assert c1.word == "AABB"
    assert (c1.tA, c1.tB) == (2, 2)
    assert c1.symmetry == "supersymmetric"

    assert c2.representative == Form(4, -1, -4)
    assert c2.points == (Form(4, -1, -4), Form(4, -1, 4), Form(7, -1, 2),
                         Form(8, -1, 0), Form(7, -1, -2))
    assert c2.word == "ABBBB"
    assert (c2.tA, c2.tB) == (1, 4)
    assert c2.symmetry == "k-symmetric"

    # the cycles partition the fundamental census
    union = [p for c in classes for p in c.points]
    assert sorted(union) == sorted(H0_32)
    for c in classes:
        assert c.kind == "cycle"
        assert c.label is None
        assert c.boundary == ()
        assert symmetry_type(c) == c.symmetry


def test_cycle_of_walks_and_closes():
    cyc = cycle_of(Form(1, -8, 0))
    assert set(cyc.points) == set(enumerate_classes(_d(32))[0].points)
    assert len(cyc.word) == len(cyc.points) == cyc.tA + cyc.tB


def test_cycle_of_refusals():
    with pytest.raises(ValueError):
        cycle_of(Form(1, -6, -1))  # square discriminant
    with pytest.raises(ValueError):
        cycle_of(Form(1, 1, 0))  # elliptic
    with pytest.raises(ValueError):
        cycle_of(Form(1, 1, 6))  # not in the fundamental region


# ---------------------------------------------------------------- delta = 25

def test_classes_25():
    classes = enumerate_classes(_d(25))
    assert len(classes) == 5
    apex, ch1, ch2, ch3, ch4 = classes

    assert apex.kind == "apex"
    assert apex.label == 0
    assert apex.points == (Form(0, 0, 5), Form(0, 0, -5))
    assert apex.word == ""
    assert apex.symmetry == "supersymmetric"

    assert [c.label for c in classes] == [0, 1, 2, 3, 4]
    assert all(c.kind == "chain" for c in classes[1:])

    assert ch1.points == (Form(1, -4, -3), Form(1, -6, -1), Form(1, -6, 1),
                          Form(1, -4, 3))
    assert ch1.word == "AAA"
    assert (ch1.tA, ch1.tB) == (3, 0)
    assert ch1.boundary == (Form(1, 0, -5), Form(0, -4, 5),
                            Form(1, 0, 5), Form(0, -4, -5))
    assert ch1.symmetry == "k-symmetric"

    assert ch2.representative == Form(2, -2, -3)
    assert ch2.points == (Form(3, -2, 1), Form(2, -2, -3), Form(2, -3, 1))
    assert ch2.word == "BA"
    assert (ch2.tA, ch2.tB) == (1, 1)
    assert ch2.symmetry == "m-plus-n-symmetric"

    assert ch3.points == (Form(2, -3, -1), Form(2, -2, 3), Form(3, -2, -1))
    assert ch3.word == "AB"
    assert (ch3.tA, ch3.tB) == (1, 1)
    assert ch3.symmetry == "m-plus-n-symmetric"

    assert ch4.points == (Form(4, -1, 3), Form(6, -1, 1), Form(6, -1, -1),
                          Form(4, -1, -3))
    assert ch4.word == "BBB"
    assert (ch4.tA, ch4.tB) == (0, 3)
    assert ch4.symmetry == "k-symmetric"


def test_chain_boundary_audit_25():
    """Every boundary segment point is claimed by exactly one chain."""
    classes = enumerate_classes(_d(25))
    claimed = [f for c in classes[1:] for f in c.boundary]
    assert len(claimed) == 16
    expected = set()
    for r in range(1, 5):
        for sk in (5, -5):
            expected.add(Form(r, 0, sk))
            expected.add(Form(0, -r, sk))
    assert set(claimed) == expected

    censused = enumerate_h0(_d(25), include_boundary=True)
    assert len(censused) == 32
    interiors = [p for c in classes[1:] for p in c.points]
    assert sorted(censused) == sorted(
        interiors + list(claimed) + [Form(0, 0, 5), Form(0, 0, -5)]
    )


def test_chain_of_structure():
    ch = chain_of(Form(1, 0, -5))
    assert ch.points[0] == Form(1, -4, -3)
    assert ch.entry == (Form(1, 0, -5), Form(0, -4, 5))
    assert ch.exit == (Form(1, 0, 5), Form(0, -4, -5))
    assert ch.label == 1
    assert len(ch.word) == len(ch.points) - 1


def test_chain_of_refusals():
    with pytest.raises(ValueError):
        chain_of(Form(1, 0, 5))  # wrong sign of k
    with pytest.raises(ValueError):
        chain_of(Form(5, 0, -5))  # r = rho is past the segment
    with pytest.raises(ValueError):
        chain_of(Form(0, -1, -5))  # wrong segment
    with pytest.raises(ValueError):
        chain_of(Form(-1, 0, -5))


# --------------------------------------------------- small square and others

def test_classes_4():
    classes = enumerate_classes(_d(4))
    assert len(classes) == 2
    apex, ch = classes
    assert apex.points == (Form(0, 0, 2), Form(0, 0, -2))
    assert ch.points == (Form(1, -1, 0),)
    assert ch.word == ""
    assert (ch.tA, ch.tB) == (0, 0)
    assert ch.boundary == (Form(1, 0, -2), Form(0, -1, 2),
                           Form(1, 0, 2), Form(0, -1, -2))
    assert ch.symmetry == "supersymmetric"
    assert ch.label == 1


def test_classes_1():
    classes = enumerate_classes(_d(1))
    assert len(classes) == 1
    assert classes[0].kind == "apex"
    assert classes[0].points == (Form(0, 0, 1), Form(0, 0, -1))


def test_classes_5():
    classes = enumerate_classes(_d(5))
    assert len(classes) == 1
    c = classes[0]
    assert c.points == (Form(1, -1, -1), Form(1, -1, 1))
    assert c.word == "AB"
    assert c.symmetry == "supersymmetric"


def test_classes_8():
    classes = enumerate_classes(_d(8))
    assert len(classes) == 1
    c = classes[0]
    assert c.points == (Form(1, -1, -2), Form(1, -2, 0), Form(1, -1, 2),
                        Form(2, -1, 0))
    assert c.word == "AABB"
    assert c.symmetry == "supersymmetric"


def test_no_forms_for_2_and_3_mod_4():
    assert enumerate_classes(_d(6)) == []
    assert enumerate_classes(_d(7)) == []
    assert enumerate_classes(_d(-6)) == []
    assert enumerate_classes(_d(0)) == []
    with pytest.raises(ValueError):
        enumerate_h0(_d(-4))


# ------------------------------------------------------------------ elliptic

def test_elliptic_31():
    classes = enumerate_classes(_d(-31))
    reps = [c.representative for c in classes]
    assert reps == [Form(1, 8, 1), Form(2, 4, -1), Form(2, 4, 1)]
    assert [c.symmetry for c in classes] == [
        "k-symmetric", "asymmetric", "asymmetric"]
    assert all(c.kind == "elliptic" and c.points == (c.representative,)
               for c in classes)


def test_elliptic_small_class_numbers():
    assert [c.representative for c in enumerate_classes(_d(-3))] == [Form(1, 1, 1)]
    assert [c.representative for c in enumerate_classes(_d(-4))] == [Form(1, 1, 0)]
    assert len(enumerate_classes(_d(-23))) == 3
    assert len(enumerate_classes(_d(-47))) == 5
    assert len(enumerate_classes(_d(-163))) == 1
    assert enumerate_classes(_d(-163))[0].representative == Form(1, 41, 1)


def test_elliptic_reps_are_reduced():
    for dval in range(-200, 0):
        for c in enumerate_classes(_d(dval)):
            m, n, k = c.representative
            assert discriminant(c.representative) == dval
            assert abs(k) <= m <= n
            if abs(k) == m or m == n:
                assert k >= 0
    with pytest.raises(ValueError):
        enumerate_classes_elliptic(_d(4))


# ----------------------------------------------------------------- reduction

def test_reduce_form_frozen():
    assert reduce_form(Form(1, 1, -6)) == (Form(1, -4, -4), "A")
    assert reduce_form(Form(1, 1, 6)) == (Form(1, -4, 4), "a")
    assert reduce_form(Form(8, 17, 24)) == (Form(1, -4, 4), "aba")
    assert reduce_form(Form(1, 0, 5)) == (Form(1, 0, 5), "")
    assert reduce_form(Form(1, -4, -4)) == (Form(1, -4, -4), "")
    assert reduce_form(Form(-4, 1, 4)) == (Form(-4, 1, 4), "")


def test_reduce_form_replays_and_is_idempotent():
    rng = random.Random(61)
    for dval in (5, 8, 32, 60, 133):
        seeds = enumerate_h0(_d(dval))
        for _ in range(60):
            w = "".join(rng.choice("ABabR") for _ in range(rng.randint(0, 6)))
            f = apply_word(rng.choice(seeds), w)
            reduced, word = reduce_form(f)
            assert apply_word(f, word) == reduced
            assert (reduced.m > 0 and reduced.n < 0) or (reduced.m < 0 and reduced.n > 0)
            assert reduce_form(reduced) == (reduced, "")


def test_reduce_form_square_boundary():
    # boundary-orbit points descend to the segments or apexes instead
    reduced, word = reduce_form(Form(7, 0, -5))
    assert reduced == Form(2, 0, -5)
    assert apply_word(Form(7, 0, -5), word) == reduced
    reduced, word = reduce_form(Form(5, 10, 15))
    assert reduced == Form(0, 0, 5)
    assert apply_word(Form(5, 10, 15), word) == reduced
    with pytest.raises(ValueError):
        reduce_form(Form(1, 1, 0))
    with pytest.raises(ValueError):
        reduce_form(Form(1, 1, 2))


# ----------------------------------------------------------------- parabolic

def test_classify_parabolic_frozen():
    assert classify_parabolic(Form(4, 1, 4)) == (1, (0, -1, 1, 2))
    assert classify_parabolic(Form(3, 0, 0)) == (3, (1, 0, 0, 1))
    assert classify_parabolic(Form(0, 5, 0)) == (5, (0, -1, 1, 0))


def test_classify_parabolic_replays():
    rng = random.Random(67)
    for _ in range(200):
        a = rng.choice([1, -1]) * rng.randint(1, 9)
        alpha, beta = rng.randint(0, 12), rng.randint(-12, 12)
        if alpha == 0 and beta == 0:
            continue
        f = Form(a * alpha * alpha, a * beta * beta, 2 * a * alpha * beta)
        assert discriminant(f) == 0
        content, L = classify_parabolic(f)
        assert mat_det(L) == 1
        assert apply_tmatrix(lift_sl2(L), f) == Form(content, 0, 0)
    with pytest.raises(ValueError):
        classify_parabolic(Form(0, 0, 0))
    with pytest.raises(ValueError):
        classify_parabolic(Form(1, -1, 0))


# ---------------------------------------------------------------- seed point

def test_seed_point():
    assert seed_point(_d(32)) == Form(8, -1, 0)
    assert seed_point(_d(25)) == Form(6, -1, 1)
    for dval in (4, 5, 21, 96, 97):
        s = seed_point(_d(dval))
        assert discriminant(s) == dval and in_h0(s)
    with pytest.raises(ValueError):
        seed_point(_d(7))
    with pytest.raises(ValueError):
        seed_point(_d(-4))
