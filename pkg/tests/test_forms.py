"""Exact-arithmetic layer: forms, the rotated coordinates, involutions."""

import random

import pytest

from desitter_forms.forms import (
    I64_MAX,
    INVOLUTIONS,
    Discriminant,
    Form,
    KdsPoint,
    apply_involution,
    classify_discriminant,
    discriminant,
    evaluate,
    form,
    from_kds,
    is_good_point,
    to_kds,
)


def test_form_and_discriminant():
    f = form(1, 1, 0)
    assert f == Form(1, 1, 0)
    assert discriminant(f) == -4
    assert discriminant(Form(1, -4, -4)) == 32
    assert discriminant(Form(0, 0, 5)) == 25


def test_evaluate_matches_polynomial():
    f = Form(3, -2, 7)
    assert evaluate(f, 1, 0) == 3
    assert evaluate(f, 0, 1) == -2
    assert evaluate(f, 1, 1) == 8
    assert evaluate(f, 2, -3) == 3 * 4 - 2 * 9 + 7 * (-6)


def test_kds_round_trip():
    rng = random.Random(11)
    for _ in range(500):
        f = Form(rng.randint(-99, 99), rng.randint(-99, 99), rng.randint(-99, 99))
        p = to_kds(f)
        assert p == (f.k, f.m - f.n, f.m + f.n)
        assert is_good_point(p)
        assert from_kds(p) == f
        # the rotated identity: K^2 + D^2 - S^2 = k^2 - 4mn
        assert p.K * p.K + p.D * p.D - p.S * p.S == discriminant(f)


def test_bad_parity_rejected():
    p = KdsPoint(0, 1, 2)
    assert not is_good_point(p)
    with pytest.raises(ValueError):
        from_kds(p)


def test_involution_images():
    f = Form(2, -3, 5)
    assert apply_involution(f, "conjugate") == Form(2, -3, -5)
    assert apply_involution(f, "adjoint") == Form(3, -2, 5)
    assert apply_involution(f, "antipodal") == Form(3, -2, -5)
    assert apply_involution(f, "complementary") == Form(-3, 2, -5)
    assert apply_involution(f, "opposite") == Form(-2, 3, -5)
    with pytest.raises(ValueError):
        apply_involution(f, "transpose")


def test_involution_algebra():
    """Each involution is self-inverse, they all commute, and two of the
    composites are themselves named involutions."""
    rng = random.Random(23)
    for _ in range(200):
        f = Form(rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(-50, 50))
        d = discriminant(f)
        for kind in INVOLUTIONS:
            g = apply_involution(f, kind)
            assert discriminant(g) == d
            assert apply_involution(g, kind) == f
        for k1 in INVOLUTIONS:
            for k2 in INVOLUTIONS:
                once = apply_involution(apply_involution(f, k1), k2)
                other = apply_involution(apply_involution(f, k2), k1)
                assert once == other
        conj_adj = apply_involution(apply_involution(f, "conjugate"), "adjoint")
        assert conj_adj == apply_involution(f, "antipodal")
        comp_adj = apply_involution(apply_involution(f, "complementary"), "adjoint")
        assert comp_adj == apply_involution(f, "opposite")


def test_classify_discriminant_kinds():
    assert classify_discriminant(-4) == Discriminant(-4, "elliptic")
    assert classify_discriminant(0) == Discriminant(0, "parabolic")
    assert classify_discriminant(25) == Discriminant(25, "hyperbolic-square", 5)
    assert classify_discriminant(32) == Discriminant(32, "hyperbolic-nonsquare")
    # squareness is decided exactly, even where floats would round
    big = 10**12
    assert classify_discriminant(big).kind == "hyperbolic-square"
    assert classify_discriminant(big).root == 10**6
    assert classify_discriminant(big + 1).kind == "hyperbolic-nonsquare"


def test_overflow_guard():
    with pytest.raises(OverflowError):
        form(2**63, 0, 0)
    with pytest.raises(OverflowError):
        discriminant(Form(I64_MAX, -I64_MAX, 0))
    with pytest.raises(OverflowError):
        to_kds(Form(I64_MAX, -2, 0))
