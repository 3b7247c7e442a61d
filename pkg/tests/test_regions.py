import math
import random
from fractions import Fraction as F

import pytest

from threecircles.errors import InvalidArgument, PoleError
from threecircles.polycore import ComplexRational as C
from threecircles.regions import (BOUNDARY, INSIDE, OUTSIDE, UNDECIDED, IntervalLR, Which,
                                  cot_enclosure, in_area, in_B, in_C0, in_C12, in_lens,
                                  inverse_point, mobius_point, not_in_C, obreshkoff_membership,
                                  surd_sign)

UNIT = IntervalLR(-1, 1)


def _rand_rational(rng, span=6, den=12):
    d = rng.randint(1, den)
    return F(rng.randint(-span * d, span * d), d)


def _rand_point(rng, span=6):
    return C(_rand_rational(rng, span), _rand_rational(rng, span))


def _rand_iv(rng):
    l = _rand_rational(rng, 4)
    return IntervalLR(l, l + F(rng.randint(1, 40), rng.randint(1, 8)))


def test_interval_validation():
    with pytest.raises(InvalidArgument):
        IntervalLR(1, 1)
    assert UNIT.mid == 0 and UNIT.width == 2


def test_in_C0():
    iv = IntervalLR(F(1, 3), 2)
    assert in_C0(C(iv.mid), iv) is INSIDE
    assert in_C0(C(iv.l), iv) is BOUNDARY
    assert in_C0(C(0, 1), UNIT) is BOUNDARY
    assert in_C0(C(0, F(9, 8)), UNIT) is OUTSIDE


def test_in_C12():
    assert in_C12(C(0), UNIT) is INSIDE
    assert in_C12(C(1), UNIT) is BOUNDARY
    assert in_C12(C(0, 1), UNIT) is INSIDE
    assert in_C12(C(0, 3), UNIT) is OUTSIDE
    assert in_C12(C(0, F(9, 8)), UNIT) is INSIDE


def test_in_C12_circle_geometry():
    # upper circumdisc: centre (m, sqrt3 (r-l)/6), radius^2 = (r-l)^2 / 3; compare in floats away from the rim
    rng = random.Random(4)
    for _ in range(2000):
        iv = _rand_iv(rng)
        z = _rand_point(rng)
        w = float(iv.width)
        cy = math.sqrt(3) * w / 6
        du = math.hypot(float(z.re - iv.mid), float(z.im) - cy) ** 2 - w * w / 3
        dl = math.hypot(float(z.re - iv.mid), float(z.im) + cy) ** 2 - w * w / 3
        if min(abs(du), abs(dl)) < 1e-9:
            continue
        expected = INSIDE if min(du, dl) < 0 else OUTSIDE
        assert in_C12(z, iv) is expected


def test_in_B():
    assert in_B(C(-1)) is INSIDE
    assert in_B(C(-1, 2)) is OUTSIDE
    assert in_B(C(0)) is BOUNDARY
    assert in_B(C(0, 1)) is OUTSIDE
    assert in_B(C(1)) is OUTSIDE
    assert in_B(C(-1, F(17, 10))) is INSIDE


def test_surd_sign():
    assert surd_sign(1, -2) == -1
    assert surd_sign(1, -1) == 1
    assert surd_sign(0, 0) == 0
    assert surd_sign(-1, 2) == 1
    assert surd_sign(2, 0) == 1
    assert surd_sign(0, -5) == -1


def test_surd_sign_against_floats():
    rng = random.Random(6)
    for _ in range(2000):
        a, b = _rand_rational(rng), _rand_rational(rng)
        val = float(a) * math.sqrt(3) + float(b)
        if abs(val) > 1e-9:
            assert surd_sign(a, b) == (1 if val > 0 else -1)


def test_point_maps():
    iv = IntervalLR(F(-1, 2), 3)
    assert mobius_point(C(0), iv) == C(iv.r)
    assert mobius_point(C(0, 1), UNIT) == C(0, -1)
    assert inverse_point(C(iv.r), iv) == C(0)
    assert inverse_point(C(0, -1), UNIT) == C(0, 1)
    assert inverse_point(C(iv.mid), iv) == C(1)
    with pytest.raises(PoleError):
        mobius_point(C(-1), iv)
    with pytest.raises(PoleError):
        inverse_point(C(iv.l), iv)


def test_point_maps_are_inverse():
    rng = random.Random(7)
    for _ in range(500):
        iv = _rand_iv(rng)
        w = _rand_point(rng)
        if w == C(iv.l):
            continue
        assert mobius_point(inverse_point(w, iv), iv) == w


def test_C0_inside_C12():
    rng = random.Random(8)
    for _ in range(3000):
        iv = _rand_iv(rng)
        z = _rand_point(rng, 3)
        if in_C0(z, iv) is INSIDE:
            assert in_C12(z, iv) is INSIDE


def test_conjugate_symmetry():
    rng = random.Random(9)
    for _ in range(1000):
        iv = _rand_iv(rng)
        z = _rand_point(rng, 3)
        zc = z.conjugate()
        assert in_C0(z, iv) is in_C0(zc, iv)
        assert in_C12(z, iv) is in_C12(zc, iv)
        assert in_B(z) is in_B(zc)
        for k in (0, 1, 2, 3, 4, 6):
            assert in_area(z, iv, k) is in_area(zc, iv, k)
            assert in_lens(z, iv, k) is in_lens(zc, iv, k)


def test_re_nonpositive_iff_outside_C0_after_map():
    rng = random.Random(10)
    for _ in range(1000):
        iv = _rand_iv(rng)
        z = _rand_point(rng)
        if (z + 1).is_zero():
            continue
        assert not_in_C(mobius_point(z, iv), iv) == (z.re <= 0)


def test_B_iff_outside_C12_after_map():
    rng = random.Random(11)
    for _ in range(1000):
        iv = _rand_iv(rng)
        z = _rand_point(rng)
        if (z + 1).is_zero():
            continue
        b = in_B(z)
        c = in_C12(mobius_point(z, iv), iv)
        # the closed form of the lemma holds everywhere
        assert (b is not OUTSIDE) == (c is not INSIDE)
        if b.strict and c.strict:
            assert (b is INSIDE) == (c is OUTSIDE)


def test_obreshkoff_k0_is_C0():
    rng = random.Random(12)
    for _ in range(500):
        iv = _rand_iv(rng)
        z = _rand_point(rng, 3)
        assert in_area(z, iv, 0) is in_C0(z, iv)
        assert in_lens(z, iv, 0) is in_C0(z, iv)


def test_obreshkoff_k1_is_C12():
    grid = [F(n, 4) for n in range(-12, 13)]
    for x in grid:
        for y in grid:
            assert in_area(C(x, y), UNIT, 1) is in_C12(C(x, y), UNIT)


def test_obreshkoff_k2_example():
    assert obreshkoff_membership(C(1, 1), IntervalLR(0, 2), 2, "upper") is INSIDE
    assert obreshkoff_membership(C(1, 1), IntervalLR(0, 2), 2, Which.LOWER) is OUTSIDE
    assert obreshkoff_membership(C(1, 1), IntervalLR(0, 2), 2, "lens") is OUTSIDE
    assert obreshkoff_membership(C(1, 1), IntervalLR(0, 2), 2, "area") is INSIDE


def test_cot_enclosure():
    for k in range(0, 9):
        lo, hi = cot_enclosure(k, 128)
        exact = 1 / math.tan(math.pi / (k + 2))
        assert lo <= hi
        assert float(lo) - 1e-12 <= exact <= float(hi) + 1e-12
        assert hi - lo < F(1, 2 ** 100) or k == 0


def test_exact_and_adaptive_paths_agree():
    # force the interval path for k in {1, 2, 4} by comparing against float-free bounds
    from threecircles.regions import _disc_sign
    rng = random.Random(13)
    for _ in range(500):
        e, t = _rand_rational(rng), _rand_rational(rng)
        for k in (1, 2, 4):
            exact = _disc_sign(e, t, k, 256)
            lo, hi = cot_enclosure(k, 256)
            a, b = e - t * lo, e - t * hi
            if (a > 0) == (b > 0) and a != 0 and b != 0:
                assert exact == (1 if a > 0 else -1)


def test_adaptive_path_resolves_generic_points():
    rng = random.Random(14)
    for _ in range(500):
        iv = _rand_iv(rng)
        z = _rand_point(rng, 3)
        for k in (3, 5, 6, 7):
            for which in Which:
                assert obreshkoff_membership(z, iv, k, which) is not UNDECIDED


def test_adaptive_budget_can_leave_undecided():
    # a point extremely close to the upper k=3 circle cannot be settled with 32 bits
    iv = UNIT
    lo, hi = cot_enclosure(3, 256)
    h = (lo + hi) / 2
    # upper circle of index 3 meets the imaginary axis at y = h + sqrt(1 + h^2); approximate it
    from threecircles.regions import e0
    y = h + F(math.sqrt(1 + float(h) ** 2)).limit_denominator(10 ** 30)
    y = y + F(1, 10 ** 25)
    z = C(0, y)
    assert obreshkoff_membership(z, iv, 3, "upper", precision_bits=32) is UNDECIDED
    assert obreshkoff_membership(z, iv, 3, "upper", precision_bits=256) is not UNDECIDED
    assert e0(z, iv) > 0


def test_nesting_in_k():
    # centre height grows with k: areas grow, lenses shrink
    rng = random.Random(15)
    ks = [0, 1, 2, 3, 4, 5, 6]
    for _ in range(400):
        iv = _rand_iv(rng)
        z = _rand_point(rng, 4)
        areas = [in_area(z, iv, k) for k in ks]
        lenses = [in_lens(z, iv, k) for k in ks]
        for i in range(len(ks) - 1):
            if areas[i] is INSIDE:
                assert areas[i + 1] is INSIDE
            if lenses[i + 1] is INSIDE:
                assert lenses[i] is INSIDE
