import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P, intervals, polys, rationals
from threecircles.errors import InvalidArgument
from threecircles.normal import is_normal
from threecircles.polycore import Polynomial, mobius, poly_mul, poly_scale
from threecircles.signs import (BernsteinCoeffs, all_neq0, all_pos, bernstein_coeffs,
                                bernstein_expand, changes, de_casteljau_split, increasing, mid,
                                seqmul, seqn0, sign_changes, spseq)

seqs = st.lists(rationals(), max_size=12)
nonzero_seqs = st.lists(rationals(nonzero=True), max_size=12)


def test_changes_counts_strict_products_only():
    assert changes([-1, 0, 1]) == 0
    assert changes([]) == 0
    assert changes([1, -1, 1]) == 2


def test_seqn0():
    assert seqn0([-1, 0, 1]) == [-1, 1]
    assert seqn0([0, 0]) == []
    assert seqn0([2, 3]) == [2, 3]


def test_sign_changes():
    assert sign_changes([-1, 0, 1]) == 1
    assert sign_changes([2, 0, 2]) == 0
    assert sign_changes([1, -1]) == 1
    assert sign_changes(P(-1, 0, 0, 3, -2)) == 2


def test_sequence_helpers():
    assert mid(["a", "b", "c", "d"]) == ["b", "c"]
    assert seqmul([1, 2], [3, 4]) == [3, 8]
    assert increasing([-1, -1, 2])
    assert not increasing([1, 0])
    assert all_pos([1, F(1, 2)]) and not all_pos([1, 0])
    assert all_neq0([-1, 2]) and not all_neq0([0])
    with pytest.raises(InvalidArgument):
        seqmul([1], [1, 2])


def test_spseq():
    assert spseq(P(1, 1), 1) == [0]
    assert spseq(P(1, 2, 4), 0) == [F(1, 2), F(1, 2)]
    assert spseq(P(1, 3, 1), 1) == [F(-2, 3), 2]
    with pytest.raises(InvalidArgument):
        spseq(P(1, 0, 1), 1)


@given(seqs, rationals(nonzero=True))
def test_changes_scale_invariant(s, a):
    assert changes([a * x for x in s]) == changes(s)
    assert sign_changes([a * x for x in s]) == sign_changes(s)


@given(nonzero_seqs.filter(lambda s: len(s) > 2))
def test_changes_decomposition(s):
    edge = (s[0] * s[1] < 0) + (s[-2] * s[-1] < 0)
    assert changes(s) == edge + changes(mid(s))


@given(st.lists(st.tuples(rationals(), rationals(nonzero=True).map(abs)), max_size=10))
def test_changes_mult(pairs):
    s = [a for a, _ in pairs]
    c = [b for _, b in pairs]
    assert changes(seqmul(s, c)) == changes(s)


@given(nonzero_seqs.filter(bool))
def test_increasing_dichotomy(s):
    s = sorted(s)
    v = changes(s)
    assert v in (0, 1)
    assert (v == 1) == (s[0] < 0 < s[-1])
    assert (v == 0) == (s[0] * s[-1] > 0)


def _random_normal_positive(rng):
    # positive log-concave run
    coeffs = [F(rng.randint(1, 9), rng.randint(1, 4))]
    ratios = sorted((F(rng.randint(1, 20), rng.randint(1, 5)) for _ in range(rng.randint(0, 6))), reverse=True)
    for q in ratios:
        coeffs.append(coeffs[-1] * q)
    return Polynomial(coeffs)


def test_spseq_structure():
    rng = random.Random(5)
    for _ in range(300):
        p = _random_normal_positive(rng)
        assert is_normal(p)
        a = F(rng.randint(-20, 20), rng.randint(1, 5))
        prod = poly_mul(p, P(-a, 1))
        sp = spseq(p, a)
        assert mid(list(prod.coeffs)) == seqmul(sp, list(p.coeffs[1:]))
        assert increasing(sp)


def test_bernstein_examples():
    assert bernstein_coeffs(P(1), 0, 1, 2).b == (1, 1, 1)
    assert bernstein_coeffs(P(1), -5, F(1, 3), 2).b == (1, 1, 1)
    assert bernstein_coeffs(P(1, 0, 1), -1, 1, 2).b == (2, 0, 2)
    assert bernstein_coeffs(P(0, 1), 0, 1, 1).b == (0, 1)
    with pytest.raises(InvalidArgument):
        bernstein_coeffs(P(1, 2, 3), 0, 1, 1)


def test_bernstein_expand_examples():
    assert bernstein_expand(BernsteinCoeffs(2, F(0), F(1), (F(1),) * 3)) == P(1)
    assert bernstein_expand(BernsteinCoeffs(1, F(0), F(1), (F(0), F(1)))) == P(0, 1)
    assert bernstein_expand(BernsteinCoeffs(2, F(-1), F(1), (F(2), F(0), F(2)))) == P(1, 0, 1)
    with pytest.raises(InvalidArgument):
        BernsteinCoeffs(1, F(1), F(0), (F(0), F(1)))
    with pytest.raises(InvalidArgument):
        BernsteinCoeffs(2, F(0), F(1), (F(0), F(1)))


@given(polys(10), intervals(), st.integers(0, 3))
def test_bernstein_round_trip(p, iv, extra):
    n = min(p.degree + extra, 10)
    if n < p.degree:
        n = p.degree
    bc = bernstein_coeffs(p, *iv, n)
    assert bernstein_expand(bc) == p


@given(polys(8), intervals(), st.integers(0, 2))
def test_sign_variation_transfer(p, iv, extra):
    n = p.degree + extra
    assert sign_changes(mobius(p, *iv, n)) == sign_changes(bernstein_coeffs(p, *iv, n).b)


@given(polys(7), intervals())
def test_de_casteljau_matches_subinterval_coeffs(p, iv):
    l, r = iv
    m = (l + r) / 2
    left, right = de_casteljau_split(bernstein_coeffs(p, l, r).b)
    assert tuple(left) == bernstein_coeffs(p, l, m, p.degree).b
    assert tuple(right) == bernstein_coeffs(p, m, r, p.degree).b


def test_content_scaling_keeps_counts():
    p = P(F(2, 9), -1, 1)
    assert sign_changes(mobius(poly_scale(-7, p), 0, 1)) == sign_changes(mobius(p, 0, 1)) == 2
