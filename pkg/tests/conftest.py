from fractions import Fraction

from hypothesis import strategies as st

from threecircles.polycore import Polynomial


def rationals(max_num=30, max_den=12, nonzero=False):
    s = st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))
    return s.filter(bool) if nonzero else s


def polys(max_degree=6, nonzero=True):
    s = st.lists(rationals(), min_size=1, max_size=max_degree + 1).map(Polynomial)
    return s.filter(lambda p: not p.is_zero()) if nonzero else s


@st.composite
def intervals(draw):
    l = draw(rationals())
    w = draw(rationals(max_num=20, nonzero=True).map(abs))
    return l, l + w


def P(*coeffs):
    return Polynomial([Fraction(c) if not isinstance(c, str) else Fraction(c) for c in coeffs])
