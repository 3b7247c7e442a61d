"""Membership in the discs attached to an interval ``(l, r)``.

All tests reduce to the sign of ``E0(z) - 2*h*Im(z)`` (upper disc) or
``E0(z) + 2*h*Im(z)`` (lower disc), where ``E0 = x^2 - (l+r)x + y^2 + lr`` is
the disc on diameter ``(l, r)`` and ``h`` is the height of the disc centre
above the real axis.  For the Obreshkoff discs of index ``k``,
``h = (r-l)/2 * cot(pi/(k+2))``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidArgument, PoleError
from .polycore import ComplexRational, RationalLike, as_rational

DEFAULT_PRECISION_BITS = 256
_START_BITS = 32


class Membership(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    UNDECIDED = "undecided"

    @property
    def strict(self) -> bool:
        return self in (Membership.INSIDE, Membership.OUTSIDE)


INSIDE, OUTSIDE, BOUNDARY, UNDECIDED = (Membership.INSIDE, Membership.OUTSIDE,
                                        Membership.BOUNDARY, Membership.UNDECIDED)


@dataclass(frozen=True)
class IntervalLR:
    l: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l", as_rational(self.l))
        object.__setattr__(self, "r", as_rational(self.r))
        if not self.l < self.r:
            raise InvalidArgument(f"need l < r, got ({self.l}, {self.r})")

    @property
    def mid(self) -> Fraction:
        return (self.l + self.r) / 2

    @property
    def width(self) -> Fraction:
        return self.r - self.l

    def contains(self, x: Fraction) -> bool:
        return self.l < x < self.r

    def __str__(self) -> str:
        from .polycore import format_rational
        return f"({format_rational(self.l)}, {format_rational(self.r)})"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _from_sign(s: int) -> Membership:
    return INSIDE if s < 0 else OUTSIDE if s > 0 else BOUNDARY


def surd_sign(A: RationalLike, B: RationalLike) -> int:
    """Sign of ``A*sqrt(3) + B``."""
    A, B = as_rational(A), as_rational(B)
    sa, sb = _sign(A), _sign(B)
    if sa == 0 or sb == 0 or sa == sb:
        return sa or sb
    # opposite signs: the larger magnitude wins
    return sa * _sign(3 * A * A - B * B)


def e0(z: ComplexRational, iv: IntervalLR) -> Fraction:
    x, y = z.re, z.im
    return x * x - (iv.l + iv.r) * x + y * y + iv.l * iv.r


def in_C0(z: ComplexRational, iv: IntervalLR) -> Membership:
    return _from_sign(_sign(e0(z, iv)))


def not_in_C(z: ComplexRational, iv: IntervalLR) -> bool:
    """Closed complement of the disc on diameter ``(l, r)``."""
    return e0(z, iv) >= 0


def _union(a: Membership, b: Membership) -> Membership:
    if INSIDE in (a, b):
        return INSIDE
    if UNDECIDED in (a, b):
        return UNDECIDED
    if BOUNDARY in (a, b):
        return BOUNDARY
    return OUTSIDE


def _intersection(a: Membership, b: Membership) -> Membership:
    if OUTSIDE in (a, b):
        return OUTSIDE
    if UNDECIDED in (a, b):
        return UNDECIDED
    if BOUNDARY in (a, b):
        return BOUNDARY
    return INSIDE


def in_C12(z: ComplexRational, iv: IntervalLR) -> Membership:
    """Union of the circumdiscs of the two equilateral triangles on ``(l, r)``."""
    e = e0(z, iv)
    # E0 -/+ (r-l) y / sqrt 3  ==  E0 -/+ ((r-l) y / 3) sqrt 3
    t = iv.width * z.im / 3
    upper = _from_sign(surd_sign(-t, e))
    lower = _from_sign(surd_sign(t, e))
    return _union(upper, lower)


def in_B(z: ComplexRational) -> Membership:
    """Closed sector ``Re z <= 0, Im^2 <= 3 Re^2``; Boundary when an inequality is tight."""
    a, b = z.re, z.im
    slack = 3 * a * a - b * b
    if a > 0 or slack < 0:
        return OUTSIDE
    if a == 0 or slack == 0:
        return BOUNDARY
    return INSIDE


def in_B_closed(z: ComplexRational) -> bool:
    return in_B(z) is not OUTSIDE


def mobius_point(z: ComplexRational, iv: IntervalLR) -> ComplexRational:
    """``(r + l z) / (z + 1)``: where a root ``z`` of the transform sits for ``p``."""
    z = ComplexRational.of(z)
    den = z + 1
    if den.is_zero():
        raise PoleError("mobius_point at z = -1")
    return (iv.l * z + iv.r) / den


def inverse_point(w: ComplexRational, iv: IntervalLR) -> ComplexRational:
    w = ComplexRational.of(w)
    den = w - iv.l
    if den.is_zero():
        raise PoleError("inverse_point at w = l")
    return (iv.r - w) / den


# -- Obreshkoff discs -------------------------------------------------------

class Which(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    AREA = "area"
    LENS = "lens"


EXACT_INDICES = frozenset({0, 1, 2, 4})


@lru_cache(maxsize=256)
def cot_enclosure(k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo <= cot(pi/(k+2)) <= hi`` from outward-rounded interval arithmetic."""
    from mpmath.ctx_iv import MPIntervalContext
    from mpmath.libmp import to_rational

    ctx = MPIntervalContext()
    ctx.prec = bits
    v = ctx.cot(ctx.pi / (k + 2))
    lo, hi = v._mpi_
    return Fraction(*to_rational(lo)), Fraction(*to_rational(hi))


def _disc_sign(e: Fraction, t: Fraction, k: int, budget: int) -> int | None:
    """Sign of ``e - t * cot(pi/(k+2))``; None when unresolved within ``budget`` bits."""
    if k < 0:
        raise InvalidArgument(f"Obreshkoff index must be >= 0, got {k}")
    if t == 0 or k == 0:
        return _sign(e)
    if k == 2:
        return _sign(e - t)
    if k == 1:
        # cot = sqrt(3)/3
        return surd_sign(-t / 3, e)
    if k == 4:
        return surd_sign(-t, e)
    # cot > 0 for k >= 1: if e and -t agree in sign the answer needs no bounds
    if _sign(e) == _sign(-t):
        return _sign(e)
    bits = _START_BITS
    while True:
        lo, hi = cot_enclosure(k, min(bits, budget))
        a, b = e - t * lo, e - t * hi
        if _sign(a) == _sign(b) != 0:
            return _sign(a)
        if bits >= budget:
            return None
        bits *= 2


def obreshkoff_height(k: int, iv: IntervalLR, bits: int = 64) -> tuple[float, float]:
    """Float bounds on the centre height, for plotting only."""
    lo, hi = cot_enclosure(k, bits)
    d = iv.width / 2
    return float(d * lo), float(d * hi)


def obreshkoff_membership(z: ComplexRational, iv: IntervalLR, k: int,
                          which: Which | str = Which.AREA,
                          precision_bits: int = DEFAULT_PRECISION_BITS) -> Membership:
    which = Which(which)
    e = e0(z, iv)
    # 2 h y = (r - l) * cot * y
    t = iv.width * z.im

    def disc(sgn: int) -> Membership:
        s = _disc_sign(e, sgn * t, k, precision_bits)
        return UNDECIDED if s is None else _from_sign(s)

    if which is Which.UPPER:
        return disc(1)
    if which is Which.LOWER:
        return disc(-1)
    if which is Which.AREA:
        return _union(disc(1), disc(-1))
    return _intersection(disc(1), disc(-1))


def in_area(z, iv, k, precision_bits=DEFAULT_PRECISION_BITS) -> Membership:
    return obreshkoff_membership(z, iv, k, Which.AREA, precision_bits)


def in_lens(z, iv, k, precision_bits=DEFAULT_PRECISION_BITS) -> Membership:
    return obreshkoff_membership(z, iv, k, Which.LENS, precision_bits)
