"""Normal polynomials.

A polynomial is normal when its coefficients are a run of zeros followed by
positive, log-concave values up to the leading one.  :func:`normal_seq` is the
canonical recursive predicate; :func:`normal_via_properties` checks the four
defining conditions directly and reports where they fail.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidArgument
from .polycore import ComplexRational, Polynomial, as_rational, poly_mul
from .signs import sign_changes


def normal_seq(s: Sequence[Fraction]) -> bool:
    # iterative form of the three-branch recursion, walking from the tail
    n = len(s)
    if n == 0:
        return False
    if n == 1:
        return 0 < s[0]
    if not (0 <= s[-2] and 0 < s[-1]):
        return False
    for i in range(n - 3, -1, -1):
        a, b, c = s[i], s[i + 1], s[i + 2]
        if not (a == 0 or (a * c <= b * b and 0 < a and 0 < b)):
            return False
    return True


def is_normal(p: Polynomial) -> bool:
    return normal_seq(p.coeffs)


@dataclass(frozen=True)
class NormalVerdict:
    is_normal: bool
    failing_index: Optional[int] = None
    failed_condition: Optional[int] = None

    def __bool__(self) -> bool:
        return self.is_normal


def normal_via_properties(p: Polynomial) -> NormalVerdict:
    """Check the four defining conditions, in the order 1, 2, 4, 3.

    Contiguity of the positive run (condition 4) is checked before
    log-concavity so that a gap such as ``[1, 0, 1]`` is reported as a gap.
    """
    a = p.coeffs
    if not a:
        return NormalVerdict(False, 0, 2)
    for i, x in enumerate(a):
        if x < 0:
            return NormalVerdict(False, i, 1)
    if not a[-1] > 0:
        return NormalVerdict(False, len(a) - 1, 2)
    seen_pos = False
    for i, x in enumerate(a):
        if x > 0:
            seen_pos = True
        elif seen_pos:
            return NormalVerdict(False, i, 4)
    # only interior indices; at the ends the condition is vacuous for x >= 0
    for i in range(1, len(a) - 1):
        if a[i - 1] * a[i + 1] > a[i] * a[i]:
            return NormalVerdict(False, i, 3)
    return NormalVerdict(True)


def quad_from_conjugate_pair(z: ComplexRational) -> Polynomial:
    """Monic quadratic with roots ``z`` and its conjugate."""
    return Polynomial([z.re * z.re + z.im * z.im, -2 * z.re, 1])


def normal_changes_value(p: Polynomial, a) -> int:
    """Sign variations of ``p * (X - a)``; always 1 when the preconditions hold."""
    a = as_rational(a)
    if not a > 0:
        raise InvalidArgument(f"need a > 0, got {a}")
    if not is_normal(p):
        raise InvalidArgument("polynomial is not normal")
    if p[0] == 0:
        raise InvalidArgument("polynomial vanishes at 0")
    return sign_changes(poly_mul(p, Polynomial([-a, 1])))
