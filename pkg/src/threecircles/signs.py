"""Sign variations of coefficient sequences and Bernstein coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidArgument
from .polycore import Polynomial, as_rational, mobius, poly_mul, poly_scale


def _items(s) -> Sequence[Fraction]:
    return s.coeffs if isinstance(s, Polynomial) else s


def changes(s) -> int:
    """Count adjacent pairs with a strictly negative product.

    Zeros are *not* skipped, so ``changes([-1, 0, 1]) == 0``; use
    :func:`sign_changes` to count actual sign variations.
    """
    s = _items(s)
    return sum(1 for a, b in zip(s, s[1:]) if a * b < 0)


def seqn0(s) -> list[Fraction]:
    return [x for x in _items(s) if x != 0]


def sign_changes(s) -> int:
    return changes(seqn0(s))


def mid(s) -> list:
    return list(_items(s))[1:-1]


def seqmul(s, t) -> list:
    s, t = _items(s), _items(t)
    if len(s) != len(t):
        raise InvalidArgument(f"seqmul of lengths {len(s)} and {len(t)}")
    return [a * b for a, b in zip(s, t)]


def all_pos(s) -> bool:
    return all(x > 0 for x in _items(s))


def all_neq0(s) -> bool:
    return all(x != 0 for x in _items(s))


def increasing(s) -> bool:
    s = _items(s)
    return all(a <= b for a, b in zip(s, s[1:]))


def spseq(p: Polynomial, a) -> list[Fraction]:
    """``p_k / p_{k+1} - a`` for consecutive coefficients of ``p``."""
    a = as_rational(a)
    c = p.coeffs
    if any(x == 0 for x in c):
        raise InvalidArgument("spseq needs nonzero coefficients")
    return [x / y - a for x, y in zip(c, c[1:])]


@lru_cache(maxsize=None)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle."""
    if n == 0:
        return (1,)
    prev = binomial_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


@dataclass(frozen=True)
class BernsteinCoeffs:
    n: int
    l: Fraction
    r: Fraction
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.l < self.r:
            raise InvalidArgument(f"need l < r, got ({self.l}, {self.r})")
        if len(self.b) != self.n + 1:
            raise InvalidArgument(f"expected {self.n + 1} coefficients, got {len(self.b)}")


def bernstein_coeffs(p: Polynomial, l, r, n: int | None = None) -> BernsteinCoeffs:
    """Coefficients of ``p`` in the degree-``n`` Bernstein basis on ``(l, r)``.

    Read off the Moebius transform: ``b_i = c_{n-i} / C(n, i)``.
    """
    l, r = as_rational(l), as_rational(r)
    if n is None:
        n = max(p.degree, 0)
    if p.degree > n:
        raise InvalidArgument(f"degree {p.degree} exceeds basis degree {n}")
    if p.is_zero():
        return BernsteinCoeffs(n, l, r, (Fraction(0),) * (n + 1))
    c = mobius(p, l, r, n)
    row = binomial_row(n)
    return BernsteinCoeffs(n, l, r, tuple(c[n - i] / row[i] for i in range(n + 1)))


def bernstein_basis(n: int, i: int, l, r) -> Polynomial:
    """``C(n,i) (X-l)^i (r-X)^(n-i) / (r-l)^n`` expanded in the monomial basis."""
    l, r = as_rational(l), as_rational(r)
    out = Polynomial([1])
    for _ in range(i):
        out = poly_mul(out, Polynomial([-l, 1]))
    for _ in range(n - i):
        out = poly_mul(out, Polynomial([r, -1]))
    return poly_scale(Fraction(binomial_row(n)[i]) / (r - l) ** n, out)


def bernstein_expand(bc: BernsteinCoeffs) -> Polynomial:
    out = Polynomial()
    for i, b in enumerate(bc.b):
        if b:
            out = out + poly_scale(b, bernstein_basis(bc.n, i, bc.l, bc.r))
    return out


def de_casteljau_split(b: Sequence[Fraction], t=Fraction(1, 2)) -> tuple[list[Fraction], list[Fraction]]:
    """Split Bernstein coefficients at parameter ``t``; a second oracle for subintervals."""
    t = as_rational(t)
    left, right = [], []
    row = list(b)
    while row:
        left.append(row[0])
        right.append(row[-1])
        row = [(1 - t) * x + t * y for x, y in zip(row, row[1:])]
    return left, right[::-1]
