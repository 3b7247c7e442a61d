"""Exact univariate polynomials over the rationals.

Coefficients are stored low-to-high as :class:`fractions.Fraction`; the zero
polynomial is the empty tuple.  Besides the ring operations this module holds
the four coefficient transformations (translation, scaling, inversion) and
their composite, the Moebius transform onto an interval ``(l, r)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidArgument, PoleError

RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidArgument(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise InvalidArgument(f"not a rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``int`` or ``int/int``; decimals and floats are rejected."""
    s = "".join(text.split())
    num, sep, den = s.partition("/")
    try:
        n = int(num, 10)
        d = int(den, 10) if sep else 1
    except ValueError:
        raise InvalidArgument(f"malformed rational {text!r}") from None
    if d == 0:
        raise InvalidArgument(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Immutable dense polynomial, ``coeffs[i]`` is the coefficient of ``X**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip(as_rational(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Polynomial":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def monomial(cls, c: RationalLike, k: int) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def x_minus(cls, a: RationalLike) -> "Polynomial":
        return cls([-as_rational(a), 1])

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{format_poly(self)}])"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other) -> "Polynomial":
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return poly_add(_coerce(other), -self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return poly_scale(Fraction(other), self)
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = poly_mul(result, base)
            base = poly_mul(base, base)
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other) -> "Polynomial":
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other) -> "Polynomial":
        return poly_divmod(self, _coerce(other))[1]

    def __call__(self, x):
        if isinstance(x, ComplexRational):
            return poly_eval_complex(self, x)
        return poly_eval(self, as_rational(x))


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial([x])


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


@dataclass(frozen=True)
class ComplexRational:
    """A point ``re + im*i`` of Q[i]."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @classmethod
    def of(cls, x) -> "ComplexRational":
        return x if isinstance(x, ComplexRational) else cls(as_rational(x))

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexRational":
        return self + (-ComplexRational.of(other))

    def __rsub__(self, other) -> "ComplexRational":
        return ComplexRational.of(other) - self

    def __mul__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        return ComplexRational(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        d = o.norm2()
        if d == 0:
            raise PoleError("division by zero complex number")
        n = self * o.conjugate()
        return ComplexRational(n.re / d, n.im / d)

    def __rtruediv__(self, other) -> "ComplexRational":
        return ComplexRational.of(other) / self

    def __str__(self) -> str:
        return f"{format_rational(self.re)}{'+' if self.im >= 0 else '-'}{format_rational(abs(self.im))}i"


# -- evaluation -------------------------------------------------------------

def poly_eval(p: Polynomial, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_eval_complex(p: Polynomial, z: ComplexRational) -> ComplexRational:
    re, im = Fraction(0), Fraction(0)
    zr, zi = z.re, z.im
    for c in reversed(p.coeffs):
        re, im = re * zr - im * zi + c, re * zi + im * zr
    return ComplexRational(re, im)


def is_root(p: Polynomial, z) -> bool:
    if isinstance(z, ComplexRational):
        return poly_eval_complex(p, z).is_zero()
    return poly_eval(p, as_rational(z)) == 0


# -- ring operations --------------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial._raw(_strip(out))


def poly_scale(c: RationalLike, p: Polynomial) -> Polynomial:
    c = as_rational(c)
    if c == 0:
        return ZERO
    return Polynomial._raw(tuple(c * a for a in p.coeffs))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return Polynomial._raw(_strip(out))


def poly_divmod(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    if q.is_zero():
        raise InvalidArgument("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lq = q.lead
    if len(rem) - 1 < dq:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lq
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= c * b
    return Polynomial(quot), Polynomial(rem[:dq])


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial._raw(_strip(i * c for i, c in enumerate(p.coeffs) if i))


def monic(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    return poly_scale(1 / p.lead, p)


def content(p: Polynomial) -> Fraction:
    """Positive rational ``c`` such that ``p / c`` has coprime integer coefficients."""
    from math import gcd, lcm

    if p.is_zero():
        return Fraction(0)
    den = lcm(*(c.denominator for c in p.coeffs))
    num = 0
    for c in p.coeffs:
        num = gcd(num, c.numerator * (den // c.denominator))
    return Fraction(num, den)


def primitive_part(p: Polynomial) -> Polynomial:
    """``p`` divided by its content; sign of the leading coefficient kept."""
    if p.is_zero():
        return p
    return poly_scale(1 / content(p), p)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd via a primitive remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise InvalidArgument("gcd of two zero polynomials is undefined")
    a, b = primitive_part(p), primitive_part(q)
    while not b.is_zero():
        a, b = b, primitive_part(poly_divmod(a, b)[1])
    return monic(a)


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise InvalidArgument("squarefree part of the zero polynomial")
    g = poly_gcd(p, derivative(p))
    return monic(poly_divmod(p, g)[0])


def is_squarefree(p: Polynomial) -> bool:
    if p.is_zero():
        return False
    return poly_gcd(p, derivative(p)).degree == 0


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime ``f_i`` with ``p = lc * prod f_i**i``.

    Only factors of positive degree are returned.
    """
    if p.is_zero():
        raise InvalidArgument("squarefree decomposition of the zero polynomial")
    out: list[tuple[Polynomial, int]] = []
    dp = derivative(p)
    if dp.is_zero():
        return out
    a = poly_gcd(p, dp)
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = c - derivative(b)
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = poly_divmod(b, g)[0]
        c = poly_divmod(d, g)[0]
        d = c - derivative(b)
        i += 1
    return out


# -- transformations --------------------------------------------------------

def taylor_shift(p: Polynomial, c: RationalLike) -> Polynomial:
    """``p(X + c)`` by repeated synthetic division (Horner-style, O(n^2))."""
    c = as_rational(c)
    a = list(p.coeffs)
    if c == 0 or len(a) < 2:
        return p
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return Polynomial._raw(_strip(a))


def scale_x(p: Polynomial, c: RationalLike) -> Polynomial:
    c = as_rational(c)
    out = []
    power = Fraction(1)
    for a in p.coeffs:
        out.append(a * power)
        power *= c
    return Polynomial._raw(_strip(out))


def reciprocal(p: Polynomial, n: int | None = None) -> Polynomial:
    """``X**n * p(1/X)``; ``n`` defaults to ``deg p`` and must not be smaller."""
    if p.is_zero():
        raise InvalidArgument("reciprocal of the zero polynomial")
    if n is None:
        n = p.degree
    if n < p.degree:
        raise InvalidArgument(f"degree bound {n} below degree {p.degree}")
    padded = list(p.coeffs) + [Fraction(0)] * (n - p.degree)
    return Polynomial._raw(_strip(reversed(padded)))


def mobius(p: Polynomial, l: RationalLike, r: RationalLike, n: int | None = None) -> Polynomial:
    """Moebius transform of ``p`` onto ``(l, r)``.

    Equal to ``(X+1)**n * p((r + l*X) / (X+1))``; the coefficients, read in
    reverse and divided by binomials, are the Bernstein coefficients of ``p``
    on ``(l, r)``.
    """
    l, r = as_rational(l), as_rational(r)
    if not l < r:
        raise InvalidArgument(f"need l < r, got ({l}, {r})")
    if p.is_zero():
        raise InvalidArgument("Moebius transform of the zero polynomial")
    if n is None:
        n = p.degree
    return taylor_shift(reciprocal(scale_x(taylor_shift(p, l), r - l), n), 1)


# -- text format ------------------------------------------------------------

def parse_poly(text: str) -> Polynomial:
    """Comma-separated rationals low-to-high, e.g. ``2/9,-1,1``; empty text is zero."""
    s = "".join(text.split())
    if not s:
        return ZERO
    return Polynomial(parse_rational(part) for part in s.split(","))


def format_poly(p: Polynomial) -> str:
    return ",".join(format_rational(c) for c in p.coeffs)


def poly_from_seq(seq: Sequence[RationalLike]) -> Polynomial:
    return Polynomial(seq)
