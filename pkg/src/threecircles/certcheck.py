"""Empirical validation of the three-circles theorem and its Obreshkoff generalisation.

Polynomials are built from prescribed roots, so every membership test is
exact and the sign-variation count is compared against what the theorem
predicts.  Instances whose roots sit on a disc boundary (or whose membership
cannot be resolved within the precision budget) are skipped, never asserted.
"""
from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import GeneratorExhausted, InvalidArgument
from .normal import is_normal
from .polycore import (ComplexRational, Polynomial, as_rational, format_rational,
                       mobius, parse_rational, poly_mul)
from .regions import (BOUNDARY, INSIDE, OUTSIDE, UNDECIDED, DEFAULT_PRECISION_BITS,
                      IntervalLR, in_area, in_B, in_C0, in_C12, in_lens)
from .signs import bernstein_coeffs, bernstein_expand, changes, sign_changes

GENERATOR_BUDGET = 10_000
MAX_DENOMINATOR = 16
MAX_NUMERATOR = 64


# -- root specifications ----------------------------------------------------

@dataclass(frozen=True)
class RootSpec:
    """Real roots and conjugate pairs (``im > 0``; the conjugate is implied)."""

    real_roots: tuple[tuple[Fraction, int], ...] = ()
    complex_pairs: tuple[tuple[Fraction, Fraction, int], ...] = ()
    leading: Fraction = Fraction(1)

    def __post_init__(self):
        reals = tuple((as_rational(a), int(m)) for a, m in self.real_roots)
        pairs = tuple((as_rational(x), as_rational(y), int(m)) for x, y, m in self.complex_pairs)
        object.__setattr__(self, "real_roots", reals)
        object.__setattr__(self, "complex_pairs", pairs)
        object.__setattr__(self, "leading", as_rational(self.leading))
        if self.leading == 0:
            raise InvalidArgument("leading coefficient must be nonzero")
        if any(m < 1 for _, m in reals) or any(m < 1 for _, _, m in pairs):
            raise InvalidArgument("multiplicities must be >= 1")
        if any(y <= 0 for _, y, _ in pairs):
            raise InvalidArgument("complex pairs need im > 0")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.real_roots) + 2 * sum(m for _, _, m in self.complex_pairs)

    def roots(self) -> list[tuple[ComplexRational, int]]:
        """Every root with its multiplicity, conjugates listed separately."""
        out = [(ComplexRational(a), m) for a, m in self.real_roots]
        for x, y, m in self.complex_pairs:
            out.append((ComplexRational(x, y), m))
            out.append((ComplexRational(x, -y), m))
        return out

    def with_real_root(self, a, m: int = 1) -> "RootSpec":
        return RootSpec(self.real_roots + ((as_rational(a), m),), self.complex_pairs, self.leading)

    # text form: one item per line
    def to_text(self) -> str:
        lines = [f"real {format_rational(a)} x{m}" for a, m in self.real_roots]
        lines += [f"pair {format_rational(x)} {format_rational(y)} x{m}" for x, y, m in self.complex_pairs]
        lines.append(f"leading {format_rational(self.leading)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RootSpec":
        reals, pairs, leading = [], [], Fraction(1)
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                kind = parts[0]
                if kind == "real" and len(parts) in (2, 3):
                    reals.append((parse_rational(parts[1]), _mult(parts[2:])))
                elif kind == "pair" and len(parts) in (3, 4):
                    pairs.append((parse_rational(parts[1]), parse_rational(parts[2]), _mult(parts[3:])))
                elif kind == "leading" and len(parts) == 2:
                    leading = parse_rational(parts[1])
                else:
                    raise InvalidArgument(f"unrecognised entry {line!r}")
            except InvalidArgument as exc:
                raise InvalidArgument(f"line {lineno}: {exc}") from None
        return cls(tuple(reals), tuple(pairs), leading)

    def to_dict(self) -> dict:
        return {
            "real_roots": [{"value": format_rational(a), "multiplicity": m} for a, m in self.real_roots],
            "complex_pairs": [{"re": format_rational(x), "im": format_rational(y), "multiplicity": m}
                              for x, y, m in self.complex_pairs],
            "leading": format_rational(self.leading),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RootSpec":
        return cls(
            tuple((parse_rational(r["value"]), r.get("multiplicity", 1)) for r in d.get("real_roots", ())),
            tuple((parse_rational(c["re"]), parse_rational(c["im"]), c.get("multiplicity", 1))
                  for c in d.get("complex_pairs", ())),
            parse_rational(d.get("leading", "1")),
        )


def _mult(parts: list[str]) -> int:
    if not parts:
        return 1
    tok = parts[0]
    if not tok.startswith("x") or not tok[1:].isdigit() or int(tok[1:]) < 1:
        raise InvalidArgument(f"bad multiplicity {tok!r}")
    return int(tok[1:])


def poly_from_roots(spec: RootSpec) -> Polynomial:
    p = Polynomial([spec.leading])
    for a, m in spec.real_roots:
        lin = Polynomial([-a, 1])
        for _ in range(m):
            p = poly_mul(p, lin)
    for x, y, m in spec.complex_pairs:
        quad = Polynomial([x * x + y * y, -2 * x, 1])
        for _ in range(m):
            p = poly_mul(p, quad)
    return p


# -- single-instance checks -------------------------------------------------

PASS, FAIL, SKIP, SKIP_UNDECIDED, REJECT = "pass", "fail", "skip", "skip-undecided", "rejected"


@dataclass(frozen=True)
class Outcome:
    status: str
    observed_v: Optional[int] = None
    expected: str = ""
    reason: str = ""


def _classify(spec: RootSpec, member) -> Optional[str]:
    """``SKIP`` if any root is on a boundary, ``REJECT`` if any is not Outside."""
    verdicts = [member(z) for z, _ in spec.roots()]
    if UNDECIDED in verdicts:
        return SKIP_UNDECIDED
    if BOUNDARY in verdicts:
        return SKIP
    if INSIDE in verdicts:
        return REJECT
    return None


def check_case1(spec: RootSpec, iv: IntervalLR) -> Outcome:
    """No root in the disc on diameter ``(l, r)`` implies no sign variation."""
    status = _classify(spec, lambda z: in_C0(z, iv))
    if status:
        return Outcome(status, expected="v = 0", reason="root inside or on the disc")
    v = sign_changes(mobius(poly_from_roots(spec), iv.l, iv.r))
    return Outcome(PASS if v == 0 else FAIL, v, "v = 0")


def check_case2(spec: RootSpec, iv: IntervalLR, a) -> Outcome:
    """A single simple root ``a`` in ``(l, r)`` with all others outside both circumdiscs implies ``v = 1``."""
    a = as_rational(a)
    if not iv.contains(a):
        return Outcome(REJECT, expected="v = 1", reason="a not in (l, r)")
    status = _classify(spec, lambda z: in_C12(z, iv))
    if status:
        return Outcome(status, expected="v = 1", reason="root inside or on the circumdiscs")
    base = poly_from_roots(spec)
    # unreachable after the Outside test, kept as explicit hypotheses
    if base(a) == 0 or base(iv.r) == 0:
        return Outcome(REJECT, expected="v = 1", reason="a or r is a root of the base polynomial")
    full = poly_mul(base, Polynomial([-a, 1]))
    v = sign_changes(mobius(full, iv.l, iv.r))
    return Outcome(PASS if v == 1 else FAIL, v, "v = 1")


def obreshkoff_counts(spec: RootSpec, iv: IntervalLR, p_count: int, q_count: int,
                      precision_bits: int = DEFAULT_PRECISION_BITS):
    """Roots (with multiplicity) in the lens of index ``n - p`` and the area of index ``q``.

    Returns ``None`` for the counts when some membership is Boundary or
    Undecided, together with the offending verdict.
    """
    n = spec.degree
    lens_k = n - p_count
    in_l = in_a = 0
    for z, m in spec.roots():
        lv = in_lens(z, iv, lens_k, precision_bits)
        av = in_area(z, iv, q_count, precision_bits)
        for v in (lv, av):
            if not v.strict:
                return None, v
        in_l += m * (lv is INSIDE)
        in_a += m * (av is INSIDE)
    return (in_l, in_a), None


def check_obreshkoff(spec: RootSpec, iv: IntervalLR, p_count: int, q_count: int,
                     precision_bits: int = DEFAULT_PRECISION_BITS) -> Outcome:
    """At least ``p`` roots in the lens ``L_{n-p}`` and at most ``q`` in the area ``A_q`` imply ``p <= v <= q``."""
    expected = f"{p_count} <= v <= {q_count}"
    if p_count < 0 or q_count < 0 or p_count > spec.degree:
        return Outcome(REJECT, expected=expected, reason="counts out of range")
    counts, bad = obreshkoff_counts(spec, iv, p_count, q_count, precision_bits)
    if counts is None:
        return Outcome(SKIP_UNDECIDED if bad is UNDECIDED else SKIP, expected=expected,
                       reason=f"membership {bad.value}")
    lens_roots, area_roots = counts
    if lens_roots < p_count or area_roots > q_count:
        return Outcome(REJECT, expected=expected,
                       reason=f"{lens_roots} roots in lens, {area_roots} in area")
    v = sign_changes(mobius(poly_from_roots(spec), iv.l, iv.r))
    return Outcome(PASS if p_count <= v <= q_count else FAIL, v, expected)


def check_nonpositive_real_parts(spec: RootSpec) -> bool:
    """Monic polynomial with all roots in ``Re <= 0`` has nonnegative coefficients and no variation."""
    if any(z.re > 0 for z, _ in spec.roots()):
        raise InvalidArgument("some root has positive real part")
    p = poly_from_roots(RootSpec(spec.real_roots, spec.complex_pairs, 1))
    return all(c >= 0 for c in p.coeffs) and changes(p.coeffs) == 0


def check_roots_in_B(spec: RootSpec) -> bool:
    """Monic polynomial with all roots in the closed sector is normal."""
    if any(in_B(z) is OUTSIDE for z, _ in spec.roots()):
        raise InvalidArgument("some root lies outside the sector")
    return is_normal(poly_from_roots(RootSpec(spec.real_roots, spec.complex_pairs, 1)))


# -- generators -------------------------------------------------------------

def trial_seed(seed: int, index: int) -> int:
    """64-bit seed for trial ``index`` of a campaign; independent of worker layout."""
    h = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def random_rational(rng: random.Random, lo: int = -4, hi: int = 4) -> Fraction:
    """Rational in ``[lo, hi]`` with denominator <= 16 (numerator magnitude <= 64 for the default range)."""
    den = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_interval(rng: random.Random) -> IntervalLR:
    l = random_rational(rng, -3, 3)
    return IntervalLR(l, l + Fraction(rng.randint(1, MAX_NUMERATOR), rng.randint(1, MAX_DENOMINATOR)))


def _random_leading(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(1, MAX_NUMERATOR), rng.randint(1, MAX_DENOMINATOR))
    return c if rng.random() < 0.5 else -c


def _relative_point(rng: random.Random, iv: IntervalLR, spread: int = 3) -> ComplexRational:
    """Point ``mid + (width/2) * (u + v i)`` with small rational ``u``, ``v >= 0``."""
    d = iv.width / 2
    u = random_rational(rng, -spread, spread)
    v = random_rational(rng, 0, spread)
    return ComplexRational(iv.mid + d * u, d * v)


def _multiplicity(rng: random.Random, room: int) -> int:
    return 2 if room >= 2 and rng.random() < 0.1 else 1


class _Budget:
    def __init__(self, limit: int, what: str):
        self.limit, self.what, self.used = limit, what, 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise GeneratorExhausted(f"{self.what}: gave up after {self.limit} attempts", self.used)


def _fill_outside(rng, iv, degree, member, budget, reals=(), pairs=()):
    """Add roots with ``member(z) is OUTSIDE`` until the degree is reached."""
    reals, pairs = list(reals), list(pairs)
    filled = sum(m for _, m in reals) + 2 * sum(m for _, _, m in pairs)
    while filled < degree:
        budget.spend()
        room = degree - filled
        z = _relative_point(rng, iv)
        want_pair = room >= 2 and rng.random() < 0.6
        if not want_pair:
            z = ComplexRational(z.re)
        if member(z) is not OUTSIDE:
            continue
        if want_pair and z.im > 0:
            m = _multiplicity(rng, room // 2)
            pairs.append((z.re, z.im, m))
            filled += 2 * m
        else:
            m = _multiplicity(rng, room)
            reals.append((z.re, m))
            filled += m
    return reals, pairs


def _gen_case1(rng: random.Random, degree_bound: int, iv: IntervalLR):
    budget = _Budget(GENERATOR_BUDGET, "case-1 generator")
    degree = rng.randint(1, max(1, degree_bound))
    reals, pairs = _fill_outside(rng, iv, degree, lambda z: in_C0(z, iv), budget)
    return RootSpec(tuple(reals), tuple(pairs), _random_leading(rng)), budget.used


def _random_inner_point(rng: random.Random, iv: IntervalLR) -> Fraction:
    while True:
        a = iv.l + iv.width * Fraction(rng.randint(1, 63), 64)
        if iv.contains(a):
            return a


def _gen_case2(rng: random.Random, degree_bound: int, iv: IntervalLR):
    budget = _Budget(GENERATOR_BUDGET, "case-2 generator")
    degree = rng.randint(0, max(0, degree_bound - 1))
    reals, pairs = _fill_outside(rng, iv, degree, lambda z: in_C12(z, iv), budget)
    a = _random_inner_point(rng, iv)
    return (RootSpec(tuple(reals), tuple(pairs), _random_leading(rng)), a), budget.used


def _gen_obreshkoff(rng: random.Random, degree_bound: int, iv: IntervalLR, p_count: int,
                    q_count: int, lens_k: Optional[int] = None,
                    precision_bits: int = DEFAULT_PRECISION_BITS):
    """Rejection sampler for ``check_obreshkoff`` hypotheses.

    ``p_count`` roots are placed inside the lens (real roots in ``(l, r)``, or a
    conjugate pair found by sampling), the rest anywhere so long as the area
    ``A_q`` ends up holding at most ``q_count`` roots.
    """
    if q_count < p_count:
        raise InvalidArgument("need p_count <= q_count")
    budget = _Budget(GENERATOR_BUDGET, "Obreshkoff generator")
    if lens_k is None:
        degree = rng.randint(max(p_count, 1), max(p_count, 1, degree_bound))
    else:
        degree = p_count + lens_k
    if degree < 1:
        raise InvalidArgument("degree must be positive")
    lk = degree - p_count

    def strict(v):
        return v if v.strict else None

    while True:
        reals, pairs = [], []
        area = 0
        placed = 0
        ok = True
        while placed < p_count:
            budget.spend()
            if p_count - placed >= 2 and rng.random() < 0.3:
                z = _relative_point(rng, iv, 1)
                if z.im == 0:
                    continue
                lv = strict(in_lens(z, iv, lk, precision_bits))
                av = strict(in_area(z, iv, q_count, precision_bits))
                if lv is not INSIDE or av is None:
                    continue
                pairs.append((z.re, z.im, 1))
                placed += 2
                area += 2
            else:
                reals.append((_random_inner_point(rng, iv), 1))
                placed += 1
                area += 1
        filled = placed
        while filled < degree and ok:
            budget.spend()
            room = degree - filled
            z = _relative_point(rng, iv)
            want_pair = room >= 2 and z.im > 0 and rng.random() < 0.6
            if not want_pair:
                z = ComplexRational(z.re)
            mult = 2 if want_pair else 1
            av = strict(in_area(z, iv, q_count, precision_bits))
            lv = strict(in_lens(z, iv, lk, precision_bits))
            if av is None or lv is None:
                continue
            if av is INSIDE:
                if area + mult > q_count:
                    continue
                area += mult
            if want_pair:
                pairs.append((z.re, z.im, 1))
            else:
                reals.append((z.re, 1))
            filled += mult
        spec = RootSpec(tuple(reals), tuple(pairs), _random_leading(rng))
        counts, _ = obreshkoff_counts(spec, iv, p_count, q_count, precision_bits)
        if counts is not None and counts[0] >= p_count and counts[1] <= q_count:
            return spec, budget.used


def generate_case1(seed: int, degree_bound: int, iv: IntervalLR) -> RootSpec:
    return _gen_case1(random.Random(seed), degree_bound, iv)[0]


def generate_case2(seed: int, degree_bound: int, iv: IntervalLR) -> tuple[RootSpec, Fraction]:
    """Returns the base spec and the simple root ``a`` to multiply in."""
    return _gen_case2(random.Random(seed), degree_bound, iv)[0]


def generate_obreshkoff(seed: int, degree_bound: int, iv: IntervalLR, p_count: int,
                        q_count: int, lens_k: Optional[int] = None,
                        precision_bits: int = DEFAULT_PRECISION_BITS) -> RootSpec:
    return _gen_obreshkoff(random.Random(seed), degree_bound, iv, p_count, q_count,
                           lens_k, precision_bits)[0]


def random_poly(rng: random.Random, max_degree: int) -> Polynomial:
    deg = rng.randint(0, max_degree)
    coeffs = [random_rational(rng, -8, 8) for _ in range(deg)]
    lead = random_rational(rng, -8, 8) or Fraction(1)
    return Polynomial(coeffs + [lead])


def random_normal_poly(rng: random.Random, max_degree: int) -> Polynomial:
    """Random normal polynomial of degree <= ``max_degree``.

    Half the time from roots in the closed sector ``Re <= 0, Im^2 <= 3 Re^2``,
    otherwise as a zero prefix followed by a log-concave positive run
    (nonincreasing ratios of consecutive coefficients).
    """
    deg = rng.randint(0, max_degree)
    if rng.random() < 0.5:
        reals, pairs, filled = [], [], 0
        while filled < deg:
            if deg - filled >= 2 and rng.random() < 0.5:
                a = -Fraction(rng.randint(1, 32), rng.randint(1, 8))
                # im^2 <= 3 a^2 via im <= |a| * 17/10 (17/10 < sqrt 3); tight witness sometimes
                if rng.random() < 0.2:
                    b = -a  # im^2 = a^2
                else:
                    b = -a * Fraction(rng.randint(1, 17), 10)
                pairs.append((a, b, 1))
                filled += 2
            else:
                reals.append((-Fraction(rng.randint(0, 32), rng.randint(1, 8)), 1))
                filled += 1
        lead = Fraction(rng.randint(1, 16), rng.randint(1, 8))
        return poly_from_roots(RootSpec(tuple(reals), tuple(pairs), lead))
    zeros = rng.randint(0, deg)
    run = deg + 1 - zeros
    ratios = sorted((Fraction(rng.randint(1, 32), rng.randint(1, 8)) for _ in range(run - 1)),
                    reverse=True)
    c = Fraction(rng.randint(1, 16), rng.randint(1, 8))
    coeffs = [Fraction(0)] * zeros + [c]
    for q in ratios:
        c *= q
        coeffs.append(c)
    return Polynomial(coeffs)


# -- campaigns --------------------------------------------------------------

KINDS = ("three-circles-1", "three-circles-2", "obreshkoff", "normal-closure", "bernq-oracle")


@dataclass(frozen=True)
class CampaignParams:
    kind: str
    seed: int
    trials: int
    degree_bound: int = 8
    p_count: int = 0
    q_count: int = 0
    lens_k: Optional[int] = None
    precision_bits: int = DEFAULT_PRECISION_BITS

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidArgument(f"unknown campaign kind {self.kind!r}")
        if self.trials < 0 or self.degree_bound < 1:
            raise InvalidArgument("trials must be >= 0 and degree_bound >= 1")


@dataclass
class CheckReport:
    trials: int = 0
    failures: list = field(default_factory=list)
    skipped_boundary: int = 0
    skipped_undecided: int = 0
    rejected: int = 0
    generator_attempts: int = 0
    records: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.trials - len(self.failures) - self.skipped_boundary - self.skipped_undecided - self.rejected

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, index: int, seed: int, outcome: Outcome, attempts: int, detail: dict) -> None:
        self.trials += 1
        self.generator_attempts += attempts
        if outcome.status == FAIL:
            self.failures.append({"trial": index, "seed": seed, **detail,
                                  "observed_v": outcome.observed_v, "expected": outcome.expected})
        elif outcome.status == SKIP:
            self.skipped_boundary += 1
        elif outcome.status == SKIP_UNDECIDED:
            self.skipped_undecided += 1
        elif outcome.status == REJECT:
            self.rejected += 1
        self.records.append({"trial": index, "seed": seed, "status": outcome.status,
                             "v": outcome.observed_v})

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.failures,
            "skipped_boundary": self.skipped_boundary,
            "skipped_undecided": self.skipped_undecided,
            "rejected": self.rejected,
            "generator_attempts": self.generator_attempts,
            "records": self.records,
        }


def _iv_dict(iv: IntervalLR) -> dict:
    return {"l": format_rational(iv.l), "r": format_rational(iv.r)}


def run_trial(params: CampaignParams, index: int) -> tuple[int, int, Outcome, int, dict]:
    seed = trial_seed(params.seed, index)
    rng = random.Random(seed)
    kind = params.kind
    if kind == "bernq-oracle":
        p = random_poly(rng, 10)
        iv = random_interval(rng)
        n = rng.randint(max(p.degree, 0), 10)
        back = bernstein_expand(bernstein_coeffs(p, iv.l, iv.r, n))
        ok = back == p
        return index, seed, Outcome(PASS if ok else FAIL, expected="round trip"), 0, {
            "poly": str(p), "interval": _iv_dict(iv), "n": n}
    if kind == "normal-closure":
        p = random_normal_poly(rng, params.degree_bound)
        q = random_normal_poly(rng, params.degree_bound)
        ok = is_normal(poly_mul(p, q))
        return index, seed, Outcome(PASS if ok else FAIL, expected="product normal"), 0, {
            "p": str(p), "q": str(q)}
    iv = random_interval(rng)
    if kind == "three-circles-1":
        spec, attempts = _gen_case1(rng, params.degree_bound, iv)
        return index, seed, check_case1(spec, iv), attempts, {
            "spec": spec.to_dict(), "interval": _iv_dict(iv)}
    if kind == "three-circles-2":
        (spec, a), attempts = _gen_case2(rng, params.degree_bound, iv)
        return index, seed, check_case2(spec, iv, a), attempts, {
            "spec": spec.to_dict(), "interval": _iv_dict(iv), "a": format_rational(a)}
    spec, attempts = _gen_obreshkoff(rng, params.degree_bound, iv, params.p_count, params.q_count,
                                     params.lens_k, params.precision_bits)
    out = check_obreshkoff(spec, iv, params.p_count, params.q_count, params.precision_bits)
    return index, seed, out, attempts, {"spec": spec.to_dict(), "interval": _iv_dict(iv)}


def _run_chunk(params: CampaignParams, indices: range) -> list:
    return [run_trial(params, i) for i in indices]


def run_campaign(params: CampaignParams, jobs: int = 1,
                 progress: Optional[Callable[[int], None]] = None) -> CheckReport:
    """Run ``params.trials`` trials; the report is identical for every ``jobs`` value."""
    if jobs < 1:
        raise InvalidArgument("jobs must be >= 1")
    report = CheckReport()
    n = params.trials
    if jobs == 1 or n < 2:
        results = _run_chunk(params, range(n))
    else:
        size = -(-n // (jobs * 4))
        chunks = [range(s, min(s + size, n)) for s in range(0, n, size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_run_chunk, [params] * len(chunks), chunks) for r in part]
    for index, seed, outcome, attempts, detail in sorted(results, key=lambda t: t[0]):
        report.add(index, seed, outcome, attempts, detail)
        if progress:
            progress(index)
    return report
