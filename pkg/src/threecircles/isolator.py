"""Real root isolation by Descartes' method in Moebius form.

Each interval ``(lo, hi)`` is tested by the number ``v`` of sign variations of
the Moebius transform of ``p`` onto it.  ``v = 0`` proves the interval root
free, ``v = 1`` proves exactly one root; otherwise the interval is bisected.
For squarefree ``p`` this terminates, since small enough intervals always land
in one of the two decided cases.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DepthExhausted, InvalidArgument
from .polycore import (Polynomial, is_squarefree, mobius, poly_divmod, poly_eval,
                       primitive_part, squarefree_decomposition, squarefree_part)
from .regions import IntervalLR
from .signs import sign_changes

DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class IsolatorConfig:
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if self.max_depth < 1:
            raise InvalidArgument(f"max_depth must be >= 1, got {self.max_depth}")


@dataclass(frozen=True)
class IsolationResult:
    exact_roots: tuple[Fraction, ...] = ()
    intervals: tuple[tuple[Fraction, Fraction], ...] = ()
    depth_reached: int = 0
    node_count: int = 0
    discarded: tuple[tuple[Fraction, Fraction], ...] = ()
    pending: tuple[tuple[Fraction, Fraction], ...] = ()

    @property
    def root_count(self) -> int:
        return len(self.exact_roots) + len(self.intervals)


def descartes_count(p: Polynomial, iv: IntervalLR) -> int:
    if p.is_zero():
        raise InvalidArgument("Descartes count of the zero polynomial")
    return sign_changes(mobius(p, iv.l, iv.r))


def isolate(p: Polynomial, iv: IntervalLR, cfg: IsolatorConfig = IsolatorConfig()) -> IsolationResult:
    """Isolate the real roots of a squarefree ``p`` in the open interval ``iv``.

    Raises :class:`DepthExhausted` (carrying the partial result, with the
    undecided intervals in ``pending``) when an interval at ``cfg.max_depth``
    still has more than one sign variation.
    """
    if p.is_zero():
        raise InvalidArgument("cannot isolate roots of the zero polynomial")
    if not is_squarefree(p):
        raise InvalidArgument("polynomial is not squarefree; apply squarefree_part first")
    if poly_eval(p, iv.l) == 0 or poly_eval(p, iv.r) == 0:
        raise InvalidArgument("interval endpoints must not be roots")
    # content division keeps coefficients small and leaves every sign unchanged
    p = primitive_part(p)

    exact, found, dropped, pending = [], [], [], []
    depth_reached = 0
    nodes = 0
    queue = deque([(iv.l, iv.r, 0)])
    while queue:
        lo, hi, depth = queue.popleft()
        nodes += 1
        depth_reached = max(depth_reached, depth)
        v = sign_changes(mobius(p, lo, hi))
        if v == 0:
            dropped.append((lo, hi))
        elif v == 1:
            found.append((lo, hi))
        elif depth >= cfg.max_depth:
            pending.append((lo, hi))
        else:
            m = (lo + hi) / 2
            if poly_eval(p, m) == 0:
                exact.append(m)
            queue.append((lo, m, depth + 1))
            queue.append((m, hi, depth + 1))

    result = IsolationResult(
        exact_roots=tuple(sorted(exact)),
        intervals=tuple(sorted(found)),
        depth_reached=depth_reached,
        node_count=nodes,
        discarded=tuple(sorted(dropped)),
        pending=tuple(sorted(pending)),
    )
    if pending:
        raise DepthExhausted(
            f"{len(pending)} interval(s) still undecided at depth {cfg.max_depth}", result)
    return result


def strip_endpoint_roots(p: Polynomial, iv: IntervalLR) -> tuple[Polynomial, dict[Fraction, int]]:
    """Divide out every factor ``X - l`` and ``X - r``; returns the multiplicities removed."""
    removed: dict[Fraction, int] = {}
    for e in (iv.l, iv.r):
        lin = Polynomial([-e, 1])
        while not p.is_zero() and poly_eval(p, e) == 0:
            p = poly_divmod(p, lin)[0]
            removed[e] = removed.get(e, 0) + 1
    return p, removed


@dataclass(frozen=True)
class SquarefreeIsolation:
    """Isolation after reduction to the squarefree part.

    ``multiplicities`` lists the squarefree factors with the multiplicity
    each of their roots has in the input; ``endpoint_roots`` maps an interval
    endpoint to its multiplicity as a root of the input.
    """

    result: IsolationResult
    squarefree: Polynomial
    multiplicities: tuple[tuple[Polynomial, int], ...] = ()
    endpoint_roots: dict = field(default_factory=dict)


def isolate_squarefree(p: Polynomial, iv: IntervalLR,
                       cfg: IsolatorConfig = IsolatorConfig()) -> SquarefreeIsolation:
    """Convenience entry point: squarefree part, endpoint roots stripped, then :func:`isolate`."""
    if p.is_zero():
        raise InvalidArgument("cannot isolate roots of the zero polynomial")
    decomp = tuple(squarefree_decomposition(p))
    endpoint_mult: dict[Fraction, int] = {}
    for e in (iv.l, iv.r):
        for f, m in decomp:
            if poly_eval(f, e) == 0:
                endpoint_mult[e] = m
    sf = squarefree_part(p)
    stripped, _ = strip_endpoint_roots(sf, iv)
    if stripped.degree < 1:
        return SquarefreeIsolation(IsolationResult(), sf, decomp, endpoint_mult)
    return SquarefreeIsolation(isolate(stripped, iv, cfg), sf, decomp, endpoint_mult)


def root_multiplicity(decomp, x: Fraction) -> int:
    for f, m in decomp:
        if poly_eval(f, x) == 0:
            return m
    return 0


__all__ = [
    "IsolatorConfig", "IsolationResult", "SquarefreeIsolation",
    "descartes_count", "isolate", "isolate_squarefree", "strip_endpoint_roots",
    "root_multiplicity",
]
