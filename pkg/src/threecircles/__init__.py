"""Exact polynomial machinery for the three-circles theorem and Descartes root isolation."""

__version__ = "0.1.0"

from .errors import (DepthExhausted, GeneratorExhausted, InvalidArgument, PoleError,
                     ThreeCirclesError)
from .polycore import ComplexRational, Polynomial, mobius, parse_poly, format_poly
from .regions import IntervalLR, Membership
from .normal import is_normal
from .signs import bernstein_coeffs, sign_changes
from .isolator import IsolatorConfig, IsolationResult, descartes_count, isolate
from .certcheck import RootSpec, poly_from_roots

__all__ = [
    "ComplexRational", "DepthExhausted", "GeneratorExhausted", "IntervalLR", "InvalidArgument",
    "IsolationResult", "IsolatorConfig", "Membership", "PoleError", "Polynomial", "RootSpec",
    "ThreeCirclesError", "bernstein_coeffs", "descartes_count", "format_poly", "is_normal",
    "isolate", "mobius", "parse_poly", "poly_from_roots", "sign_changes",
]
