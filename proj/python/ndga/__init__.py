"""Exact computations for N-differential graded algebras."""

from fractions import Fraction

from ._ndga import (
    DimensionError,
    DomainError,
    Error,
    ParseError,
    ValidationError,
    c_coefficient,
    christoffel,
    cs_classes,
    curvature,
    diff,
    depth_d,
    formal_variation_constant,
    knflat_expand,
    levi_civita_flatness,
    minimal_flatness,
    minimal_nilpotency,
    ncomplex_cohomology,
    ncomplex_validate,
    paths,
    riemann_form,
    simplify,
    tensor_nilpotency,
)
from ._ndga import cs_lagrangian as _cs_lagrangian


def cs_lagrangian(K):
    """[(word, Fraction)] ordered by descending dw count."""
    return [(word, Fraction(c)) for word, c in _cs_lagrangian(K)]


__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "ParseError",
    "ValidationError",
    "c_coefficient",
    "christoffel",
    "cs_classes",
    "cs_lagrangian",
    "curvature",
    "depth_d",
    "diff",
    "formal_variation_constant",
    "knflat_expand",
    "levi_civita_flatness",
    "minimal_flatness",
    "minimal_nilpotency",
    "ncomplex_cohomology",
    "ncomplex_validate",
    "paths",
    "riemann_form",
    "simplify",
    "tensor_nilpotency",
]
