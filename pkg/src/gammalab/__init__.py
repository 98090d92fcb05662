"""Exact discriminant-growth invariants of number fields, cyclic towers and Weil heights."""

__version__ = "0.1.0"

from .arith import FactoredReal, factor_integer, fr_compare
from .polyz import IntPolynomial, discriminant, factor_over_Q, resultant
from .abelian import AbelianField, abelian_disc, intermediate_fields, join, meet
from .numfield import NumberField, build_field, compositum, rel_disc_norm
from .gamma import build_cf_tower, gamma_M_F, gamma_prime, liminf_scan
from .heights import enumerate_bounded, min_height_probe, weil_height

__all__ = [
    "AbelianField",
    "FactoredReal",
    "IntPolynomial",
    "NumberField",
    "abelian_disc",
    "build_cf_tower",
    "build_field",
    "compositum",
    "discriminant",
    "enumerate_bounded",
    "factor_integer",
    "factor_over_Q",
    "fr_compare",
    "gamma_M_F",
    "gamma_prime",
    "intermediate_fields",
    "join",
    "liminf_scan",
    "meet",
    "min_height_probe",
    "rel_disc_norm",
    "resultant",
    "weil_height",
]
