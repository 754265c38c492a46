"""Exact-arithmetic engine for weighted-graded polynomial quotient rings,
with Groebner bases over fields and over the integers, graded-module
homology, and a claim-verification harness with a CLI front end."""

__version__ = "0.1.0"

from .coeffs import ZZ, QQ, FP, parse_domain
from .rings import WeightedRing, Polynomial, poly_mul, weight_of, monomial_compare
from .groebner import GroebnerBasis, groebner_basis, normal_form, submodule_equal
from .modules import (
    FreeModule,
    ModuleMap,
    ChainComplex,
    FPModule,
    syzygy_basis,
    compose_maps,
    verify_matrix_factorization,
    homology_is_zero,
    homology_presentation,
    hom_generators,
    annihilator,
    adjoin_inverse,
    hilbert_value,
    match_cyclic_quotient,
)
from .scenarios import (
    Claim,
    CheckReport,
    Scenario,
    TracePresentation,
    catalog,
    list_scenarios,
    run_scenario,
)
from .gma import parse_gma, serialize_gma
from .report import RunConfig, run, validate_report
