"""Exact tools for strongly walk-regular digraphs."""

from .algebra import IntMatrix, Poly, char_poly, min_poly, real_root_count, sturm_sequence
from .census import EnumFilter, canonical_form, enumerate_census, verify_claim
from .digraph import Digraph, parse_graph
from .families import build, expected_facts, parse_family
from .spectral import DiagClass, SpectralProfile, diag_class, is_srd, profile
from .swr import (
    SwrCertificate,
    check_direct,
    check_divisibility,
    classify_mu0,
    detect_infinite_family,
    exponent_set,
    verify_parameter_identities,
)

__all__ = [
    "IntMatrix", "Poly", "char_poly", "min_poly", "real_root_count", "sturm_sequence",
    "EnumFilter", "canonical_form", "enumerate_census", "verify_claim",
    "Digraph", "parse_graph",
    "build", "expected_facts", "parse_family",
    "DiagClass", "SpectralProfile", "diag_class", "is_srd", "profile",
    "SwrCertificate", "check_direct", "check_divisibility", "classify_mu0",
    "detect_infinite_family", "exponent_set", "verify_parameter_identities",
]
