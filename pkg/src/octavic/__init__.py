"""Invariants, automorphism groups and rational models of genus-3 hyperelliptic curves.

A curve is y^2 = f(x) with f squarefree of degree 7 or 8, i.e. a binary octavic.

    >>> from octavic import parse_curve, classify
    >>> classify(parse_curve("x^8 - 1").curve()).group_identity
    (32, 9)
"""
from .exact import ExactPoly, ExactScalar, MoebiusMap, form_substitute, resultant, squarefree
from .covariants import (
    AbsoluteInvariants, BinaryForm, InvariantVector, absolute_invariants, covariant_chain,
    form_discriminant, j_closed_forms, j_invariants, transvect,
)
from .dihedral import (
    CurveError, DihedralTuple, Genus2DihedralPair, HyperellipticCurve, NormalForm3,
    classify_genus2, curve_to_form, subcover_equations, branch_relations, tuple_from_even,
    tuple_from_normal, tuples_equal,
)
from .oracle import OracleConfig, full_group, lift_order
from .loci import derive_locus, family, family_tuple, membership
from .classify import ClassificationResult, all_tuples, classify, isomorphic, moduli_point
from .models import RationalModel, emit_model, field_of_moduli_report, verify_model
from .reconcile import reconciliation_report
from .parse import ParseError, parse_curve, parse_polynomial, parse_tuple

__version__ = "0.1.0"

__all__ = [
    "ExactPoly", "ExactScalar", "MoebiusMap", "form_substitute", "resultant", "squarefree",
    "AbsoluteInvariants", "BinaryForm", "InvariantVector", "absolute_invariants",
    "covariant_chain", "form_discriminant", "j_closed_forms", "j_invariants", "transvect",
    "CurveError", "DihedralTuple", "Genus2DihedralPair", "HyperellipticCurve", "NormalForm3",
    "classify_genus2", "curve_to_form", "subcover_equations", "branch_relations",
    "tuple_from_even", "tuple_from_normal", "tuples_equal",
    "OracleConfig", "full_group", "lift_order",
    "derive_locus", "family", "family_tuple", "membership",
    "ClassificationResult", "all_tuples", "classify", "isomorphic", "moduli_point",
    "RationalModel", "emit_model", "field_of_moduli_report", "verify_model",
    "reconciliation_report", "ParseError", "parse_curve", "parse_polynomial", "parse_tuple",
]
