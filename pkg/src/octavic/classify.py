"""Automorphism-group classification of genus-3 hyperelliptic curves.

Two independent verdicts are produced.  The oracle verdict comes from the
Moebius search plus lift orders.  The locus verdict comes from the dihedral
tuples of the curve tested against the derived loci, deepest stratum first.
They must agree; otherwise the result is marked disputed and both are kept.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .covariants import AbsoluteInvariants, absolute_invariants, j_invariants
from .dihedral import (
    CurveError, DihedralTuple, HyperellipticCurve, curve_to_form, even_coefficients,
    tuple_from_even, tuples_equal,
)
from .exact import ExactPoly
from .loci import NO_EXTRA_INVOLUTION, derive_locus, membership
from .oracle import DEFAULT_CONFIG, FullGroup, OracleConfig, full_group
from .table import DIMENSIONS, GROUP_NAMES
from .tuples import TupleRecord, tuple_records, tuple_sort_key

# deepest strata first; (4, 2) is the ambient locus of every tuple
SEARCH_ORDER = ((48, 48), (32, 9), (24, 5), (16, 11), (12, 4), (8, 2), (8, 5))

CONFIDENCE = ("exact", "oracle-certified", "numeric-only")


def identity_from_oracle(g: FullGroup) -> tuple[int, int]:
    """Table identity from the reduced-group structure and the lift orders."""
    s = g.reduced.structure
    lifts = [c.lift_order for c in g.lifts]
    if s == "trivial":
        return (2, 1)
    if s == "cyclic 2":
        return (4, 2) if lifts == [2] else (4, 1)
    if s == "cyclic 7":
        return (14, 2)
    if s == "dihedral 2":
        return (8, 5) if all(k == 2 for k in lifts) else (8, 2)
    table = {"dihedral 3": (12, 4), "dihedral 4": (16, 11), "dihedral 6": (24, 5),
             "dihedral 8": (32, 9), "S4": (48, 48)}
    if s in table:
        return table[s]
    raise CurveError(f"reduced group {s} of order {g.reduced.order} is not in the table")


def locus_verdict(tuples: list[DihedralTuple]) -> tuple[tuple[int, int] | None, list]:
    """Deepest stratum any tuple belongs to, and every (stratum, tuple) hit."""
    hits = []
    for t in tuples:
        for ident in SEARCH_ORDER:
            if membership(t, derive_locus(ident)):
                hits.append((ident, t))
    if not tuples:
        return None, hits
    for ident in SEARCH_ORDER:
        if any(h[0] == ident for h in hits):
            return ident, hits
    return (4, 2), hits


@dataclass(frozen=True)
class ClassificationResult:
    group_identity: tuple[int, int]
    group_name: str
    delta: int
    evidence: dict
    confidence: str
    disputed: bool = False
    tuples: tuple = field(default=(), compare=False)
    oracle: FullGroup | None = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.group_identity[0]

    def as_dict(self) -> dict:
        return {
            "group_identity": list(self.group_identity),
            "group_name": self.group_name,
            "delta": self.delta,
            "confidence": self.confidence,
            "disputed": self.disputed,
            "evidence": self.evidence,
        }


def _as_curve(c) -> HyperellipticCurve:
    if isinstance(c, HyperellipticCurve):
        return c
    if isinstance(c, ExactPoly):
        return HyperellipticCurve(c)
    raise TypeError(f"expected a curve or polynomial, got {type(c).__name__}")


def classify(c, config: OracleConfig = DEFAULT_CONFIG) -> ClassificationResult:
    curve = _as_curve(c)
    form = curve_to_form(curve)
    g = full_group(form, config)
    oracle_id = identity_from_oracle(g)

    records = tuple_records(form, g, config)
    tuples = [r.tuple for r in records]
    exact_tuples = [r.tuple for r in records if r.exact]
    given = None
    cs = even_coefficients(curve.rhs)
    if cs is not None:
        given = tuple_from_even(*cs)
        if not any(tuples_equal(given, t) for t in tuples):
            tuples.append(given)
        if not any(tuples_equal(given, t) for t in exact_tuples):
            exact_tuples.append(given)
    tuples.sort(key=tuple_sort_key)

    locus_id, hits = locus_verdict(tuples)
    if locus_id is None:
        agree = oracle_id in NO_EXTRA_INVOLUTION
    else:
        agree = locus_id == oracle_id
    # a model with x -> -x whose lift has order 4 is even in x but carries no tuple
    if given is not None and oracle_id in NO_EXTRA_INVOLUTION:
        agree = False

    if exact_tuples and agree:
        confidence = "exact"
    elif g.reduced.all_certified:
        confidence = "oracle-certified"
    else:
        confidence = "numeric-only"

    evidence = {
        "oracle": {
            "identity": list(oracle_id),
            "reduced_order": g.reduced.order,
            "structure": g.reduced.structure,
            "census": {str(k): v for k, v in sorted(g.reduced.census().items())},
            "certified": sum(1 for e in g.reduced.elements if e.certified),
            "lift_orders": sorted(cert.lift_order for cert in g.lifts),
            "precision": g.reduced.precision,
        },
        "tuples": [str(t) for t in tuples],
        "exact_tuples": [str(t) for t in sorted(exact_tuples, key=tuple_sort_key)],
        "loci_matched": sorted({f"{i[0]},{i[1]}" for i, _ in hits}),
        "locus_identity": list(locus_id) if locus_id else None,
    }
    if not tuples:
        evidence["locus_note"] = "no extra involution; the curve is not in the dihedral locus"
    return ClassificationResult(oracle_id, GROUP_NAMES[oracle_id], DIMENSIONS[oracle_id],
                                evidence, confidence, not agree, tuple(tuples), g)


def all_tuples(c, config: OracleConfig = DEFAULT_CONFIG) -> list[DihedralTuple]:
    """Every dihedral tuple of the curve, one per extra-involution class."""
    curve = _as_curve(c)
    recs: list[TupleRecord] = tuple_records(curve_to_form(curve), config=config)
    return sorted((r.tuple for r in recs), key=tuple_sort_key)


# ---------------------------------------------------------------------------
# moduli points and isomorphism


@dataclass(frozen=True)
class ModuliPoint:
    tuples: tuple = ()
    absolute: AbsoluteInvariants | None = None
    projective: tuple | None = None

    @property
    def in_dihedral_locus(self) -> bool:
        return bool(self.tuples)


def moduli_point(c, config: OracleConfig = DEFAULT_CONFIG) -> ModuliPoint:
    ts = all_tuples(c, config)
    if ts:
        return ModuliPoint(tuples=tuple(ts))
    v = j_invariants(curve_to_form(_as_curve(c)))
    if v.J2:
        return ModuliPoint(absolute=absolute_invariants(v))
    return ModuliPoint(projective=(v.J2, v.J3, v.J4, v.J5, v.J6, v.J7))


def _same_j_point(c1: HyperellipticCurve, c2: HyperellipticCurve) -> bool:
    from .covariants import same_weighted_point
    v1 = j_invariants(curve_to_form(c1))
    v2 = j_invariants(curve_to_form(c2))
    return same_weighted_point(v1, v2)


def isomorphic(c1, c2, config: OracleConfig = DEFAULT_CONFIG) -> bool:
    c1, c2 = _as_curve(c1), _as_curve(c2)
    r1, r2 = classify(c1, config), classify(c2, config)
    if r1.group_identity != r2.group_identity:
        return False
    if r1.tuples or r2.tuples:
        if not (r1.tuples and r2.tuples):
            return False
        return any(tuples_equal(s, t) for s in r1.tuples for t in r2.tuples)
    return _same_j_point(c1, c2)


def j_vanishing(c) -> bool:
    """J3 = J5 = J7 = 0."""
    v = j_invariants(curve_to_form(_as_curve(c)))
    return not v.J3 and not v.J5 and not v.J7


__all__ = [
    "ClassificationResult", "ModuliPoint", "classify", "all_tuples", "isomorphic",
    "identity_from_oracle", "locus_verdict", "moduli_point", "j_vanishing", "SEARCH_ORDER",
    "CONFIDENCE",
]
