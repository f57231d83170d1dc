"""Checks of printed formulas and special values against derived ones.

Every item carries a verdict in {match, mismatch, unverifiable}, the derived
value when there is one, and a short explanation.  Nothing here feeds the
classifier; it only reports.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .covariants import j_closed_forms, j_invariants
from .dihedral import (
    CurveError, DihedralTuple, NormalForm3, curve_to_form, tuple_from_normal, tuples_equal,
)
from .exact import ExactPoly, ExactScalar
from .loci import (
    Branch, FamilyParametrization, RationalEntry, derive_locus, eliminate, family_tuple,
    rigid_points,
)
from .table import BY_IDENTITY, ROW11_CORRECTED, _vars

MATCH, MISMATCH, UNVERIFIABLE = "match", "mismatch", "unverifiable"
U_NAMES = ["u1", "u2", "u3"]


@dataclass(frozen=True)
class ReconciliationItem:
    key: str
    claim: str
    verdict: str
    derived: str | None = None
    detail: str = ""
    data: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        out = {"key": self.key, "claim": self.claim, "verdict": self.verdict}
        if self.derived is not None:
            out["derived"] = self.derived
        if self.detail:
            out["detail"] = self.detail
        if self.data:
            out["data"] = self.data
        return out


def _u():
    return [ExactPoly.var(i, 3) for i in range(3)]


def _q(s) -> ExactScalar:
    return ExactScalar(Fraction(s))


def same_up_to_scalar(p: ExactPoly, q: ExactPoly) -> bool:
    if not p or not q:
        return not p and not q
    e = p.leading_term()[0]
    if e not in q.terms:
        return False
    return p * q.terms[e] == q * p.terms[e]


def fmt_rel(p: ExactPoly) -> str:
    return f"{p.format(U_NAMES)} = 0"


# ---------------------------------------------------------------------------
# the D12 family as printed


def printed_lambda_family() -> FamilyParametrization:
    x, lam = _vars(1)
    rhs = x ** 8 + (9 * lam - 7) * x ** 6 + 15 * (lam - 1) * x ** 4 + (7 * lam - 9) * x ** 2 - lam
    return FamilyParametrization((12, 4), ("lambda",), rhs, (Branch("x -> -x", None),),
                                 singular=((0,), (1,), (-1,)))


def printed_lambda_tuple() -> tuple[RationalEntry, RationalEntry, RationalEntry]:
    _, lam = _vars(1)
    R = RationalEntry.make
    u1 = R(-(6561 * lam ** 6 - 20412 * lam ** 5 + 26215 * lam ** 4 - 24694 * lam ** 3
             + 26215 * lam ** 2 - 20412 * lam + 6561), lam ** 3)
    u2 = R(15 * (lam - 1) ** 2 * (81 * lam ** 2 - 94 * lam + 81), lam ** 2)
    u3 = R(-2 * (7 * lam - 9) * (9 * lam - 7), lam)
    return u1, u2, u3


def printed_d12_relations() -> tuple[ExactPoly, ExactPoly]:
    u1, u2, u3 = _u()
    r2 = u2 - _q("5/588") * (u3 - 8) * (9 * u3 - 1024)
    r1 = (u1 - _q("9/2744") * u3 ** 3 + _q("873/686") * u3 ** 2
          - _q("149504/3087") * u3 + _q("1048576/3087"))
    return r2, r1


def _relation_in(rels, var):
    """The relation involving u3 and ``var`` only."""
    for r in rels:
        if r.variables() == {var, 2}:
            return r
    return None


def _d12_items() -> list[ReconciliationItem]:
    items = []
    derived = derive_locus((12, 4)).relations()
    lam_rels = eliminate(family_tuple(printed_lambda_family()))
    claims = printed_d12_relations()
    for claim, var, key in ((claims[0], 1, "d12_relation_u2"), (claims[1], 0, "d12_relation_u1")):
        d = _relation_in(derived, var)
        lam = _relation_in(lam_rels, var)
        ok = d is not None and same_up_to_scalar(claim, d)
        if same_up_to_scalar(claim, lam):
            note = "equals the elimination of the printed lambda family"
        else:
            flipped = claim.substitute(1, -ExactPoly.var(1, 3)) if var == 1 else None
            if flipped is not None and same_up_to_scalar(flipped, lam):
                note = "equals the elimination of the printed lambda family with u2 negated"
            else:
                note = "differs from the elimination of the printed lambda family"
        items.append(ReconciliationItem(
            key, fmt_rel(claim), MATCH if ok else MISMATCH, fmt_rel(d) if d else None,
            f"derived from x(x^6+ax^3+1) via x -> (x+1)/(x-1); the claim {note}",
            {"lambda_family_relation": fmt_rel(lam) if lam else None}))

    # entries of the lambda-family tuple
    fam_t = family_tuple(printed_lambda_family())
    names = ["lambda"]
    for k, claim in zip(("u1", "u2", "u3"), printed_lambda_tuple()):
        idx = ("u1", "u2", "u3").index(k)
        got = fam_t.entries[idx]
        if got == claim:
            verdict, detail = MATCH, ""
        else:
            verdict = MISMATCH
            neg = RationalEntry.make(-claim.num, claim.den)
            detail = "sign of the whole entry differs" if got == neg else "coefficients differ"
        items.append(ReconciliationItem(
            f"lambda_tuple_{k}", f"{k} = {claim.format(names)}", verdict, got.format(names),
            detail + ("; " if detail else "") + "even-form invariants of the printed lambda family"))

    items.append(_lambda_family_group())
    items.append(_lambda_inversion())
    items.append(_u3_260())
    return items


def _lambda_family_group() -> ReconciliationItem:
    from .oracle import full_group
    from .covariants import BinaryForm
    fam = printed_lambda_family()
    orders = {}
    for lam in ("3", "1/5", "-3", "-1"):
        f = fam.instance([Fraction(lam)])
        orders[lam] = full_group(BinaryForm.from_univariate(f, 8)).order
    ok = all(o == 12 for o in orders.values())
    return ReconciliationItem(
        "lambda_family_group", "x^8+(9l-7)x^6+15(l-1)x^4+(7l-9)x^2-l has |Aut| = 12 for l != 0, +-1",
        MATCH if ok else MISMATCH, f"oracle orders {orders}",
        "the family x -> (x+1)/(x-1) applied to x(x^6+ax^3+1) is "
        "(2+a)x^8+(28-4a)x^6+6ax^4-(28+4a)x^2+(a-2)", {"orders": orders})


def _lambda_inversion() -> ReconciliationItem:
    # u3 (as a function of lambda) = U  <=>  126 l^2 + (U - 260) l + 126 = 0
    fam_t = family_tuple(printed_lambda_family())
    u3 = fam_t.entries[2]
    x, lam, U = (ExactPoly.var(i, 3) for i in range(3))
    num = ExactPoly({e + (0,): c for e, c in u3.num.terms.items()}, 3)
    den = ExactPoly({e + (0,): c for e, c in u3.den.terms.items()}, 3)
    quad = den * U - num
    want = 126 * lam ** 2 + (U - 260) * lam + 126
    derived_ok = same_up_to_scalar(quad, want)
    # the claimed inversion l = -126/(U-260): numerator of the quadratic there
    residual = 126 * 126 ** 2 + (U - 260) * (-126) * (U - 260) + 126 * (U - 260) ** 2
    verdict = MATCH if not residual else MISMATCH
    return ReconciliationItem(
        "lambda_inversion", "lambda = -126/(u3 - 260)", verdict,
        "126*lambda^2 + (u3 - 260)*lambda + 126 = 0, i.e. lambda + 1/lambda = (260 - u3)/126",
        "substituting the claim into the quadratic leaves 126^3/(u3-260)^2"
        + ("" if derived_ok else "; quadratic check failed"),
        {"quadratic_verified": derived_ok})


def _u3_260() -> ReconciliationItem:
    x, a = _vars(1)
    fam = derive_locus((12, 4)).branches[0].parametrization
    u3 = fam.entries[2]
    cond = u3.num - 260 * u3.den
    return ReconciliationItem(
        "u3_260", "u3 != 260, otherwise a = 2", MISMATCH,
        f"u3 = {u3.format(['a'])}; u3 = 260 iff {cond.format(['x', 'a'])} = 0",
        "a = 2 is a pole of u3 (lambda = 0 in the printed family), while u3 = 260 "
        "there means lambda = +-i")


# ---------------------------------------------------------------------------
# special triples


def _special_items() -> list[ReconciliationItem]:
    items = []
    u6 = rigid_points((24, 5))
    s4 = rigid_points((48, 48))
    for key, vals in (("triple_8_0_m32", ("8", "0", "-32")),
                      ("triple_m524288_81", ("-524288/81", "0", "1024/9"))):
        t = DihedralTuple.U(*(Fraction(v) for v in vals))
        lhs, rhs = 2 * t.u1, -(t.u3 ** 2)
        items.append(ReconciliationItem(
            key, f"U({', '.join(vals)}) satisfies 2u1 = -u3^2",
            MATCH if lhs == rhs else MISMATCH, f"2u1 = {lhs}, -u3^2 = {rhs}",
            "U6 tuples from the oracle: " + ", ".join(map(str, u6))
            + ("; this triple is one of them" if any(tuples_equal(t, s) for s in u6)
               else "; this triple is not one of them")))
    t = DihedralTuple.U(Fraction(8192, 81), Fraction(-1280, 27), Fraction(128, 9))
    items.append(ReconciliationItem(
        "triple_s4", "U(8192/81, -1280/27, 128/9) satisfies 2u1 = u3^2",
        MATCH if 2 * t.u1 == t.u3 ** 2 else MISMATCH, f"2u1 = {2 * t.u1}, u3^2 = {t.u3 ** 2}"))
    inside = any(tuples_equal(t, s) for s in s4)
    items.append(ReconciliationItem(
        "triple_s4_is_s4_point", "U(8192/81, -1280/27, 128/9) is a tuple of the Z2 x S4 curve",
        MATCH if inside else MISMATCH, ", ".join(map(str, s4)),
        "all tuples of x^8+14x^4+1 over its extra involutions"))
    w = DihedralTuple.W(196)
    items.append(ReconciliationItem(
        "triple_0_196_0", "(0, 196, 0) is a tuple of the Z2 x S4 curve",
        MATCH if any(tuples_equal(w, s) for s in s4) else MISMATCH, str(w),
        "read as W(196), the a1 = a3 = 0 model x^8+14x^4+1"))
    u6_claims = [DihedralTuple.U(8, 0, -32), DihedralTuple.U(Fraction(-524288, 81), 0, Fraction(1024, 9))]
    hit = [any(tuples_equal(c, s) for s in u6) for c in u6_claims]
    items.append(ReconciliationItem(
        "u6_triples_are_u6_points", "(8, 0, -32) and (-524288/81, 0, 1024/9) are U6 tuples",
        MATCH if all(hit) else MISMATCH, ", ".join(map(str, u6)),
        "all tuples of x(x^6-1) over its extra involutions"))
    return items


def _branch_items() -> list[ReconciliationItem]:
    items = []
    # squared-u1 reading of the branch conditions
    z23 = BY_IDENTITY[(8, 5)].instance([3, 4])
    from .dihedral import tuple_of_even_curve
    t = tuple_of_even_curve(z23)
    ok = 2 * t.u1 ** 2 == t.u3 ** 2
    items.append(ReconciliationItem(
        "branch_condition_square", "Z2^3 curves satisfy 2u1^2 = u3^2 (and Z2 x Z4 ones 2u1^2 = -u3^2)",
        MATCH if ok else MISMATCH, "2u1 - u3^2 = 0 (and 2u1 + u3^2 = 0)",
        f"counterexample (x^4+3x^2+1)(x^4+4x^2+1): {t}", {"counterexample": str(t)}))
    z24 = derive_locus((8, 2))
    vacuous = any(r == ExactPoly.var(1, 3) for r in z24.relations())
    items.append(ReconciliationItem(
        "u6_cut_u2_zero", "inside 2u1 + u3^2 = 0 the U6 locus is cut out by u2 = 0",
        MISMATCH if vacuous else UNVERIFIABLE,
        "Z2 x Z4 locus: " + "; ".join(fmt_rel(r) for r in z24.relations())
        + f"; U6 point {rigid_points((24, 5))[0]}",
        "2u1 + u3^2 = 2(a1^2 + a3^2)^2, so u2 = (a1^2 + a3^2) a2 already vanishes on the "
        "whole minus branch and the condition selects nothing"))
    d8 = derive_locus((16, 11))
    items.append(ReconciliationItem(
        "z2d8_condition", "the Z2 x D8 locus is a1 = a3 inside 2u1 - u3^2 = 0",
        UNVERIFIABLE,
        "; ".join(f"[{b.shape}] " + ", ".join(b.formatted() or ["no relation"]) for b in d8.branches),
        "a1 = a3 is a condition on a model, not on the invariants; the derived relations are given"))
    return items


def _row11_item() -> ReconciliationItem:
    from .covariants import BinaryForm
    from .oracle import full_group
    printed = BY_IDENTITY[(48, 48)].instance()
    o1 = full_group(BinaryForm.from_univariate(printed, 8)).order
    o2 = full_group(BinaryForm.from_univariate(ROW11_CORRECTED, 8)).order
    return ReconciliationItem(
        "row11_equation", "y^2 = x^8+14x^2+1 has |Aut| = 48",
        MATCH if o1 == 48 else MISMATCH, f"|Aut(x^8+14x^2+1)| = {o1}, |Aut(x^8+14x^4+1)| = {o2}",
        "the oracle was run on both readings", {"orders": {"x^8+14x^2+1": o1, "x^8+14x^4+1": o2}})


# ---------------------------------------------------------------------------
# closed forms of the J invariants


def random_normal_forms(n: int, seed: int = 0, lo: int = -9, hi: int = 9) -> list[NormalForm3]:
    """Random squarefree integral normal forms with U-shaped tuple, M != 0 and a2 != 0."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a = [rng.randint(lo, hi) for _ in range(3)]
        if 0 in a:
            continue
        try:
            nf = NormalForm3(*a)
        except CurveError:
            continue
        t = tuple_from_normal(nf)
        if t.shape == "U" and t.M:
            out.append(nf)
    return out


CALIBRATION = (1, 2, 3)


@dataclass(frozen=True)
class JCheck:
    name: str
    verdict: str
    constant: ExactScalar | None
    samples: int
    counterexample: dict | None

    def as_item(self) -> ReconciliationItem:
        data = {"samples": self.samples}
        if self.counterexample:
            data["counterexample"] = self.counterexample
        return ReconciliationItem(
            f"closed_form_{self.name}", f"{self.name} closed form in (u1, u2, u3)", self.verdict,
            None if self.constant is None else f"calibration constant {self.constant}",
            "transvectant value / closed-form value compared with the calibration curve "
            f"a = {CALIBRATION}", data)


def j_reconciliation(samples: int = 20, seed: int = 0) -> list[JCheck]:
    cal = NormalForm3(*CALIBRATION)
    curves = random_normal_forms(samples, seed)

    def both(nf):
        t = tuple_from_normal(nf)
        return j_invariants(curve_to_form(nf.curve())).as_dict(), j_closed_forms(t, nf.a2).as_dict(), t

    cj, cc, _ = both(cal)
    rows = [(nf, *both(nf)) for nf in curves]
    out = []
    for name in cj:
        const = cj[name] / cc[name] if cc[name] else None
        bad = None
        for nf, J, C, t in rows:
            ok = (J[name] == const * C[name]) if const is not None else (J[name] == 0 and C[name] == 0)
            if not ok:
                bad = {"a": [str(nf.a1), str(nf.a2), str(nf.a3)], "tuple": str(t),
                       "transvectant": str(J[name]), "closed_form": str(C[name]),
                       "ratio": str(J[name] / C[name]) if C[name] else None}
                break
        out.append(JCheck(name, MISMATCH if bad else MATCH, const, len(rows), bad))
    return out


# ---------------------------------------------------------------------------


def reconciliation_report(j_samples: int = 20, seed: int = 0, include_models: bool = True) -> dict:
    items = _d12_items() + _special_items() + _branch_items() + [_row11_item()]
    items += [c.as_item() for c in j_reconciliation(j_samples, seed)]
    if include_models:
        from .models import model_items
        items += model_items()
    counts = {v: sum(1 for i in items if i.verdict == v) for v in (MATCH, MISMATCH, UNVERIFIABLE)}
    return {"items": [i.as_dict() for i in items], "summary": counts}


__all__ = [
    "ReconciliationItem", "reconciliation_report", "j_reconciliation", "JCheck",
    "printed_lambda_family", "printed_lambda_tuple", "printed_d12_relations",
    "random_normal_forms", "same_up_to_scalar", "MATCH", "MISMATCH", "UNVERIFIABLE",
]
