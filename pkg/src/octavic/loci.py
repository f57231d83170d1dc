"""Loci of the automorphism strata inside the space of dihedral invariants.

For every family with an extra involution the dihedral tuple is computed as
a rational function of the family parameters (composition with a stored
Moebius map, then the even-form formulas), and the parameter is eliminated
by resultants.  Rigid strata are described by their finite tuple sets,
taken from the automorphism oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm
from typing import Sequence

from .covariants import BinaryForm
from .dihedral import DihedralTuple, tuples_equal
from .exact import (
    ExactError, ExactPoly, ExactScalar, MoebiusMap, form_substitute, poly_gcd, resultant,
    squarefree_part,
)
from .table import BY_IDENTITY, ROW11_CORRECTED, _vars

# ---------------------------------------------------------------------------
# rational functions in the parameters


@dataclass(frozen=True)
class RationalEntry:
    num: ExactPoly
    den: ExactPoly

    @classmethod
    def make(cls, num: ExactPoly, den: ExactPoly) -> "RationalEntry":
        if not den:
            raise ExactError("zero denominator")
        if not num:
            return cls(num, ExactPoly.const(1, num.nvars))
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        # make the denominator's leading coefficient 1
        lc = den.terms[den.leading_term()[0]]
        return cls(num * lc.inverse(), den * lc.inverse())

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant(self) -> ExactScalar:
        return self.num.constant_value() / self.den.constant_value()

    def params(self) -> set[int]:
        return (self.num.variables() | self.den.variables()) - {0}

    def at(self, values: Sequence) -> ExactScalar:
        point = [0] + [ExactScalar.coerce(v) for v in values]
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("parameter value hits a pole")
        return self.num.evaluate(point) / d

    def format(self, names: Sequence[str]) -> str:
        allnames = ["x"] + list(names)
        n = self.num.format(allnames)
        if self.den.is_constant() and self.den.constant_value() == 1:
            return n
        return f"({n})/({self.den.format(allnames)})"


@dataclass(frozen=True)
class SymbolicTuple:
    shape: str
    entries: tuple
    flagged: bool
    params: tuple

    def at(self, values: Sequence) -> DihedralTuple:
        vals = tuple(e.at(values) for e in self.entries)
        return DihedralTuple(self.shape, vals, self.flagged)

    def format(self) -> str:
        return f"{self.shape}(" + ", ".join(e.format(self.params) for e in self.entries) + ")"


def symbolic_tuple_from_even(c4, c3, c2, c1, c0, params) -> SymbolicTuple:
    """The even-form tuple formulas with polynomial coefficients."""
    if not c0 or not c4:
        raise ExactError("even family needs c0 * c4 != 0 identically")
    R = RationalEntry.make
    if not c1 and not c3:
        return SymbolicTuple("W", (R(c2 ** 2, c0 * c4),), False, params)
    u3 = R(2 * c1 * c3, c0 * c4)
    u1 = R(c1 ** 4 * c4 ** 2 + c3 ** 4 * c0 ** 2, c0 ** 3 * c4 ** 3)
    s = c1 ** 2 * c4 + c3 ** 2 * c0
    if not s:
        if c2:
            return SymbolicTuple("UW", (u1, R(c2 ** 2, c0 * c4), u3), False, params)
        zero = R(ExactPoly.const(0, c0.nvars), ExactPoly.const(1, c0.nvars))
        return SymbolicTuple("U", (u1, zero, u3), True, params)
    return SymbolicTuple("U", (u1, R(c2 * s, c0 ** 2 * c4 ** 2), u3), False, params)


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Branch:
    label: str
    transform: MoebiusMap | None


@dataclass(frozen=True)
class FamilyParametrization:
    family_id: tuple[int, int]
    params: tuple[str, ...]
    rhs: ExactPoly                    # variables (x, *params)
    branches: tuple[Branch, ...]
    singular: tuple[tuple, ...] = ()  # parameter values with a repeated root
    degenerate: tuple[tuple, ...] = ()  # values where the tuple changes shape
    note: str = ""

    def branch_even_coeffs(self, branch: Branch) -> list[ExactPoly]:
        nv = self.rhs.nvars
        coeffs = self.rhs.coeffs_in(0)
        coeffs = coeffs + [ExactPoly.const(0, nv)] * (9 - len(coeffs))
        if branch.transform is not None:
            one = ExactPoly.const(1, nv)
            a, b, c, d = (one * v for v in branch.transform.matrix)
            coeffs = form_substitute(coeffs, 8, a, b, c, d,
                                     zero=ExactPoly.const(0, nv), one=one)
        if any(coeffs[k] for k in (1, 3, 5, 7)):
            raise ExactError(f"branch {branch.label} of {self.family_id} is not even")
        return coeffs

    def instance(self, values: Sequence) -> ExactPoly:
        from .table import instantiate
        return instantiate(self.rhs, [ExactScalar.coerce(v) for v in values])


class NotInLocusError(ExactError):
    """Family without an extra involution."""


X_PLUS_1_OVER_X_MINUS_1 = MoebiusMap(1, 1, 1, -1)


def _family_z2z2():
    x, a1, a2, a3 = _vars(3)
    return FamilyParametrization(
        (4, 2), ("a1", "a2", "a3"), x ** 8 + a3 * x ** 6 + a2 * x ** 4 + a1 * x ** 2 + 1,
        (Branch("x -> -x", None),))


def _family_z2cubed():
    x, s, p = _vars(2)
    return FamilyParametrization(
        (8, 5), ("s", "p"), x ** 8 + s * x ** 6 + (p + 2) * x ** 4 + s * x ** 2 + 1,
        (Branch("x -> -x", None),),
        note="(x^4+ax^2+1)(x^4+bx^2+1) with s = a + b, p = ab")


def _family_z2d8():
    x, a = _vars(1)
    return FamilyParametrization(
        (16, 11), ("a",), x ** 8 + a * x ** 4 + 1,
        (Branch("x -> -x", None), Branch("x -> (x+1)/(x-1)", X_PLUS_1_OVER_X_MINUS_1)),
        singular=((2,), (-2,)))


def _family_z2z4():
    x, a = _vars(1)
    return FamilyParametrization(
        (8, 2), ("a",), (x ** 4 - 1) * (x ** 4 + a * x ** 2 + 1),
        (Branch("x -> -x", None),), singular=((2,), (-2,)), degenerate=((0,),))


def _family_d12():
    x, a = _vars(1)
    return FamilyParametrization(
        (12, 4), ("a",), x * (x ** 6 + a * x ** 3 + 1),
        (Branch("x -> (x+1)/(x-1)", X_PLUS_1_OVER_X_MINUS_1),), singular=((2,), (-2,)))


FAMILY_BUILDERS = {
    (4, 2): _family_z2z2,
    (8, 5): _family_z2cubed,
    (16, 11): _family_z2d8,
    (8, 2): _family_z2z4,
    (12, 4): _family_d12,
}

RIGID_CURVES = {
    (24, 5): ExactPoly.from_coeffs([0, -1, 0, 0, 0, 0, 0, 1]),
    (32, 9): ExactPoly.from_coeffs([-1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (48, 48): ROW11_CORRECTED,
}

NO_EXTRA_INVOLUTION = ((2, 1), (4, 1), (14, 2))


def family(identity: tuple[int, int]) -> FamilyParametrization:
    if identity in NO_EXTRA_INVOLUTION:
        raise NotInLocusError(f"{identity} has no extra involution; not in the dihedral locus")
    if identity not in FAMILY_BUILDERS:
        raise KeyError(f"no parametrised family for {identity}")
    return FAMILY_BUILDERS[identity]()


def family_tuple(f: FamilyParametrization, branch: Branch | None = None) -> SymbolicTuple:
    branch = branch or f.branches[0]
    c = f.branch_even_coeffs(branch)
    return symbolic_tuple_from_even(c[8], c[6], c[4], c[2], c[0], f.params)


# ---------------------------------------------------------------------------
# elimination


def _project(p: ExactPoly, start: int) -> ExactPoly:
    """Keep variables start..start+2 (the tuple coordinates)."""
    out = {}
    for e, c in p.terms.items():
        if any(e[:start]):
            raise ExactError("parameter survived elimination")
        out[e[start:start + 3]] = c
    return ExactPoly(out, 3)


def _lift(p: ExactPoly, nv: int) -> ExactPoly:
    pad = (0,) * (nv - p.nvars)
    return ExactPoly({e + pad: c for e, c in p.terms.items()}, nv)


def _primitive_in(p: ExactPoly, var: int) -> ExactPoly:
    g = ExactPoly.const(0, p.nvars)
    for c in p.coeffs_in(var):
        if c:
            g = poly_gcd(g, c)
    if g and not g.is_constant():
        p = p.exact_div(g)
    return p


def normalise_relation(p: ExactPoly) -> ExactPoly:
    """Squarefree, integral and primitive when the coefficients are rational."""
    p = squarefree_part(p)
    cs = list(p.terms.values())
    if all(c.is_real() for c in cs):
        den = lcm(*(int(c.re.denominator) for c in cs))
        from math import gcd
        ints = [int(c.re * den) for c in cs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        lead = p.terms[p.leading_term()[0]]
        sign = -1 if lead.re < 0 else 1
        p = p * ExactScalar(sign * den) * ExactScalar(1, 0) / g
    return p


def eliminate(st: SymbolicTuple) -> list[ExactPoly]:
    """Relations in (t1, t2, t3) = tuple coordinates vanishing on the family."""
    k = len(st.params)
    nv_in = 1 + k
    nv = nv_in + 3
    rels: list[ExactPoly] = []
    nonconst = []
    for i, e in enumerate(st.entries):
        if e.is_constant:
            r = ExactPoly.var(i, 3) - e.constant()
            rels.append(normalise_relation(r))
        else:
            nonconst.append(i)
    if len(nonconst) >= 2:
        # pivot on the entry of least degree in its parameters
        def weight(i):
            e = st.entries[i]
            return (len(e.params()), max(e.num.degree(), e.den.degree()), -i)
        p = min(nonconst, key=weight)
        ep = st.entries[p]
        for j in nonconst:
            if j == p:
                continue
            ej = st.entries[j]
            ps = ep.params() | ej.params()
            if len(ps) != 1 or ep.params() != ps:
                continue
            var = ps.pop()
            Pp = _lift(ep.den, nv) * ExactPoly.var(nv_in + p, nv) - _lift(ep.num, nv)
            Pj = _lift(ej.den, nv) * ExactPoly.var(nv_in + j, nv) - _lift(ej.num, nv)
            r = _project(resultant(Pp, Pj, eliminate=var), nv_in)
            r = _primitive_in(r, j)
            if r.degree(j) < 1:
                raise ExactError("elimination degenerated (no dependence on the eliminated pair)")
            rels.append(normalise_relation(r))
    return _reduce(rels)


def _reduce(rels: list[ExactPoly]) -> list[ExactPoly]:
    out: list[ExactPoly] = []
    for r in rels:
        if any(_divides(s, r) for s in out):
            continue
        out = [s for s in out if not _divides(r, s)]
        out.append(r)
    return out


def _divides(a: ExactPoly, b: ExactPoly) -> bool:
    try:
        b.exact_div(a)
        return True
    except ExactError:
        return False


def relation_vanishes(rel: ExactPoly, st: SymbolicTuple) -> bool:
    """Substitute the parametrisation into ``rel`` and test for the zero polynomial."""
    n = len(st.entries)
    degs = [rel.degree(i) if i < n else 0 for i in range(3)]
    nv = st.entries[0].num.nvars
    total = ExactPoly.const(0, nv)
    for e, c in rel.terms.items():
        term = ExactPoly.const(c, nv)
        for i in range(n):
            term = term * st.entries[i].num ** e[i] * st.entries[i].den ** (degs[i] - e[i])
        total = total + term
    return not total


def evaluate_relation(rel: ExactPoly, t: DihedralTuple) -> ExactScalar:
    vals = list(t.values) + [ExactScalar(0)] * (3 - len(t.values))
    return rel.evaluate(vals)


def relation_names(shape: str) -> list[str]:
    return {"W": ["w", "_", "_"], "UW": ["u1", "w", "u3"], "U": ["u1", "u2", "u3"]}[shape]


# ---------------------------------------------------------------------------
# locus equations and membership


@dataclass(frozen=True)
class LocusBranch:
    label: str
    shape: str
    flagged: bool
    relations: tuple
    parametrization: SymbolicTuple | None
    sound: bool

    def formatted(self) -> list[str]:
        names = relation_names(self.shape)
        return [f"{r.format(names)} = 0" for r in self.relations]


@dataclass(frozen=True)
class LocusEquations:
    family_id: tuple[int, int]
    branches: tuple = ()
    special_points: tuple = ()
    excluded: tuple = ()
    rigid: bool = False
    params: tuple = field(default=())

    def relations(self) -> list[ExactPoly]:
        return [r for b in self.branches for r in b.relations]


@lru_cache(maxsize=None)
def rigid_points(identity: tuple[int, int]) -> tuple[DihedralTuple, ...]:
    """Every dihedral tuple of the rigid curve of the given stratum."""
    from .tuples import all_tuples, tuple_sort_key
    f = BinaryForm.from_univariate(RIGID_CURVES[identity], 8)
    return tuple(sorted(all_tuples(f), key=tuple_sort_key))


def _on_branch(t: DihedralTuple, b: LocusBranch) -> bool:
    return t.shape == b.shape and all(not evaluate_relation(r, t) for r in b.relations)


@lru_cache(maxsize=None)
def derive_locus(identity: tuple[int, int]) -> LocusEquations:
    if identity in RIGID_CURVES:
        return LocusEquations(identity, special_points=rigid_points(identity), rigid=True)
    fam = family(identity)
    branches = []
    for br in fam.branches:
        st = family_tuple(fam, br)
        rels = eliminate(st)
        sound = all(relation_vanishes(r, st) for r in rels)
        branches.append(LocusBranch(br.label, st.shape, st.flagged, tuple(rels), st, sound))
    excluded = []
    for vals in fam.singular + fam.degenerate:
        for b in branches:
            try:
                excluded.append(b.parametrization.at(vals))
            except (ZeroDivisionError, ExactError):
                pass
    for rid in RIGID_CURVES:
        for t in rigid_points(rid):
            if any(_on_branch(t, b) for b in branches):
                excluded.append(t)
    uniq: list[DihedralTuple] = []
    for t in excluded:
        if not any(tuples_equal(t, s) for s in uniq):
            uniq.append(t)
    return LocusEquations(identity, tuple(branches), (), tuple(uniq), False, fam.params)


def membership(t: DihedralTuple, L: LocusEquations) -> bool:
    if L.rigid:
        return any(tuples_equal(t, s) for s in L.special_points)
    if any(tuples_equal(t, s) for s in L.excluded):
        return False
    return any(_on_branch(t, b) for b in L.branches)


LOCUS_IDS = ((4, 2), (8, 5), (16, 11), (8, 2), (12, 4), (24, 5), (32, 9), (48, 48))


def all_loci() -> dict[tuple[int, int], LocusEquations]:
    return {i: derive_locus(i) for i in LOCUS_IDS}


__all__ = [
    "RationalEntry", "SymbolicTuple", "FamilyParametrization", "Branch", "LocusBranch",
    "LocusEquations", "NotInLocusError", "family", "family_tuple", "derive_locus",
    "membership", "eliminate", "relation_vanishes", "evaluate_relation", "rigid_points",
    "all_loci", "LOCUS_IDS", "RIGID_CURVES", "symbolic_tuple_from_even", "BY_IDENTITY",
]
