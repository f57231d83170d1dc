"""Normal forms and dihedral invariants of genus-3 hyperelliptic curves.

A curve with an extra involution has a model

    y^2 = x^8 + a3 x^6 + a2 x^4 + a1 x^2 + 1

and its dihedral invariants are u1 = a1^4 + a3^4, u2 = (a1^2 + a3^2) a2,
u3 = 2 a1 a3, with the degenerate variants using w = a2^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .covariants import BinaryForm
from .exact import ExactError, ExactPoly, ExactScalar, ZERO, squarefree


class CurveError(ExactError):
    """Input does not describe a smooth genus-3 hyperelliptic curve."""


class ShapeError(ValueError):
    """Operation needs a different dihedral-tuple shape."""


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = rhs(x) with rhs squarefree of degree 7 or 8."""

    rhs: ExactPoly

    def __post_init__(self):
        if self.rhs.nvars != 1:
            raise CurveError("rhs must be univariate")
        if self.rhs.degree() not in (7, 8):
            raise CurveError(f"genus 3 needs degree 7 or 8, got {self.rhs.degree()}")
        if not squarefree(self.rhs):
            raise CurveError("rhs has a repeated root")

    @property
    def genus(self) -> int:
        return 3

    def __str__(self):
        return f"y^2 = {self.rhs}"


def curve_to_form(c: HyperellipticCurve) -> BinaryForm:
    """Degree-8 binary form; a degree-7 rhs acquires the root [1:0]."""
    return BinaryForm.from_univariate(c.rhs, 8)


@dataclass(frozen=True)
class NormalForm3:
    a1: ExactScalar
    a2: ExactScalar
    a3: ExactScalar

    def __init__(self, a1, a2, a3, check: bool = True):
        object.__setattr__(self, "a1", ExactScalar.coerce(a1))
        object.__setattr__(self, "a2", ExactScalar.coerce(a2))
        object.__setattr__(self, "a3", ExactScalar.coerce(a3))
        if check and not squarefree(self.octavic()):
            raise CurveError(f"normal form ({a1}, {a2}, {a3}) is singular")

    def octavic(self) -> ExactPoly:
        return ExactPoly.from_coeffs([1, 0, self.a1, 0, self.a2, 0, self.a3, 0, 1])

    def curve(self) -> HyperellipticCurve:
        return HyperellipticCurve(self.octavic())


Shape = Literal["W", "UW", "U"]


@dataclass(frozen=True)
class DihedralTuple:
    """One of W(w), UW(u1, w, u3), U(u1, u2, u3).

    ``flagged`` marks a U tuple produced when a1^2 + a3^2 = 0 and a2 = 0,
    where the three-case definition is silent; it is not part of equality.
    """

    shape: Shape
    values: tuple
    flagged: bool = field(default=False, compare=False)

    def __post_init__(self):
        vals = tuple(ExactScalar.coerce(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        want = 1 if self.shape == "W" else 3
        if self.shape not in ("W", "UW", "U") or len(vals) != want:
            raise ShapeError(f"bad tuple {self.shape}{vals}")

    @classmethod
    def W(cls, w) -> "DihedralTuple":
        return cls("W", (w,))

    @classmethod
    def UW(cls, u1, w, u3) -> "DihedralTuple":
        return cls("UW", (u1, w, u3))

    @classmethod
    def U(cls, u1, u2, u3, flagged: bool = False) -> "DihedralTuple":
        return cls("U", (u1, u2, u3), flagged)

    @property
    def w(self) -> ExactScalar:
        if self.shape == "W":
            return self.values[0]
        if self.shape == "UW":
            return self.values[1]
        raise ShapeError("U tuples carry no w")

    @property
    def u1(self) -> ExactScalar:
        if self.shape == "W":
            raise ShapeError("W tuples carry no u1")
        return self.values[0]

    @property
    def u2(self) -> ExactScalar:
        if self.shape != "U":
            raise ShapeError(f"{self.shape} tuples carry no u2")
        return self.values[1]

    @property
    def u3(self) -> ExactScalar:
        if self.shape == "W":
            raise ShapeError("W tuples carry no u3")
        return self.values[2]

    @property
    def M(self) -> ExactScalar:
        return 2 * self.u1 + self.u3 ** 2

    def __str__(self):
        return f"{self.shape}(" + ", ".join(str(v) for v in self.values) + ")"


def tuple_from_normal(n: NormalForm3) -> DihedralTuple:
    a1, a2, a3 = n.a1, n.a2, n.a3
    if not a1 and not a3:
        return DihedralTuple.W(a2 ** 2)
    u1 = a1 ** 4 + a3 ** 4
    u3 = 2 * a1 * a3
    s = a1 ** 2 + a3 ** 2
    if not s:
        if a2:
            return DihedralTuple.UW(u1, a2 ** 2, u3)
        return DihedralTuple.U(u1, ZERO, u3, flagged=True)
    return DihedralTuple.U(u1, s * a2, u3)


def tuple_from_even(c4, c3, c2, c1, c0) -> DihedralTuple:
    """Dihedral tuple of c4 x^8 + c3 x^6 + c2 x^4 + c1 x^2 + c0, scaling-free.

    Rational in the coefficients: the normalising x -> lambda x (lambda^8 =
    c0/c4) and the division by c0 are eliminated in closed form.
    """
    c4, c3, c2, c1, c0 = (ExactScalar.coerce(v) for v in (c4, c3, c2, c1, c0))
    if not c0 or not c4:
        raise ExactError("even form needs c0 * c4 != 0")
    if not c1 and not c3:
        return DihedralTuple.W(c2 ** 2 / (c0 * c4))
    u3 = 2 * c1 * c3 / (c0 * c4)
    u1 = c1 ** 4 / (c0 ** 3 * c4) + c3 ** 4 / (c0 * c4 ** 3)
    # a1^2 + a3^2 vanishes iff c1^2 c4 + c3^2 c0 does
    if not (c1 ** 2 * c4 + c3 ** 2 * c0):
        if c2:
            return DihedralTuple.UW(u1, c2 ** 2 / (c0 * c4), u3)
        return DihedralTuple.U(u1, ZERO, u3, flagged=True)
    u2 = c2 * c1 ** 2 / (c0 ** 2 * c4) + c2 * c3 ** 2 / (c0 * c4 ** 2)
    return DihedralTuple.U(u1, u2, u3)


def even_coefficients(f: ExactPoly) -> tuple | None:
    """(c4, c3, c2, c1, c0) if f is an even octavic with c0 c4 != 0, else None."""
    if f.nvars != 1 or f.degree() != 8:
        return None
    cs = f.coeffs()
    if any(cs[k] for k in (1, 3, 5, 7)) or not cs[0]:
        return None
    return (cs[8], cs[6], cs[4], cs[2], cs[0])


def tuple_of_even_curve(f: ExactPoly) -> DihedralTuple:
    cs = even_coefficients(f)
    if cs is None:
        raise ExactError("not an even octavic with nonzero constant term")
    return tuple_from_even(*cs)


def tuples_equal(s: DihedralTuple, t: DihedralTuple) -> bool:
    return s.shape == t.shape and s.values == t.values


@dataclass(frozen=True)
class BranchRelations:
    d4_member: bool
    plus_branch: bool
    minus_branch: bool


def branch_relations(t: DihedralTuple) -> BranchRelations:
    """4 u1^2 = u3^4 and its factors 2 u1 = +-u3^2."""
    if t.shape == "W":
        raise ShapeError("W tuples have no (u1, u3); use the oracle path")
    u1, u3 = t.u1, t.u3
    return BranchRelations(
        d4_member=4 * u1 ** 2 == u3 ** 4,
        plus_branch=2 * u1 == u3 ** 2,
        minus_branch=2 * u1 == -(u3 ** 2),
    )


def subcover_equations(n: NormalForm3) -> tuple[ExactPoly, ExactPoly]:
    """C1: y^2 = x^4 + a3 x^3 + a2 x^2 + a1 x + 1 and C2: y^2 = x * (same)."""
    quartic = ExactPoly.from_coeffs([1, n.a1, n.a2, n.a3, 1])
    return quartic, quartic * ExactPoly.from_coeffs([0, 1])


# ---------------------------------------------------------------------------
# genus 2


@dataclass(frozen=True)
class Genus2DihedralPair:
    u_frak: ExactScalar
    v_frak: ExactScalar

    def __init__(self, u_frak, v_frak):
        object.__setattr__(self, "u_frak", ExactScalar.coerce(u_frak))
        object.__setattr__(self, "v_frak", ExactScalar.coerce(v_frak))

    @classmethod
    def from_normal(cls, a1, a2) -> "Genus2DihedralPair":
        """Pair of y^2 = x^6 + a2 x^4 + a1 x^2 + 1."""
        a1, a2 = ExactScalar.coerce(a1), ExactScalar.coerce(a2)
        return cls(a1 ** 3 + a2 ** 3, 2 * a1 * a2)


GENUS2_LABELS = ("Z3:D8", "GL2(3)", "D12", "D8", "V4", "excluded")


def classify_genus2(p: Genus2DihedralPair) -> str:
    """Automorphism group of a genus-2 curve with an extra involution.

    Returns "excluded" for points on the D12 or D8 relation at one of the
    listed exceptional values of v.
    """
    u, v = p.u_frak, p.v_frak
    if (u, v) in ((0, 0), (6750, 450)):
        return "Z3:D8"
    if (u, v) == (-250, 50):
        return "GL2(3)"
    if v ** 2 - 220 * v - 16 * u + 4500 == 0:
        # 140 +- 60 sqrt(5) tested as (v - 140)^2 = 18000
        if v in (18, 50) or (v - 140) ** 2 == 18000:
            return "excluded"
        return "D12"
    if 2 * u ** 2 - v ** 3 == 0:
        if v in (2, 18, 0, 50, 450):
            return "excluded"
        return "D8"
    return "V4"
