"""Covariants and invariants of binary forms, specialised to octavics.

Forms are stored by their raw coefficients (no binomial factors) and the
r-th transvectant is evaluated by literal partial differentiation, so the
result does not depend on a coefficient convention:

    (f, g)^r = C * sum_k (-1)^k binom(r, k) d^r f/dX^(r-k) dZ^k * d^r g/dX^k dZ^(r-k)

with C = (m-r)! (n-r)! / (n! m!) for deg f = n, deg g = m.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .exact import (
    ONE,
    ZERO,
    ExactError,
    ExactPoly,
    ExactScalar,
    MoebiusMap,
    discriminant,
    form_substitute,
)


class BinaryForm:
    """Homogeneous form sum_j coeffs[j] X^j Z^(degree - j)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Sequence, degree: int | None = None):
        cs = [ExactScalar.coerce(c) for c in coeffs]
        if degree is None:
            degree = len(cs) - 1
        if degree < 0:
            raise ExactError("form degree must be >= 0")
        if len(cs) > degree + 1:
            if any(cs[degree + 1:]):
                raise ExactError("coefficient beyond the declared degree")
            cs = cs[: degree + 1]
        cs = cs + [ZERO] * (degree + 1 - len(cs))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def from_univariate(cls, f: ExactPoly, degree: int) -> "BinaryForm":
        """Homogenise f(x) to degree ``degree`` (extra degree = roots at [1:0])."""
        if f.nvars != 1:
            raise ExactError("expected a univariate polynomial")
        if f.degree() > degree:
            raise ExactError("polynomial degree exceeds form degree")
        return cls(f.coeffs(), degree)

    @classmethod
    def from_poly(cls, p: ExactPoly) -> "BinaryForm":
        """From a homogeneous ExactPoly in (X, Z)."""
        if p.nvars != 2:
            raise ExactError("expected a polynomial in (X, Z)")
        if not p:
            raise ExactError("zero form has no degree")
        degs = {sum(e) for e in p.terms}
        if len(degs) != 1:
            raise ExactError("polynomial is not homogeneous")
        d = degs.pop()
        cs = [ZERO] * (d + 1)
        for (i, _j), c in p.terms.items():
            cs[i] = c
        return cls(cs, d)

    @property
    def poly(self) -> ExactPoly:
        d = self.degree
        return ExactPoly({(j, d - j): c for j, c in enumerate(self.coeffs)}, nvars=2)

    def dehomogenize(self) -> ExactPoly:
        return ExactPoly.from_coeffs(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def constant(self) -> ExactScalar:
        if self.degree != 0:
            raise ExactError("form has positive order")
        return self.coeffs[0]

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ExactError("degree mismatch")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ExactError("degree mismatch")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)], self.degree)

    def scale(self, c) -> "BinaryForm":
        c = ExactScalar.coerce(c)
        return BinaryForm([v * c for v in self.coeffs], self.degree)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return BinaryForm(out, self.degree + other.degree)

    def substitute(self, m: "MoebiusMap | tuple") -> "BinaryForm":
        """f(aX + bZ, cX + dZ)."""
        a, b, c, d = m.matrix if isinstance(m, MoebiusMap) else tuple(ExactScalar.coerce(v) for v in m)
        return BinaryForm(form_substitute(self.coeffs, self.degree, a, b, c, d), self.degree)

    def swap(self) -> "BinaryForm":
        """f(Z, X)."""
        return BinaryForm(list(reversed(self.coeffs)), self.degree)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"BinaryForm({self.poly.format(['X', 'Z'])}, degree={self.degree})"


@dataclass(frozen=True)
class Covariant:
    form: BinaryForm
    degree_in_coeffs: int
    source_degree: int = 8

    @property
    def order(self) -> int:
        return self.form.degree

    @property
    def index(self) -> int:
        return (self.source_degree * self.degree_in_coeffs - self.order) // 2


def _falling(n: int, k: int) -> int:
    if k > n:
        return 0
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _partial(f: BinaryForm, dx: int, dz: int) -> list:
    """Coefficients of d^(dx+dz) f / dX^dx dZ^dz (degree drops by dx+dz)."""
    n = f.degree
    out = [ZERO] * (n - dx - dz + 1)
    for j, c in enumerate(f.coeffs):
        if not c:
            continue
        fx = _falling(j, dx)
        fz = _falling(n - j, dz)
        if fx and fz:
            out[j - dx] = c * (fx * fz)
    return out


def transvect(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (f, g)^r."""
    n, m = f.degree, g.degree
    if not 0 <= r <= min(n, m):
        raise ExactError(f"transvectant index {r} out of range for degrees {n}, {m}")
    out_deg = n + m - 2 * r
    acc = [ZERO] * (out_deg + 1)
    for k in range(r + 1):
        fa = _partial(f, r - k, k)
        gb = _partial(g, k, r - k)
        w = comb(r, k) * (-1 if k % 2 else 1)
        for i, a in enumerate(fa):
            if not a:
                continue
            aw = a * w
            for j, b in enumerate(gb):
                if b:
                    acc[i + j] = acc[i + j] + aw * b
    const = ExactScalar(factorial(m - r) * factorial(n - r)) / (factorial(n) * factorial(m))
    return BinaryForm([v * const for v in acc], out_deg)


CHAIN_ORDERS = {"g": 8, "k": 4, "h": 4, "m": 4, "n": 4, "p": 4, "q": 4}


def covariant_chain(f: BinaryForm) -> dict[str, BinaryForm]:
    """g, k, h, m, n, p, q of an octavic."""
    if f.degree != 8:
        raise ExactError(f"covariant chain needs an octavic, got degree {f.degree}")
    g = transvect(f, f, 4)
    k = transvect(f, f, 6)
    h = transvect(k, k, 2)
    chain = {
        "g": g,
        "k": k,
        "h": h,
        "m": transvect(f, k, 4),
        "n": transvect(f, h, 4),
        "p": transvect(g, k, 4),
        "q": transvect(g, h, 4),
    }
    for name, form in chain.items():
        assert form.degree == CHAIN_ORDERS[name], name
    return chain


@dataclass(frozen=True)
class InvariantVector:
    J2: ExactScalar
    J3: ExactScalar
    J4: ExactScalar
    J5: ExactScalar
    J6: ExactScalar
    J7: ExactScalar
    J14: ExactScalar

    NAMES = ("J2", "J3", "J4", "J5", "J6", "J7", "J14")
    WEIGHTS = {"J2": 2, "J3": 3, "J4": 4, "J5": 5, "J6": 6, "J7": 7, "J14": 14}

    def as_dict(self) -> dict[str, ExactScalar]:
        return {n: getattr(self, n) for n in self.NAMES}


def form_discriminant(f: BinaryForm) -> ExactScalar:
    """prod_{i<j} (alpha_i beta_j - alpha_j beta_i)^2 over a linear factorisation.

    Equal to the usual discriminant of f(x, 1) when the X^d coefficient is
    nonzero; a simple root at [1:0] contributes the square of the X^(d-1)
    coefficient.
    """
    d = f.degree
    cs = f.coeffs
    if cs[d]:
        return discriminant(ExactPoly.from_coeffs(cs), d)
    if d >= 1 and cs[d - 1]:
        if d == 1:
            return ONE
        return cs[d - 1] ** 2 * discriminant(ExactPoly.from_coeffs(cs[:d]), d - 1)
    return ZERO


def j_invariants(f: BinaryForm) -> InvariantVector:
    """J2..J7 by transvection and J14 as the discriminant."""
    if f.degree != 8:
        raise ExactError(f"J-invariants need an octavic, got degree {f.degree}")
    g = transvect(f, f, 4)
    k = transvect(f, f, 6)
    h = transvect(k, k, 2)
    m = transvect(f, k, 4)
    return InvariantVector(
        J2=transvect(f, f, 8).constant(),
        J3=transvect(f, g, 8).constant(),
        J4=transvect(k, k, 4).constant(),
        J5=transvect(m, k, 4).constant(),
        J6=transvect(k, h, 4).constant(),
        J7=transvect(m, h, 4).constant(),
        J14=form_discriminant(f),
    )


# ---------------------------------------------------------------------------
# closed forms in the dihedral coordinates, transcribed as printed


def closed_form_numerators(u1, u2, u3):
    """The printed polynomial parts; works on scalars or ExactPoly alike.

    Returns a dict name -> (prefactor_numerator, polynomial, M_power,
    has_u2_over_a2) describing J = prefactor * u2/a2? * poly / M^power.
    """
    J2 = 560*u1 + 280*u3**2 + 10*u3*u1 + 5*u3**3 + 2*u2**2
    J3 = (12*u2**3 + 4200*u1**2 + 4200*u1*u3**2 + 1050*u3**4 - 110*u3*u2*u1
          - 55*u3**3*u2 + 7840*u2*u1 + 3920*u2*u3**2)
    J4 = (2*u2**4 - 1568*u2**2*u1 - 784*u2**2*u3**2 + 1008*u2*u1**2 + 1008*u2*u1*u3**2
          + 252*u2*u3**4 + 8*u1**2*u3**2 + 307328*u1**2 + 307328*u1*u3**2 + 76832*u3**4
          + 62*u3*u2**2*u1 + 31*u3**3*u2**2 - 784*u3*u1**2 + 8*u1*u3**4 + 2*u3**6
          - 784*u3**3*u1 - 196*u3**5)
    J5 = (104*u2*u1**2*u3**2 - 614656*u2*u1*u3**2 - 41160*u3**6 - 614656*u2*u1**2
          - 153664*u2*u3**4 - 246960*u1*u3**4 - 2296*u2**2*u1*u3**2 + 104*u2*u1*u3**4
          - 41552*u3*u2*u1**2 - 41552*u3**3*u2*u1 + 26*u2**3*u3*u1 + 1568*u2**3*u3**2
          + 13*u2**3*u3**3 + 26*u2*u3**6 - 2296*u2**2*u1**2 - 574*u2**2*u3**4
          - 10388*u3**5*u2 + 1120*u3*u1**3 + 840*u3**5*u1 - 4*u2**5 - 329280*u1**3
          + 140*u3**7 - 493920*u1**2*u3**2 + 3136*u2**3*u1 + 1680*u3**3*u1**2)
    J6a = 2*u3*u1 + u3**3 - 392*u1 - 196*u3**2 + u2**2
    J6b = (-2*u2**4 - 8*u1**2*u3**2 - 8*u1*u3**4 - 2*u3**6 + 154*u3*u2**2*u1
           + 77*u3**3*u2**2 + 1568*u2**2*u1 + 784*u2**2*u3**2 + 3024*u2*u1**2
           + 3024*u2*u1*u3**2 + 756*u2*u3**4 + 10192*u3*u1**2 + 2548*u3**5
           - 307328*u1**2 - 307328*u1*u3**2 - 76832*u3**4 + 10192*u3**3*u1)
    J7 = (129077760*u3**6*u1 - 481890304*u2*u1**3 + 516311040*u1**3*u3**2
          + 387233280*u1**2*u3**4 + 921984*u2**3*u3**4 + 7299040*u3**7*u2
          - 90*u2**5*u3**3 - 14896*u2**4*u1**2
          - 3724*u2**4*u3**4 + 3360*u3**6*u1**2 + 1120*u3**8*u1 + 141120*u2*u1**4
          + 4480*u1**3*u3**4 + 16134720*u3**8
          + 2086*u3**7*u2**2 + 345*u2**3*u3**6 + 38*u3**9*u2 + 3687936*u2**3*u1**2
          - 68600*u3**9 - 25480*u2*u3**8
          + 5180672*u2**2*u1**3 + 647584*u2**2*u3**6 - 1097600*u3*u1**4 + 8*u2**7
          + 140*u3**10 + 258155520*u1**4
          - 1646400*u3**5*u1**2 - 548800*u3**7*u1 - 9408*u2**5*u1 - 4704*u2**5*u3**2
          - 722835456*u2*u1**2*u3**2
          + 16688*u3*u2**2*u1**3 + 304*u3**3*u2*u1**3 + 456*u3**5*u2*u1**2
          - 199920*u2*u1**2*u3**4 + 7840*u2*u1**3*u3**2
          - 14896*u2**4*u1*u3**2 + 25032*u3**3*u2**2*u1**2 + 43794240*u3**5*u2*u1
          + 87588480*u3**3*u2*u1**2
          + 228*u3**7*u2*u1 + 1380*u2**3*u3**4*u1 - 78400*u2**3*u3*u1**2
          + 58392320*u3*u2*u1**3 + 1380*u2**3*u3**2*u1**2
          - 135240*u2*u1*u3**6 + 3885504*u2**2*u1*u3**4 + 3687936*u2**3*u3**2*u1
          - 60236288*u2*u3**6
          + 12516*u3**5*u2**2*u1 - 78400*u2**3*u3**3*u1 - 361417728*u2*u1*u3**4
          + 2240*u1**4*u3**2
          + 7771008*u2**2*u1**2*u3**2 - 19600*u2**3*u3**5 - 180*u2**5*u3*u1
          - 2195200*u3**3*u1**3)
    J14 = (-1024*u3**4 - 64*u2**4 - 4096*u1**2 - 4096*u1*u3**2 - 2304*u2*u1*u3**2
           + 6*u3**6 + 384*u3**5
           + 1024*u2**2*u1 + 512*u2**2*u3**2 - 2304*u2*u1**2 - 576*u2*u3**4
           + 456*u1**2*u3**2 + 132*u1*u3**4
           + 160*u3**3*u2**2 + 1536*u3*u1**2 + 1536*u3**3*u1 - 2*u2**2*u1*u3**2
           + 320*u3*u2**2*u1 - 144*u3*u2*u1**2
           - 144*u3**3*u2*u1 + 32*u2**3*u1 + 16*u2**3*u3**2 - u2**2*u3**4
           - 36*u3**5*u2 + 8*u3**3*u1**2 + 8*u3**5*u1
           + 432*u1**3 + 2*u3**7)
    return {
        "J2": (1, J2, 1, False),
        "J3": (1, J3, 2, True),
        "J4": (32, J4, 2, False),
        "J5": (-16, J5, 3, True),
        "J6": (-256, J6a * J6b, 3, False),
        "J7": (64, J7, 4, True),
        "J14": (16, J14 * J14, 4, False),
    }


def j_closed_forms(t, a2) -> InvariantVector:
    """Evaluate the printed closed forms at a U-shaped dihedral tuple.

    ``a2`` enters through the u2/a2 prefactor of J3, J5, J7.
    """
    u1, u2, u3 = (ExactScalar.coerce(v) for v in (t.u1, t.u2, t.u3))
    a2 = ExactScalar.coerce(a2)
    M = 2 * u1 + u3 ** 2
    if not M:
        raise ExactError("closed forms need M = 2*u1 + u3^2 != 0")
    out = {}
    for name, (pref, poly, mpow, has_ratio) in closed_form_numerators(u1, u2, u3).items():
        val = ExactScalar(pref) * poly / M ** mpow
        if has_ratio:
            if not a2:
                raise ExactError("closed forms of J3, J5, J7 need a2 != 0")
            val = val * u2 / a2
        out[name] = val
    return InvariantVector(**out)


@dataclass(frozen=True)
class AbsoluteInvariants:
    i1: ExactScalar
    i2: ExactScalar
    i3: ExactScalar
    i4: ExactScalar
    i5: ExactScalar
    defined_when: bool = True

    def as_tuple(self):
        return (self.i1, self.i2, self.i3, self.i4, self.i5)


def absolute_invariants(v: InvariantVector) -> AbsoluteInvariants:
    """i1 = J3^2/J2^3, i2 = J4/J2^2, i3 = J5^2/J2^5, i4 = J6/J2^3, i5 = J7^2/J2^7."""
    J2 = v.J2
    if not J2:
        raise ExactError("absolute invariants undefined for J2 = 0; "
                         "use the projective tuple (J2^3 : J3^2 : ...)")
    return AbsoluteInvariants(
        i1=v.J3 ** 2 / J2 ** 3,
        i2=v.J4 / J2 ** 2,
        i3=v.J5 ** 2 / J2 ** 5,
        i4=v.J6 / J2 ** 3,
        i5=v.J7 ** 2 / J2 ** 7,
    )


def same_weighted_point(v: InvariantVector, w: InvariantVector) -> bool:
    """True iff J_k(w) = s^k J_k(v) for a common scalar s (exact test).

    Uses J_a(v)^b J_b(w)^a = J_b(v)^a J_a(w)^b for every pair of weights,
    which is the radical-free form of the condition.
    """
    names = v.NAMES
    vals_v = v.as_dict()
    vals_w = w.as_dict()
    for n in names:
        if bool(vals_v[n]) != bool(vals_w[n]):
            return False
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            wa, wb = v.WEIGHTS[a], v.WEIGHTS[b]
            if vals_v[a] ** wb * vals_w[b] ** wa != vals_v[b] ** wa * vals_w[a] ** wb:
                return False
    return True
