"""Numeric automorphism oracle for binary octavics.

The reduced automorphism group is the stabiliser of the eight branch points
in PGL2(C).  Roots are found with mpmath, every Moebius map sending a fixed
base triple of roots to an ordered triple of roots is screened in numpy, the
survivors are confirmed at working precision, and each element is then
snapped to exact entries (Q(i), or Q(i)(sqrt D) for small D) and verified by
exact substitution into the form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .covariants import BinaryForm, form_discriminant
from .exact import ExactError, ExactScalar, MoebiusMap, form_substitute

PREFILTER_TOL = 1e-6
QUADRATIC_RADICANDS = (2, 3)


class OracleError(RuntimeError):
    """Root finding or group recovery failed after all retries."""


@dataclass(frozen=True)
class OracleConfig:
    precision: int = 128
    tolerance: float = 1e-20
    snap_denominator: int = 10 ** 6
    max_retries: int = 3


DEFAULT_CONFIG = OracleConfig()


def _context(prec: int) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def _to_ctx(ctx, s) -> "mpmath.mpc":
    s = ExactScalar.coerce(s)
    re = ctx.mpf(int(s.re.numerator)) / int(s.re.denominator)
    im = ctx.mpf(int(s.im.numerator)) / int(s.im.denominator)
    return ctx.mpc(re, im)


def _mpf_to_fraction(x) -> Fraction:
    raw = x._mpf_ if hasattr(x, "_mpf_") else mpmath.mpf(x)._mpf_
    p, q = mpmath.libmp.to_rational(raw)
    return Fraction(int(p), int(q))


def snap_rational(x, bound: int, tol: float) -> Fraction | None:
    """Continued-fraction reconstruction of a real with denominator <= bound."""
    fx = _mpf_to_fraction(x)
    q = fx.limit_denominator(bound)
    scale = max(1, abs(fx))
    if abs(fx - q) > _mpf_to_fraction(tol) * scale:
        return None
    return q


def snap_gaussian(z, bound: int, tol: float) -> ExactScalar | None:
    re = snap_rational(z.real, bound, tol)
    im = snap_rational(z.imag, bound, tol)
    if re is None or im is None:
        return None
    return ExactScalar(re, im)


# ---------------------------------------------------------------------------
# Q(i)(sqrt D)


class QuadraticScalar:
    """a + b sqrt(D) with a, b in Q(i) and D a squarefree positive integer."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D: int = 2):
        object.__setattr__(self, "a", ExactScalar.coerce(a))
        object.__setattr__(self, "b", ExactScalar.coerce(b))
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticScalar is immutable")

    def _lift(self, other) -> "QuadraticScalar":
        if isinstance(other, QuadraticScalar):
            if other.D != self.D:
                raise ExactError("mixed quadratic extensions")
            return other
        return QuadraticScalar(other, 0, self.D)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (ExactError, TypeError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __neg__(self):
        return QuadraticScalar(-self.a, -self.b, self.D)

    def __add__(self, other):
        o = self._lift(other)
        return QuadraticScalar(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return QuadraticScalar(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QuadraticScalar(self.a * o.a + self.D * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticScalar":
        n = self.a * self.a - self.D * self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticScalar(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, n: int):
        out = QuadraticScalar(1, 0, self.D)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out

    def to_mpc(self, ctx=mpmath.mp):
        return _to_ctx(ctx, self.a) + _to_ctx(ctx, self.b) * ctx.sqrt(self.D)

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a})+({self.b})*sqrt({self.D})"

    __repr__ = __str__


def snap_quadratic(z, D: int, bound: int, tol: float, ctx) -> QuadraticScalar | None:
    """Integer-relation snap of real and imaginary parts onto Q(sqrt D)."""
    parts = []
    r = ctx.sqrt(D)
    for x in (ctx.re(z), ctx.im(z)):
        if abs(x) < tol:
            parts.append((Fraction(0), Fraction(0)))
            continue
        rel = ctx.pslq([x, 1, r], maxcoeff=bound, maxsteps=20000)
        if rel is None or rel[0] == 0:
            return None
        parts.append((Fraction(-rel[1], rel[0]), Fraction(-rel[2], rel[0])))
    (ra, rb), (ia, ib) = parts
    return QuadraticScalar(ExactScalar(ra, ia), ExactScalar(rb, ib), D)


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class ProjectivePointSet:
    """Eight distinct points of P^1; ``None`` is the point at infinity."""

    points: tuple
    precision: int

    def homogeneous(self, ctx) -> list[tuple]:
        return [(ctx.mpc(1), ctx.mpc(0)) if p is None else (ctx.mpc(p), ctx.mpc(1))
                for p in self.points]

    def as_numpy(self) -> np.ndarray:
        out = np.empty((len(self.points), 2), dtype=complex)
        for i, p in enumerate(self.points):
            out[i] = (1.0, 0.0) if p is None else (complex(p), 1.0)
        # keep huge finite roots on the chordal sphere
        norms = np.linalg.norm(out, axis=1, keepdims=True)
        return out / norms

    def __len__(self):
        return len(self.points)


def chordal(u, v, ctx=mpmath.mp):
    num = abs(u[0] * v[1] - u[1] * v[0])
    den = ctx.sqrt(abs(u[0]) ** 2 + abs(u[1]) ** 2) * ctx.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2)
    return num / den


def roots(f: BinaryForm, precision: int = 128, tolerance: float = 1e-20) -> ProjectivePointSet:
    """Projective roots of a squarefree binary octavic."""
    if f.degree != 8:
        raise ExactError("oracle expects a binary octavic")
    if not form_discriminant(f):
        raise ExactError("octavic has a repeated root")
    ctx = _context(precision)
    cs = list(f.coeffs)
    top = max(j for j, c in enumerate(cs) if c)
    pts: list = [None] * (8 - top)
    desc = [_to_ctx(ctx, c) for c in reversed(cs[: top + 1])]
    if top > 0:
        found = None
        for steps in (100, 400, 1600):
            try:
                found = ctx.polyroots(desc, maxsteps=steps, extraprec=2 * precision)
                break
            except ctx.NoConvergence:
                continue
        if found is None:
            raise OracleError("root finding did not converge")
        pts.extend(found)
    _check_roots(f, pts, ctx, tolerance)
    return ProjectivePointSet(tuple(pts), precision)


def _check_roots(f: BinaryForm, pts, ctx, tol):
    cs = [_to_ctx(ctx, c) for c in f.coeffs]
    for p in pts:
        if p is None:
            continue
        val = sum(c * p ** j for j, c in enumerate(cs))
        scale = sum(abs(c) * abs(p) ** j for j, c in enumerate(cs))
        if abs(val) > tol * scale:
            raise OracleError(f"root residual {float(abs(val) / scale):.3g} above tolerance")
    hom = [(ctx.mpc(1), ctx.mpc(0)) if p is None else (p, ctx.mpc(1)) for p in pts]
    for u, v in itertools.combinations(hom, 2):
        if chordal(u, v, ctx) <= 10 * tol:
            raise OracleError("roots not separated beyond tolerance")


# ---------------------------------------------------------------------------
# group elements


@dataclass(frozen=True)
class GroupElement:
    perm: tuple
    matrix: tuple                       # numeric, first sizeable entry scaled to 1
    exact: MoebiusMap | None = None
    quadratic: tuple | None = None      # (a, b, c, d) QuadraticScalars
    order: int = 1

    @property
    def certified(self) -> bool:
        return self.exact is not None or self.quadratic is not None

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    def exact_matrix(self):
        if self.exact is not None:
            return self.exact.matrix
        return self.quadratic


def _perm_order(p: Sequence[int]) -> int:
    n, cur, ident = 1, tuple(p), tuple(range(len(p)))
    while cur != ident:
        cur = tuple(p[i] for i in cur)
        n += 1
    return n


def _compose_perm(p, q):
    """(p o q)[i] = p[q[i]]."""
    return tuple(p[i] for i in q)


STRUCTURE_TAGS = ("trivial", "cyclic", "dihedral", "A4", "S4", "A5", "unexpected")


def identify_structure(orders: Sequence[int]) -> str:
    """Name a finite subgroup of PGL2(C) from its element-order census."""
    n = len(orders)
    count = {k: orders.count(k) for k in set(orders)}
    if n == 1:
        return "trivial"
    if max(orders) == n:
        return f"cyclic {n}"
    if n == 12 and count.get(3) == 8 and count.get(2) == 3:
        return "A4"
    if n == 24 and count.get(4) == 6 and count.get(3) == 8 and 6 not in count:
        return "S4"
    if n == 60 and set(count) == {1, 2, 3, 5}:
        return "A5"
    half = n // 2
    if n % 2 == 0 and half in count and count.get(2, 0) >= half:
        return f"dihedral {half}"
    return "unexpected"


@dataclass(frozen=True)
class ReducedAutGroup:
    form: BinaryForm
    points: ProjectivePointSet
    elements: tuple
    structure: str
    precision: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def all_certified(self) -> bool:
        return all(e.certified for e in self.elements)

    def involutions(self) -> list[GroupElement]:
        return [e for e in self.elements if e.order == 2]

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.elements:
            out[e.order] = out.get(e.order, 0) + 1
        return dict(sorted(out.items()))

    def is_closed(self) -> bool:
        perms = {e.perm for e in self.elements}
        return all(_compose_perm(p, q) in perms for p in perms for q in perms)


def _triple_map_np(p, q, r):
    """Vectorised matrices sending homogeneous p, q, r to 0, inf, 1."""
    def det(u, v):
        return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]
    k1 = 1.0 / det(r, p)
    k2 = 1.0 / det(r, q)
    m = np.empty(p.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = k1 * p[..., 1]
    m[..., 0, 1] = -k1 * p[..., 0]
    m[..., 1, 0] = k2 * q[..., 1]
    m[..., 1, 1] = -k2 * q[..., 0]
    return m


def _triple_map_mp(p, q, r):
    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]
    k1 = 1 / det(r, p)
    k2 = 1 / det(r, q)
    return (k1 * p[1], -k1 * p[0], k2 * q[1], -k2 * q[0])


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _adj(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def _apply(m, v):
    a, b, c, d = m
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def _normalise(m, ctx):
    big = max(abs(x) for x in m)
    lead = next(x for x in m if abs(x) > big * ctx.mpf(10) ** (-10))
    return tuple(x / lead for x in m)


def _candidates(points: ProjectivePointSet) -> list[tuple]:
    """Ordered image triples whose map permutes the roots (double precision)."""
    P = points.as_numpy()
    triples = np.array(list(itertools.permutations(range(len(P)), 3)))
    A = _triple_map_np(P[0], P[1], P[2])
    B = _triple_map_np(P[triples[:, 0]], P[triples[:, 1]], P[triples[:, 2]])
    adjB = np.empty_like(B)
    adjB[:, 0, 0], adjB[:, 0, 1] = B[:, 1, 1], -B[:, 0, 1]
    adjB[:, 1, 0], adjB[:, 1, 1] = -B[:, 1, 0], B[:, 0, 0]
    G = adjB @ A
    img = np.einsum("cij,pj->cpi", G, P)
    img /= np.linalg.norm(img, axis=2, keepdims=True)
    # chordal distance |det(u, v)| for unit vectors
    dist = np.abs(img[:, :, None, 0] * P[None, None, :, 1] - img[:, :, None, 1] * P[None, None, :, 0])
    nearest = dist.argmin(axis=2)
    worst = dist.min(axis=2).max(axis=1)
    out = []
    for c in np.nonzero(worst < PREFILTER_TOL)[0]:
        perm = tuple(int(j) for j in nearest[c])
        if len(set(perm)) == len(perm):
            out.append(perm)
    return out


class _Ambiguous(Exception):
    pass


def _confirm(points: ProjectivePointSet, perm, ctx, tol) -> tuple:
    hom = points.homogeneous(ctx)
    A = _triple_map_mp(hom[0], hom[1], hom[2])
    B = _triple_map_mp(hom[perm[0]], hom[perm[1]], hom[perm[2]])
    G = _mat_mul(_adj(B), A)
    for i, v in enumerate(hom):
        d = chordal(_apply(G, v), hom[perm[i]], ctx)
        if d > tol:
            if d < PREFILTER_TOL:
                raise _Ambiguous(perm)
            return None
    return _normalise(G, ctx)


def _proportional(g: Sequence, f: Sequence) -> bool:
    """g = t f for some nonzero t, checked by cross-multiplication."""
    j = next(k for k, c in enumerate(f) if c)
    if not g[j]:
        return False
    return all(g[k] * f[j] == g[j] * f[k] for k in range(len(f)))


def _agrees(exact_entries, m, ctx) -> bool:
    """Projective agreement of an exact candidate with the numeric element."""
    num = [e.to_mpc(ctx) if isinstance(e, QuadraticScalar) else _to_ctx(ctx, e)
           for e in exact_entries]
    num = _normalise(tuple(num), ctx)
    return max(abs(u - v) for u, v in zip(num, m)) < ctx.mpf(10) ** (-8)


def _certify(form: BinaryForm, m: tuple, ctx, config: OracleConfig):
    """Exact representative of a numeric automorphism, or (None, None)."""
    tol = ctx.mpf(config.tolerance) ** 0.5   # entries carry ~half the digits of a root residual
    tol = max(tol, ctx.mpf(2) ** (-ctx.prec // 2))
    snapped = [snap_gaussian(x, config.snap_denominator, tol) for x in m]
    if all(s is not None for s in snapped):
        try:
            mm = MoebiusMap(*snapped)
        except ExactError:
            mm = None
        if (mm is not None and _agrees(mm.matrix, m, ctx)
                and _proportional(form.substitute(mm).coeffs, form.coeffs)):
            return mm, None
    for D in QUADRATIC_RADICANDS:
        qs = [snap_quadratic(x, D, config.snap_denominator, tol, ctx) for x in m]
        if any(q is None for q in qs):
            continue
        a, b, c, d = qs
        if not (a * d - b * c) or not _agrees(qs, m, ctx):
            continue
        coeffs = [QuadraticScalar(v, 0, D) for v in form.coeffs]
        g = form_substitute(coeffs, form.degree, a, b, c, d,
                            zero=QuadraticScalar(0, 0, D), one=QuadraticScalar(1, 0, D))
        if _proportional(g, coeffs):
            return None, tuple(qs)
    return None, None


def reduced_group(form: BinaryForm, config: OracleConfig = DEFAULT_CONFIG,
                  points: ProjectivePointSet | None = None) -> ReducedAutGroup:
    """Moebius stabiliser of the root set of ``form``."""
    prec = config.precision if points is None else points.precision
    for _attempt in range(config.max_retries + 1):
        ctx = _context(prec)
        if points is None or points.precision != prec:
            points = roots(form, prec, config.tolerance)
        try:
            found = {}
            for perm in _candidates(points):
                m = _confirm(points, perm, ctx, config.tolerance)
                if m is not None:
                    found[perm] = m
        except _Ambiguous:
            prec *= 2
            continue
        perms = set(found)
        if all(_compose_perm(p, q) in perms for p in perms for q in perms):
            break
        prec *= 2
    else:
        raise OracleError("group closure failed at every precision")
    elements = []
    for perm in sorted(found):
        exact, quad = _certify(form, found[perm], ctx, config)
        elements.append(GroupElement(perm, found[perm], exact, quad, _perm_order(perm)))
    structure = identify_structure([e.order for e in elements])
    return ReducedAutGroup(form, points, tuple(elements), structure, prec)


# ---------------------------------------------------------------------------
# lifts


@dataclass(frozen=True)
class LiftCertificate:
    """f(gamma X) = t f(X) with gamma^2 = mu I; the lift has order 2 iff t = mu^4."""

    gamma: object
    t: object
    mu: object
    lift_order: int
    exact: bool

    @property
    def is_extra(self) -> bool:
        return self.lift_order == 2


def lift_order(f: BinaryForm, gamma: MoebiusMap) -> LiftCertificate:
    """Exact lift order of an involution of the root set of ``f``."""
    mu = gamma.square_scalar()
    if mu is None or gamma.is_identity():
        raise ExactError("not an involution")
    g = f.substitute(gamma).coeffs
    if not _proportional(g, f.coeffs):
        raise ExactError("map does not preserve the root set")
    j = next(k for k, c in enumerate(f.coeffs) if c)
    t = g[j] / f.coeffs[j]
    return LiftCertificate(gamma, t, mu, _parity(t, mu), True)


def _parity(t, mu) -> int:
    m4 = mu ** 4
    if t == m4:
        return 2
    if t == -m4:
        return 4
    raise ExactError("lift constant inconsistent with an involution")


def element_lift(f: BinaryForm, e: GroupElement, ctx=None) -> LiftCertificate:
    if e.order != 2:
        raise ExactError("lift order is defined here for involutions only")
    if e.exact is not None:
        return lift_order(f, e.exact)
    if e.quadratic is not None:
        a, b, c, d = e.quadratic
        D = a.D
        coeffs = [QuadraticScalar(v, 0, D) for v in f.coeffs]
        g = form_substitute(coeffs, f.degree, a, b, c, d,
                            zero=QuadraticScalar(0, 0, D), one=QuadraticScalar(1, 0, D))
        j = next(k for k, c0 in enumerate(coeffs) if c0)
        t = g[j] / coeffs[j]
        mu = a * a + b * c
        return LiftCertificate(e.quadratic, t, mu, _parity(t, mu), True)
    ctx = ctx or _context(128)
    a, b, c, d = e.matrix
    x0 = ctx.mpc("0.3137", "0.7071")
    cs = [_to_ctx(ctx, v) for v in f.coeffs]

    def hom(x, z):
        return sum(cj * x ** j * z ** (f.degree - j) for j, cj in enumerate(cs))

    t = hom(a * x0 + b, c * x0 + d) / hom(x0, 1)
    mu = a * a + b * c
    ratio = t / mu ** 4
    if abs(ratio - 1) < 1e-10:
        order = 2
    elif abs(ratio + 1) < 1e-10:
        order = 4
    else:
        raise OracleError("numeric lift constant is not +-mu^4")
    return LiftCertificate(e.matrix, t, mu, order, False)


@dataclass(frozen=True)
class FullGroup:
    order: int
    reduced: ReducedAutGroup
    lifts: tuple = field(default=())

    def lift_of(self, e: GroupElement) -> LiftCertificate:
        for e2, cert in zip(self.reduced.involutions(), self.lifts):
            if e2 is e:
                return cert
        raise KeyError("not an involution of this group")

    @property
    def extra_involutions(self) -> list[GroupElement]:
        return [e for e, c in zip(self.reduced.involutions(), self.lifts) if c.is_extra]


def full_group(f: BinaryForm, config: OracleConfig = DEFAULT_CONFIG) -> FullGroup:
    """|Aut| = 2 |reduced group|, with lift certificates for every involution."""
    red = reduced_group(f, config)
    ctx = _context(red.precision)
    lifts = tuple(element_lift(f, e, ctx) for e in red.involutions())
    return FullGroup(2 * red.order, red, lifts)


def numeric_fixed_points(e: GroupElement, ctx) -> list:
    """Fixed points of a numeric involution (None is infinity)."""
    a, b, c, d = e.matrix
    eps = ctx.mpf(10) ** (-(ctx.dps // 2))
    if abs(c) < eps:
        return [b / (d - a), None]
    disc = ctx.sqrt((d - a) ** 2 + 4 * b * c)
    return [((a - d) + disc) / (2 * c), ((a - d) - disc) / (2 * c)]


__all__ = [
    "OracleConfig", "OracleError", "ProjectivePointSet", "GroupElement", "ReducedAutGroup",
    "LiftCertificate", "FullGroup", "QuadraticScalar", "roots", "reduced_group",
    "lift_order", "element_lift", "full_group", "identify_structure", "snap_gaussian",
    "snap_rational", "snap_quadratic", "numeric_fixed_points",
]
