"""Dihedral tuples attached to every extra involution of a curve.

An involution of the branch set whose lift has order 2 is conjugated to
x -> -x by a Moebius map sending its fixed points to 0 and infinity; the
conjugated octavic is even and ``tuple_from_even`` applies.  When the fixed
points lie in Q(i) this is exact; otherwise it runs at working precision and
the tuple entries are snapped to Gaussian rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .covariants import BinaryForm
from .dihedral import DihedralTuple, tuple_from_even, tuples_equal
from .exact import ExactError, MoebiusMap, ZERO, form_substitute
from .oracle import (
    DEFAULT_CONFIG, FullGroup, GroupElement, OracleConfig, OracleError, _context, _to_ctx,
    full_group, numeric_fixed_points, snap_gaussian,
)


@dataclass(frozen=True)
class TupleRecord:
    tuple: DihedralTuple
    involution: GroupElement
    exact: bool


def conjugator(p, q) -> MoebiusMap:
    """sigma with sigma(0) = p and sigma(inf) = q (None is infinity)."""
    if p is None:
        p, q = q, p
    if q is None:
        return MoebiusMap(1, p, 0, 1)
    return MoebiusMap(q, p, 1, 1)


def even_form_exact(f: BinaryForm, gamma: MoebiusMap) -> BinaryForm | None:
    """f o sigma for an involution with fixed points in Q(i), else None."""
    fps = gamma.fixed_points()
    if fps is None:
        return None
    g = f.substitute(conjugator(*fps))
    if any(g.coeffs[k] for k in (1, 3, 5, 7)):
        raise ExactError("conjugated form is not even; involution lifts with order 4")
    return g


class _SnapFailure(OracleError):
    def __init__(self, msg, values=""):
        super().__init__(msg)
        self.values = values


def _numeric_tuple(f: BinaryForm, e: GroupElement, ctx, config: OracleConfig) -> DihedralTuple:
    p, q = numeric_fixed_points(e, ctx)
    if q is None:
        sig = (ctx.mpc(1), p, ctx.mpc(0), ctx.mpc(1))
    else:
        sig = (q, p, ctx.mpc(1), ctx.mpc(1))
    cs = [_to_ctx(ctx, c) for c in f.coeffs]
    g = form_substitute(cs, 8, *sig, zero=ctx.mpc(0), one=ctx.mpc(1))
    big = max(abs(c) for c in g)
    g = [c / big for c in g]
    eps = ctx.mpf(10) ** (-(ctx.dps // 2))
    if any(abs(g[k]) > eps for k in (1, 3, 5, 7)):
        raise OracleError("numerically conjugated form is not even")
    c4, c3, c2, c1, c0 = g[8], g[6], g[4], g[2], g[0]

    def z(x):
        return abs(x) < eps

    # tuple entries have far larger denominators than group elements; the
    # bound and tolerance scale with the working precision so that a chance
    # snap has probability about 10^(-dps/4)
    bound = max(config.snap_denominator, 10 ** (ctx.dps // 4))
    tol = ctx.mpf(10) ** (-(3 * ctx.dps) // 4)

    if z(c1) and z(c3):
        shape, vals = "W", [c2 ** 2 / (c0 * c4)]
    else:
        u3 = 2 * c1 * c3 / (c0 * c4)
        u1 = c1 ** 4 / (c0 ** 3 * c4) + c3 ** 4 / (c0 * c4 ** 3)
        s = c1 ** 2 * c4 + c3 ** 2 * c0
        if abs(s) < eps * (abs(c1 ** 2 * c4) + abs(c3 ** 2 * c0)):
            shape, vals = ("U", [u1, None, u3]) if z(c2) else ("UW", [u1, c2 ** 2 / (c0 * c4), u3])
        else:
            shape, vals = "U", [u1, c2 * s / (c0 ** 2 * c4 ** 2), u3]
    snapped = [ZERO if v is None else snap_gaussian(v, bound, tol * max(1, abs(v))) for v in vals]
    if any(v is None for v in snapped):
        text = f"{shape}(" + ", ".join("0" if v is None else ctx.nstr(v, 15) for v in vals) + ")"
        raise _SnapFailure(f"tuple {text} does not snap to Q(i)", text)
    return DihedralTuple(shape, tuple(snapped), flagged=(shape == "U" and vals[1] is None))


@dataclass(frozen=True)
class TupleSet:
    """Tuples in Q(i), plus numeric values of tuples that are not in Q(i)."""

    records: tuple
    irrational: tuple = ()
    precision: int = 0


def tuple_set(f: BinaryForm, group: FullGroup | None = None,
              config: OracleConfig = DEFAULT_CONFIG) -> TupleSet:
    """One record per distinct tuple over the extra involutions of ``f``.

    A numerically computed tuple that does not snap is retried once at
    doubled precision; if it still does not snap it is reported as
    irrational (an involution not defined over Q(i) can carry a tuple in a
    proper extension).
    """
    group = group or full_group(f, config)
    recs, bad = _records(f, group, config)
    if bad and config.max_retries > 0:
        config = replace(config, precision=2 * group.reduced.precision)
        group = full_group(f, config)
        recs, bad = _records(f, group, config)
    return TupleSet(tuple(recs), tuple(bad), group.reduced.precision)


def tuple_records(f: BinaryForm, group: FullGroup | None = None,
                  config: OracleConfig = DEFAULT_CONFIG) -> list[TupleRecord]:
    return list(tuple_set(f, group, config).records)


def _records(f: BinaryForm, group: FullGroup, config: OracleConfig):
    ctx = _context(group.reduced.precision)
    out: list[TupleRecord] = []
    bad: list[str] = []
    for e in group.extra_involutions:
        t, exact = None, False
        if e.exact is not None:
            g = even_form_exact(f, e.exact)
            if g is not None:
                c = g.coeffs
                t, exact = tuple_from_even(c[8], c[6], c[4], c[2], c[0]), True
        if t is None:
            try:
                t = _numeric_tuple(f, e, ctx, config)
            except _SnapFailure as err:
                if err.values not in bad:
                    bad.append(err.values)
                continue
        for i, r in enumerate(out):
            if tuples_equal(r.tuple, t):
                if exact and not r.exact:
                    out[i] = TupleRecord(t, e, True)
                break
        else:
            out.append(TupleRecord(t, e, exact))
    return out, bad


def all_tuples(f: BinaryForm, group: FullGroup | None = None,
               config: OracleConfig = DEFAULT_CONFIG) -> list[DihedralTuple]:
    return [r.tuple for r in tuple_records(f, group, config)]


def tuple_sort_key(t: DihedralTuple):
    return (t.shape, tuple((v.re, v.im) for v in t.values))


__all__ = ["TupleRecord", "TupleSet", "tuple_set", "conjugator", "even_form_exact", "tuple_records", "all_tuples",
           "tuple_sort_key"]
