"""Samplers for on-locus and rejection-sampled off-locus dihedral tuples."""
from fractions import Fraction

import sympy as sp

from octavic.dihedral import DihedralTuple, tuples_equal
from octavic.exact import ExactError
from octavic.loci import derive_locus, family

from sympy_bridge import to_sympy


def on_locus_samples(identity, n, rng):
    fam = family(identity)
    L = derive_locus(identity)
    bad = set(fam.singular) | set(fam.degenerate)
    out = []
    while len(out) < n:
        vals = tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 5)) for _ in fam.params)
        if vals in bad or any(v == 0 for v in vals):
            continue
        b = rng.choice(L.branches)
        try:
            t = b.parametrization.at(vals)
        except (ZeroDivisionError, ExactError):
            continue
        if any(tuples_equal(t, s) for s in L.excluded):
            continue
        out.append(t)
    return out


def hits_family(t: DihedralTuple, identity) -> bool:
    """Independent rejection test: solve the family's u3 entry for the parameter."""
    L = derive_locus(identity)
    for b in L.branches:
        if b.shape != t.shape:
            continue
        st = b.parametrization
        if len(st.params) != 1:
            return True          # two-parameter family: rely on the caller's sampling
        a = sp.Symbol("a")
        k = 0 if t.shape == "W" else 2
        e = st.entries[k]
        eq = sp.Poly(sp.numer(sp.together(_entry_sympy(e, a) - sp.Rational(str(t.values[k])))), a)
        if eq.degree() < 1:
            continue
        for root in sp.roots(eq):
            if root.is_rational:
                try:
                    if tuples_equal(st.at((Fraction(int(root.p), int(root.q)),)), t):
                        return True
                except (ZeroDivisionError, ExactError):
                    pass
    return False


def _entry_sympy(e, a):
    syms = [sp.Symbol(f"_v{i}") for i in range(e.num.nvars)]
    sub = {syms[-1]: a}
    num = to_sympy(e.num, syms).subs(sub)
    den = to_sympy(e.den, syms).subs(sub)
    return num / den


def off_locus_samples(identity, n, rng):
    out = []
    shapes = {b.shape for b in derive_locus(identity).branches}
    while len(out) < n:
        vals = [rng.randint(-300, 300) for _ in range(3)]
        t = DihedralTuple.U(*vals)
        if "U" not in shapes:
            out.append(t)
            continue
        if identity == (4, 2):
            t = DihedralTuple.W(vals[0])     # the ambient locus has only U tuples
            out.append(t)
            continue
        if identity == (8, 5):
            if 2 * vals[0] == vals[2] ** 2:
                continue
        elif hits_family(t, identity):
            continue
        out.append(t)
    return out
