from dataclasses import replace
from math import comb, factorial

import pytest
import sympy as sp
from hypothesis import given

from octavic.covariants import (
    BinaryForm, absolute_invariants, closed_form_numerators, covariant_chain, form_discriminant,
    j_closed_forms, j_invariants, same_weighted_point, transvect,
)
from octavic.dihedral import DihedralTuple, NormalForm3, curve_to_form, tuple_from_normal
from octavic.exact import ExactError, ExactPoly, ExactScalar
from octavic.table import TABLE1

from helpers import moebius, octavics, random_moebius, random_octavic
from sympy_bridge import scalar_to_sympy

SX, SZ = sp.symbols("X Z")


def form(*cs):
    return BinaryForm(cs)


def sym_form(f: BinaryForm):
    e = sum(scalar_to_sympy(c) * SX ** j * SZ ** (f.degree - j) for j, c in enumerate(f.coeffs))
    return sp.expand(e), f.degree


def sym_transvect(f, g, r):
    """Independent transvectant on (sympy expression, degree) pairs."""
    (fe, n), (ge, m) = f, g
    acc = 0
    for k in range(r + 1):
        acc += (-1) ** k * comb(r, k) * sp.diff(fe, SX, r - k, SZ, k) * sp.diff(ge, SX, k, SZ, r - k)
    c = sp.Rational(factorial(n - r) * factorial(m - r), factorial(n) * factorial(m))
    return sp.expand(c * acc), n + m - 2 * r


def sym_j(f):
    g = sym_transvect(f, f, 4)
    k = sym_transvect(f, f, 6)
    h = sym_transvect(k, k, 2)
    m = sym_transvect(f, k, 4)
    out = [sym_transvect(f, f, 8), sym_transvect(f, g, 8), sym_transvect(k, k, 4),
           sym_transvect(m, k, 4), sym_transvect(k, h, 4), sym_transvect(m, h, 4)]
    return [e for e, _ in out]


X8Z8 = form(1, 0, 0, 0, 0, 0, 0, 0, 1)


class TestTransvect:
    def test_examples(self):
        f = form(1, 2, 0, -1)
        assert transvect(f, f, 1).is_zero()
        g = form(3, 1)
        assert transvect(f, g, 0) == f * g
        q = form(1, 0, 1)
        assert transvect(q, q, 2).constant() == 2

    @given(octavics(), octavics())
    def test_antisymmetry(self, a, b):
        f, g = BinaryForm.from_univariate(a, 8), BinaryForm.from_univariate(b, 8)
        for r in (1, 2, 5):
            sign = -1 if r % 2 else 1
            assert transvect(f, g, r) == transvect(g, f, r).scale(sign)

    @given(octavics(), octavics(), octavics())
    def test_bilinear(self, a, b, c):
        f, g, h = (BinaryForm.from_univariate(p, 8) for p in (a, b, c))
        assert transvect(f + g.scale(3), h, 4) == transvect(f, h, 4) + transvect(g, h, 4).scale(3)

    def test_matches_sympy(self, rng):
        f = BinaryForm.from_univariate(random_octavic(rng), 8)
        g = BinaryForm(list(range(1, 6)))
        for r in (0, 2, 4):
            assert sym_form(transvect(f, g, r)) == sym_transvect(sym_form(f), sym_form(g), r)

    def test_range(self):
        with pytest.raises(ExactError):
            transvect(form(1, 1), form(1, 1), 2)


class TestChain:
    def test_orders(self):
        chain = covariant_chain(X8Z8)
        assert chain["g"].degree == 8
        assert chain["h"].degree == 4
        assert chain["k"].degree == 4

    def test_k_of_x8_plus_z8(self):
        k = covariant_chain(X8Z8)["k"]
        assert sym_form(k) == sym_transvect(sym_form(X8Z8), sym_form(X8Z8), 6)


class TestInvariants:
    def test_j2_x8_plus_z8(self):
        assert j_invariants(X8Z8).J2 == 2

    def test_j3_x8_plus_z8(self):
        v = j_invariants(X8Z8)
        assert scalar_to_sympy(v.J3) == sym_j(sym_form(X8Z8))[1]

    def test_all_match_sympy(self, rng):
        for _ in range(2):
            f = BinaryForm.from_univariate(random_octavic(rng), 8)
            got = [scalar_to_sympy(v) for v in list(j_invariants(f).as_dict().values())[:6]]
            assert got == sym_j(sym_form(f))

    def test_odd_vanish_on_x8_minus_z8(self):
        v = j_invariants(form(-1, 0, 0, 0, 0, 0, 0, 0, 1))
        assert not v.J3 and not v.J5 and not v.J7

    @given(octavics(), moebius())
    def test_covariance(self, p, m):
        f = BinaryForm.from_univariate(p, 8)
        v, w = j_invariants(f), j_invariants(f.substitute(m))
        det = m.det()
        for name, k in v.WEIGHTS.items():
            assert w.as_dict()[name] == det ** (4 * k) * v.as_dict()[name]

    @given(octavics())
    def test_swap(self, p):
        f = BinaryForm.from_univariate(p, 8)
        assert j_invariants(f) == j_invariants(f.swap())

    def test_j14_is_discriminant(self):
        x = sp.Symbol("x")
        f = curve_to_form(NormalForm3(3, 4, -8).curve())
        want = sp.discriminant(x ** 8 - 8 * x ** 6 + 4 * x ** 4 + 3 * x ** 2 + 1, x)
        assert scalar_to_sympy(j_invariants(f).J14) == want

    def test_j14_repeated_root(self):
        assert form_discriminant(BinaryForm.from_univariate(
            ExactPoly.from_coeffs([1, -2, 1]) * ExactPoly.from_coeffs([1, 0, 0, 0, 0, 0, 1]), 8)) == 0
        # double root at infinity
        assert form_discriminant(form(1, 0, 0, 0, 0, 0, 1, 0, 0)) == 0

    def test_j14_nonzero_on_table_samples(self, rng):
        for row in TABLE1:
            _, f = row.sample(rng)
            assert form_discriminant(BinaryForm.from_univariate(f, 8))

    def test_degree_check(self):
        with pytest.raises(ExactError):
            j_invariants(form(1, 0, 1))


class TestAbsolute:
    def test_twist_invariance(self, rng):
        for _ in range(3):
            f = BinaryForm.from_univariate(random_octavic(rng), 8)
            m = random_moebius(rng)
            assert absolute_invariants(j_invariants(f)) == absolute_invariants(j_invariants(f.substitute(m)))

    @given(octavics())
    def test_scaling(self, p):
        f = BinaryForm.from_univariate(p, 8)
        v = j_invariants(f)
        if not v.J2:
            return
        assert absolute_invariants(v) == absolute_invariants(j_invariants(f.scale(ExactScalar(2, 1))))

    def test_x8_minus_z8(self):
        a = absolute_invariants(j_invariants(form(-1, 0, 0, 0, 0, 0, 0, 0, 1)))
        assert not a.i1 and not a.i3 and not a.i5

    def test_j2_zero_rejected(self):
        with pytest.raises(ExactError):
            absolute_invariants(replace(j_invariants(X8Z8), J2=ExactScalar(0)))

    @given(octavics(), moebius())
    def test_same_weighted_point(self, p, m):
        f = BinaryForm.from_univariate(p, 8)
        assert same_weighted_point(j_invariants(f), j_invariants(f.substitute(m)))


class TestClosedForms:
    def test_j2_simplifies(self):
        # the J2 closed form equals 280 + 5 u3 + 2 u2^2 / M identically
        u1, u2, u3 = sp.symbols("u1 u2 u3")
        _, num, mpow, _ = closed_form_numerators(u1, u2, u3)["J2"]
        M = 2 * u1 + u3 ** 2
        assert mpow == 1
        assert sp.expand(num - ((280 + 5 * u3) * M + 2 * u2 ** 2)) == 0

    def test_j2_at_one_two_three(self):
        t = tuple_from_normal(NormalForm3(1, 2, 3))
        assert t.M == 200
        assert j_closed_forms(t, 2).J2 == 280 + 30 + ExactScalar(800) / 200

    def test_m_zero_rejected(self):
        with pytest.raises(ExactError):
            j_closed_forms(DihedralTuple.U(-2, 0, 2), 1)
