import random

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from octavic.covariants import BinaryForm
from octavic.dihedral import (
    CurveError, DihedralTuple, Genus2DihedralPair, HyperellipticCurve, NormalForm3, ShapeError,
    classify_genus2, curve_to_form, even_coefficients, subcover_equations, branch_relations,
    tuple_from_even, tuple_from_normal, tuples_equal,
)
from octavic.exact import ExactError, ExactPoly, ExactScalar

from helpers import gaussian

I = ExactScalar(0, 1)
x = ExactPoly.var(0, 1)


def nf_or_none(a1, a2, a3):
    try:
        return NormalForm3(a1, a2, a3)
    except CurveError:
        return None


normal_forms = st.builds(nf_or_none, gaussian(), gaussian(), gaussian()).filter(lambda n: n is not None)


class TestCurve:
    def test_to_form(self):
        assert curve_to_form(HyperellipticCurve(x ** 7 - x)) == BinaryForm([0, -1, 0, 0, 0, 0, 0, 1, 0])
        assert curve_to_form(HyperellipticCurve(x ** 8 - 1)).coeffs[0] == -1
        f = curve_to_form(HyperellipticCurve(x ** 8 + 14 * x ** 4 + 1))
        assert f.coeffs[4] == 14 and f.coeffs[8] == 1

    def test_rejects(self):
        with pytest.raises(CurveError):
            HyperellipticCurve(x ** 6 + 1)
        with pytest.raises(CurveError):
            HyperellipticCurve((x ** 2 - 1) ** 2 * (x ** 4 + 1))


class TestTuples:
    def test_from_normal(self):
        assert tuple_from_normal(NormalForm3(1, 2, 3)) == DihedralTuple.U(82, 20, 6)
        assert tuple_from_normal(NormalForm3(0, 14, 0)) == DihedralTuple.W(196)
        assert tuple_from_normal(NormalForm3(0, 0, 0)) == DihedralTuple.W(0)

    def test_uw_and_flagged(self):
        t = tuple_from_normal(NormalForm3(1, 3, I))
        assert t.shape == "UW" and t.w == 9
        f = tuple_from_normal(NormalForm3(1, 0, I, check=False))
        assert f.shape == "U" and f.flagged and f.u2 == 0

    def test_from_even(self):
        # (x^4 - 1)(x^4 + x^2 + 1)
        assert tuple_from_even(1, 1, 0, -1, -1) == DihedralTuple.U(-2, 0, 2)
        assert tuple_from_even(2, 2, 5, 2, 2) == DihedralTuple.U(2, 5, 2)

    def test_u_accessors(self):
        with pytest.raises(ShapeError):
            DihedralTuple.W(3).u1
        with pytest.raises(ShapeError):
            DihedralTuple("V", (1,))

    def test_equal(self):
        assert tuples_equal(DihedralTuple.U(82, 20, 6), DihedralTuple.U(82, 20, 6))
        assert not tuples_equal(DihedralTuple.U(0, 0, 0), DihedralTuple.W(0))
        assert tuples_equal(tuple_from_normal(NormalForm3(1, 2, 3)), tuple_from_normal(NormalForm3(3, 2, 1)))

    def test_even_coefficients(self):
        assert even_coefficients(x ** 8 + 3 * x ** 2 + 1) == (1, 0, 0, 3, 1)
        assert even_coefficients(x ** 8 + x + 1) is None
        assert even_coefficients(x ** 8 + x ** 2) is None
        with pytest.raises(ExactError):
            tuple_from_even(0, 1, 1, 1, 1)


class TestProperties:
    @given(normal_forms)
    def test_twist(self, n):
        for eps in (ExactScalar(1), ExactScalar(-1), I, -I):
            m = nf_or_none(eps * n.a1, eps ** 2 * n.a2, eps ** 3 * n.a3)
            assert m is not None
            assert tuple_from_normal(m) == tuple_from_normal(n)

    @given(normal_forms)
    def test_swap(self, n):
        assert tuple_from_normal(NormalForm3(n.a3, n.a2, n.a1)) == tuple_from_normal(n)

    @given(normal_forms)
    def test_even_agrees_with_normal(self, n):
        assert tuple_from_even(1, n.a3, n.a2, n.a1, 1) == tuple_from_normal(n)

    @given(st.tuples(*[gaussian()] * 5), gaussian(allow_zero=False), gaussian(allow_zero=False))
    def test_scaling_free(self, cs, k, lam):
        c4, c3, c2, c1, c0 = cs
        assume(c4 and c0)
        t = tuple_from_even(*cs)
        assert tuple_from_even(*(k * c for c in cs)) == t
        scaled = [c * lam ** (2 * i) for c, i in zip(cs, (4, 3, 2, 1, 0))]
        assert tuple_from_even(*scaled) == t

    def test_m_identity(self):
        a1, a2, a3 = sp.symbols("a1 a2 a3")
        u1, u3 = a1 ** 4 + a3 ** 4, 2 * a1 * a3
        assert sp.expand(2 * u1 + u3 ** 2 - 2 * (a1 ** 2 + a3 ** 2) ** 2) == 0
        # the D4 condition factors into the two branches
        assert sp.expand(4 * u1 ** 2 - u3 ** 4 - (2 * u1 - u3 ** 2) * (2 * u1 + u3 ** 2)) == 0

    @given(normal_forms)
    def test_minus_branch_forces_u2_zero(self, n):
        t = tuple_from_normal(n)
        if t.shape == "U" and branch_relations(t).minus_branch:
            assert t.u2 == 0


class TestBranchRelations:
    def test_examples(self):
        assert branch_relations(tuple_from_normal(NormalForm3(1, 0, 1, check=False))).plus_branch
        r = branch_relations(DihedralTuple.U(-2, 0, 2))
        assert r.minus_branch and r.d4_member and not r.plus_branch
        r = branch_relations(DihedralTuple.U(82, 20, 6))
        assert not (r.d4_member or r.plus_branch or r.minus_branch)

    def test_w_rejected(self):
        with pytest.raises(ShapeError):
            branch_relations(DihedralTuple.W(1))


class TestSubcovers:
    def test_examples(self):
        e, g = subcover_equations(NormalForm3(1, 2, 3))
        assert e == x ** 4 + 3 * x ** 3 + 2 * x ** 2 + x + 1
        assert g == x ** 5 + 3 * x ** 4 + 2 * x ** 3 + x ** 2 + x
        e, g = subcover_equations(NormalForm3(0, 0, 0))
        assert (e, g) == (x ** 4 + 1, x ** 5 + x)

    @given(normal_forms)
    def test_degrees(self, n):
        e, g = subcover_equations(n)
        assert (e.degree(), g.degree()) == (4, 5)

    @given(normal_forms)
    def test_quotient_maps(self, n):
        # C1 is the quotient by x -> -x: its quartic pulled back by x -> x^2
        e, g = subcover_equations(n)
        assert e.substitute(0, x ** 2) == n.octavic()
        assert g == e * x


class TestGenus2:
    def test_printed_points(self):
        assert classify_genus2(Genus2DihedralPair(-250, 50)) == "GL2(3)"
        assert classify_genus2(Genus2DihedralPair(6750, 450)) == "Z3:D8"
        # v = 10 on v^2 - 220 v - 16 u + 4500 = 0 gives u = 150
        assert classify_genus2(Genus2DihedralPair(150, 10)) == "D12"
        # v = 8 on 2 u^2 = v^3 gives u = 16
        assert classify_genus2(Genus2DihedralPair(16, 8)) == "D8"

    def test_exclusions(self):
        # v = 18 is an exceptional value on the D12 relation
        u = (18 ** 2 - 220 * 18 + 4500) // 16
        assert classify_genus2(Genus2DihedralPair(u, 18)) == "excluded"

    def test_random_v4(self):
        rng = random.Random(7)
        n = 0
        while n < 20:
            u, v = rng.randint(-500, 500), rng.randint(-500, 500)
            if v * v - 220 * v - 16 * u + 4500 == 0 or 2 * u * u == v ** 3 or (u, v) in ((0, 0),):
                continue
            assert classify_genus2(Genus2DihedralPair(u, v)) == "V4"
            n += 1

    def test_from_normal(self):
        p = Genus2DihedralPair.from_normal(1, 2)
        assert (p.u_frak, p.v_frak) == (9, 4)
