import random
from fractions import Fraction

import pytest
import sympy as sp

from octavic.dihedral import DihedralTuple
from octavic.exact import ExactPoly, ExactScalar
from octavic.loci import (
    LOCUS_IDS, NotInLocusError, RIGID_CURVES, derive_locus, evaluate_relation, family,
    family_tuple, membership, relation_vanishes, rigid_points,
)
from octavic.table import LATTICE_EDGES

from locus_sampling import off_locus_samples, on_locus_samples
from sympy_bridge import to_sympy

FAMILY_IDS = [i for i in LOCUS_IDS if i not in RIGID_CURVES]
U1, U2, U3 = sp.symbols("u1 u2 u3")


def rel_sympy(r: ExactPoly):
    return to_sympy(r, [U1, U2, U3])


class TestFamilies:
    def test_z2_cubed_diagonal(self):
        st = family_tuple(family((8, 5)))
        for s in (3, -5, Fraction(1, 2)):
            t = st.at((s, 7))
            assert 2 * t.u1 == t.u3 ** 2

    def test_z2z4(self):
        st = family_tuple(family((8, 2)))
        for a in (1, 3, Fraction(-7, 2)):
            assert st.at((a,)) == DihedralTuple.U(-2 * ExactScalar(a) ** 4, 0, 2 * ExactScalar(a) ** 2)

    def test_d12_at_zero(self):
        # x(x^6 + 1) after x -> (x+1)/(x-1) is 2(x^8 + 14x^6 - 14x^2 - 1)
        fam = family((12, 4))
        t = family_tuple(fam).at((0,))
        assert t == DihedralTuple.U(-76832, 0, 392)
        coeffs = fam.branch_even_coeffs(fam.branches[0])
        assert [c.substitute(1, 0).constant_value() for c in coeffs] == [-2, 0, -28, 0, 0, 0, 28, 0, 2]

    def test_no_extra_involution(self):
        for ident in ((2, 1), (4, 1), (14, 2)):
            with pytest.raises(NotInLocusError):
                family(ident)


class TestDerived:
    def test_z2z4_relations(self):
        rels = {sp.expand(rel_sympy(r)) for r in derive_locus((8, 2)).relations()}
        assert rels == {U2, U3 ** 2 + 2 * U1}

    def test_z2_cubed_relation(self):
        rels = [rel_sympy(r) for r in derive_locus((8, 5)).relations()]
        assert rels == [2 * U1 - U3 ** 2]

    def test_d12_relations(self):
        rels = [rel_sympy(r) for r in derive_locus((12, 4)).relations()]
        r2 = 300 * U2 - 9 * U3 ** 2 + 3976 * U3 - 175616
        r1 = 9000 * U1 + 81 * U3 ** 3 - 35316 * U3 ** 2 + 3361792 * U3 - 78675968
        assert len(rels) == 2
        assert any(sp.simplify(r / r2).is_number for r in rels)
        assert any(sp.simplify(r / r1).is_number for r in rels)
        assert sp.expand(r2 - (300 * U2 - (U3 - 392) * (9 * U3 - 448))) == 0

    def test_d12_relations_by_sympy_elimination(self):
        # eliminate a from the parametrization independently
        a = sp.Symbol("a")
        u3 = (32 * a ** 2 - 1568) / (a ** 2 - 4)
        u2 = (192 * a ** 4 + 14784 * a ** 2) / (a ** 2 - 4) ** 2
        u1 = (512 * a ** 6 + 209920 * a ** 4 + 4641280 * a ** 2 + 4917248) / (a ** 2 - 4) ** 3
        st = family_tuple(family((12, 4)))
        for v in (1, 3, Fraction(5, 7)):
            t = st.at((v,))
            got = [sp.Rational(str(t.u1)), sp.Rational(str(t.u2)), sp.Rational(str(t.u3))]
            assert got == [e.subs(a, sp.Rational(str(v))) for e in (u1, u2, u3)]
        # u3 is a Moebius function of b = a^2; invert it and substitute
        b = (4 * U3 - 1568) / (U3 - 32)
        assert sp.simplify(u3.subs(a ** 2, b) - U3) == 0
        assert sp.simplify(u2.subs(a ** 2, b) - (U3 - 392) * (9 * U3 - 448) / 300) == 0
        u1_of_u3 = -(81 * U3 ** 3 - 35316 * U3 ** 2 + 3361792 * U3 - 78675968) / 9000
        assert sp.simplify(u1.subs(a ** 2, b) - u1_of_u3) == 0

    def test_z2d8_branches(self):
        L = derive_locus((16, 11))
        shapes = sorted(b.shape for b in L.branches)
        assert shapes == ["U", "W"]
        u = next(b for b in L.branches if b.shape == "U")
        got = {sp.expand(rel_sympy(r)) for r in u.relations}
        assert got == {2 * U1 - U3 ** 2, U2 ** 2 - 28 * U2 * U3 + 196 * U3 ** 2 - 2 * U3 ** 3}

    @pytest.mark.parametrize("identity", FAMILY_IDS)
    def test_soundness(self, identity):
        L = derive_locus(identity)
        for b in L.branches:
            assert b.sound
            for r in b.relations:
                assert relation_vanishes(r, b.parametrization)


class TestMembership:
    def test_examples(self):
        assert membership(DihedralTuple.U(2, 5, 2), derive_locus((8, 5)))
        assert membership(DihedralTuple.W(196), derive_locus((48, 48)))
        for ident in LOCUS_IDS:
            if ident != (4, 2):
                assert not membership(DihedralTuple.U(82, 20, 6), derive_locus(ident))

    def test_printed_special_triple(self):
        s4 = DihedralTuple.U(Fraction(8192, 81), Fraction(-1280, 27), Fraction(128, 9))
        assert 2 * s4.u1 == s4.u3 ** 2
        assert membership(s4, derive_locus((8, 5)))

    @pytest.mark.parametrize("identity", FAMILY_IDS)
    def test_on_locus(self, identity):
        rng = random.Random(hash(identity) & 0xffff)
        L = derive_locus(identity)
        for t in on_locus_samples(identity, 50, rng):
            assert membership(t, L), t

    @pytest.mark.parametrize("identity", FAMILY_IDS)
    def test_off_locus(self, identity):
        rng = random.Random(1 + (hash(identity) & 0xffff))
        L = derive_locus(identity)
        for t in off_locus_samples(identity, 50, rng):
            assert not membership(t, L), t

    @pytest.mark.parametrize("identity", [i for i in LOCUS_IDS if i in RIGID_CURVES])
    def test_rigid(self, identity):
        L = derive_locus(identity)
        assert L.rigid and L.special_points
        for t in L.special_points:
            assert membership(t, L)
        rng = random.Random(3)
        for _ in range(50):
            t = DihedralTuple.U(*(rng.randint(-300, 300) for _ in range(3)))
            assert not membership(t, L)

    def test_excluded_points(self):
        L = derive_locus((8, 2))
        assert not membership(DihedralTuple.U(-32, 0, 8), L)    # a = 2 is singular
        assert not membership(DihedralTuple.U(0, 0, 0), L)


class TestLattice:
    def test_rigid_points_lie_on_a_sublocus(self):
        for ident in RIGID_CURVES:
            below = [a for a, b in LATTICE_EDGES if b == ident and a in FAMILY_IDS]
            assert below
            for t in rigid_points(ident):
                ok = False
                for a in below:
                    for br in derive_locus(a).branches:
                        if br.shape == t.shape and all(not evaluate_relation(r, t) for r in br.relations):
                            ok = True
                assert ok, (ident, t)

    def test_family_tuples_lie_on_parent(self):
        # every (16, 11) U-branch tuple also satisfies the (8, 5) relation
        rng = random.Random(5)
        rel = derive_locus((8, 5)).relations()[0]
        for t in on_locus_samples((16, 11), 20, rng):
            if t.shape == "U":
                assert not evaluate_relation(rel, t)
