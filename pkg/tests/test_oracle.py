import random

import mpmath
import pytest

from octavic.covariants import BinaryForm
from octavic.dihedral import CurveError, NormalForm3, branch_relations, tuple_from_even, tuple_from_normal
from octavic.exact import ExactError, ExactPoly, MoebiusMap, compose_moebius, squarefree
from octavic.oracle import (
    OracleConfig, full_group, identify_structure, lift_order, reduced_group, roots, snap_gaussian,
)
from octavic.table import ROW11_CORRECTED, TABLE1

from helpers import random_moebius

x = ExactPoly.var(0, 1)


def F(p: ExactPoly) -> BinaryForm:
    return BinaryForm.from_univariate(p, 8)


def twist(p: ExactPoly, rng) -> ExactPoly:
    while True:
        q = compose_moebius(p, random_moebius(rng), 8)
        if q.degree() in (7, 8) and squarefree(q):
            return q


class TestRoots:
    def test_eighth_roots_of_unity(self):
        pts = roots(F(x ** 8 - 1))
        assert len(pts) == 8
        for p in pts.points:
            assert abs(p ** 8 - 1) < mpmath.mpf(10) ** -30

    def test_infinity(self):
        pts = roots(F(x ** 7 - x))
        assert sum(1 for p in pts.points if p is None) == 1
        finite = [p for p in pts.points if p is not None]
        assert sum(1 for p in finite if abs(p) < 1e-30) == 1
        assert all(abs(p ** 6 - 1) < 1e-30 for p in finite if abs(p) > 0.5)

    def test_residuals(self):
        pts = roots(F(x ** 8 + 14 * x ** 4 + 1))
        for p in pts.points:
            assert abs(p ** 8 + 14 * p ** 4 + 1) < 1e-12

    def test_repeated_root_rejected(self):
        with pytest.raises(ExactError):
            roots(F((x ** 2 - 1) ** 2 * (x ** 4 + 1)))


class TestReducedGroup:
    def test_x8_minus_1(self):
        g = reduced_group(F(x ** 8 - 1))
        assert g.order == 16 and g.structure == "dihedral 8"
        assert g.all_certified

    def test_u6(self):
        g = reduced_group(F(x ** 7 - x))
        assert g.order == 12 and g.structure == "dihedral 6"

    def test_x7_minus_1(self):
        g = reduced_group(F(x ** 7 - 1))
        assert g.order == 7 and g.structure == "cyclic 7"

    def test_s4(self):
        g = reduced_group(F(ROW11_CORRECTED))
        assert g.order == 24 and g.structure == "S4"

    def test_closed(self, rng):
        for row in TABLE1:
            _, f = row.sample(rng)
            assert reduced_group(F(f)).is_closed()

    def test_structure_names(self):
        assert identify_structure([1]) == "trivial"
        assert identify_structure([1, 2, 2, 2]) == "dihedral 2"
        assert identify_structure([1, 3, 3]) == "cyclic 3"

    def test_conjugation_invariance(self, rng):
        for row in TABLE1:
            _, f = row.sample(rng)
            g = reduced_group(F(f))
            h = reduced_group(F(twist(f, rng)))
            assert g.order == h.order and g.census() == h.census()


class TestLifts:
    def test_z4_family(self):
        f = x * (x ** 2 - 1) * (x ** 4 + 3 * x ** 2 + 5)
        cert = lift_order(F(f), MoebiusMap(-1, 0, 0, 1))
        assert cert.t == -1 and cert.lift_order == 4

    def test_even_form(self):
        f = NormalForm3(1, 2, 3).octavic()
        cert = lift_order(F(f), MoebiusMap(-1, 0, 0, 1))
        assert cert.t == 1 and cert.lift_order == 2

    def test_z2z4_has_order_four_lift(self):
        g = full_group(F((x ** 4 - 1) * (x ** 4 + 3 * x ** 2 + 1)))
        assert 4 in [c.lift_order for c in g.lifts]
        assert g.order == 8

    def test_not_a_symmetry(self):
        with pytest.raises(ExactError):
            lift_order(F(x ** 8 + x + 1), MoebiusMap(-1, 0, 0, 1))

    @pytest.mark.parametrize("branch", ["plus", "minus"])
    def test_parity_matches_branch(self, branch):
        # plus branch: a1 = a3, all involutions lift to order 2 (Z2^3);
        # minus branch: (x^4 - 1)(x^4 + a x^2 + 1), one lift of order 4
        rng = random.Random(11 if branch == "plus" else 12)
        done = 0
        while done < 50:
            a = rng.randint(-30, 30)
            b = rng.randint(-30, 30)
            if branch == "plus":
                try:
                    n = NormalForm3(a, b, a)
                except CurveError:
                    continue
                f = n.octavic()
                t = tuple_from_normal(n)
            else:
                f = (x ** 4 - 1) * (x ** 4 + a * x ** 2 + 1)
                if not squarefree(f) or a == 0:
                    continue
                t = tuple_from_even(1, a, 0, -a, -1)
            g = full_group(F(f))
            if g.order != 8:
                continue          # special members with larger groups
            lifts = sorted(c.lift_order for c in g.lifts)
            rel = branch_relations(t)
            if branch == "plus":
                assert rel.plus_branch and lifts == [2, 2, 2]
            else:
                assert rel.minus_branch and 4 in lifts
            done += 1


class TestFullGroup:
    def test_examples(self):
        assert full_group(F(ROW11_CORRECTED)).order == 48
        assert full_group(F(x ** 8 + 3 * x ** 4 + 1)).order == 16
        assert full_group(F(NormalForm3(1, 2, 3).octavic())).order == 4

    def test_table_orders(self, rng):
        for row in TABLE1:
            if row.row == 11:
                continue
            for _ in range(3):
                _, f = row.sample(rng)
                assert full_group(F(f)).order == row.order, row.equation

    def test_precision_recorded(self):
        g = full_group(F(x ** 8 - 1), OracleConfig(precision=96))
        assert g.reduced.precision >= 96


def test_snap_gaussian():
    with mpmath.workprec(128):
        z = mpmath.mpc(mpmath.mpf(1) / 3, -mpmath.mpf(5) / 7)
        s = snap_gaussian(z, 10 ** 6, 1e-20)
        assert s is not None and str(s) == "1/3-5/7*i"
        assert snap_gaussian(mpmath.sqrt(2), 10 ** 6, 1e-20) is None
