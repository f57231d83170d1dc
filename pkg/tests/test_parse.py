import random

import pytest
from hypothesis import given

from octavic.dihedral import CurveError, DihedralTuple
from octavic.exact import ExactPoly, ExactScalar
from octavic.parse import ParseError, parse_curve, parse_polynomial, parse_tuple

from helpers import polys, random_gaussian

x = ExactPoly.var(0, 1)
I = ExactScalar(0, 1)


class TestExamples:
    def test_octavic(self):
        c = parse_curve("x^8 + 14*x^4 + 1")
        assert c.poly.coeffs()[4] == 14 and c.poly.degree() == 8

    def test_degree_seven(self):
        assert parse_curve("x^7 - 1").poly == x ** 7 - 1

    def test_syntax_offset(self):
        with pytest.raises(ParseError) as e:
            parse_polynomial("x^8 + + 1")
        assert e.value.offset == 6

    @pytest.mark.parametrize("text, want", [
        ("3/2", ExactPoly.const(ExactScalar(3) / 2)),
        ("2+3i", ExactPoly.const(ExactScalar(2, 3))),
        ("(2+3i)x^2", ExactScalar(2, 3) * x ** 2),
        ("x**2*(x-1)", x ** 3 - x ** 2),
        ("-(x+i)^2", -(x + I) ** 2),
        ("2x(x - 1)", 2 * x ** 2 - 2 * x),
        ("x/4", x * (ExactScalar(1) / 4)),
    ])
    def test_grammar(self, text, want):
        assert parse_polynomial(text) == want

    @pytest.mark.parametrize("text", ["x^", "(x+1", "x/x", "x/0", "+x", "x $ 1", "x^-2", ""])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_polynomial(text)

    def test_curve_checks(self):
        with pytest.raises(CurveError):
            parse_curve("x^6 + 1")
        with pytest.raises(CurveError):
            parse_curve("(x^2 - 1)^2 (x^4 + 1)")
        assert parse_curve("x^6 + 1", check=False).poly.degree() == 6

    def test_tuples(self):
        assert parse_tuple("U(2,5,2)") == DihedralTuple.U(2, 5, 2)
        assert parse_tuple(" W( 9 ) ") == DihedralTuple.W(9)
        assert parse_tuple("U(1/3, -2i, 0)") == DihedralTuple.U(ExactScalar(1) / 3, -2 * I, 0)
        for bad in ("V(1)", "U(1,2)", "U(x,1,1)", "U(1,,2)"):
            with pytest.raises(ParseError):
                parse_tuple(bad)


def corpus(n=200, seed=13):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        deg = rng.randint(0, 9)
        p = ExactPoly.from_coeffs([random_gaussian(rng) if rng.random() < 0.7 else ExactScalar(0)
                                   for _ in range(deg + 1)])
        out.append(p)
    return out


def test_round_trip_corpus():
    for p in corpus():
        s = str(p)
        q = parse_polynomial(s)
        assert q == p, s
        assert str(q) == s


@given(polys(8))
def test_round_trip_property(p):
    assert parse_polynomial(str(p)) == p
