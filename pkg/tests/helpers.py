"""Random inputs and hypothesis strategies shared by the tests."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from octavic.exact import ExactPoly, ExactScalar, MoebiusMap, squarefree


def q(x) -> ExactScalar:
    return ExactScalar(Fraction(x))


small_int = st.integers(min_value=-6, max_value=6)
nonzero_int = small_int.filter(bool)


@st.composite
def gaussian(draw, allow_zero=True):
    re = Fraction(draw(small_int), draw(st.integers(1, 4)))
    im = Fraction(draw(small_int), draw(st.integers(1, 4)))
    z = ExactScalar(re, im)
    if not allow_zero and not z:
        z = ExactScalar(1)
    return z


@st.composite
def polys(draw, max_degree=4):
    n = draw(st.integers(0, max_degree))
    return ExactPoly.from_coeffs([draw(gaussian()) for _ in range(n + 1)])


@st.composite
def moebius(draw):
    while True:
        a, b, c, d = (draw(gaussian()) for _ in range(4))
        if a * d - b * c:
            return MoebiusMap(a, b, c, d)


@st.composite
def octavics(draw):
    """Squarefree degree-8 polynomials with small Gaussian-integer coefficients."""
    cs = [ExactScalar(draw(small_int), draw(st.integers(-2, 2))) for _ in range(8)]
    cs.append(ExactScalar(draw(nonzero_int)))
    f = ExactPoly.from_coeffs(cs)
    if not squarefree(f):
        f = f + ExactPoly.from_coeffs([1, 1])
    return f


def random_gaussian(rng: random.Random, lo=-5, hi=5, den=3) -> ExactScalar:
    return ExactScalar(Fraction(rng.randint(lo, hi), rng.randint(1, den)),
                       Fraction(rng.randint(lo, hi), rng.randint(1, den)))


def random_moebius(rng: random.Random, lo=-3, hi=3) -> MoebiusMap:
    while True:
        a, b, c, d = (ExactScalar(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(4))
        if a * d - b * c:
            return MoebiusMap(a, b, c, d)


def random_octavic(rng: random.Random) -> ExactPoly:
    while True:
        cs = [ExactScalar(rng.randint(-5, 5), rng.randint(-2, 2)) for _ in range(8)]
        cs.append(ExactScalar(rng.choice([-3, -2, -1, 1, 2, 3])))
        f = ExactPoly.from_coeffs(cs)
        if squarefree(f):
            return f
