"""Exact arithmetic over the Gaussian rationals Q(i).

Everything downstream (covariants, dihedral invariants, loci, models) is
computed with the types defined here, so equality is structural and no
floating point ever enters an exact result.

``ExactScalar``
    a + b*i with a, b rational (backed by ``gmpy2.mpq``).
``ExactPoly``
    dense polynomial in ``nvars`` variables with ``ExactScalar`` coefficients,
    stored as a map from exponent tuples to nonzero coefficients.
``MoebiusMap``
    x -> (a*x + b)/(c*x + d), canonically scaled so that the first nonzero
    entry of (a, b, c, d) is 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import gmpy2
from gmpy2 import mpq, mpz


class ExactError(ValueError):
    """Raised on malformed exact-algebra input."""


def _to_mpq(x) -> mpq:
    if isinstance(x, type(mpq())):
        return x
    if isinstance(x, Fraction):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, (int, type(mpz()))):
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class ExactScalar:
    """Gaussian rational ``re + im*i``; immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_mpq(re))
        object.__setattr__(self, "im", _to_mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # fields named as in the data model
    @property
    def real_num(self):
        return int(self.re.numerator)

    @property
    def real_den(self):
        return int(self.re.denominator)

    @property
    def imag_num(self):
        return int(self.im.numerator)

    @property
    def imag_den(self):
        return int(self.im.denominator)

    @classmethod
    def coerce(cls, x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, type(mpq()), type(mpz()))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            if isinstance(other, ExactPoly):
                return NotImplemented
            try:
                other = ExactScalar(other)
            except TypeError:
                return NotImplemented
        return ExactScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            if isinstance(other, ExactPoly):
                return NotImplemented
            try:
                other = ExactScalar(other)
            except TypeError:
                return NotImplemented
        return ExactScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactScalar):
            if isinstance(other, ExactPoly):
                return NotImplemented
            try:
                other = ExactScalar(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return ExactScalar(a * c, 0)
        return ExactScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def inverse(self) -> "ExactScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return ExactScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, ExactScalar):
            if isinstance(other, ExactPoly):
                return NotImplemented
            try:
                other = ExactScalar(other)
            except TypeError:
                return NotImplemented
        if other.im == 0:
            if other.re == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return ExactScalar(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactScalar(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> "ExactScalar | None":
        """Exact square root in Q(i), or None when it does not exist."""
        a, b = self.re, self.im
        if b == 0:
            if a >= 0:
                r = _rational_sqrt(a)
                return None if r is None else ExactScalar(r, 0)
            r = _rational_sqrt(-a)
            return None if r is None else ExactScalar(0, r)
        modulus = _rational_sqrt(a * a + b * b)
        if modulus is None:
            return None
        x = _rational_sqrt((a + modulus) / 2)
        if x is None or x == 0:
            return None
        return ExactScalar(x, b / (2 * x))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_mpc(self):
        import mpmath

        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)

    def __str__(self):
        if self.im == 0:
            return _fmt_q(self.re)
        if self.re == 0:
            return _fmt_imag(self.im, leading=True)
        return _fmt_q(self.re) + _fmt_imag(self.im, leading=False)

    def __repr__(self):
        return f"ExactScalar({self})"


def _fmt_q(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _fmt_imag(q, leading: bool) -> str:
    sign = "-" if q < 0 else ("" if leading else "+")
    mag = abs(q)
    if mag == 1:
        return f"{sign}i"
    return f"{sign}{_fmt_q(mag)}*i"


def _rational_sqrt(q):
    q = mpq(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    if not (gmpy2.is_square(n) and gmpy2.is_square(d)):
        return None
    return mpq(gmpy2.isqrt(n), gmpy2.isqrt(d))


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


def scalar(x) -> ExactScalar:
    return ExactScalar.coerce(x)


# ---------------------------------------------------------------------------
# polynomials


class ExactPoly:
    """Polynomial over Q(i) in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero ``ExactScalar`` coefficients.
    Curves need one variable; elimination in ``loci`` also
    carries parameters and invariants as extra variables, so any count >= 1
    is accepted.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: dict | None = None, nvars: int = 1):
        if nvars < 1:
            raise ExactError("nvars must be >= 1")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ExactError(f"bad exponent {exp} for {nvars} variables")
            c = ExactScalar.coerce(c)
            if c:
                clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "ExactPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "terms", terms)
        return p

    # construction helpers
    @classmethod
    def const(cls, c, nvars: int = 1) -> "ExactPoly":
        c = ExactScalar.coerce(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def var(cls, index: int, nvars: int) -> "ExactPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls._raw({tuple(exp): ONE}, nvars)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, nvars: int = 1, var: int = 0) -> "ExactPoly":
        """Univariate in ``var`` from ascending coefficients c0, c1, ..."""
        terms = {}
        for k, c in enumerate(coeffs):
            c = ExactScalar.coerce(c)
            if c:
                exp = [0] * nvars
                exp[var] = k
                terms[tuple(exp)] = c
        return cls._raw(terms, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> ExactScalar:
        if not self.is_constant():
            raise ExactError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, ZERO)

    def degree(self, var: int | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def variables(self) -> set[int]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def coeff(self, exp) -> ExactScalar:
        return self.terms.get(tuple(exp), ZERO)

    def coeffs(self) -> list[ExactScalar]:
        """Ascending coefficient list of a univariate polynomial."""
        if self.nvars != 1:
            raise ExactError("coeffs() needs a univariate polynomial")
        out = [ZERO] * (self.degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def coeffs_in(self, var: int) -> list["ExactPoly"]:
        """Coefficients as polynomials (same nvars, ``var`` exponent zeroed)."""
        n = self.degree(var)
        buckets: list[dict] = [{} for _ in range(max(n, 0) + 1)]
        for e, c in self.terms.items():
            k = e[var]
            e2 = e[:var] + (0,) + e[var + 1:]
            buckets[k][e2] = c
        return [ExactPoly._raw(b, self.nvars) for b in buckets] if n >= 0 else []

    def leading_term(self):
        """(exponent, coefficient) of the lex-largest monomial."""
        e = max(self.terms)
        return e, self.terms[e]

    def _check(self, other: "ExactPoly"):
        if self.nvars != other.nvars:
            raise ExactError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> "ExactPoly":
        if isinstance(other, ExactPoly):
            self._check(other)
            return other
        return ExactPoly.const(other, self.nvars)

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == ExactPoly.const(other, self.nvars)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return ExactPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ExactPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactPoly):
            try:
                c = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ExactPoly._raw({}, self.nvars)
            return ExactPoly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return ExactPoly._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar (use ``exact_div`` for polynomials)."""
        if isinstance(other, ExactPoly):
            if other.is_constant() and other:
                return self * other.constant_value().inverse()
            return self.exact_div(other)
        c = ExactScalar.coerce(other)
        return self * c.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ExactPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, var: int = 0) -> "ExactPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                out[e[:var] + (k - 1,) + e[var + 1:]] = c * k
        return ExactPoly._raw(out, self.nvars)

    def evaluate(self, point: Sequence) -> ExactScalar:
        """Value at ``point`` (one scalar per variable)."""
        pt = [ExactScalar.coerce(v) for v in point]
        total = ZERO
        cache: dict = {}
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = pt[i] ** k
                    term = term * cache[key]
            total = total + term
        return total

    def __call__(self, *point):
        return self.evaluate(point)

    def substitute(self, var: int, value: "ExactPoly | ExactScalar | int") -> "ExactPoly":
        """Replace variable ``var`` by a polynomial (or scalar) in the same ring."""
        if not isinstance(value, ExactPoly):
            value = ExactPoly.const(value, self.nvars)
        self._check(value)
        parts = self.coeffs_in(var)
        result = ExactPoly._raw({}, self.nvars)
        for c in reversed(parts):  # Horner
            result = result * value + c
        return result

    def map_coeffs(self, fn: Callable[[ExactScalar], ExactScalar]) -> "ExactPoly":
        return ExactPoly({e: fn(c) for e, c in self.terms.items()}, self.nvars)

    def conjugate(self) -> "ExactPoly":
        return self.map_coeffs(lambda c: c.conjugate())

    def exact_div(self, other: "ExactPoly") -> "ExactPoly":
        """Quotient of an exact division; raises ExactError on a remainder."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lt_e, lt_c = other.leading_term()
        lt_inv = lt_c.inverse()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            shift = tuple(a - b for a, b in zip(e, lt_e))
            if any(s < 0 for s in shift):
                raise ExactError("polynomial division is not exact")
            qc = c * lt_inv
            quot[shift] = qc
            for e2, c2 in other.terms.items():
                ee = tuple(a + b for a, b in zip(e2, shift))
                v = rem.get(ee, ZERO) - qc * c2
                if v:
                    rem[ee] = v
                else:
                    rem.pop(ee, None)
        return ExactPoly._raw(quot, self.nvars)

    def monic(self) -> "ExactPoly":
        """Scale so the lex-leading coefficient is 1."""
        if not self:
            return self
        return self * self.leading_term()[1].inverse()

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["x"] if self.nvars == 1 else [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            cs = str(c)
            complex_c = not c.is_real() and c.re != 0
            if not mono:
                body = f"({cs})" if complex_c else cs
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = (f"({cs})" if complex_c else cs) + "*" + mono
            pieces.append(body)
        out = pieces[0]
        for p in pieces[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"ExactPoly({self.format()!r}, nvars={self.nvars})"


def x_poly() -> ExactPoly:
    """The univariate polynomial x."""
    return ExactPoly.var(0, 1)


def poly_arith(p: ExactPoly, q: ExactPoly, op: str) -> ExactPoly:
    if p.nvars != q.nvars:
        raise ExactError(f"variable-count mismatch: {p.nvars} vs {q.nvars}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ExactError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Moebius maps


class MoebiusMap:
    """x -> (a x + b) / (c x + d), canonically scaled (first nonzero entry 1)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        entries = [ExactScalar.coerce(v) for v in (a, b, c, d)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det:
            raise ExactError("singular Moebius map (ad - bc = 0)")
        lead = next(v for v in entries if v)
        inv = lead.inverse()
        for name, v in zip(self.__slots__, entries):
            object.__setattr__(self, name, v * inv)

    def __setattr__(self, name, value):
        raise AttributeError("MoebiusMap is immutable")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def matrix(self) -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> ExactScalar:
        return self.a * self.d - self.b * self.c

    def adjugate_matrix(self):
        """Raw inverse matrix (d, -b, -c, a), not rescaled."""
        return (self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(*self.adjugate_matrix())

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Composition self o other."""
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def square_scalar(self) -> ExactScalar | None:
        """mu with M^2 = mu*I for this representative, or None if M^2 is not scalar."""
        a, b, c, d = self.matrix
        p, q, r, s = a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d
        if q or r or p != s:
            return None
        return p

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def is_involution(self) -> bool:
        return not self.is_identity() and self.square_scalar() is not None

    def __call__(self, x):
        """Image of a scalar; ``None`` stands for the point at infinity."""
        if x is None:
            return None if self.c == 0 else self.a / self.c
        x = ExactScalar.coerce(x)
        den = self.c * x + self.d
        if not den:
            return None
        return (self.a * x + self.b) / den

    def fixed_points(self):
        """Fixed points in Q(i) u {inf} (None encodes inf), or None if irrational."""
        a, b, c, d = self.matrix
        if self.is_identity():
            raise ExactError("identity fixes every point")
        if c == 0:
            # a x + b = d x  ->  x = b / (d - a); infinity is fixed as well
            if a == d:
                return [None, None]
            return [b / (d - a), None]
        disc = (d - a) ** 2 + 4 * b * c
        root = disc.sqrt()
        if root is None:
            return None
        # c x^2 + (d - a) x - b = 0
        return [((a - d) + root) / (2 * c), ((a - d) - root) / (2 * c)]

    def __eq__(self, other):
        return isinstance(other, MoebiusMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "MoebiusMap(" + ", ".join(str(v) for v in self.matrix) + ")"


def form_substitute(coeffs: Sequence, degree: int, a, b, c, d, zero=None, one=None) -> list:
    """Coefficients of sum_j coeffs[j] (a x + b)^j (c x + d)^(degree - j).

    Generic over any commutative ring elements supporting + and *; ``coeffs``
    is ascending (coeffs[j] multiplies X^j Z^(degree-j)).
    """
    if zero is None:
        zero = ZERO
    if one is None:
        one = ONE

    def powers(p0, p1):
        # ascending coefficient lists of (p1*x + p0)^k, k = 0..degree
        out = [[one]]
        for _ in range(degree):
            prev = out[-1]
            nxt = [zero] * (len(prev) + 1)
            for i, v in enumerate(prev):
                nxt[i] = nxt[i] + v * p0
                nxt[i + 1] = nxt[i + 1] + v * p1
            out.append(nxt)
        return out

    num = powers(b, a)
    den = powers(d, c)
    result = [zero] * (degree + 1)
    for j in range(degree + 1):
        cj = coeffs[j] if j < len(coeffs) else zero
        if cj == zero:
            continue
        pa, pb = num[j], den[degree - j]
        for s, u in enumerate(pa):
            if u == zero:
                continue
            cu = cj * u
            for t, v in enumerate(pb):
                if v == zero:
                    continue
                result[s + t] = result[s + t] + cu * v
    return result


def compose_moebius(f: ExactPoly, m: "MoebiusMap | tuple", degree: int | None = None) -> ExactPoly:
    """Homogeneous substitution (c x + d)^n f((a x + b)/(c x + d)).

    ``degree`` is the homogeneous degree n (defaults to deg f); a degree-7
    sextic of an octavic is composed with n = 8 so the root at infinity moves.
    ``m`` may be a MoebiusMap or a raw (a, b, c, d) matrix.
    """
    if f.nvars != 1:
        raise ExactError("compose_moebius needs a univariate polynomial")
    if not f:
        raise ExactError("compose_moebius of the zero polynomial")
    a, b, c, d = m.matrix if isinstance(m, MoebiusMap) else tuple(ExactScalar.coerce(v) for v in m)
    if not (a * d - b * c):
        raise ExactError("singular Moebius map (ad - bc = 0)")
    n = f.degree() if degree is None else degree
    if n < f.degree():
        raise ExactError("homogeneous degree below polynomial degree")
    return ExactPoly.from_coeffs(form_substitute(f.coeffs(), n, a, b, c, d))


# ---------------------------------------------------------------------------
# determinants, resultants, gcds


def _det_bareiss(rows: list[list], exact_div: Callable) -> object:
    """Fraction-free Bareiss determinant; entries from an integral domain."""
    n = len(rows)
    if n == 0:
        return None
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = val if prev is None else exact_div(val, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(p_coeffs: list, q_coeffs: list, zero) -> list[list]:
    """Sylvester matrix from descending coefficient lists; p-rows first."""
    n = len(p_coeffs) - 1
    m = len(q_coeffs) - 1
    size = n + m
    rows = []
    for i in range(m):
        rows.append([zero] * i + list(p_coeffs) + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + list(q_coeffs) + [zero] * (size - m - 1 - i))
    return rows


def resultant(p: ExactPoly, q: ExactPoly, eliminate: int = 0) -> ExactPoly:
    """Sylvester resultant eliminating variable ``eliminate`` (p-rows first).

    For univariate input the result is a constant polynomial.  Sign
    convention: res(x - t, x - s) = t - s.
    """
    p._check(q)
    if not p or not q:
        raise ExactError("resultant of a zero polynomial")
    n, m = p.degree(eliminate), q.degree(eliminate)
    nv = p.nvars
    if n == 0 and m == 0:
        return ExactPoly.const(1, nv)
    if n == 0:
        return p ** m
    if m == 0:
        return q ** n
    if nv == 1:
        rows = sylvester_matrix(list(reversed(p.coeffs())), list(reversed(q.coeffs())), ZERO)
        return ExactPoly.const(_det_bareiss(rows, lambda u, v: u / v), 1)
    pc = list(reversed(p.coeffs_in(eliminate)))
    qc = list(reversed(q.coeffs_in(eliminate)))
    zero = ExactPoly.const(0, nv)
    rows = sylvester_matrix(pc, qc, zero)
    return _det_bareiss(rows, lambda u, v: u.exact_div(v))


def discriminant(f: ExactPoly, degree: int) -> ExactScalar:
    """(-1)^(n(n-1)/2) res(f, f') / lc(f) for f of exact degree n."""
    if f.nvars != 1:
        raise ExactError("discriminant needs a univariate polynomial")
    if f.degree() != degree:
        raise ExactError(f"degree mismatch: expected {degree}, got {f.degree()}")
    if degree < 1:
        raise ExactError("discriminant needs degree >= 1")
    if degree == 1:
        return ONE
    lc = f.coeffs()[-1]
    res = resultant(f, f.derivative()).constant_value()
    sign = -1 if (degree * (degree - 1) // 2) % 2 else 1
    return res * sign / lc


def _uni_rem(a: list, b: list) -> list:
    """Remainder of ascending coefficient lists over Q(i)."""
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    while len(a) - 1 >= db and a:
        q = a[-1] * inv
        shift = len(a) - 1 - db
        for i, v in enumerate(b):
            a[shift + i] = a[shift + i] - q * v
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def univariate_gcd(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    """Monic gcd of univariate polynomials over Q(i)."""
    if p.nvars != 1 or q.nvars != 1:
        raise ExactError("univariate_gcd needs univariate input")
    a, b = p.coeffs(), q.coeffs()
    while b:
        a, b = b, _uni_rem(a, b)
    if not a:
        return ExactPoly.const(0, 1)
    return ExactPoly.from_coeffs(a).monic()


def squarefree(f: ExactPoly) -> bool:
    """True iff gcd(f, f') is constant."""
    if f.nvars != 1:
        raise ExactError("squarefree needs a univariate polynomial")
    if not f:
        raise ExactError("squarefree of the zero polynomial")
    if f.degree() <= 1:
        return True
    return univariate_gcd(f, f.derivative()).degree() == 0


# multivariate gcd by recursive primitive PRS ----------------------------------


def _prem(a: ExactPoly, b: ExactPoly, var: int) -> ExactPoly:
    """Pseudo-remainder of a by b in ``var``."""
    db = b.degree(var)
    bc = b.coeffs_in(var)
    lc = bc[-1]
    x = ExactPoly.var(var, a.nvars)
    r = a
    delta = a.degree(var) - db + 1
    while r and r.degree(var) >= db:
        rc = r.coeffs_in(var)
        shift = r.degree(var) - db
        r = r * lc - rc[-1] * b * x ** shift
        delta -= 1
    if delta > 0:
        r = r * lc ** delta
    return r


def _content(p: ExactPoly, var: int, rest: list[int]) -> ExactPoly:
    g = ExactPoly.const(0, p.nvars)
    for c in p.coeffs_in(var):
        if c:
            g = poly_gcd(g, c, rest)
            if g.is_constant():
                return ExactPoly.const(1, p.nvars)
    return g


def poly_gcd(a: ExactPoly, b: ExactPoly, variables: list[int] | None = None) -> ExactPoly:
    """Monic (lex) gcd of multivariate polynomials over Q(i)."""
    a._check(b)
    if variables is None:
        variables = sorted(a.variables() | b.variables())
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if not variables:
        return ExactPoly.const(1, a.nvars)
    var, rest = variables[0], variables[1:]
    if a.degree(var) < 1 and b.degree(var) < 1:
        return poly_gcd(a, b, rest)
    ca, cb = _content(a, var, rest), _content(b, var, rest)
    cg = poly_gcd(ca, cb, rest)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    if pa.degree(var) < pb.degree(var):
        pa, pb = pb, pa
    while pb and pb.degree(var) > 0:
        r = _prem(pa, pb, var)
        pa = pb
        if not r:
            pb = r
            break
        pb = r.exact_div(_content(r, var, rest))
    if pb and pb.degree(var) == 0:
        return cg.monic()
    g = pa.exact_div(_content(pa, var, rest))
    return (g * cg).monic()


def squarefree_part(p: ExactPoly) -> ExactPoly:
    """Product of the distinct irreducible factors of p (monic, lex)."""
    if not p:
        return p
    result = p
    for v in sorted(p.variables()):
        g = poly_gcd(result, result.derivative(v))
        if not g.is_constant():
            result = result.exact_div(g)
    return result.monic()
