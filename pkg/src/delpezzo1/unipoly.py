"""Dense univariate polynomials over exact rationals.

Coefficients are :class:`fractions.Fraction` values stored ascending by
degree with no trailing zeros, so structural equality is polynomial
equality and the zero polynomial is the empty tuple.  Everything here is
immutable and deterministic; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import bareiss_det

Scalar = int | Fraction

# Degree bound below which resultants go straight to Sylvester/Bareiss
# instead of Euclidean degree reduction.
_BAREISS_CUTOFF = 16


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Immutable dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> UniPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> UniPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero:
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            term = "t" if i == 1 else f"t^{i}" if i else ""
            if i and abs(c) == 1:
                cs = "-" if c < 0 else ""
            else:
                cs = str(c) + ("*" if i else "")
            parts.append(cs + term)
        return "UniPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"

    # -- calculus and reparametrizations -------------------------------

    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> UniPoly:
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        if self.lc == 1:
            return self
        inv = 1 / self.lc
        return UniPoly([c * inv for c in self.coeffs])

    def reflect(self) -> UniPoly:
        """Return f(-t)."""
        return UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def scale_roots(self, k: Scalar) -> UniPoly:
        """Return k^deg * f(t/k): the polynomial whose roots are k times ours."""
        k = _frac(k)
        if k == 0:
            raise ValueError("scale_roots requires a nonzero factor")
        n = self.degree
        return UniPoly([c * k ** (n - i) for i, c in enumerate(self.coeffs)])

    # -- Euclidean structure -------------------------------------------

    def divrem(self, divisor: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Quotient and remainder with deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < divisor.degree:
            return UniPoly(), self
        rem = list(self.coeffs)
        dd = divisor.degree
        inv_lc = 1 / divisor.lc
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c * inv_lc
            quot[i - dd] = q
            rem[i] = Fraction(0)
            for j in range(dd):
                rem[i - dd + j] -= q * divisor.coeffs[j]
        return UniPoly(quot), UniPoly(rem[:dd])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divrem(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divrem(other)[1]

    def exact_div(self, divisor: UniPoly) -> UniPoly:
        q, r = self.divrem(divisor)
        if not r.is_zero:
            raise ArithmeticError("division was expected to be exact")
        return q

    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic greatest common divisor."""
        a, b = self, other
        if a.is_zero and b.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    # -- resultants -----------------------------------------------------

    def resultant(self, other: UniPoly) -> Fraction:
        """Res_t(self, other), computed fraction-free.

        Large-degree inputs are first shrunk by Euclidean reduction of the
        bigger argument modulo the smaller one; the small residual pair is
        finished by Bareiss elimination of the Sylvester matrix.
        """
        if self.is_zero or other.is_zero:
            raise ValueError("resultant requires nonzero polynomials")
        f, g = self, other
        sign = 1
        acc = Fraction(1)
        while True:
            if f.degree == 0:
                return sign * acc * f.lc**g.degree
            if g.degree == 0:
                return sign * acc * g.lc**f.degree
            if f.degree < g.degree:
                if (f.degree & 1) and (g.degree & 1):
                    sign = -sign
                f, g = g, f
            if f.degree <= _BAREISS_CUTOFF:
                return sign * acc * _sylvester_resultant(f, g)
            q, r = f.divrem(g)
            if r.is_zero:
                return Fraction(0)
            if (f.degree & 1) and (g.degree & 1):
                sign = -sign
            acc *= g.lc ** (f.degree - r.degree)
            f, g = g, r

    def discriminant(self) -> Fraction:
        """Standard discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
        n = self.degree
        if n < 2:
            raise ValueError("discriminant needs degree >= 2")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * self.resultant(self.derivative()) / self.lc


def _clear_denominators(f: UniPoly) -> tuple[list[int], int]:
    lcm = 1
    for c in f.coeffs:
        d = c.denominator
        lcm = lcm * d // _int_gcd(lcm, d)
    return [int(c * lcm) for c in f.coeffs], lcm


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    fi, df_scale = _clear_denominators(f)
    gi, dg_scale = _clear_denominators(g)
    n, m = f.degree, g.degree
    size = n + m
    rows = []
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(fi)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(gi)):
            row[i + j] = c
        rows.append(row)
    det = bareiss_det(rows)
    return Fraction(det, df_scale**m * dg_scale**n)


# -- power sums and composed sums --------------------------------------


def power_sums(f: UniPoly, count: int) -> list[Fraction]:
    """Power sums p_0..p_count of the roots of f (with multiplicity).

    Newton's identities on the monic normalization; p_0 = deg f.
    """
    if f.is_zero:
        raise ValueError("power sums of the zero polynomial")
    fm = f.monic()
    n = fm.degree
    a = fm.coeffs  # a[n] == 1
    ps: list[Fraction] = [Fraction(n)]
    for k in range(1, count + 1):
        s = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            s += a[n - i] * ps[k - i]
        if k <= n:
            s += k * a[n - k]
        ps.append(-s)
    return ps


def from_power_sums(ps: Sequence[Fraction], degree: int) -> UniPoly:
    """Monic polynomial of the given degree with prescribed root power sums."""
    e: list[Fraction] = [Fraction(1)]
    for k in range(1, degree + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * ps[i]
            s += term if (i % 2 == 1) else -term
        e.append(s / k)
    coeffs = [Fraction(0)] * (degree + 1)
    for k in range(degree + 1):
        coeffs[degree - k] = e[k] if k % 2 == 0 else -e[k]
    return UniPoly(coeffs)


def root_sum_poly(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic polynomial whose roots are a+b over ordered root pairs of (f, g).

    Equals Res_t(f(t), g(s-t)) up to the leading-coefficient factors that a
    monic normalization removes: pair sums are counted with multiplicity,
    so the degree is deg f * deg g.  Computed through power sums, which
    keeps the arithmetic one-dimensional instead of eliminating a 2-variable
    resultant.
    """
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise ValueError("root_sum_poly needs positive degrees")
    total = n * m
    pf = power_sums(f, total)
    pg = power_sums(g, total)
    sums: list[Fraction] = []
    binom_row = [1]
    for p in range(total + 1):
        s = Fraction(0)
        for i in range(p + 1):
            s += binom_row[i] * pf[i] * pg[p - i]
        sums.append(s)
        binom_row = [1] + [binom_row[j] + binom_row[j + 1] for j in range(p)] + [1]
    return from_power_sums(sums, total)
