"""Dense polynomial arithmetic over F_p and distinct-degree factorization.

Only the degree multiset of the irreducible factors is ever needed (it is
the cycle type of a Frobenius element), so equal-degree splitting is
deliberately left out: at stage d the factor count is deg/d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .unipoly import UniPoly

FpPoly = list[int]  # ascending coefficients in [0, p)


class PrimeSkip(Exception):
    """The prime is unusable for this polynomial; sample another one."""


@dataclass(frozen=True)
class CycleType:
    """Multiset of irreducible factor degrees of a seed modulo a prime."""

    prime: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.parts)) != self.parts:
            raise ValueError("parts must be sorted ascending")

    @property
    def degree(self) -> int:
        return sum(self.parts)


def _trim(f: FpPoly) -> FpPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod_p(f: UniPoly, p: int) -> FpPoly:
    """Reduce rational coefficients mod p; skip-signals on bad denominators."""
    out = []
    for c in f.coeffs:
        den = c.denominator % p
        if den == 0:
            raise PrimeSkip(f"denominator divisible by {p}")
        out.append(c.numerator * pow(den, -1, p) % p)
    return _trim(out)


def fp_mul(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def fp_rem(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    if not b:
        raise ZeroDivisionError
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q = c * inv % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - q * b[j]) % p
    return _trim(a[:db])


def fp_divexact(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    """Quotient a // b, raising if the division is not exact."""
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            qi = c * inv % p
            q[i - db] = qi
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - qi * b[j]) % p
    if _trim(a):
        raise ArithmeticError("inexact division over F_p")
    return _trim(q)


def fp_gcd(a: FpPoly, b: FpPoly, p: int) -> FpPoly:
    while b:
        a, b = b, fp_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def fp_deriv(a: FpPoly, p: int) -> FpPoly:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def fp_powmod(base: FpPoly, e: int, mod: FpPoly, p: int) -> FpPoly:
    result = [1]
    base = fp_rem(base, mod, p)
    while e:
        if e & 1:
            result = fp_rem(fp_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = fp_rem(fp_mul(base, base, p), mod, p)
    return result


def ddf_degree_multiset(h: UniPoly, p: int) -> CycleType:
    """Degree multiset of the irreducible factors of h mod p.

    Runs distinct-degree factorization: at stage d, gcd(f, x^(p^d) - x)
    collects every irreducible factor of degree dividing d; after the
    smaller stages are stripped, that gcd is exactly the degree-d part.
    Skip-signals when p divides the leading coefficient or h mod p is not
    squarefree.
    """
    hp = poly_mod_p(h, p)
    if len(hp) - 1 != h.degree:
        raise PrimeSkip(f"leading coefficient vanishes mod {p}")
    if len(fp_gcd(hp, fp_deriv(hp, p), p)) != 1:
        raise PrimeSkip(f"not squarefree mod {p}")
    inv = pow(hp[-1], -1, p)
    f = [c * inv % p for c in hp]
    parts: list[int] = []
    xq = fp_rem([0, 1], f, p)
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            parts.append(len(f) - 1)
            break
        xq = fp_powmod(xq, p, f, p)
        diff = _trim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(xq + [0, 0])])
        g = fp_gcd(f, diff, p)
        if len(g) - 1 > 0:
            deg_g = len(g) - 1
            parts.extend([d] * (deg_g // d))
            f = fp_divexact(f, g, p)
            xq = fp_rem(xq, f, p)
    ct = CycleType(p, tuple(sorted(parts)))
    assert ct.degree == h.degree
    return ct


def iter_primes() -> Iterator[int]:
    """2, 3, 5, ... by trial division against the primes found so far."""
    found: list[int] = []
    n = 2
    while True:
        if all(n % q for q in found if q * q <= n):
            found.append(n)
            yield n
        n += 1
