"""Shared fixtures: the worked seed, frozen control seeds, random seed helpers.

Control seeds are frozen from explicit root sets so each one violates
exactly one general-position condition (or none, while still forcing the
deflated collinearity path):

* COLLINEAR_BAD   roots 1, 2, -3, 4, 5, 6, -7, -8   (1 + 2 - 3 = 0)
* CONIC_BAD       roots 2, -2, 1, 5, 24, -4, -11, -15   (2 + -2 = 0)
* SLOW_PATH_GOOD  roots 1, -2, 4, 11, 23, -7, -13, -17  (2*1 + -2 = 0 only)
"""

from __future__ import annotations

import random

import pytest

from delpezzo1 import validate_seed
from delpezzo1.curve import SeedError, SeedPoly

X8_COEFFS = [-1, -1, 0, 0, 0, 0, 0, 0, 1]

COLLINEAR_BAD = [-40320, 61104, -15508, -8340, 3009, 156, -102, 0, 1]
CONIC_BAD = [316800, -264240, -145924, 78300, 18609, -3060, -486, 0, 1]
SLOW_PATH_GOOD = [3131128, -1896786, -1542811, 239940, 71151, -2034, -589, 0, 1]


@pytest.fixture
def seed_x8() -> SeedPoly:
    return validate_seed(X8_COEFFS)


def random_valid_seed(rng: random.Random, bound: int = 9) -> SeedPoly:
    """Random normalized octic with small integer coefficients."""
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(7)] + [0, 1]
        if coeffs[0] == 0:
            continue
        try:
            return validate_seed(coeffs)
        except SeedError:
            continue


def mp_roots(seed: SeedPoly):
    """All complex roots to 60 digits (untrusted oracle helper)."""
    from mpmath import mp, mpf, polyroots

    mp.dps = 60
    desc = [
        mpf(c.numerator) / mpf(c.denominator)
        for c in reversed(seed.h.coeffs)
    ]
    return polyroots(desc, maxsteps=200, extraprec=400)


# comparisons are certified by a dead band: any oracle magnitude inside
# (CLEAR_ZERO, CLEAR_NONZERO) means 60 digits did not separate the case
CLEAR_ZERO = 1e-40
CLEAR_NONZERO = 1e-20


def _certified_nonzero(values) -> bool:
    mags = [abs(v) for v in values]
    for m in mags:
        if CLEAR_ZERO < m < CLEAR_NONZERO:
            raise AssertionError(f"oracle magnitude {m} is not certified")
    return all(m >= CLEAR_NONZERO for m in mags)


def float_position_oracle(seed: SeedPoly) -> dict[str, bool]:
    """Numeric general-position decision from 60-digit roots."""
    from itertools import combinations

    from delpezzo1.curve import build_v

    roots = mp_roots(seed)
    triple = _certified_nonzero(
        [a + b + c for a, b, c in combinations(roots, 3)]
    )
    pair = _certified_nonzero([a + b for a, b in combinations(roots, 2)])

    v = build_v(seed)
    partials = [v.derivative(s).param_eval() for s in ("x", "y", "z")]

    def evaluate(poly, alpha):
        from mpmath import mpf

        acc = 0
        for c in reversed(poly.coeffs):
            acc = acc * alpha + mpf(c.numerator) / mpf(c.denominator)
        return acc

    rank_vals = []
    for alpha in roots:
        ux, uy, uz = 1, -3 * alpha**2, 2 * alpha**3
        vx, vy, vz = (evaluate(p, alpha) for p in partials)
        minors = [ux * vy - uy * vx, ux * vz - uz * vx, uy * vz - uz * vy]
        rank_vals.append(max(abs(m) for m in minors))
    cubic = _certified_nonzero(rank_vals)
    return {"collinear": triple, "conic": pair, "singular_cubic": cubic}
