"""One-sided Galois-group certificates from Frobenius cycle types.

Factor degree multisets of the seed modulo good primes are cycle types of
Frobenius elements of the Galois group acting on the roots.  Two sampled
facts certify that the group contains the alternating group on 8 letters:

* a type {8} shows the seed is irreducible, hence the action transitive;
* a type containing a part 5 yields a genuine 5-cycle (raise the element
  to the lcm of its other parts, which is coprime to 5), and at degree 8
  a transitive group with a 5-cycle is primitive, so Jordan's criterion
  applies.

The discriminant then separates the two possibilities: a square means the
group sits inside the alternating group.  The certificate is sound but
never complete; running out of primes yields "inconclusive", not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import SeedPoly
from .finitefield import CycleType, PrimeSkip, ddf_degree_multiset, iter_primes
from .linalg import frac_is_square

S8_CERTIFIED = "S8-certified"
A8_CERTIFIED = "A8-certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GaloisCertificate:
    verdict: str
    transitivity_prime: int | None
    five_cycle_prime: int | None
    disc_is_square: bool
    discriminant: Fraction
    sampled_types: tuple[CycleType, ...]

    @property
    def certified(self) -> bool:
        return self.verdict != INCONCLUSIVE


def certify_galois(seed: SeedPoly, prime_bound: int = 500) -> GaloisCertificate:
    """Sample ascending primes up to the bound and certify if possible.

    Stops as soon as both witnesses are found; primes where the seed is
    not squarefree are skipped, never used.
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    h = seed.h
    disc = h.discriminant()
    square = frac_is_square(disc)
    transitivity: int | None = None
    five_cycle: int | None = None
    sampled: list[CycleType] = []
    for p in iter_primes():
        if p > prime_bound:
            break
        try:
            ct = ddf_degree_multiset(h, p)
        except PrimeSkip:
            continue
        sampled.append(ct)
        if transitivity is None and ct.parts == (8,):
            transitivity = p
        if five_cycle is None and 5 in ct.parts:
            five_cycle = p
        if transitivity is not None and five_cycle is not None:
            break
    if transitivity is not None and five_cycle is not None:
        verdict = A8_CERTIFIED if square else S8_CERTIFIED
    else:
        verdict = INCONCLUSIVE
    return GaloisCertificate(
        verdict=verdict,
        transitivity_prime=transitivity,
        five_cycle_prime=five_cycle,
        disc_is_square=square,
        discriminant=disc,
        sampled_types=tuple(sampled),
    )
