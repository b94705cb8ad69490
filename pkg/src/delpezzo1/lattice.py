"""Integer lattices, their mod-2 reductions, and the checks built on them.

Covers the rank-(10-d) odd hyperbolic lattice with its distinguished
vector omega = -3 e_0 + e_1 + ... + e_{9-d}, the orthogonal complement
(the E8 or E7 root lattice with reversed sign), symmetric-group
isometries fixing omega, the blow-up model of the rank-9 Picard lattice,
short-vector enumeration with exact rational bounds, and the mod-2
quadratic-form census together with the independence lemma for tuples
pairing to 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import bareiss_det, f2_det, f2_rank, int_functional_kernel

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntLattice:
    rank: int
    gram: Matrix
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise ValueError("gram shape mismatch")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram not symmetric")

    def pair(self, x: Vector, y: Vector) -> int:
        return sum(
            x[i] * self.gram[i][j] * y[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if x[i] and self.gram[i][j] and y[j]
        )

    def norm(self, x: Vector) -> int:
        return self.pair(x, x)

    @property
    def determinant(self) -> int:
        return bareiss_det([list(r) for r in self.gram])

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))


@dataclass(frozen=True)
class MarkedLattice:
    """Hyperbolic lattice together with its distinguished vector."""

    lattice: IntLattice
    omega: Vector


def build_hyperbolic(d: int) -> MarkedLattice:
    """I^{1,9-d} with omega = -3 e_0 + e_1 + ... + e_{9-d}; (omega, omega) = d."""
    if d not in (1, 2):
        raise ValueError("d must be 1 or 2")
    n = 10 - d
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
        for i in range(n)
    )
    labels = tuple(f"e{i}" for i in range(n))
    omega = tuple([-3] + [1] * (n - 1))
    return MarkedLattice(IntLattice(n, gram, labels), omega)


@dataclass(frozen=True)
class Sublattice:
    """Orthogonal complement with its Gram matrix and ambient basis."""

    lattice: IntLattice
    ambient_basis: tuple[Vector, ...]


def orth_complement(lat: IntLattice, v: Vector) -> Sublattice:
    """Integer kernel of pairing-with-v, with the induced Gram matrix."""
    if math.gcd(*v) != 1:
        raise ValueError("vector must be primitive")
    if lat.pair(v, v) == 0:
        raise ValueError("vector must have nonzero self-pairing")
    w = [lat.pair(v, tuple(int(i == j) for i in range(lat.rank))) for j in range(lat.rank)]
    g = math.gcd(*w)
    basis = int_functional_kernel([c // g for c in w])
    vecs = tuple(tuple(b) for b in basis)
    gram = tuple(tuple(lat.pair(a, b) for b in vecs) for a in vecs)
    labels = tuple(f"c{i}" for i in range(len(vecs)))
    return Sublattice(IntLattice(len(vecs), gram, labels), vecs)


# -- short vectors ---------------------------------------------------------


def _ldl(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place Lagrange reduction of a positive definite matrix.

    Afterwards q[i][i] are the positive diagonal weights and q[i][j]
    (j > i) the mixing coefficients of Q(x) = sum_i q_ii (x_i + sum_{j>i}
    q_ij x_j)^2.
    """
    n = len(a)
    q = [row[:] for row in a]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _floor_shift_sqrt(radicand: Fraction, shift: Fraction) -> int:
    """floor(sqrt(radicand) + shift) with exact integer arithmetic."""
    approx = math.isqrt(radicand.numerator // radicand.denominator)
    est = approx + math.floor(shift)

    def fits(y: int) -> bool:
        diff = y - shift
        return diff <= 0 or diff * diff <= radicand

    while fits(est + 1):
        est += 1
    while not fits(est):
        est -= 1
    return est


def enumerate_short_vectors(lat: IntLattice, norm: int) -> list[Vector]:
    """All vectors of the given self-pairing in a negative definite lattice.

    Depth-first search with exact rational interval bounds from the
    Lagrange decomposition; no floating point enters any comparison.
    The zero vector is never reported.
    """
    n = lat.rank
    neg = [[Fraction(-lat.gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if neg[i][i] <= 0:
            raise ValueError("lattice is not negative definite")
    q = _ldl(neg)
    target = Fraction(-norm)
    if target < 0:
        return []
    found: list[Vector] = []
    x = [0] * n

    def descend(i: int, remaining: Fraction) -> None:
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        radicand = remaining / q[i][i]
        hi = _floor_shift_sqrt(radicand, -center)
        lo = -_floor_shift_sqrt(radicand, center)
        for xi in range(lo, hi + 1):
            x[i] = xi
            step = q[i][i] * (xi + center) ** 2
            rest = remaining - step
            if i == 0:
                if rest == 0 and any(x):
                    found.append(tuple(x))
            elif rest >= 0:
                descend(i - 1, rest)
        x[i] = 0

    descend(n - 1, target)
    return sorted(found)


# -- symmetric-group isometries -------------------------------------------


def perm_isometry(tau: tuple[int, ...], d: int) -> Matrix:
    """Matrix of e_0 -> e_0, e_i -> e_{tau(i)} on the rank-(10-d) lattice.

    `tau` lists the images of 1..9-d (1-based).
    """
    n = 9 - d
    if sorted(tau) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}")
    size = n + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 1
    for i, image in enumerate(tau, start=1):
        rows[image][i] = 1
    return tuple(tuple(r) for r in rows)


def perm_compose(sigma: tuple[int, ...], tau: tuple[int, ...]) -> tuple[int, ...]:
    """sigma after tau, matching matrix multiplication of the isometries."""
    return tuple(sigma[t - 1] for t in tau)


def apply_matrix(m: Matrix, v: Vector) -> Vector:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def is_isometry(lat: IntLattice, m: Matrix) -> bool:
    n = lat.rank
    g = lat.gram
    for i in range(n):
        for j in range(n):
            val = sum(
                m[a][i] * g[a][b] * m[b][j] for a in range(n) for b in range(n)
            )
            if val != g[i][j]:
                return False
    return True


# -- F2 machinery -----------------------------------------------------------


@dataclass(frozen=True)
class F2Space:
    """F2 vector space with a symmetric bilinear form, vectors as bitmasks."""

    dim: int
    rows: tuple[int, ...]  # row i of the form matrix, as a bitmask

    def pair(self, x: int, y: int) -> int:
        acc = 0
        i = 0
        while x:
            if x & 1:
                acc ^= (self.rows[i] & y).bit_count() & 1
            x >>= 1
            i += 1
        return acc


def standard_space(dim: int) -> F2Space:
    return F2Space(dim, tuple(1 << i for i in range(dim)))


def check_pairing_tuple(space: F2Space, vectors: list[int]) -> tuple[bool, bool]:
    """(linearly independent, zero-pairing combinations are trivial).

    The second value checks directly that any combination z = sum a_i z_i
    with pair(z, z_j) = 0 for every j has all a_i = 0.
    """
    m = len(vectors)
    independent = f2_rank(vectors) == m
    vanish_ok = True
    for mask in range(1, 1 << m):
        z = 0
        for i in range(m):
            if mask >> i & 1:
                z ^= vectors[i]
        if all(space.pair(z, zj) == 0 for zj in vectors):
            vanish_ok = False
            break
    return independent, vanish_ok


@dataclass(frozen=True)
class LinalgLemmaReport:
    instances: int
    independence_failures: int
    vanish_failures: int

    @property
    def passed(self) -> bool:
        return (
            self.instances > 0
            and self.independence_failures == 0
            and self.vanish_failures == 0
        )


def _diagonal_free(space: F2Space) -> list[int]:
    return [v for v in range(1, 1 << space.dim) if space.pair(v, v) == 0]


def linalg_lemma_check(
    space: F2Space,
    m: int,
    trials: int = 0,
    rng: random.Random | None = None,
    exhaustive: bool = False,
) -> LinalgLemmaReport:
    """Verify independence of m-tuples pairing to 1 off the diagonal.

    Tuples of vectors with pair(z, z) = 0 and pairwise pairing 1 are
    generated either exhaustively (meant for m = 2 in small dimension) or
    by seeded rejection sampling; each is checked for linear independence
    and for the direct vanishing property.  m must be even; any failure
    would contradict the lemma and is reported, never repaired.
    """
    if m % 2:
        raise ValueError("m must be even")
    candidates = _diagonal_free(space)
    instances = 0
    bad_indep = 0
    bad_vanish = 0
    if exhaustive:
        if m != 2:
            raise ValueError("exhaustive mode supports m = 2 only")
        for z1, z2 in combinations(candidates, 2):
            if space.pair(z1, z2) != 1:
                continue
            instances += 1
            indep, vanish = check_pairing_tuple(space, [z1, z2])
            bad_indep += not indep
            bad_vanish += not vanish
        return LinalgLemmaReport(instances, bad_indep, bad_vanish)
    if rng is None:
        rng = random.Random(0)
    attempts = 0
    while instances < trials and attempts < trials * 400:
        attempts += 1
        tup: list[int] = []
        for _ in range(m * 40):
            v = rng.choice(candidates)
            if all(space.pair(v, z) == 1 for z in tup):
                tup.append(v)
                if len(tup) == m:
                    break
        if len(tup) < m:
            continue
        instances += 1
        indep, vanish = check_pairing_tuple(space, tup)
        bad_indep += not indep
        bad_vanish += not vanish
    return LinalgLemmaReport(instances, bad_indep, bad_vanish)


# -- named verification bundles ---------------------------------------------


@dataclass(frozen=True)
class F8SReport:
    complement_dimension: int
    bijective: bool
    equivariant_swap: bool
    equivariant_cycle: bool
    all_ones_fixed: bool
    induced_form_rows: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return (
            self.complement_dimension == 8
            and self.bijective
            and self.equivariant_swap
            and self.equivariant_cycle
            and self.all_ones_fixed
        )


def _perm_mask(mask: int, tau: tuple[int, ...]) -> int:
    """Bit 0 fixed, bit i sent to bit tau(i), acting on a 9-bit mask."""
    out = mask & 1
    for i in range(1, len(tau) + 1):
        if mask >> i & 1:
            out |= 1 << tau[i - 1]
    return out


def f8s_iso_check() -> F8SReport:
    """Check the explicit mod-2 identification of the omega-complement.

    Inside the 9-dimensional reduction of the rank-9 hyperbolic lattice
    the basis classes are orthonormal and the reduction of omega is the
    all-ones vector, so the complement consists of the even-weight masks.
    Dropping coordinate 0 maps it onto F2^8; the check confirms this map
    is bijective and commutes with the swap (1 2) and the full 8-cycle,
    and records the bilinear form the identification transports (ones off
    the diagonal, zeros on it).
    """
    complement = [v for v in range(512) if v.bit_count() % 2 == 0]
    dim = f2_rank(complement)
    images = [v >> 1 for v in complement]
    image_rank = f2_rank(images)
    bijective = image_rank == 8 and len(set(images)) == len(complement)

    swap = (2, 1, 3, 4, 5, 6, 7, 8)
    cycle = (2, 3, 4, 5, 6, 7, 8, 1)
    eq_swap = all(
        (_perm_mask(v, swap) >> 1) == _perm_mask((v >> 1) << 1, swap) >> 1
        for v in complement
    )
    eq_cycle = all(
        (_perm_mask(v, cycle) >> 1) == _perm_mask((v >> 1) << 1, cycle) >> 1
        for v in complement
    )

    ones = (1 << 8) - 1
    fixed = all(
        _perm_mask(ones << 1, tau) >> 1 == ones for tau in (swap, cycle)
    )

    # transported form: pair the preimages e0 + e_i of the standard basis
    # vectors under the orthonormal mod-2 pairing (parity of the overlap)
    induced = tuple(
        sum(
            (((1 | 1 << i) & (1 | 1 << j)).bit_count() & 1) << (j - 1)
            for j in range(1, 9)
        )
        for i in range(1, 9)
    )
    return F8SReport(dim, bijective, eq_swap, eq_cycle, fixed, induced)


@dataclass(frozen=True)
class PicardReport:
    canonical_self_pairing: int
    diag_pairings: tuple[int, ...]
    off_diag_pairings_ok: bool
    mod2_independent: bool
    mod2_gram_det: int

    @property
    def passed(self) -> bool:
        return (
            self.canonical_self_pairing == 1
            and all(v == -2 for v in self.diag_pairings)
            and self.off_diag_pairings_ok
            and self.mod2_independent
            and self.mod2_gram_det == 1
        )


def picard_model_check(n: int = 8) -> PicardReport:
    """Gram identities in the blow-up model of the rank-9 Picard lattice.

    Basis f_0, l_1, ..., l_n with f_0^2 = 1 and l_b^2 = -1; the canonical
    class is K = -3 f_0 + sum l_b.  The vectors v_i = l_i + K pair to -2
    on the diagonal and -1 off it, and their mod-2 images are linearly
    independent with a nonsingular all-ones-off-diagonal pairing matrix.
    """
    rank = n + 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
        for i in range(rank)
    )
    labels = ("f0",) + tuple(f"l{i}" for i in range(1, rank))
    lat = IntLattice(rank, gram, labels)
    k = tuple([-3] + [1] * n)
    vs = []
    for i in range(1, rank):
        v = list(k)
        v[i] += 1
        vs.append(tuple(v))
    kk = lat.pair(k, k)
    diag = tuple(lat.pair(v, v) for v in vs)
    off_ok = all(
        lat.pair(vs[i], vs[j]) == -1 for i in range(n) for j in range(n) if i != j
    )
    masks = [sum((v[c] & 1) << c for c in range(rank)) for v in vs]
    independent = f2_rank(masks) == n
    mod2_rows = [
        sum((lat.pair(vs[i], vs[j]) & 1) << j for j in range(n)) for i in range(n)
    ]
    det = f2_det(mod2_rows, n)
    return PicardReport(kk, diag, off_ok, independent, det)


@dataclass(frozen=True)
class CensusReport:
    nonzero_q1: int
    nonzero_q0: int
    root_count: int
    root_class_count: int
    root_classes_all_q1: bool
    reflections_preserve_q: bool

    @property
    def passed(self) -> bool:
        return (
            self.nonzero_q1 == 120
            and self.nonzero_q0 == 135
            and self.root_count == 240
            and self.root_class_count == 120
            and self.root_classes_all_q1
            and self.reflections_preserve_q
        )


def mod2_quadratic_census(d: int = 1) -> CensusReport:
    """Census of q(x) = (x, x)/2 mod 2 on the even complement lattice.

    Enumerates all 255 nonzero mod-2 classes, counts the values of q,
    identifies the classes hit by the 240 norm -2 vectors, and checks
    that every root reflection descends to a q-preserving map.
    """
    if d != 1:
        raise ValueError("the census is defined for d = 1")
    marked = build_hyperbolic(1)
    comp = orth_complement(marked.lattice, marked.omega)
    lat = comp.lattice
    n = lat.rank

    def lift(mask: int) -> Vector:
        return tuple(mask >> i & 1 for i in range(n))

    qvals = []
    for mask in range(1 << n):
        norm = lat.norm(lift(mask))
        assert norm % 2 == 0
        qvals.append((norm // 2) & 1)
    q1 = sum(qvals[m] for m in range(1, 1 << n))
    q0 = (1 << n) - 1 - q1

    roots = enumerate_short_vectors(lat, -2)
    root_masks = sorted({sum((r[i] & 1) << i for i in range(n)) for r in roots})
    roots_q1 = all(qvals[m] == 1 for m in root_masks)

    preserve = True
    for r in roots:
        gr = [lat.pair(r, tuple(int(i == j) for i in range(n))) for j in range(n)]
        cols = []
        for i in range(n):
            col = [(int(i == j) + gr[i] * r[j]) & 1 for j in range(n)]
            cols.append(sum(bit << j for j, bit in enumerate(col)))
        for mask in range(1 << n):
            img = 0
            for i in range(n):
                if mask >> i & 1:
                    img ^= cols[i]
            if qvals[img] != qvals[mask]:
                preserve = False
                break
        if not preserve:
            break

    return CensusReport(q1, q0, len(roots), len(root_masks), roots_q1, preserve)
