import random

import pytest

from delpezzo1.lattice import (
    F2Space,
    apply_matrix,
    build_hyperbolic,
    check_pairing_tuple,
    enumerate_short_vectors,
    f8s_iso_check,
    is_isometry,
    linalg_lemma_check,
    mat_mul,
    mod2_quadratic_census,
    orth_complement,
    perm_compose,
    perm_isometry,
    picard_model_check,
    standard_space,
)


class TestHyperbolic:
    def test_omega_self_pairing(self):
        for d in (1, 2):
            marked = build_hyperbolic(d)
            assert marked.lattice.rank == 10 - d
            assert marked.lattice.pair(marked.omega, marked.omega) == d

    def test_basis_orthogonality(self):
        lat = build_hyperbolic(1).lattice
        e = lambda i: tuple(int(k == i) for k in range(9))
        assert lat.pair(e(0), e(0)) == 1
        for i in range(1, 9):
            assert lat.pair(e(i), e(i)) == -1
            assert lat.pair(e(0), e(i)) == 0

    def test_bad_degree_rejected(self):
        with pytest.raises(ValueError):
            build_hyperbolic(3)


class TestComplement:
    def test_e8_shape(self):
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        assert comp.lattice.rank == 8
        assert comp.lattice.is_even
        assert abs(comp.lattice.determinant) == 1
        for b in comp.ambient_basis:
            assert marked.lattice.pair(b, marked.omega) == 0

    def test_e7_shape(self):
        marked = build_hyperbolic(2)
        comp = orth_complement(marked.lattice, marked.omega)
        assert comp.lattice.rank == 7
        assert abs(comp.lattice.determinant) == 2

    def test_nonprimitive_rejected(self):
        lat = build_hyperbolic(1).lattice
        with pytest.raises(ValueError):
            orth_complement(lat, tuple([2] * 9))

    def test_null_vector_rejected(self):
        lat = build_hyperbolic(1).lattice
        null = tuple([1, 1] + [0] * 7)  # e0 + e1 has self-pairing 0
        with pytest.raises(ValueError):
            orth_complement(lat, null)


class TestShortVectors:
    def test_root_counts(self):
        for d, expected in ((1, 240), (2, 126)):
            marked = build_hyperbolic(d)
            comp = orth_complement(marked.lattice, marked.omega)
            roots = enumerate_short_vectors(comp.lattice, -2)
            assert len(roots) == expected
            assert all(comp.lattice.norm(r) == -2 for r in roots)
            assert roots == sorted(roots)

    def test_odd_norm_absent_on_even_lattice(self):
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        assert enumerate_short_vectors(comp.lattice, -1) == []

    def test_zero_norm_is_empty(self):
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        assert enumerate_short_vectors(comp.lattice, 0) == []

    def test_indefinite_rejected(self):
        lat = build_hyperbolic(1).lattice
        with pytest.raises(ValueError):
            enumerate_short_vectors(lat, -2)

    def test_antipodal_closure(self):
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        roots = set(enumerate_short_vectors(comp.lattice, -2))
        assert all(tuple(-c for c in r) in roots for r in roots)

    def test_root_pairing_distribution(self):
        # structural signature of the rank-8 root system: from any fixed
        # root, 56 roots pair to -1, 56 to +1, 126 to 0, plus the
        # antipode at +2; validates Gram and enumeration together
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        lat = comp.lattice
        roots = enumerate_short_vectors(lat, -2)
        fixed = roots[0]
        counts = {}
        for s in roots:
            val = lat.pair(fixed, s)
            counts[val] = counts.get(val, 0) + 1
        assert counts == {-2: 1, -1: 56, 0: 126, 1: 56, 2: 1}


class TestPermIsometry:
    def test_identity(self):
        m = perm_isometry(tuple(range(1, 9)), 1)
        assert all(m[i][i] == 1 for i in range(9))

    def test_swap_is_isometry_fixing_omega(self):
        marked = build_hyperbolic(1)
        tau = (2, 1, 3, 4, 5, 6, 7, 8)
        m = perm_isometry(tau, 1)
        assert is_isometry(marked.lattice, m)
        assert apply_matrix(m, marked.omega) == marked.omega

    def test_homomorphism_on_random_pairs(self):
        rng = random.Random(83)
        base = list(range(1, 9))
        for _ in range(100):
            sigma = tuple(rng.sample(base, 8))
            tau = tuple(rng.sample(base, 8))
            lhs = perm_isometry(perm_compose(sigma, tau), 1)
            rhs = mat_mul(perm_isometry(sigma, 1), perm_isometry(tau, 1))
            assert lhs == rhs

    def test_invalid_permutation_rejected(self):
        with pytest.raises(ValueError):
            perm_isometry((1, 1, 3, 4, 5, 6, 7, 8), 1)


class TestF8S:
    def test_full_report(self):
        rep = f8s_iso_check()
        assert rep.complement_dimension == 8
        assert rep.bijective
        assert rep.equivariant_swap and rep.equivariant_cycle
        assert rep.all_ones_fixed
        assert rep.passed

    def test_induced_form_is_ones_off_diagonal(self):
        rep = f8s_iso_check()
        for i, row in enumerate(rep.induced_form_rows):
            assert row == (0xFF ^ (1 << i))


class TestPicard:
    def test_gram_identities(self):
        rep = picard_model_check()
        assert rep.canonical_self_pairing == 1
        assert rep.diag_pairings == (-2,) * 8
        assert rep.off_diag_pairings_ok
        assert rep.mod2_independent
        assert rep.mod2_gram_det == 1
        assert rep.passed

    def test_mod2_tuple_satisfies_lemma(self):
        # the eight reduced vectors pair to 1 off-diagonal and 0 on it,
        # so the independence lemma applies to them verbatim
        space = F2Space(8, tuple(0xFF ^ (1 << i) for i in range(8)))
        vectors = [1 << i for i in range(8)]
        independent, vanish = check_pairing_tuple(space, vectors)
        assert independent and vanish


class TestCensus:
    def test_counts_and_reflections(self):
        rep = mod2_quadratic_census()
        assert rep.nonzero_q1 == 120
        assert rep.nonzero_q0 == 135
        assert rep.nonzero_q1 + rep.nonzero_q0 == 255
        assert rep.root_count == 240
        assert rep.root_class_count == 120
        assert rep.root_classes_all_q1
        assert rep.reflections_preserve_q
        assert rep.passed

    def test_only_defined_for_degree_one(self):
        with pytest.raises(ValueError):
            mod2_quadratic_census(2)

    def test_polarization_identity_on_all_pairs(self):
        # q(x + y) = q(x) + q(y) + (x, y) mod 2, checked on every pair
        marked = build_hyperbolic(1)
        comp = orth_complement(marked.lattice, marked.omega)
        lat = comp.lattice
        n = lat.rank

        def lift(mask):
            return tuple(mask >> i & 1 for i in range(n))

        q = [(lat.norm(lift(m)) // 2) & 1 for m in range(1 << n)]
        for a in range(1 << n):
            va = lift(a)
            for b in range(a, 1 << n):
                vb = lift(b)
                assert q[a ^ b] == (q[a] + q[b] + lat.pair(va, vb)) & 1


class TestIndependenceLemma:
    def test_exhaustive_small_dimensions(self):
        total = 0
        for dim in (1, 2, 3, 4):
            rep = linalg_lemma_check(standard_space(dim), 2, exhaustive=True)
            assert rep.independence_failures == 0
            assert rep.vanish_failures == 0
            total += rep.instances
        assert total > 0

    def test_randomized_dimension_eight(self):
        rng = random.Random(89)
        for m, trials in ((2, 100), (4, 100), (6, 50)):
            rep = linalg_lemma_check(standard_space(8), m, trials=trials, rng=rng)
            assert rep.instances == trials
            assert rep.passed

    def test_odd_tuple_size_rejected(self):
        with pytest.raises(ValueError):
            linalg_lemma_check(standard_space(4), 3, trials=1)
