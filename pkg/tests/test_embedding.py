import numpy as np
import pytest

import siegel_runge as sr


PRODUCT_POINT = sr.SiegelPoint(1j, 0, 1.3j)
GENERIC_POINT = sr.SiegelPoint(0.05 + 1.1j, -0.11 + 0.2j, 0.23 + 1.2j)


class TestPsi:
    def test_period_two_projectively(self):
        tau = GENERIC_POINT
        shifted = sr.SiegelPoint.from_matrix(tau.matrix + 2 * np.array([[1, -1], [-1, 2]]))
        assert sr.projective_distance(sr.psi(tau), sr.psi(shifted)) <= 1e-9

    def test_level2_invariance(self):
        rng = np.random.default_rng(61)
        taus = sr.sample_reduced_points(2, seed=61)
        for _ in range(5):
            g = sr.random_level2_matrix(rng)
            for tau in taus:
                d = sr.projective_distance(sr.psi(sr.act(g, tau)), sr.psi(tau))
                assert d <= 1e-7

    def test_full_group_permutes_magnitudes(self):
        rng = np.random.default_rng(62)
        for tau in sr.sample_reduced_points(2, seed=62):
            for _ in range(3):
                g = sr.random_symplectic_matrix(rng, entry_bound=10)
                _, _, c, d = g.blocks
                den = c @ tau.matrix + d
                det = den[0, 0] * den[1, 1] - den[0, 1] * den[1, 0]
                lhs = np.sort(np.abs(sr.psi(sr.act(g, tau), 1e-10).coords))
                rhs = abs(det) ** 2 * np.sort(np.abs(sr.psi(tau, 1e-10).coords))
                assert np.max(np.abs(lhs - rhs)) <= 1e-7 * np.max(rhs)

    def test_all_zero_coordinates_rejected(self):
        with pytest.raises(sr.InconsistencyError):
            sr.ProjectivePoint(np.full(10, 1e-12 + 0j), 1e-8)

    def test_distance_separates_points(self):
        p = sr.psi(GENERIC_POINT)
        q = sr.psi(PRODUCT_POINT)
        assert sr.projective_distance(p, p) <= 1e-12
        assert sr.projective_distance(p, q) > 1e-3


class TestVanishing:
    def test_product_point_single_zero(self):
        assert sr.near_zero_coordinates(sr.psi(sr.SiegelPoint(1j, 0, 1j))) == {9}

    def test_generic_points_no_zero(self):
        for tau in sr.sample_reduced_points(20, seed=63):
            assert sr.near_zero_coordinates(sr.psi(tau)) == set()

    def test_decay_along_one_sided_path(self):
        # With Im(tau1) pinned at 1 only four coordinates decay: the three
        # even characteristics with a2 = 1/2 plus the identically-zero
        # ((1/2,1/2),(1/2,1/2)).  The six-coordinate decay shows up only when
        # the whole imaginary part grows, tested below.
        counts = []
        for t in (2, 5, 10, 20):
            p = sr.psi(sr.SiegelPoint(1j, 0, t * 1j))
            counts.append(len(sr.near_zero_coordinates(p)))
        assert counts == sorted(counts)
        assert counts[-1] == 4
        assert sr.near_zero_coordinates(sr.psi(sr.SiegelPoint(1j, 0, 50j))) == {4, 5, 8, 9}

    def test_decay_toward_deepest_cusp(self):
        p = sr.psi(sr.SiegelPoint(20j, 0, 20j))
        assert len(sr.near_zero_coordinates(p)) >= 6


class TestProductLocusDetector:
    def test_product_point(self):
        assert sr.is_product_locus(PRODUCT_POINT) is True

    def test_generic_point(self):
        assert sr.is_product_locus(GENERIC_POINT) is False

    def test_invariant_under_conjugation(self):
        rng = np.random.default_rng(64)
        for _ in range(10):
            g = sr.random_symplectic_matrix(rng, entry_bound=20)
            assert sr.is_product_locus(sr.act(g, PRODUCT_POINT)) is True

    def test_indeterminate_near_cusp(self):
        assert sr.is_product_locus(sr.SiegelPoint(1j, 0, 5j)) is None


class TestRelationRank:
    def test_generic_rank_is_five(self):
        # The ten fourth powers satisfy five independent linear relations:
        # they span the five-dimensional space of weight-2 level-2 forms and
        # the embedded threefold is a quartic hypersurface of a P^4.  A
        # quartic hypersurface that is three-dimensional cannot live in P^5,
        # so a sampled rank of 6 is impossible; the observed spectrum has a
        # machine-precision cliff after the fifth value.
        points = [sr.psi(t) for t in sr.sample_reduced_points(50, seed=1)]
        s = sr.relation_singular_values(points)
        assert sr.relation_rank(points) == 5
        assert s[4] / s[5] >= 1e10

    def test_degenerate_repeated_sample(self):
        points = [sr.psi(GENERIC_POINT)] * 12
        assert sr.relation_rank(points) == 1

    def test_diagonal_sublocus_rank(self):
        rng = np.random.default_rng(65)
        points = []
        for _ in range(20):
            tau = sr.SiegelPoint(
                complex(rng.uniform(-0.5, 0.5), rng.uniform(0.7, 1.8)),
                0.0,
                complex(rng.uniform(-0.5, 0.5), rng.uniform(0.7, 1.8)),
            )
            points.append(sr.psi(tau))
        rank = sr.relation_rank(points)
        assert rank <= 5  # observed: 4 on the diagonal sublocus

    def test_too_few_samples(self):
        with pytest.raises(sr.InvalidInputError):
            sr.relation_rank([sr.psi(GENERIC_POINT)] * 9)


class TestTube:
    def test_membership(self):
        tau = sr.SiegelPoint(1j, 0, 1j)
        assert sr.in_tube(tau, 0.9) is True
        assert sr.in_tube(tau, 1.1) is False

    def test_boundary_parameter_allowed(self):
        assert sr.in_tube(sr.SiegelPoint(1j, 0, 1j), sr.MIN_TUBE_PARAMETER) is True

    def test_small_parameter_rejected(self):
        with pytest.raises(sr.InvalidInputError):
            sr.in_tube(sr.SiegelPoint(1j, 0, 1j), 0.5)
        with pytest.raises(sr.InvalidInputError):
            sr.TubeParameter(0.5)
