import math

import numpy as np
import pytest

from spinchaos import (
    ChainSpec,
    ParameterError,
    S0,
    SpacingSample,
    build_hamiltonian,
    build_sector,
    diagonalize,
    eta,
    npc,
    unfolded_spacings,
)


def wd_cdf(s):
    return 1.0 - math.exp(-math.pi * s * s / 4.0)


class TestDiagonalize:
    def test_two_site_block_eigenvalues(self):
        j, h1, h2 = 1.7, 0.9, -0.4
        delta = h1 - h2
        ham = build_hamiltonian(
            ChainSpec(length=2, j_z=j, j_xy=j, fields=(h1, h2)), build_sector(2, 1)
        )
        dec = diagonalize(ham)
        splitting = math.hypot(j, delta)
        np.testing.assert_allclose(
            dec.eigenvalues,
            [-j / 4.0 - splitting / 2.0, -j / 4.0 + splitting / 2.0],
            atol=1e-12,
        )

    def test_diagonal_matrix(self):
        values = np.array([3.0, -1.0, 2.0, 0.5])
        dec = diagonalize(np.diag(values))
        np.testing.assert_allclose(dec.eigenvalues, np.sort(values), atol=0.0)
        # eigenvectors are signed coordinate vectors
        np.testing.assert_allclose(np.abs(dec.eigenvectors).sum(axis=0), 1.0, atol=1e-12)
        np.testing.assert_allclose(np.abs(dec.eigenvectors).max(axis=0), 1.0, atol=1e-12)

    def test_random_symmetric_reconstruction(self):
        rng = np.random.default_rng(0)
        matrix = rng.normal(size=(50, 50))
        matrix = matrix + matrix.T
        dec = diagonalize(matrix)
        rebuilt = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.T
        assert np.abs(rebuilt - matrix).max() <= 1e-9

    def test_eigenvalue_sum_matches_trace(self):
        rng = np.random.default_rng(1)
        fields = tuple(rng.normal(size=8))
        ham = build_hamiltonian(
            ChainSpec(length=8, j_z=1.0, j_xy=1.0, fields=fields, edge_defects=True),
            build_sector(8, 4),
        )
        dec = diagonalize(ham)
        dim = dec.dimension
        bound = 1e-8 * np.abs(ham.matrix).max() * dim
        assert abs(dec.eigenvalues.sum() - np.trace(ham.matrix)) <= bound

    def test_rejects_non_finite(self):
        bad = np.array([[1.0, np.nan], [np.nan, 1.0]])
        with pytest.raises(ParameterError):
            diagonalize(bad)

    def test_rejects_asymmetric(self):
        with pytest.raises(ParameterError):
            diagonalize(np.array([[1.0, 2.0], [2.0000001, 1.0]]))


class TestNpc:
    def test_coordinate_vector(self):
        v = np.zeros(10)
        v[3] = 1.0
        assert npc(v) == 1.0

    def test_uniform_over_four_registers(self):
        assert abs(npc(np.full(4, 0.5)) - 4.0) < 1e-12

    @pytest.mark.parametrize("delta_over_j", [0.0, 0.5, 1.0, 2.0, 10.0])
    def test_doublet_identity_with_concurrence(self, delta_over_j):
        # npc * (1 - C^2/2) = 1 for the analytic doublet eigenvectors
        j = 1.0
        splitting = math.hypot(j, delta_over_j)
        theta = math.atan2(j, delta_over_j)
        conc = abs(j) / splitting
        for vec in (
            np.array([math.cos(theta / 2), math.sin(theta / 2)]),
            np.array([-math.sin(theta / 2), math.cos(theta / 2)]),
        ):
            assert abs(npc(vec) * (1.0 - conc * conc / 2.0) - 1.0) < 1e-12

    def test_invariance_under_sign_flip_and_permutation(self):
        rng = np.random.default_rng(2)
        v = rng.normal(size=30)
        v /= np.linalg.norm(v)
        value = npc(v)
        assert npc(-v) == value
        assert npc(v[rng.permutation(30)]) == pytest.approx(value, abs=1e-12)

    def test_zero_vector_rejected(self):
        with pytest.raises(ParameterError):
            npc(np.zeros(5))

    def test_unnormalized_rejected(self):
        with pytest.raises(ParameterError):
            npc(np.full(4, 0.6))

    def test_range_bounds(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            v = rng.normal(size=17)
            v /= np.linalg.norm(v)
            assert 1.0 <= npc(v) <= 17.0 + 1e-9


class TestUnfoldedSpacings:
    def test_arithmetic_sequence_gives_unit_spacings(self):
        sample = unfolded_spacings(np.arange(100.0), edge_trim=0.0)
        assert sample.spacings.shape == (99,)
        np.testing.assert_allclose(sample.spacings, 1.0, atol=0.0)

    def test_exact_degeneracy_gives_zero_spacing(self):
        levels = np.sort(np.concatenate([np.arange(30.0), [7.0]]))
        sample = unfolded_spacings(levels, edge_trim=0.0)
        assert 0.0 in sample.spacings

    def test_retained_count_for_924_levels(self):
        rng = np.random.default_rng(4)
        levels = np.cumsum(rng.exponential(size=924))
        sample = unfolded_spacings(levels, edge_trim=0.1)
        # ceil(0.1 * 924) = 93 trimmed per edge -> 738 retained -> 737 spacings
        assert sample.spacings.shape == (737,)
        assert abs(sample.spacings.mean() - 1.0) <= 1e-9

    def test_too_few_levels_rejected(self):
        with pytest.raises(ParameterError):
            unfolded_spacings(np.arange(19.0), edge_trim=0.0)
        with pytest.raises(ParameterError):
            unfolded_spacings(np.arange(24.0), edge_trim=0.1)

    def test_trim_fraction_bounds(self):
        with pytest.raises(ParameterError):
            unfolded_spacings(np.arange(100.0), edge_trim=0.5)
        with pytest.raises(ParameterError):
            unfolded_spacings(np.arange(100.0), edge_trim=-0.1)

    def test_descending_input_rejected(self):
        with pytest.raises(ParameterError):
            unfolded_spacings(np.arange(100.0)[::-1])


class TestEta:
    def test_reference_crossing_matches_quoted_value(self):
        # quoted truncated value 0.4729...
        assert 0.4729 <= S0 < 0.4730
        assert abs(math.exp(-S0) - (math.pi * S0 / 2) * math.exp(-math.pi * S0**2 / 4)) < 1e-11

    def test_degenerate_sample_above_crossing(self):
        # all spacings at 1.0 >= S0: histogram mass below S0 is zero, so the
        # numerator is minus the reference mass; both integrals by hand
        sample = SpacingSample(spacings=np.ones(500))
        expected = -wd_cdf(S0) / ((1.0 - math.exp(-S0)) - wd_cdf(S0))
        assert eta(sample) == pytest.approx(expected, abs=1e-12)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(5)
        draws = rng.exponential(size=4000)
        draws /= draws.mean()
        value = eta(SpacingSample(spacings=draws))
        shuffled = draws.copy()
        rng.shuffle(shuffled)
        assert eta(SpacingSample(spacings=shuffled)) == value

    def test_poisson_and_wigner_quick_calibration(self):
        rng = np.random.default_rng(6)
        poisson = rng.exponential(size=200_000)
        poisson /= poisson.mean()
        assert eta(SpacingSample(spacings=poisson)) == pytest.approx(1.0, abs=0.05)

        wigner = np.sqrt(-(4.0 / math.pi) * np.log(rng.uniform(size=200_000)))
        wigner /= wigner.mean()
        assert eta(SpacingSample(spacings=wigner)) == pytest.approx(0.0, abs=0.05)

    def test_bad_bin_width_rejected(self):
        sample = SpacingSample(spacings=np.ones(10))
        with pytest.raises(ParameterError):
            eta(sample, bin_width=0.0)

    def test_empty_sample_rejected_at_construction(self):
        with pytest.raises(ParameterError):
            SpacingSample(spacings=np.array([]))

    def test_unnormalized_sample_rejected(self):
        with pytest.raises(ParameterError):
            SpacingSample(spacings=np.full(10, 2.0))
