import numpy as np
import pytest

from framekit import (
    Frame,
    classify,
    frobenius_norm,
    loewdin_orthogonalization,
    quadratic_distance,
    random_orthonormal_system,
    random_weakly_similar_tight,
    symmetric_approximation,
    verify_lemma_frame_independence,
    verify_orthonormal_minimality,
    verify_tight_minimality,
    weakly_similar,
)
from framekit.errors import BadShape, ZeroFrame

from conftest import random_frame

RT2 = np.sqrt(2.0)


class TestRandomWeaklySimilarTight:
    def test_orthonormal_input_gives_basis(self, rng):
        frame = Frame(np.eye(4))
        cand = random_weakly_similar_tight(frame, 3)
        cls = classify(cand)
        assert cls.is_normalized_tight and cls.rank == 4

    def test_candidate_structure_for_scalar_pair(self):
        # rank one forces candidates (a/sqrt 2, a/sqrt 2) with |a| = 1
        frame = Frame([[1.0], [1.0]])
        cand = random_weakly_similar_tight(frame, 11)
        v = cand.vectors.ravel()
        assert abs(abs(v[0]) - 1 / RT2) <= 1e-12
        assert abs(v[0] - v[1]) <= 1e-12

    def test_deterministic(self, rng):
        frame = random_frame(rng, 5, 8)
        a = random_weakly_similar_tight(frame, 7)
        b = random_weakly_similar_tight(frame, 7)
        np.testing.assert_array_equal(a.vectors, b.vectors)

    def test_weakly_similar_and_tight(self, rng):
        frame = random_frame(rng, 6, 9, deficient=True)
        cand = random_weakly_similar_tight(frame, 1)
        assert classify(cand).is_normalized_tight
        assert weakly_similar(frame, cand)

    def test_zero_frame_rejected(self):
        with pytest.raises(ZeroFrame):
            random_weakly_similar_tight(Frame(np.zeros((2, 2))), 0)


class TestRandomOrthonormalSystem:
    def test_square_is_basis(self):
        frame = random_orthonormal_system(4, 4, 0)
        cls = classify(frame)
        assert cls.is_normalized_tight and cls.rank == 4

    def test_single_unit_vector(self):
        frame = random_orthonormal_system(3, 1, 5)
        assert np.linalg.norm(frame.vectors[0]) == pytest.approx(1.0, abs=1e-12)

    def test_gram_identity(self):
        frame = random_orthonormal_system(6, 4, 9)
        v = frame.vectors
        assert np.abs(v.conj() @ v.T - np.eye(4)).max() <= 1e-12

    def test_rejects_wide(self):
        with pytest.raises(BadShape):
            random_orthonormal_system(2, 3, 0)


class TestTightMinimality:
    def test_scalar_pair_against_phase_sweep_oracle(self):
        # the candidate family is one-dimensional: (a/sqrt2, a/sqrt2), |a|=1
        frame = Frame([[1.0], [1.0]])
        thetas = np.linspace(0.0, 2 * np.pi, 10_000, endpoint=False)
        dists = [
            quadratic_distance(
                frame, Frame([[np.exp(1j * t) / RT2], [np.exp(1j * t) / RT2]])
            )
            for t in thetas
        ]
        assert min(dists) == pytest.approx(3 - 2 * RT2, abs=1e-6)
        assert int(np.argmin(dists)) == 0  # minimum at theta = 0

        report = verify_tight_minimality(frame, trials=1000, seed=3)
        assert report.violations == 0
        assert report.min_observed >= 3 - 2 * RT2 - 1e-9

    def test_normalized_tight_baseline_zero(self, rng):
        frame = Frame.from_synthesis(np.eye(3))
        report = verify_tight_minimality(frame, trials=200, seed=0)
        assert report.baseline <= 1e-12
        assert report.min_observed >= -1e-9
        assert report.violations == 0

    def test_random_frame_no_violations(self, rng):
        frame = random_frame(rng, 4, 7)
        report = verify_tight_minimality(frame, trials=500, seed=11)
        assert report.violations == 0

    def test_deterministic_reports(self, rng):
        frame = random_frame(rng, 5, 9, deficient=True)
        a = verify_tight_minimality(frame, trials=300, seed=21)
        b = verify_tight_minimality(frame, trials=300, seed=21)
        assert a == b

    def test_chunking_invariance(self, rng, monkeypatch):
        import framekit.verify as verify_mod

        frame = random_frame(rng, 5, 8)
        full = verify_tight_minimality(frame, trials=300, seed=4)
        monkeypatch.setattr(verify_mod, "_CHUNK", 37)
        chunked = verify_tight_minimality(frame, trials=300, seed=4)
        assert full == chunked


class TestOrthonormalMinimality:
    def test_independent_pair_no_violations(self, rng):
        frame = random_frame(rng, 2, 2)
        report = verify_orthonormal_minimality(frame, trials=1000, seed=5)
        assert report.violations == 0

    def test_orthonormal_baseline_zero(self):
        frame = Frame(np.eye(3))
        report = verify_orthonormal_minimality(frame, trials=100, seed=0)
        assert report.baseline <= 1e-12

    def test_monte_carlo_approaches_baseline(self):
        frame = Frame([[1.0, 0.0], [1.0, 1.0]])
        report = verify_orthonormal_minimality(frame, trials=100_000, seed=1)
        assert report.violations == 0
        assert report.min_observed - report.baseline < 0.05

    def test_baseline_equals_loewdin_distance_when_injective(self, rng):
        frame = random_frame(rng, 6, 4)
        report = verify_orthonormal_minimality(frame, trials=10, seed=2)
        res = loewdin_orthogonalization(frame)
        assert res.unique
        assert abs(report.baseline - res.distance) <= 1e-10

    def test_rejects_overfull_systems(self, rng):
        with pytest.raises(BadShape):
            verify_orthonormal_minimality(random_frame(rng, 2, 3), trials=10, seed=0)


class TestLemmaFrameIndependence:
    def test_identity_sums(self):
        assert verify_lemma_frame_independence(np.eye(2), pair_count=5, seed=0)

    def test_diagonal_sums(self):
        t = np.diag([3.0, 4.0])
        assert frobenius_norm(t) == 5.0
        assert verify_lemma_frame_independence(t, pair_count=5, seed=1)

    def test_rectangular_random(self, rng):
        t = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
        assert verify_lemma_frame_independence(t, pair_count=20, seed=2)
