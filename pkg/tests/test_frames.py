import json

import numpy as np
import pytest

from framekit import (
    Frame,
    classify,
    frame_bounds,
    frame_from_dict,
    frame_to_dict,
    haar_isometry,
    load_frame,
    polar_decompose,
    quadratic_distance,
    synthesis_matrix,
    weakly_similar,
)
from framekit.errors import IndexMismatch, ParseError, ZeroFrame
from framekit.linalg import frobenius_norm

from conftest import random_frame

RT2 = np.sqrt(2.0)


class TestSynthesisMatrix:
    def test_columns_are_vectors(self):
        f = Frame([[1.0, 0.0], [0.0, 2.0]])
        np.testing.assert_array_equal(synthesis_matrix(f), [[1, 0], [0, 2]])

    def test_repeated_scalar(self):
        f = Frame([[1.0], [1.0]])
        np.testing.assert_array_equal(synthesis_matrix(f), [[1, 1]])

    def test_even_odd_truncation_columns(self):
        rows = np.zeros((4, 4))
        rows[1, 1] = 1.0
        rows[3, 3] = 1.0
        f = Frame(rows)
        mat = synthesis_matrix(f)
        assert np.count_nonzero(mat) == 2
        assert mat[1, 1] == 1 and mat[3, 3] == 1


class TestFrameBounds:
    def test_diagonal_pair(self):
        b = frame_bounds(Frame([[1.0, 0.0], [0.0, 2.0]]))
        assert b.lower == pytest.approx(1.0, abs=1e-12)
        assert b.upper == pytest.approx(4.0, abs=1e-12)

    def test_orthonormal_basis(self):
        b = frame_bounds(Frame(np.eye(3)))
        assert b.lower == pytest.approx(1.0, abs=1e-12)
        assert b.upper == pytest.approx(1.0, abs=1e-12)

    def test_doubled_scalar(self):
        b = frame_bounds(Frame([[1.0], [1.0]]))
        assert b.lower == pytest.approx(2.0, abs=1e-12)
        assert b.upper == pytest.approx(2.0, abs=1e-12)

    def test_zero_frame_rejected(self):
        with pytest.raises(ZeroFrame):
            frame_bounds(Frame(np.zeros((2, 2))))

    def test_frame_inequality_sampled(self, rng):
        frame = random_frame(rng, 6, 9)
        b = frame_bounds(frame)
        f = synthesis_matrix(frame)
        span = np.linalg.svd(f, full_matrices=False)[0]
        for k in range(200):
            coeff = haar_isometry(span.shape[1], 1, rng)
            x = span @ coeff
            total = np.sum(np.abs(f.conj().T @ x) ** 2)
            assert b.lower - 1e-9 <= total <= b.upper + 1e-9


class TestClassify:
    def test_orthonormal_pair(self):
        cls = classify(Frame(np.eye(2)))
        assert cls.is_normalized_tight and cls.is_tight and cls.is_frame_of_span
        assert cls.kernel_dim == 0 and cls.rank == 2

    def test_tight_not_normalized(self):
        cls = classify(Frame([[1.0], [1.0]]))
        assert cls.is_tight and not cls.is_normalized_tight
        assert cls.kernel_dim == 1

    def test_even_odd_span_tight(self):
        rows = np.zeros((4, 4))
        rows[1, 1] = 1.0
        rows[3, 3] = 1.0
        cls = classify(Frame(rows))
        assert cls.is_normalized_tight
        assert cls.kernel_dim == 2

    def test_zero_frame_total(self):
        cls = classify(Frame(np.zeros((3, 2))))
        assert not cls.is_frame_of_span
        assert cls.rank == 0 and cls.kernel_dim == 3

    def test_polar_factor_always_normalized_tight(self, rng):
        for deficient in (False, True):
            frame = random_frame(rng, 7, 11, deficient=deficient)
            w = polar_decompose(synthesis_matrix(frame)).W
            assert classify(Frame.from_synthesis(w)).is_normalized_tight


class TestWeaklySimilar:
    def test_reflexive(self, rng):
        frame = random_frame(rng, 4, 6)
        assert weakly_similar(frame, frame)

    def test_scalar_pair_against_tight(self):
        a = Frame([[1.0], [1.0]])
        b = Frame([[1 / RT2], [1 / RT2]])
        assert weakly_similar(a, b)

    def test_rank_mismatch(self):
        a = Frame(np.eye(2))
        b = Frame([[1.0, 0.0], [0.0, 0.0]])
        assert not weakly_similar(a, b)

    def test_index_mismatch(self):
        with pytest.raises(IndexMismatch):
            weakly_similar(Frame(np.eye(2)), Frame(np.eye(3)))

    def test_equivalence_relation(self, rng):
        base = random_frame(rng, 5, 8, deficient=True)
        f = synthesis_matrix(base)
        # same-kernel companions: left-multiply by invertible maps
        others = []
        for _ in range(3):
            t = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
            t += 5 * np.eye(5)
            others.append(Frame.from_synthesis(t @ f))
        frames = [base, *others]
        for x in frames:
            assert weakly_similar(x, x)
            for y in frames:
                assert weakly_similar(x, y) == weakly_similar(y, x)
                for z in frames:
                    if weakly_similar(x, y) and weakly_similar(y, z):
                        assert weakly_similar(x, z)


class TestQuadraticDistance:
    def test_self_zero(self, rng):
        frame = random_frame(rng, 3, 5)
        assert quadratic_distance(frame, frame) == 0.0

    def test_unit_single(self):
        assert quadratic_distance(Frame([[1.0]]), Frame([[0.0]])) == 1.0

    def test_scalar_pair_value(self):
        d = quadratic_distance(Frame([[1.0], [1.0]]), Frame([[1 / RT2], [1 / RT2]]))
        assert d == pytest.approx(3 - 2 * RT2, abs=1e-15)

    def test_matches_frobenius(self, rng):
        a = random_frame(rng, 6, 10)
        b = random_frame(rng, 6, 10)
        direct = quadratic_distance(a, b)
        via_matrix = frobenius_norm(synthesis_matrix(a) - synthesis_matrix(b)) ** 2
        assert abs(direct - via_matrix) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(IndexMismatch):
            quadratic_distance(Frame([[1.0]]), Frame([[1.0, 0.0]]))


class TestFileFormat:
    def test_round_trip(self, rng, tmp_path):
        frame = random_frame(rng, 3, 4)
        doc = frame_to_dict(frame)
        path = tmp_path / "frame.json"
        path.write_text(json.dumps(doc))
        loaded = load_frame(path)
        np.testing.assert_array_equal(loaded.vectors, frame.vectors)

    def test_real_field(self):
        doc = {"ambient_dim": 2, "field": "real", "vectors": [[1, 0], [0, 2]]}
        frame = frame_from_dict(doc)
        np.testing.assert_array_equal(frame.vectors, [[1, 0], [0, 2]])

    def test_ragged_row_names_offender(self):
        doc = {"ambient_dim": 2, "field": "real", "vectors": [[1, 0], [1]]}
        with pytest.raises(ParseError, match="vector 1"):
            frame_from_dict(doc)

    def test_bad_complex_entry(self):
        doc = {"ambient_dim": 1, "field": "complex", "vectors": [[[1, 0]], [[1]]]}
        with pytest.raises(ParseError, match="vector 1"):
            frame_from_dict(doc)

    def test_bad_field(self):
        with pytest.raises(ParseError):
            frame_from_dict({"ambient_dim": 1, "field": "rational", "vectors": [[1]]})

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_frame(tmp_path / "absent.json")
