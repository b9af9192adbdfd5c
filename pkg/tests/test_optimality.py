"""Tests for optimality predicates, counts, certificates and the oracle."""

import math
from fractions import Fraction

import pytest

from src.game import GameParams, RandomizedStrategy, majority_strategy
from src.optimality import (
    CountBasis,
    OptimalityClass,
    all_columns_permutations,
    certify,
    classify,
    count_optimal,
    is_optimal,
    is_optimal_randomized,
    matrix_from_index,
    matrix_index,
    non_permutation_columns,
    one_free_column,
    oracle_enumerate,
    permutation_orbit,
)
from src.utils.errors import EnumerationCapError, InvalidInputError
from src.value import optimal_value, randomized_value, strategy_value
from tests.helpers import all_matrices, m

ORACLE_CASES = [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4), (1, 3), (3, 1)]


class TestPredicates:
    def test_permutation_columns(self):
        assert all_columns_permutations(m("012", "120", "201"))
        assert not all_columns_permutations(m("000", "001"))
        assert non_permutation_columns(m("000", "001")) == [0, 1]

    def test_one_free_column(self):
        assert one_free_column(m("00", "01"))
        assert one_free_column(m("01", "10"))
        assert not one_free_column(m("00", "00"))


class TestClassify:
    @pytest.mark.parametrize(
        "n, d, expected",
        [
            (1, 5, OptimalityClass.TRIVIAL),
            (5, 1, OptimalityClass.TRIVIAL),
            (2, 2, OptimalityClass.TWO_POSITIONS),
            (2, 7, OptimalityClass.TWO_POSITIONS),
            (4, 2, OptimalityClass.BINARY_EVEN),
            (100, 2, OptimalityClass.BINARY_EVEN),
            (3, 2, OptimalityClass.GENERAL),
            (4, 3, OptimalityClass.GENERAL),
        ],
    )
    def test_regimes(self, n, d, expected):
        assert classify(GameParams(n=n, d=d)) is expected


class TestIsOptimal:
    def test_binary_length_three(self):
        f = m("000", "001")
        assert not is_optimal(f)
        assert strategy_value(f) == Fraction(2, 3)
        assert optimal_value(f.params) == Fraction(3, 4)

    def test_two_positions_allow_a_free_column(self):
        assert is_optimal(m("00", "01"))
        assert is_optimal(m("01", "21", "11"))
        assert not is_optimal(m("00", "00"))

    def test_binary_even_allow_a_free_column(self):
        assert is_optimal(m("0010", "0101"))
        assert not is_optimal(m("0000", "0011"))

    def test_general_needs_every_column(self):
        assert is_optimal(m("012", "120", "201"))
        assert not is_optimal(m("012", "120", "200"))

    def test_agrees_with_values(self):
        for n, d in [(2, 2), (3, 2), (4, 2), (2, 3)]:
            params = GameParams(n=n, d=d)
            target = optimal_value(params)
            for f in all_matrices(params):
                assert is_optimal(f) == (strategy_value(f) == target)


class TestCountOptimal:
    @pytest.mark.parametrize(
        "n, d, expected, basis",
        [
            (3, 2, 8, CountBasis.THEOREM),
            (3, 3, 216, CountBasis.THEOREM),
            (2, 2, 12, CountBasis.DERIVED),
            (4, 2, 80, CountBasis.DERIVED),
            (2, 3, 288, CountBasis.DERIVED),
            (2, 4, 11712, CountBasis.DERIVED),
            (1, 4, 24, CountBasis.DERIVED),
            (6, 1, 1, CountBasis.DERIVED),
        ],
    )
    def test_examples(self, n, d, expected, basis):
        result = count_optimal(GameParams(n=n, d=d))
        assert result.count == expected
        assert result.basis is basis

    def test_large_counts_are_exact(self):
        result = count_optimal(GameParams(n=100, d=100))
        assert result.count == math.factorial(100) ** 100


class TestPermutationOrbit:
    @pytest.mark.parametrize("n, d", [(3, 2), (2, 3), (3, 3)])
    def test_size_and_structure(self, n, d):
        orbit = list(permutation_orbit(GameParams(n=n, d=d)))
        assert len(orbit) == math.factorial(d) ** n
        assert len(set(orbit)) == len(orbit)
        assert all(all_columns_permutations(g) for g in orbit)


class TestOracle:
    @pytest.mark.parametrize("n, d", ORACLE_CASES)
    def test_matches_theory(self, n, d):
        params = GameParams(n=n, d=d)
        result = oracle_enumerate(params, limit=params.matrix_count)
        assert result.max_value == strategy_value(majority_strategy(params))
        assert result.max_value == optimal_value(params)
        assert result.optimizer_count == count_optimal(params).count
        assert result.scanned == params.matrix_count

        expected = [matrix_index(f) for f in all_matrices(params) if is_optimal(f)]
        assert list(result.optimizer_indices) == expected

    @pytest.mark.parametrize("n, d", [(3, 2), (5, 2), (3, 3)])
    def test_general_optimizers_are_the_orbit(self, n, d):
        params = GameParams(n=n, d=d)
        result = oracle_enumerate(params)
        assert set(result.optimizers) == set(permutation_orbit(params))

    def test_optimizers_dropped_beyond_limit(self):
        result = oracle_enumerate(GameParams(n=2, d=4))
        assert result.optimizer_count == 11712
        assert result.optimizer_indices is None
        assert result.optimizers is None

    def test_partition_merge(self):
        params = GameParams(n=3, d=3)
        whole = oracle_enumerate(params)
        cut = 7000
        left = oracle_enumerate(params, start=0, stop=cut)
        right = oracle_enumerate(params, start=cut)
        merged = left.merge(right)
        assert merged.max_value == whole.max_value
        assert merged.optimizer_count == whole.optimizer_count
        assert merged.optimizer_indices == whole.optimizer_indices
        assert merged.scanned == whole.scanned

    def test_merge_keeps_the_better_half(self):
        params = GameParams(n=2, d=2)
        low = oracle_enumerate(params, start=0, stop=1)
        whole = oracle_enumerate(params)
        assert low.max_value < whole.max_value
        assert low.merge(whole).optimizer_count == whole.optimizer_count

    def test_merge_rejects_other_games(self):
        with pytest.raises(InvalidInputError):
            oracle_enumerate(GameParams(n=2, d=2)).merge(oracle_enumerate(GameParams(n=3, d=2)))

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            oracle_enumerate(GameParams(n=3, d=3), cap=100)

    def test_force_cannot_pass_index_range(self):
        params = GameParams(n=8, d=4)
        assert params.matrix_count > 2**63 - 1
        with pytest.raises(EnumerationCapError):
            oracle_enumerate(params, force=True)

    def test_bad_range(self):
        with pytest.raises(InvalidInputError):
            oracle_enumerate(GameParams(n=2, d=2), start=5, stop=3)

    def test_matrix_index(self):
        params = GameParams(n=2, d=3)
        for t, f in enumerate(all_matrices(params)):
            assert matrix_index(f) == t
            assert matrix_from_index(params, t) == f
        with pytest.raises(InvalidInputError):
            matrix_from_index(params, params.matrix_count)


class TestRandomized:
    def test_mixture_of_optimal_matrices(self):
        params = GameParams(n=3, d=2)
        orbit = list(permutation_orbit(params))
        r = RandomizedStrategy(((Fraction(1, 3), orbit[0]), (Fraction(2, 3), orbit[5])))
        assert is_optimal_randomized(r)
        assert randomized_value(r) == optimal_value(params)

    def test_any_suboptimal_component_loses(self):
        params = GameParams(n=3, d=2)
        r = RandomizedStrategy(
            ((Fraction(99, 100), majority_strategy(params)), (Fraction(1, 100), m("000", "001")))
        )
        assert not is_optimal_randomized(r)
        assert randomized_value(r) < optimal_value(params)


class TestCertify:
    def test_majority_is_optimal(self):
        cert = certify(majority_strategy(GameParams(n=3, d=3)))
        assert cert.optimal
        assert cert.permutation_columns
        assert cert.gap == 0
        assert cert.regime is OptimalityClass.GENERAL

    def test_identical_rows(self):
        cert = certify(m("00", "00"))
        assert not cert.optimal
        assert cert.gap == Fraction(1, 4)

    def test_free_column(self):
        cert = certify(m("00", "10"))
        assert cert.optimal
        assert not cert.permutation_columns
        assert cert.one_free_column
        assert cert.gap == 0

    def test_value_skipped_beyond_cap(self):
        cert = certify(majority_strategy(GameParams(n=30, d=5)), cap=1000)
        assert cert.optimal
        assert cert.value is None and cert.gap is None
        assert cert.optimal_value == optimal_value(GameParams(n=30, d=5))

    def test_randomized(self):
        params = GameParams(n=2, d=2)
        r = RandomizedStrategy(((Fraction(1, 2), majority_strategy(params)), (Fraction(1, 2), m("00", "00"))))
        cert = certify(r)
        assert cert.permutation_columns is None and cert.one_free_column is None
        assert not cert.optimal
        assert cert.gap == Fraction(1, 8)
