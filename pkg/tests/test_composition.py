import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilcent.composition import (
    Composition,
    SubComposition,
    check_admissibility_inequality,
    enumerate_mu,
    invariant_degrees,
    min_length,
    monotone_compositions,
    shift_matrix,
    weight_subcompositions,
)

from conftest import compositions


def all_compositions(max_total, include_decreasing=True):
    for total in range(1, max_total + 1):
        yield from monotone_compositions(total, include_decreasing)


class TestComposition:
    def test_string_round_trip(self):
        lam = Composition.from_string("2,3,4")
        assert lam.parts == (2, 3, 4)
        assert lam.to_string() == "2,3,4"
        assert Composition.from_string(lam.to_string()) == lam

    def test_basic_attributes(self):
        lam = Composition((4, 3, 2))
        assert lam.N == 9 and lam.n == 3
        assert lam.is_decreasing and not lam.is_increasing
        assert lam.part(1) == 4
        assert lam.reversed() == Composition((2, 3, 4))

    @pytest.mark.parametrize("bad", ["", "0", "-1,2", "2,1,2", "1,x"])
    def test_rejects_invalid_strings(self, bad):
        with pytest.raises(ValueError):
            Composition.from_string(bad)

    def test_rejects_oversized_total(self):
        with pytest.raises(ValueError):
            Composition((65,))

    def test_subcomposition_validation(self):
        lam = Composition((1, 2))
        with pytest.raises(ValueError):
            SubComposition(lam, (1, 3))
        with pytest.raises(ValueError):
            SubComposition(lam, (-1, 2))
        with pytest.raises(ValueError):
            SubComposition(lam, (1,))
        mu = SubComposition(lam, (1, 2))
        assert mu.contains(SubComposition(lam, (0, 2)))
        assert not SubComposition(lam, (0, 2)).contains(mu)


class TestInvariantDegrees:
    def test_examples(self):
        expected = (1, 1, 1, 1, 2, 2, 2, 3, 3)
        assert invariant_degrees(Composition((4, 3, 2))) == expected
        assert invariant_degrees(Composition((2, 3, 4))) == expected
        assert invariant_degrees(Composition((5,))) == (1,) * 5

    def test_counts_and_monotonicity(self):
        for lam in all_compositions(8, include_decreasing=False):
            degrees = invariant_degrees(lam)
            assert len(degrees) == lam.N
            assert all(a <= b for a, b in zip(degrees, degrees[1:]))
            for k in range(1, lam.n + 1):
                assert degrees.count(k) == lam.part(lam.n + 1 - k)
            assert invariant_degrees(lam.reversed()) == degrees

    def test_matches_min_length_exhaustively(self):
        for lam in all_compositions(8):
            degrees = invariant_degrees(lam)
            for r in range(1, lam.N + 1):
                assert degrees[r - 1] == min_length(lam, r)


class TestMinLength:
    def test_examples(self):
        assert min_length(Composition((2, 3, 4)), 5) == 2
        assert min_length(Composition((2, 3, 4)), 9) == 3
        assert min_length(Composition((1, 1)), 1) == 1

    def test_brute_force_agreement(self):
        for lam in all_compositions(6):
            for r in range(1, lam.N + 1):
                brute = min(
                    mu.length for mu in weight_subcompositions(lam, r)
                )
                assert min_length(lam, r) == brute

    def test_out_of_range(self):
        lam = Composition((1, 2))
        for r in (0, 4):
            with pytest.raises(ValueError):
                min_length(lam, r)


class TestEnumerateMu:
    def test_examples(self):
        lam = Composition((1, 2))
        assert [mu.parts for mu in enumerate_mu(lam, 1)] == [(0, 1), (1, 0)]
        assert [mu.parts for mu in enumerate_mu(lam, 2)] == [(0, 2)]
        big = Composition((2, 3, 4))
        assert [mu.parts for mu in enumerate_mu(big, 9)] == [(2, 3, 4)]

    @given(compositions(), st.data())
    def test_properties(self, lam, data):
        r = data.draw(st.integers(1, lam.N))
        mus = enumerate_mu(lam, r)
        assert mus
        d = min_length(lam, r)
        parts_list = [mu.parts for mu in mus]
        assert parts_list == sorted(parts_list)
        for mu in mus:
            assert mu.weight == r
            assert mu.length == d
            assert all(0 <= p <= q for p, q in zip(mu.parts, lam.parts))

    def test_support_examples(self):
        lam = Composition((1, 2))
        assert SubComposition(lam, (0, 2)).support() == (2,)
        big = Composition((2, 3, 4))
        assert SubComposition(big, (1, 0, 4)).support() == (1, 3)
        assert SubComposition(big, (2, 3, 4)).support() == (1, 2, 3)


class TestWeightMinusLengthMonotonicity:
    def test_exhaustive(self):
        """|mu| - l(mu) grows along containment, with a sharp equality case."""
        for lam in all_compositions(6, include_decreasing=False):
            for mu in itertools.product(*(range(p + 1) for p in lam.parts)):
                mu_stat = sum(mu) - sum(1 for p in mu if p)
                for nu in itertools.product(*(range(p + 1) for p in mu)):
                    nu_stat = sum(nu) - sum(1 for p in nu if p)
                    assert nu_stat <= mu_stat
                    sharp = all(
                        a == b or (a == 0 and b == 1) for a, b in zip(nu, mu)
                    )
                    assert (nu_stat == mu_stat) == sharp


class TestShiftMatrix:
    def test_examples(self):
        assert shift_matrix(Composition((1, 2))).entries == ((0, 1), (0, 0))
        assert shift_matrix(Composition((3, 3))).entries == ((0, 0), (0, 0))
        assert shift_matrix(Composition((2, 3, 4))).entries == (
            (0, 1, 2), (0, 0, 1), (0, 0, 0))

    def test_structure(self):
        for lam in all_compositions(6):
            s = shift_matrix(lam)
            n = s.n
            for i in range(1, n + 1):
                assert s.entry(i, i) == 0
                for j in range(1, n + 1):
                    assert s.entry(i, j) == lam.part(j) - min(lam.part(i), lam.part(j))
            if lam.is_increasing:
                assert all(
                    s.entry(i, j) == 0
                    for i in range(1, n + 1) for j in range(1, i)
                )

    def test_additivity_on_aligned_triples(self):
        for lam in all_compositions(6):
            s = shift_matrix(lam)
            n = s.n
            for i, j, k in itertools.product(range(1, n + 1), repeat=3):
                if abs(i - j) + abs(j - k) == abs(i - k):
                    assert s.entry(i, j) + s.entry(j, k) == s.entry(i, k)


class TestAdmissibilityInequality:
    def test_examples(self):
        lam = Composition((1, 2))
        assert check_admissibility_inequality(
            lam, SubComposition(lam, (0, 2)), (1,))
        assert check_admissibility_inequality(
            lam, SubComposition(lam, (1, 2)), (2, 1))
        big = Composition((2, 3, 4))
        assert check_admissibility_inequality(
            big, SubComposition(big, (0, 2, 4)), (2, 1))

    def test_rejects_non_permutation(self):
        lam = Composition((1, 2))
        with pytest.raises(ValueError):
            check_admissibility_inequality(
                lam, SubComposition(lam, (1, 2)), (1, 1))

    def test_always_true_on_minimal_subcompositions(self):
        """The guard never fires for the summation index set."""
        for lam in all_compositions(7):
            for r in range(1, lam.N + 1):
                for mu in enumerate_mu(lam, r):
                    d = mu.length
                    for w in itertools.permutations(range(1, d + 1)):
                        assert check_admissibility_inequality(lam, mu, w)


class TestMonotoneCompositions:
    def test_small_inventory(self):
        got = monotone_compositions(3)
        assert [c.parts for c in got] == [(1, 1, 1), (1, 2), (3,), (2, 1)]
        inc = monotone_compositions(3, include_decreasing=False)
        assert [c.parts for c in inc] == [(1, 1, 1), (1, 2), (3,)]

    def test_all_monotone_and_complete(self):
        for total in range(1, 7):
            got = monotone_compositions(total)
            assert len(set(got)) == len(got)
            for lam in got:
                assert lam.N == total
