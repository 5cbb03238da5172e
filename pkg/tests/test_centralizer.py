import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilcent.centralizer import (
    BasisIndex,
    GlMatrix,
    basis_element,
    basis_list,
    expand_in_basis,
    is_admissible,
    matrix_commutator,
    nilpotent_matrix,
    pyramid,
    structure_constants,
    unit_support,
    verify_centralizer,
)
from nilcent.composition import Composition, monotone_compositions


def all_compositions(max_total):
    for total in range(1, max_total + 1):
        yield from monotone_compositions(total)


class TestPyramid:
    def test_decreasing_example(self):
        pyr = pyramid(Composition((4, 3, 2)))
        assert pyr.row(5) == 2 and pyr.col(5) == 1

    def test_small_example(self):
        pyr = pyramid(Composition((1, 2)))
        assert [(pyr.row(k), pyr.col(k)) for k in (1, 2, 3)] == [
            (1, 1), (2, 1), (2, 2)]

    def test_single_row(self):
        pyr = pyramid(Composition((5,)))
        assert all(pyr.row(k) == 1 and pyr.col(k) == k for k in range(1, 6))

    def test_row_col_pair_injective(self):
        for lam in all_compositions(6):
            pyr = pyramid(lam)
            pairs = {(pyr.row(k), pyr.col(k)) for k in range(1, lam.N + 1)}
            assert len(pairs) == lam.N


class TestNilpotent:
    def test_decreasing_example(self):
        e = nilpotent_matrix(Composition((4, 3, 2)))
        units = {(h, k) for h, k, c in e.units()}
        assert units == {(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (8, 9)}

    def test_zero_case(self):
        assert nilpotent_matrix(Composition((1, 1, 1))).is_zero()

    def test_small_case(self):
        e = nilpotent_matrix(Composition((1, 2)))
        assert list(e.units()) == [(2, 3, 1)]

    def test_jordan_type(self):
        for lam in all_compositions(6):
            e = nilpotent_matrix(lam)
            # rank e = N - (number of blocks); e^(max part) = 0
            rank = sum(1 for _ in e.units())
            assert rank == lam.N - lam.n
            power = e
            for _ in range(max(lam.parts) - 1):
                power = power * e
            assert power.is_zero()


class TestBasisElements:
    def test_examples(self):
        lam = Composition((1, 2))
        assert list(basis_element(lam, BasisIndex(1, 2, 1)).units()) == [(1, 3, 1)]
        assert list(basis_element(lam, BasisIndex(2, 2, 1)).units()) == [(2, 3, 1)]
        diag = basis_element(lam, BasisIndex(2, 2, 0))
        assert {(h, k) for h, k, _ in diag.units()} == {(2, 2), (3, 3)}

    def test_inadmissible_raises(self):
        lam = Composition((1, 2))
        for bad in [(1, 2, 0), (2, 1, 1), (1, 1, 1), (0, 1, 0), (1, 3, 0)]:
            assert not is_admissible(lam, BasisIndex(*bad))
            with pytest.raises(ValueError):
                basis_element(lam, BasisIndex(*bad))

    def test_basis_list_examples(self):
        lam = Composition((1, 2))
        assert basis_list(lam) == (
            BasisIndex(1, 1, 0), BasisIndex(1, 2, 1), BasisIndex(2, 1, 0),
            BasisIndex(2, 2, 0), BasisIndex(2, 2, 1))
        assert len(basis_list(Composition((1, 1)))) == 4
        assert len(basis_list(Composition((2, 3, 4)))) == 23

    def test_basis_list_sorted_and_sized(self):
        for lam in all_compositions(6):
            basis = basis_list(lam)
            assert list(basis) == sorted(basis)
            expected = sum(min(p, q) for p in lam.parts for q in lam.parts)
            assert len(basis) == expected

    def test_unit_supports_disjoint(self):
        for lam in all_compositions(5):
            seen = set()
            for idx in basis_list(lam):
                support = set(unit_support(lam, idx))
                assert support and not (support & seen)
                seen |= support

    def test_commutes_with_nilpotent_up_to_seven(self):
        for lam in all_compositions(7):
            e = nilpotent_matrix(lam)
            for idx in basis_list(lam):
                assert matrix_commutator(basis_element(lam, idx), e).is_zero()

    def test_verify_centralizer(self):
        for lam in all_compositions(5):
            assert verify_centralizer(lam).ok
        rep = verify_centralizer(Composition((4, 3, 2)))
        assert rep.ok and "count 23" in rep.checks[1].detail


class TestExpandInBasis:
    def test_round_trip_on_commutators(self):
        for lam in all_compositions(4):
            basis = basis_list(lam)
            for x, y in itertools.product(basis, repeat=2):
                mat = matrix_commutator(
                    basis_element(lam, x), basis_element(lam, y))
                expansion = expand_in_basis(lam, mat)
                rebuilt = GlMatrix.zero(lam.N)
                for idx, c in expansion.items():
                    rebuilt = rebuilt + basis_element(lam, idx) * c
                assert rebuilt == mat

    def test_rejects_outside_matrices(self):
        lam = Composition((1, 2))
        with pytest.raises(ValueError):
            expand_in_basis(lam, GlMatrix.from_units(3, [(1, 2)]))
        lam2 = Composition((2, 2))
        # half of the support of e[1,1;0] is not a basis-aligned matrix
        with pytest.raises(ValueError):
            expand_in_basis(lam2, GlMatrix.from_units(4, [(1, 1)]))


class TestStructureConstants:
    def test_examples(self):
        sc = structure_constants(Composition((1, 2)))
        assert sc.bracket(BasisIndex(1, 1, 0), BasisIndex(1, 2, 1)) == (
            (BasisIndex(1, 2, 1), 1),)
        sc2 = structure_constants(Composition((1, 1)))
        assert dict(sc2.bracket(BasisIndex(2, 1, 0), BasisIndex(1, 2, 0))) == {
            BasisIndex(1, 1, 0): -1, BasisIndex(2, 2, 0): 1}

    def test_self_bracket_empty(self):
        sc = structure_constants(Composition((2, 2)))
        for idx in basis_list(Composition((2, 2))):
            assert sc.bracket(idx, idx) == ()

    def test_antisymmetry_and_grading(self):
        for lam in all_compositions(5):
            sc = structure_constants(lam)
            basis = basis_list(lam)
            for x, y in itertools.product(basis, repeat=2):
                forward = dict(sc.bracket(x, y))
                backward = dict(sc.bracket(y, x))
                assert forward == {z: -c for z, c in backward.items()}
                for z in forward:
                    assert z.r == x.r + y.r

    def test_matches_matrix_commutators(self):
        for lam in all_compositions(4):
            sc = structure_constants(lam)
            basis = basis_list(lam)
            for x, y in itertools.product(basis, repeat=2):
                mat = matrix_commutator(
                    basis_element(lam, x), basis_element(lam, y))
                assert dict(sc.bracket(x, y)) == expand_in_basis(lam, mat)

    def test_jacobi_small(self):
        for lam in all_compositions(4):
            sc = structure_constants(lam)
            basis = basis_list(lam)

            def bracket_into(x, y, acc, outer):
                for z, c in sc.bracket(x, y):
                    for w, c2 in sc.bracket(outer, z):
                        acc[w] = acc.get(w, 0) + c * c2

            for x, y, z in itertools.product(basis, repeat=3):
                acc: dict = {}
                bracket_into(y, z, acc, x)
                bracket_into(z, x, acc, y)
                bracket_into(x, y, acc, z)
                assert all(v == 0 for v in acc.values())


class TestGlMatrix:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            GlMatrix([[1, 2], [3]])

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                    min_size=3, max_size=3),
           st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                    min_size=3, max_size=3),
           st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                    min_size=3, max_size=3))
    def test_ring_ops(self, a, b, c):
        A, B, C = GlMatrix(a), GlMatrix(b), GlMatrix(c)
        assert (A * B) * C == A * (B * C)
        assert A * (B + C) == A * B + A * C
        assert A + B == B + A
        assert (A - A).is_zero()
        assert matrix_commutator(A, A).is_zero()
