import pytest
from hypothesis import given, settings, strategies as st

from conftest import subsets
from errors import MalformedInput, WrongCardinality
from fermionic_basis import mask_of, phi
from hook_tableaux import transposition
from kappa_field import KAPPA, KField
from superpoly import (SuperPoly, affine_shift, check_composition, cherednik_U, divided_difference, dunkl_D,
                       mul_x, order_precedes, psi_shift, sp_apply_perm, sp_apply_si, sp_apply_transposition,
                       sp_delta_dual, sp_neg_kappa)


@st.composite
def superpolys(draw, max_n: int = 3, max_part: int = 2):
    N = draw(st.integers(min_value=2, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=N))
    size = draw(st.integers(min_value=1, max_value=3))
    terms = {}
    for _ in range(size):
        alpha = tuple(draw(st.lists(st.integers(min_value=0, max_value=max_part), min_size=N, max_size=N)))
        E = draw(subsets(N, m))
        terms[(alpha, mask_of(E))] = draw(st.integers(min_value=-2, max_value=2))
    return SuperPoly(N, m, terms)


class TestCompositions:
    def test_check_composition(self):
        assert check_composition([1, 0, 2], 3) == (1, 0, 2)
        with pytest.raises(MalformedInput):
            check_composition([1, -1], 2)
        with pytest.raises(MalformedInput):
            check_composition([1, 0], 3)

    def test_psi_shift(self):
        assert psi_shift((0, 1, 1, 0)) == (1, 1, 0, 1)

    def test_order(self):
        assert order_precedes((0, 0, 2), (0, 1, 1)) is False
        assert order_precedes((0, 1, 1), (0, 0, 2))
        assert order_precedes((0, 1, 1), (1, 1, 0))
        assert order_precedes((1, 1, 0), (0, 1, 1)) is False
        assert order_precedes((1, 0), (0, 2)) is False

    def test_divided_difference(self):
        assert divided_difference((2, 0), 1, 2) == [(1, (1, 0)), (1, (0, 1))]
        assert divided_difference((0, 2), 1, 2) == [(-1, (1, 0)), (-1, (0, 1))]
        assert divided_difference((1, 1), 1, 2) == []


class TestGroupAction:
    @given(superpolys())
    def test_adjacent_transpositions_match_permutations(self, p):
        for i in range(1, p.N):
            assert sp_apply_si(i, p) == sp_apply_perm(transposition(i, i + 1, p.N), p)

    @given(superpolys())
    def test_transpositions_are_involutions(self, p):
        for i in range(1, p.N):
            assert sp_apply_si(i, sp_apply_si(i, p)) == p

    @given(superpolys(max_n=4))
    def test_braid_relation(self, p):
        for i in range(1, p.N - 1):
            left = sp_apply_si(i, sp_apply_si(i + 1, sp_apply_si(i, p)))
            right = sp_apply_si(i + 1, sp_apply_si(i, sp_apply_si(i + 1, p)))
            assert left == right

    def test_distant_transposition(self):
        p = SuperPoly.monomial((1, 0, 0), [3], 3)
        assert sp_apply_transposition(1, 3, p) == SuperPoly.monomial((0, 0, 1), [1], 3)
        q = SuperPoly.monomial((0, 2, 0), [1, 3], 3)
        assert sp_apply_transposition(1, 3, q) == -q

    def test_out_of_range(self):
        with pytest.raises(MalformedInput):
            sp_apply_si(3, SuperPoly.zero(3, 0))


class TestOperators:
    @settings(max_examples=40)
    @given(superpolys())
    def test_dunkl_operators_commute(self, p):
        for i in range(1, p.N + 1):
            for j in range(i + 1, p.N + 1):
                assert dunkl_D(i, dunkl_D(j, p)) == dunkl_D(j, dunkl_D(i, p))

    @settings(max_examples=40)
    @given(superpolys())
    def test_cherednik_operators_commute(self, p):
        for i in range(1, p.N + 1):
            for j in range(i + 1, p.N + 1):
                assert cherednik_U(i, cherednik_U(j, p)) == cherednik_U(j, cherednik_U(i, p))

    @settings(max_examples=40)
    @given(superpolys())
    def test_conjugating_cherednik_by_adjacent_transposition(self, p):
        for i in range(1, p.N):
            left = sp_apply_si(i, cherednik_U(i, sp_apply_si(i, p)))
            assert left == cherednik_U(i + 1, p) + sp_apply_si(i, p) * KAPPA

    @settings(max_examples=40)
    @given(superpolys())
    def test_delta_intertwines_dunkl_with_negated_kappa(self, p):
        for i in range(1, p.N + 1):
            negated = sp_neg_kappa(dunkl_D(i, sp_neg_kappa(sp_delta_dual(p))))
            assert sp_delta_dual(dunkl_D(i, p)) == negated

    def test_dunkl_lowers_degree(self):
        p = SuperPoly.monomial((1, 0), [], 2)
        assert dunkl_D(1, p) == SuperPoly.monomial((0, 0), [], 2, KField.linear(1, 1))
        assert dunkl_D(2, p) == SuperPoly.monomial((0, 0), [], 2, -KAPPA)

    @pytest.mark.parametrize('N', [1, 2, 3, 4])
    def test_cherednik_on_constants(self, N):
        one = SuperPoly.monomial((0,) * N, [], N)
        for i in range(1, N + 1):
            assert cherednik_U(i, one) == one * KField.linear(1, N - i)

    def test_affine_shift(self):
        p = SuperPoly.from_fermion(phi(mask_of([1]), 3), (0, 2, 1))
        assert affine_shift(p) == SuperPoly.monomial((2, 1, 1), [3], 3)

    def test_mul_x(self):
        p = SuperPoly.monomial((0, 1), [2], 2, 3)
        assert mul_x(1, p) == SuperPoly.monomial((1, 1), [2], 2, 3)


class TestPolynomial:
    @given(superpolys())
    def test_delta_dual_changes_degree(self, p):
        assert sp_delta_dual(p).m == p.N - p.m
        assert len(sp_delta_dual(p).terms) == len(p.terms)

    def test_neg_kappa(self):
        p = SuperPoly.monomial((1, 0), [1], 2, KField.linear(1, -2))
        assert sp_neg_kappa(p) == SuperPoly.monomial((1, 0), [1], 2, KField.linear(1, 2))

    def test_blocks_and_degrees(self):
        p = SuperPoly.monomial((1, 0), [1], 2) + SuperPoly.monomial((0, 2), [2], 2, 5)
        assert p.degrees() == [1, 2]
        assert p.homogeneous_part(2) == SuperPoly.monomial((0, 2), [2], 2, 5)
        assert p.block((1, 0)) == phi(mask_of([1]), 2)
        assert p.coefficient((0, 2), mask_of([2])) == KField.const(5)

    def test_cardinality_is_checked(self):
        with pytest.raises(WrongCardinality):
            SuperPoly(2, 1, {((0, 0), mask_of([1, 2])): 1})
        with pytest.raises(MalformedInput):
            SuperPoly.monomial((0, 0), [1], 2) + SuperPoly.monomial((0, 0), [], 2)

    def test_json(self):
        p = SuperPoly.monomial((1, 0), [2], 2, KField((0, 1), (1, -2)))
        assert SuperPoly.from_json(p.to_json()) == p
        with pytest.raises(MalformedInput):
            SuperPoly.from_json({'N': 2, 'm': 0})

    def test_pretty(self):
        assert SuperPoly.zero(2, 0).pretty() == '0'
        assert SuperPoly.monomial((1, 0), [2], 2, -1).pretty() == '-1 · x1 θ2'
