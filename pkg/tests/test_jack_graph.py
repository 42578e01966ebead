import itertools

import pytest
from hypothesis import given, strategies as st

from errors import UnsupportedMove
from fermionic_basis import mask_of
from hook_tableaux import HookLabel, build_T, labels
from jack_graph import (_nodes, b_coeff, build_jack, canonical_path, equal_entry_factor, jump, leading_block,
                        memo_info, rank_function, spectral_vector, verify_eigen)
from kappa_field import KAPPA, KField
from superpoly import SuperPoly, order_precedes, sp_apply_si, sp_delta_dual, sp_neg_kappa

WORKED_ALPHA = (0, 1, 1, 0)
WORKED_LABEL = HookLabel.of(4, 2, 0, [2, 3, 4])


def compositions(N: int, max_degree: int):
    return [alpha for alpha in itertools.product(range(max_degree + 1), repeat=N) if sum(alpha) <= max_degree]


def nodes(N: int, max_degree: int):
    for family, degrees in ((0, range(N)), (1, range(1, N + 1))):
        for m in degrees:
            for label in labels(N, m, family):
                for alpha in compositions(N, max_degree):
                    yield alpha, label


class TestSpectralVector:
    def test_rank_function(self):
        assert rank_function(WORKED_ALPHA) == (3, 1, 2, 4)
        assert rank_function((2, 0, 2, 1)) == (1, 4, 2, 3)

    def test_worked_spectral_vector(self):
        zeta = spectral_vector(WORKED_ALPHA, WORKED_LABEL)
        assert zeta.values() == [KField.linear(1, -1), KField.linear(2, 1), KField.linear(2, -2), KField.const(1)]

    def test_b_coefficient(self):
        assert b_coeff(WORKED_ALPHA, WORKED_LABEL, 1) == KAPPA / KField.linear(-1, -2)
        assert b_coeff(WORKED_ALPHA, WORKED_LABEL, 3) == KAPPA / KField.linear(1, -2)

    @given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=6))
    def test_canonical_path_reaches_alpha(self, alpha):
        moves = canonical_path(alpha)
        assert _nodes(moves, len(alpha))[-1] == tuple(alpha)
        assert sum(1 for kind, _ in moves if kind == 'affine') == sum(alpha)


class TestWorkedExample:
    def test_expansion(self):
        a = KField((0, 1), (1, -2))
        b = KField((0, 1), (1, -1, -2))
        expected = SuperPoly(4, 2, {
            ((0, 1, 1, 0), mask_of([1, 3])): -1,
            ((0, 1, 1, 0), mask_of([1, 4])): 1,
            ((0, 1, 1, 0), mask_of([3, 4])): -1,
            ((0, 1, 0, 1), mask_of([1, 3])): a,
            ((0, 1, 0, 1), mask_of([1, 4])): -a,
            ((0, 1, 0, 1), mask_of([3, 4])): a,
            ((0, 0, 1, 1), mask_of([1, 2])): b * KField.linear(1, -1),
            ((0, 0, 1, 1), mask_of([1, 3])): -b * KField.linear(1, -2),
            ((0, 0, 1, 1), mask_of([2, 3])): b * KField.linear(1, -2),
            ((0, 0, 1, 1), mask_of([1, 4])): -b * KAPPA,
            ((0, 0, 1, 1), mask_of([2, 4])): b * KAPPA,
        })
        assert build_jack(WORKED_ALPHA, WORKED_LABEL) == expected

    def test_leading_block(self):
        J = build_jack(WORKED_ALPHA, WORKED_LABEL)
        assert J.block(WORKED_ALPHA) == leading_block(WORKED_ALPHA, WORKED_LABEL)

    def test_eigenvalues(self):
        assert verify_eigen(build_jack(WORKED_ALPHA, WORKED_LABEL), WORKED_ALPHA, WORKED_LABEL)

    def test_wrong_eigenvalues_are_detected(self):
        J = build_jack(WORKED_ALPHA, WORKED_LABEL)
        assert not verify_eigen(J, (1, 0, 1, 0), WORKED_LABEL)


class TestConstruction:
    @pytest.mark.parametrize('N', [1, 2, 3])
    def test_eigenfunctions(self, N):
        for alpha, label in nodes(N, 2):
            assert verify_eigen(build_jack(alpha, label), alpha, label)

    @pytest.mark.slow
    def test_eigenfunctions_four_variables(self):
        for alpha, label in nodes(4, 2):
            assert verify_eigen(build_jack(alpha, label), alpha, label)

    @pytest.mark.parametrize('N', [2, 3])
    def test_triangularity(self, N):
        for alpha, label in nodes(N, 3):
            J = build_jack(alpha, label)
            assert J.block(alpha) == leading_block(alpha, label)
            assert all(beta == alpha or order_precedes(beta, alpha) for beta in J.compositions())

    def test_degree_zero_is_the_basis(self):
        label = HookLabel.of(3, 1, 0, [1, 3])
        assert build_jack((0, 0, 0), label) == SuperPoly.from_fermion(build_T(label))

    @pytest.mark.parametrize('N', [2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_delta_maps_to_complement_with_negated_kappa(self, N):
        for m in range(N):
            for label in labels(N, m, 0):
                for alpha in compositions(N, 2):
                    left = sp_delta_dual(build_jack(alpha, label))
                    right = sp_neg_kappa(build_jack(alpha, label.complement_label()))
                    assert left in (right, -right)

    def test_memo(self):
        build_jack(WORKED_ALPHA, WORKED_LABEL)
        before = memo_info()['hits']
        assert build_jack(WORKED_ALPHA, WORKED_LABEL) is build_jack(WORKED_ALPHA, WORKED_LABEL)
        assert memo_info()['hits'] >= before + 2


class TestMoves:
    def test_equal_entries(self):
        outside = HookLabel.of(3, 0, 0, [3])
        J = build_jack((0, 0, 0), outside)
        assert equal_entry_factor((0, 0, 0), outside, 1) == 1
        assert sp_apply_si(1, J) == J

        inside = HookLabel.of(3, 1, 0, [2, 3])
        J = build_jack((0, 0, 0), inside)
        assert equal_entry_factor((0, 0, 0), inside, 2) == -1
        assert sp_apply_si(2, J) == -J

        with pytest.raises(UnsupportedMove):
            equal_entry_factor((0, 0, 0), inside, 1)
        with pytest.raises(UnsupportedMove):
            equal_entry_factor((1, 0, 0), inside, 1)

    def test_jump_forward_and_back(self):
        low, high = HookLabel.of(3, 1, 0, [2, 3]), HookLabel.of(3, 1, 0, [1, 3])
        moved, target = jump(build_jack((0, 0, 0), low), (0, 0, 0), low, 1)
        assert target == high
        assert moved == build_jack((0, 0, 0), high)

        moved, target = jump(build_jack((0, 0, 0), high), (0, 0, 0), high, 1)
        assert target == low
        assert moved == build_jack((0, 0, 0), low)

    def test_jump_through_N(self):
        label = HookLabel.of(3, 1, 0, [1, 3])
        with pytest.raises(UnsupportedMove):
            jump(build_jack((0, 0, 0), label), (0, 0, 0), label, 2)
        with pytest.raises(UnsupportedMove):
            jump(build_jack((0, 1, 0), label), (0, 1, 0), label, 1)
