from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import subsets
from errors import MalformedInput, ParameterOutOfRange
from fermionic_basis import mask_of
from hook_tableaux import HookLabel, T_norm_sq, labels
from jack_graph import build_jack
from kappa_field import KField, ONE
from norms_pairing import (P_over_R0, P_product, R_product, gram_matrix, is_positive_at, jack_norm, minimal_constants,
                           minimal_norm, minimal_tableau, pairing_oracle, pi0, pi0_telescoped, prodjj_closed,
                           supersym_norm, torus_norm)
from superpoly import SuperPoly, dunkl_D, mul_x, sp_apply_perm
from supersymmetrize import realize_tableau
from test_jack_graph import WORKED_ALPHA, WORKED_LABEL, compositions, nodes


@st.composite
def polynomial_pairs(draw, max_n: int = 3, max_degree: int = 2):
    """
    Two small superpolynomials with the same N and m, mixing bosonic degrees
    """
    N = draw(st.integers(min_value=2, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=N))
    exponents = st.sampled_from(compositions(N, max_degree))

    def poly():
        terms = {}
        for _ in range(draw(st.integers(min_value=1, max_value=4))):
            terms[(draw(exponents), mask_of(draw(subsets(N, m))))] = draw(st.integers(min_value=-3, max_value=3))
        return SuperPoly(N, m, terms)

    return poly(), poly()


def orthogonal_pairs(N: int, max_degree: int) -> int:
    """
    Checks every off-diagonal Gram entry of the nonsymmetric basis vanishes; returns how many were checked
    """
    count = 0
    for family, degrees in ((0, range(N)), (1, range(1, N + 1))):
        for m in degrees:
            polys = [build_jack(alpha, label)
                     for label in labels(N, m, family) for alpha in compositions(N, max_degree)]
            gram = gram_matrix(polys)
            for i, row in enumerate(gram):
                assert not row[i].is_zero()
                for j, value in enumerate(row):
                    if i != j:
                        assert value.is_zero()
                        count += 1
    return count


class TestClosedForms:
    def test_worked_norm(self):
        expected = (KField.const(3) * KField.linear(1, -3) * KField.linear(1, 2) * KField.linear(1, -1)
                    / (KField.linear(1, 1) * KField.linear(1, -2)))
        report = jack_norm(WORKED_ALPHA, WORKED_LABEL, oracle=True)
        assert report.closed_form == expected
        assert report.matches_oracle

    def test_degree_zero_norm_is_basis_norm(self):
        for label in labels(4, 1, 0):
            assert jack_norm((0, 0, 0, 0), label).closed_form == KField.const(T_norm_sq(label))
            assert torus_norm((0, 0, 0, 0), label) == KField.const(T_norm_sq(label))

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_telescoped_product(self, n):
        for a in range(-3, 3):
            for u in range(0, 3):
                for v in range(u, 4):
                    direct = ONE
                    for i in range(u, v + 1):
                        direct = direct * pi0(n, a + i)
                    assert pi0_telescoped(n, a, u, v) == direct

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
    def test_diagonal_product(self, n):
        direct = ONE
        for j in range(1, n + 1):
            direct = direct * pi0(j, -j)
        assert prodjj_closed(n) == direct

    def test_pi0_range(self):
        with pytest.raises(ParameterOutOfRange):
            pi0(0, 1)

    def test_P_over_R0(self):
        for lam in [(2, 1, 0), (2, 2, 0), (3, 1, 1), (1, 0, 0)]:
            for m in range(3):
                for label in labels(3, m, 0):
                    expected = P_product(lam, label) / R_product(0, tuple(reversed(lam)), label)
                    assert P_over_R0(lam, label) == expected

    def test_partition_is_checked(self):
        with pytest.raises(MalformedInput):
            P_product((0, 1), HookLabel.of(2, 0, 0, [2]))


class TestPairing:
    @pytest.mark.parametrize('N', [1, 2, 3])
    def test_closed_form_matches_oracle(self, N):
        for alpha, label in nodes(N, 2 if N < 3 else 1):
            assert jack_norm(alpha, label, oracle=True).matches_oracle

    @pytest.mark.slow
    def test_closed_form_matches_oracle_degree_two(self):
        for alpha, label in nodes(3, 2):
            assert jack_norm(alpha, label, oracle=True).matches_oracle

    @settings(max_examples=30, deadline=None)
    @given(polynomial_pairs(), st.data())
    def test_multiplication_is_adjoint_to_dunkl(self, pair, data):
        f, g = pair
        i = data.draw(st.integers(min_value=1, max_value=f.N))
        assert pairing_oracle(mul_x(i, f), g) == pairing_oracle(f, dunkl_D(i, g))

    @settings(max_examples=30, deadline=None)
    @given(polynomial_pairs())
    def test_pairing_is_symmetric(self, pair):
        f, g = pair
        assert pairing_oracle(f, g) == pairing_oracle(g, f)

    @settings(max_examples=30, deadline=None)
    @given(polynomial_pairs(), st.data())
    def test_pairing_is_permutation_invariant(self, pair, data):
        f, g = pair
        w = tuple(data.draw(st.permutations(range(1, f.N + 1))))
        assert pairing_oracle(sp_apply_perm(w, f), sp_apply_perm(w, g)) == pairing_oracle(f, g)

    @pytest.mark.parametrize('N, max_degree', [(2, 3), (3, 2)])
    def test_orthogonality(self, N, max_degree):
        assert orthogonal_pairs(N, max_degree) > 0

    @pytest.mark.slow
    def test_orthogonality_four_variables(self):
        assert orthogonal_pairs(4, 3) >= 200

    def test_mismatched_polynomials(self):
        with pytest.raises(MalformedInput):
            pairing_oracle(SuperPoly.zero(2, 0), SuperPoly.zero(2, 1))

    @pytest.mark.parametrize('N', [3, 4])
    def test_positivity_near_zero(self, N):
        points = (0, Fraction(1, 2 * N), Fraction(-1, 2 * N))
        for alpha, label in nodes(N, 2):
            norm = jack_norm(alpha, label).closed_form
            assert all(is_positive_at(norm, k0) for k0 in points)


class TestSupersymmetricNorms:
    def test_example(self):
        report = supersym_norm((2, 1, 1, 0), HookLabel.of(4, 2, 0, [1, 3, 4]), oracle=True)
        assert report.matches_oracle
        shape = KField.linear(1, -2) * KField.linear(2, -3) * KField.linear(1, -4)
        assert (report.closed_form / shape).is_constant()
        assert report.details['root'] == [1, 3, 4]
        assert report.details['sink'] == [1, 2, 4]

    def test_minimal_tableau(self):
        assert minimal_tableau(6, 2, 1, 1) == ((0, 1, 1, 2), (1, 2))
        with pytest.raises(ParameterOutOfRange):
            minimal_tableau(4, 3, 0, 0)
        with pytest.raises(ParameterOutOfRange):
            minimal_tableau(6, 2, 2, 0)
        with pytest.raises(ParameterOutOfRange):
            minimal_tableau(6, 2, 0, 3)

    @pytest.mark.parametrize('N', [3, 4, 5,
                                   pytest.param(6, marks=pytest.mark.slow),
                                   pytest.param(7, marks=pytest.mark.slow)])
    def test_minimal_norms_match_general_formula(self, N):
        for m in range(1, N - 1):
            for s in range(m):
                for k in range(N - m - 1):
                    report = minimal_norm(N, m, s, k)
                    lam, label = realize_tableau(0, report.details['row'], report.details['col'])
                    general = supersym_norm(lam, label)
                    assert general.closed_form == report.closed_form
                    assert general.details['stabilizer_order'] == minimal_constants(N, m, s, k)['stabilizer_order']

    def test_report_json(self):
        data = minimal_norm(4, 1, 0, 0).to_json()
        assert {'closed_form', 'pretty', 'constant_free_part', 'constant', 'row', 'col'} <= set(data)
