from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from errors import MalformedInput, NotColumnStrict
from hook_tableaux import HookLabel, content_vector
from jack_graph import spectral_vector
from kappa_field import KAPPA, KField, ZERO
from superpoly import SuperPoly, cherednik_U
from supersymmetrize import LabeledTableau, build_supersymmetric, labeled_tableau, root_sink


@dataclass(frozen=True)
class MuNotation:
    """
    mu: row 1 after the corner, nonincreasing. mu_tilde: column 1 with the corner, strictly decreasing.
    """
    mu: Tuple[int, ...]
    mu_tilde: Tuple[int, ...]

    def __post_init__(self):
        if any(self.mu[i] < self.mu[i + 1] for i in range(len(self.mu) - 1)):
            raise MalformedInput(f'mu={self.mu} must be nonincreasing')
        if any(self.mu_tilde[i] <= self.mu_tilde[i + 1] for i in range(len(self.mu_tilde) - 1)):
            raise NotColumnStrict(f'mu_tilde={self.mu_tilde} must be strictly decreasing')

    @property
    def N(self) -> int:
        return len(self.mu) + len(self.mu_tilde)

    def to_json(self) -> Dict:
        return {'mu': list(self.mu), 'mu_tilde': list(self.mu_tilde)}


def mu_notation(tab: LabeledTableau) -> MuNotation:
    if not tab.is_column_strict():
        raise NotColumnStrict(f'column {(tab.corner,) + tab.col} repeats a value')
    return MuNotation(mu=tuple(reversed(tab.row[1:])), mu_tilde=tuple(reversed((tab.corner,) + tab.col)))


def gamma(N: int, m: int, family: int) -> Fraction:
    """
    (N - 2m - 1)/2, with m replaced by m-1 in family 1
    """
    effective = m if family == 0 else m - 1
    return Fraction(N - 2 * effective - 1, 2)


def cst_eigenvalue(tab: LabeledTableau) -> KField:
    """
    sum over the column of (mu~_i + kappa(i - (N+1)/2))^2
    plus sum over the row of (mu_i + kappa((N+1)/2 - i))^2
    """
    notation = mu_notation(tab)
    middle = Fraction(tab.N + 1, 2)
    total = ZERO
    for i, value in enumerate(notation.mu_tilde, start=1):
        total = total + KField.linear(value, i - middle) ** 2
    for i, value in enumerate(notation.mu, start=1):
        total = total + KField.linear(value, middle - i) ** 2
    return total


def content_form_eigenvalue(lam: Sequence[int], label: HookLabel) -> KField:
    """
    sum_i (lam_i + kappa(c(i, E_R) - gamma))^2
    """
    root, _ = root_sink(lam, label)
    c = content_vector(root)
    g = gamma(label.N, label.m, label.family)
    total = ZERO
    for i, value in enumerate(lam):
        total = total + KField.linear(value, c[i] - g) ** 2
    return total


def ground_state_tableau(N: int, m: int, family: int) -> LabeledTableau:
    """
    The staircase column and a zero row: the lowest bosonic degree of the isotype
    """
    column_cells = m + 1 if family == 0 else m
    if not 1 <= column_cells <= N:
        raise MalformedInput(f'no family-{family} isotype for N={N}, m={m}')
    return LabeledTableau(family=family, row=(0,) * (N - column_cells + 1), col=tuple(range(1, column_cells)))


def ground_state_eigenvalue(N: int, m: int, family: int) -> KField:
    """
    (1/6) m(m+1) ((2m+1)(1+kappa) - 3 kappa N) + (kappa^2/12) N(N^2-1), with m-1 for family 1
    """
    k = m if family == 0 else m - 1
    staircase = KField.const(Fraction(k * (k + 1), 6)) * (KField.linear(2 * k + 1, 2 * k + 1) - KAPPA * (3 * N))
    return staircase + KAPPA ** 2 * Fraction(N * (N * N - 1), 12)


def power_sum_eigenvalue(lam: Sequence[int], label: HookLabel, s: int) -> KField:
    """
    The eigenvalue of sum_i U_i^s on the supersymmetric polynomial of (lam, E): sum_i zeta(i)^s at the root
    """
    root, _ = root_sink(lam, label)
    return spectral_vector(lam, root).power_sum(s)


def _shifted_U(i: int, p: SuperPoly, shift: KField) -> SuperPoly:
    return cherednik_U(i, p) - p * shift


def hamiltonian_eigencheck(lam: Sequence[int], label: HookLabel, p: SuperPoly | None = None) -> bool:
    """
    Checks sum_i (U_i - 1 - kappa gamma)^2 p = cst_eigenvalue * p exactly
    """
    tab = labeled_tableau(lam, label)
    expected = cst_eigenvalue(tab)
    p = build_supersymmetric(lam, label) if p is None else p
    shift = KField.linear(1, gamma(label.N, label.m, label.family))
    total = SuperPoly.zero(p.N, p.m)
    for i in range(1, p.N + 1):
        total = total + _shifted_U(i, _shifted_U(i, p, shift), shift)
    if total != p * expected:
        logging.info(f'Hamiltonian check failed for lambda={tuple(lam)}, {label}')
        return False
    return True
