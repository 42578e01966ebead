from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy
from sympy.utilities.iterables import multiset_permutations

from errors import MalformedInput, NotColumnStrict, NotRowStrict
from fermionic_basis import complement, mask_of, positions_of
from hook_tableaux import HookLabel, tableau_of
from jack_graph import build_jack, partition_of, spectral_vector
from kappa_field import KField, kf_eval
from norms_pairing import C_product, R_product
from superpoly import Composition, SuperPoly, sp_apply_perm, sp_apply_si, sp_delta_dual, sp_neg_kappa


@dataclass(frozen=True)
class LabeledTableau:
    """
    The hook tableau of a label with each entry i replaced by the value alpha+_i.
    row runs left to right and starts at the corner; col lists the cells below the corner, top down.
    """
    family: int
    row: Tuple[int, ...]
    col: Tuple[int, ...]

    @property
    def corner(self) -> int:
        return self.row[0]

    @property
    def N(self) -> int:
        return len(self.row) + len(self.col)

    @property
    def m(self) -> int:
        return len(self.col) + self.family

    def is_column_strict(self) -> bool:
        column = (self.corner,) + self.col
        return all(column[t] < column[t + 1] for t in range(len(column) - 1))

    def is_row_strict(self) -> bool:
        return all(self.row[t] < self.row[t + 1] for t in range(len(self.row) - 1))

    def total(self) -> int:
        return sum(self.row) + sum(self.col)

    def to_json(self) -> Dict:
        return {'family': self.family, 'row': list(self.row), 'col': list(self.col)}


@dataclass(frozen=True)
class Superpartition:
    """
    (strict part; weak part) with strict decreasing and weak nonincreasing
    """
    strict: Tuple[int, ...]
    weak: Tuple[int, ...]

    @property
    def family(self) -> int:
        if not self.strict:
            return 0
        if not self.weak:
            return 1
        return 0 if self.strict[-1] > self.weak[-1] else 1

    def __str__(self):
        return f'({",".join(map(str, self.strict))};{",".join(map(str, self.weak))})'


def labeled_tableau(alpha: Sequence[int], label: HookLabel) -> LabeledTableau:
    lam = partition_of(alpha)
    shape = tableau_of(label)
    return LabeledTableau(family=label.family,
                          row=tuple(lam[i - 1] for i in shape.row),
                          col=tuple(lam[i - 1] for i in shape.col))


def require_column_strict(lam: Sequence[int], label: HookLabel) -> LabeledTableau:
    tab = labeled_tableau(lam, label)
    if not tab.is_column_strict():
        raise NotColumnStrict(f'column {(tab.corner,) + tab.col} of the tableau of {tuple(lam)}, {label} repeats a value')
    return tab


def _check_partition(lam: Sequence[int], N: int) -> Composition:
    lam = tuple(lam)
    if len(lam) != N or any(lam[i] < lam[i + 1] for i in range(N - 1)) or any(x < 0 for x in lam):
        raise MalformedInput(f'{lam} is not a partition with {N} parts')
    return lam


def orbit_labels(lam: Sequence[int], label: HookLabel) -> List[HookLabel]:
    """
    Every label F with the same labeled tableau as E: for each value, choose which
    positions of its block sit in the column below the corner
    """
    N = label.N
    lam = _check_partition(lam, N)
    tab = labeled_tableau(lam, label)
    blocks: Dict[int, List[int]] = {}
    for i, value in enumerate(lam, start=1):
        if i != N:
            blocks.setdefault(value, []).append(i)
    choices = []
    for value in sorted(set(tab.col)):
        count = tab.col.count(value)
        choices.append(list(itertools.combinations(blocks.get(value, []), count)))
    result = []
    for picked in itertools.product(*choices):
        column = mask_of(i for group in picked for i in group)
        E = column | (1 << (N - 1)) if label.family == 0 else column
        result.append(label.with_set(E))
    return sorted(result, key=lambda lab: lab.E)


def orbit(lam: Sequence[int], label: HookLabel) -> List[Tuple[Composition, HookLabel]]:
    """
    All nodes (beta, F) with the labeled tableau of (lam, E)
    """
    lam = _check_partition(lam, label.N)
    rearrangements = sorted(tuple(beta) for beta in multiset_permutations(list(lam)))
    return [(beta, F) for F in orbit_labels(lam, label) for beta in rearrangements]


def root_sink(lam: Sequence[int], label: HookLabel) -> Tuple[HookLabel, HookLabel]:
    """
    The inv-extremal labels of the orbit: the root has least inv in family 0 and largest in family 1
    """
    members = orbit_labels(lam, label)
    ordered = sorted(members, key=lambda lab: (lab.inv, lab.E))
    if label.family == 0:
        return ordered[0], ordered[-1]
    return ordered[-1], ordered[0]


def row_positions(label: HookLabel) -> int:
    rest = complement(label.E, label.N)
    return rest | (1 << (label.N - 1)) if label.family == 0 else rest


def stabilizer_order(root: HookLabel, lam: Sequence[int]) -> int:
    """
    Order of the stabilizer of T_{E_R} in the group permuting equal parts of lam:
    the factorial of the number of row cells holding each value
    """
    counts: Dict[int, int] = {}
    for i in positions_of(row_positions(root)):
        counts[lam[i - 1]] = counts.get(lam[i - 1], 0) + 1
    return math.prod(math.factorial(n) for n in counts.values())


def build_supersymmetric(lam: Sequence[int], label: HookLabel, normalization: str = 'orbit') -> SuperPoly:
    """
    p = sum over the orbit of R_1(beta, F) / C_1(F) * J_{beta, F}.
    :param normalization: 'orbit' for the coefficients above, 'monic' to scale the x^lam T_{E_R} coefficient to 1
    """
    lam = _check_partition(lam, label.N)
    require_column_strict(lam, label)
    if normalization not in ('orbit', 'monic'):
        raise MalformedInput(f'unknown normalization {normalization!r}')
    total = SuperPoly.zero(label.N, label.m)
    for beta, F in orbit(lam, label):
        weight = R_product(1, beta, F) / KField.const(C_product(1, F))
        total = total + build_jack(beta, F) * weight
    if normalization == 'monic':
        root, _ = root_sink(lam, label)
        total = total * C_product(1, root)
    return total


def symmetrize_root(lam: Sequence[int], label: HookLabel) -> SuperPoly:
    """
    The sum of w J_{lam reversed, E_R} over the whole symmetric group
    """
    lam = _check_partition(lam, label.N)
    root, _ = root_sink(lam, label)
    J = build_jack(tuple(reversed(lam)), root)
    total = SuperPoly.zero(label.N, label.m)
    for w in itertools.permutations(range(1, label.N + 1)):
        total = total + sp_apply_perm(w, J)
    return total


def superpartition_of(tab: LabeledTableau) -> Superpartition:
    if not tab.is_column_strict():
        raise NotColumnStrict(f'column {(tab.corner,) + tab.col} repeats a value')
    if tab.family == 0:
        return Superpartition(strict=tuple(reversed(tab.col)), weak=tuple(reversed(tab.row)))
    return Superpartition(strict=tuple(reversed(tab.col)) + (tab.corner,), weak=tuple(reversed(tab.row[1:])))


def realize_tableau(family: int, row: Sequence[int], col: Sequence[int]) -> Tuple[Composition, HookLabel]:
    """
    A node (lam, E) whose labeled tableau has the given row (corner first) and column below the corner
    """
    row, col = tuple(row), tuple(col)
    if not row or any(row[t] > row[t + 1] for t in range(len(row) - 1)):
        raise MalformedInput(f'row {row} must start at the corner and increase weakly')
    column = (row[0],) + col
    if any(column[t] > column[t + 1] for t in range(len(column) - 1)):
        raise MalformedInput(f'column {column} must increase weakly downwards')
    N = len(row) + len(col)
    cells = [(value, 0, -t, 'row') for t, value in enumerate(row) if t]
    cells += [(value, 1, -t, 'col') for t, value in enumerate(col)]
    cells.append((row[0], 2, 0, 'corner'))
    cells.sort(key=lambda cell: (-cell[0], cell[1], cell[2]))
    lam = tuple(cell[0] for cell in cells)
    column_positions = [i for i, cell in enumerate(cells, start=1) if cell[3] == 'col']
    if family == 0:
        return lam, HookLabel.of(N, len(col), 0, column_positions + [N])
    return lam, HookLabel.of(N, len(col) + 1, 1, column_positions)


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def invariant_dimension(lam: Sequence[int], label: HookLabel, kappa0=Fraction(1, 97)) -> int:
    """
    Dimension of the symmetric elements in the span of the orbit, computed at a rational kappa
    """
    members = orbit(lam, label)
    polys = [build_jack(beta, F) for beta, F in members]
    rows: Dict[Tuple, List] = {}
    for col, J in enumerate(polys):
        for i in range(1, label.N):
            difference = sp_apply_si(i, J) - J
            for key, coeff in difference.terms.items():
                rows.setdefault((i,) + key, [0] * len(polys))[col] = _rational(kf_eval(coeff, kappa0))
    if not rows:
        return len(polys)
    matrix = sympy.Matrix(list(rows.values()))
    return len(polys) - matrix.rank()


def build_antisymmetric(lam: Sequence[int], label: HookLabel) -> SuperPoly:
    """
    delta p_{lam, E^C} with kappa replaced by -kappa, antisymmetric in the module of (lam, E)
    """
    tab = labeled_tableau(lam, label)
    if not tab.is_row_strict():
        raise NotRowStrict(f'row {tab.row} of the tableau of {tuple(lam)}, {label} repeats a value')
    p = build_supersymmetric(lam, label.complement_label())
    return sp_delta_dual(sp_neg_kappa(p))


def antisymmetric_eigenvalue(lam: Sequence[int], label: HookLabel, s: int = 2) -> KField:
    """
    The eigenvalue of sum_i U_i^s on build_antisymmetric(lam, label)
    """
    root, _ = root_sink(lam, label.complement_label())
    return spectral_vector(lam, root).power_sum(s).neg_kappa()


def inv_range(lam: Sequence[int], label: HookLabel) -> Tuple[int, int]:
    invs = [lab.inv for lab in orbit_labels(lam, label)]
    return min(invs), max(invs)
