from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from errors import InvalidLabel, UnsupportedMove, WrongCardinality
from fermionic_basis import (FermionPoly, apply_group, apply_transposition, complement, contains, delta_dual,
                             inv_count, mask_of, popcount, positions_of, psi_vector, s_count, sigma)
from kappa_field import KField


@dataclass(frozen=True)
class HookLabel:
    """
    A basis label of an isotype: family 0 is (N-m, 1^m) with #E = m+1 and N in E,
    family 1 is (N-m+1, 1^(m-1)) with #E = m-1 and N not in E.
    """
    N: int
    m: int
    family: int
    E: int

    def __post_init__(self):
        if self.N < 1 or not 0 <= self.m <= self.N:
            raise InvalidLabel(f'no hook isotype for N={self.N}, m={self.m}')
        if self.family not in (0, 1):
            raise InvalidLabel(f'family must be 0 or 1, got {self.family}')
        if self.E >> self.N:
            raise InvalidLabel(f'{positions_of(self.E)} is not a subset of 1..{self.N}')
        has_n = contains(self.E, self.N)
        if self.family == 0:
            if popcount(self.E) != self.m + 1:
                raise WrongCardinality(f'family 0 needs {self.m + 1} labels, got {positions_of(self.E)}')
            if not has_n:
                raise InvalidLabel(f'family 0 labels contain N={self.N}')
        else:
            if popcount(self.E) != self.m - 1:
                raise WrongCardinality(f'family 1 needs {self.m - 1} labels, got {positions_of(self.E)}')
            if has_n:
                raise InvalidLabel(f'family 1 labels never contain N={self.N}')

    @classmethod
    def of(cls, N: int, m: int, family: int, positions) -> HookLabel:
        return cls(N, m, family, mask_of(positions))

    @property
    def positions(self) -> Tuple[int, ...]:
        return positions_of(self.E)

    @property
    def inv(self) -> int:
        return inv_count(self.E, self.N)

    def with_set(self, E: int) -> HookLabel:
        return HookLabel(self.N, self.m, self.family, E)

    def complement_label(self) -> HookLabel:
        """
        The label of E^C, which lives in the other family at fermionic degree N-m
        """
        return HookLabel(self.N, self.N - self.m, 1 - self.family, complement(self.E, self.N))

    def content(self) -> Tuple[int, ...]:
        return content_vector(self)

    def to_json(self) -> Dict:
        return {'N': self.N, 'm': self.m, 'family': self.family, 'E': list(self.positions)}

    def __str__(self):
        return f'E={{{",".join(map(str, self.positions))}}} (family {self.family}, N={self.N}, m={self.m})'


@dataclass(frozen=True)
class Tableau:
    """
    A hook reverse standard tableau: row 1 left to right including the corner,
    then column 1 below the corner from top to bottom
    """
    row: Tuple[int, ...]
    col: Tuple[int, ...]

    @property
    def corner(self) -> int:
        return self.row[0]

    def to_json(self) -> Dict:
        return {'row': list(self.row), 'col': list(self.col)}


def root_label(N: int, m: int, family: int) -> HookLabel:
    if family == 0:
        return HookLabel.of(N, m, 0, range(N - m, N + 1))
    return HookLabel.of(N, m, 1, range(1, m))


def labels(N: int, m: int, family: int) -> List[HookLabel]:
    """
    All labels in construction order: inv ascending for family 0 and descending for
    family 1, ties broken by bitmask
    """
    if family == 0:
        if m > N - 1:
            return []
        masks = [E for E in range(1 << N) if popcount(E) == m + 1 and contains(E, N)]
        masks.sort(key=lambda E: (inv_count(E, N), E))
    else:
        if m < 1:
            return []
        masks = [E for E in range(1 << N) if popcount(E) == m - 1 and not contains(E, N)]
        masks.sort(key=lambda E: (-inv_count(E, N), E))
    return [HookLabel(N, m, family, E) for E in masks]


def tableau_of(label: HookLabel) -> Tableau:
    E, N = label.E, label.N
    inside = sorted(positions_of(E), reverse=True)
    outside = sorted(positions_of(complement(E, N)), reverse=True)
    if label.family == 0:
        return Tableau(row=(N,) + tuple(outside), col=tuple(inside[1:]))
    return Tableau(row=tuple(outside), col=tuple(inside))


def content_vector(label: HookLabel) -> Tuple[int, ...]:
    """
    c(i, E) for i = 1..N, the column minus row index of the cell holding i
    """
    E, N = label.E, label.N
    rest = complement(E, N)
    shift = 0 if label.family == 0 else 1
    return tuple(
        -s_count(i, E) - shift if contains(E, i) else s_count(i, rest) + 1 - shift
        for i in range(1, N + 1)
    )


def transposition(i: int, j: int, N: int) -> Tuple[int, ...]:
    w = list(range(1, N + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def jucys_murphy(i: int, p: FermionPoly) -> FermionPoly:
    """
    omega_i = sum over j > i of the transposition (i, j)
    """
    result = FermionPoly(p.N, p.m)
    for j in range(i + 1, p.N + 1):
        result = result + apply_group(transposition(i, j, p.N), p)
    return result


def _adjacent_swap(E: int, i: int) -> int:
    low, high = 1 << (i - 1), 1 << i
    if bool(E & low) == bool(E & high):
        return E
    return E ^ low ^ high


def _step(T: FermionPoly, content: Tuple[int, ...], i: int) -> FermionPoly:
    return apply_transposition(i, i + 1, T) - T * Fraction(1, content[i - 1] - content[i])


@functools.lru_cache(maxsize=None)
def _family0_basis(N: int, m: int) -> Dict[int, FermionPoly]:
    ordered = labels(N, m, 0)
    root = ordered[0]
    basis = {root.E: psi_vector(root.E, N)}
    for label in ordered[1:]:
        E = label.E
        # the predecessor F = s_i E has i outside, i+1 inside and i+1 < N
        i = next(i for i in range(1, N - 1) if contains(E, i) and not contains(E, i + 1))
        F = _adjacent_swap(E, i)
        basis[E] = _step(basis[F], content_vector(label.with_set(F)), i)
    return basis


@functools.lru_cache(maxsize=None)
def _family1_basis(N: int, m: int) -> Dict[int, FermionPoly]:
    dual = _family0_basis(N, N - m)
    basis = {}
    for label in labels(N, m, 1):
        rest = complement(label.E, N)
        sign = (-1) ** (N - m) * sigma(inv_count(rest, N))
        basis[label.E] = delta_dual(dual[rest]) * sign
    return basis


def t_basis(N: int, m: int, family: int) -> Dict[int, FermionPoly]:
    if family == 0:
        return _family0_basis(N, m) if m <= N - 1 else {}
    return _family1_basis(N, m) if m >= 1 else {}


def build_T(label: HookLabel) -> FermionPoly:
    return t_basis(label.N, label.m, label.family)[label.E]


def step_family1(label: HookLabel, i: int) -> Tuple[FermionPoly, HookLabel]:
    """
    T_{s_i E} = s_i T_E - T_E / (c(i) - c(i+1)) for i in E, i+1 outside E and i+1 < N
    """
    if label.family != 1:
        raise UnsupportedMove('the family-1 step needs a family-1 label')
    E = label.E
    if not (contains(E, i) and not contains(E, i + 1) and i + 1 < label.N):
        raise UnsupportedMove(f's_{i} is not a family-1 step from {label}')
    return _step(build_T(label), content_vector(label), i), label.with_set(_adjacent_swap(E, i))


def T_norm_sq(label: HookLabel) -> Fraction:
    c = content_vector(label)
    N = label.N
    if label.family == 0:
        first, second, result = label.E, complement(label.E, N), Fraction(label.m + 1)
    else:
        first, second, result = complement(label.E, N), label.E, Fraction(N - label.m + 1)
    for i in positions_of(first):
        for j in positions_of(second):
            if i < j < N:
                result *= 1 - Fraction(1, (c[i - 1] - c[j - 1]) ** 2)
    return result


def t_norm_field(label: HookLabel) -> KField:
    return KField.const(T_norm_sq(label))
