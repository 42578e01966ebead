from __future__ import annotations

import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from errors import DegenerateSpectralGap, UnsupportedMove
from fermionic_basis import apply_group, contains
from hook_tableaux import HookLabel, build_T, content_vector
from kappa_field import KField, ONE
from superpoly import (Composition, SuperPoly, affine_shift, check_composition, cherednik_U, psi_shift,
                       sp_apply_si)


def rank_function(alpha: Sequence[int]) -> Tuple[int, ...]:
    """
    r(i) = #{j : alpha_j > alpha_i} + #{j <= i : alpha_j = alpha_i}; r sorts alpha into alpha+
    """
    return tuple(
        sum(1 for b in alpha if b > a) + sum(1 for b in alpha[:i + 1] if b == a)
        for i, a in enumerate(alpha)
    )


def partition_of(alpha: Sequence[int]) -> Composition:
    return tuple(sorted(alpha, reverse=True))


def inverse_permutation(w: Sequence[int]) -> Tuple[int, ...]:
    result = [0] * len(w)
    for i, image in enumerate(w, start=1):
        result[image - 1] = i
    return tuple(result)


@dataclass(frozen=True)
class SpectralVector:
    """
    zeta(i) = int_part + kappa * content_part, with int_part = alpha_i + 1
    """
    entries: Tuple[Tuple[int, int], ...]

    def value(self, i: int) -> KField:
        a, c = self.entries[i - 1]
        return KField.linear(a, c)

    def values(self) -> List[KField]:
        return [KField.linear(a, c) for a, c in self.entries]

    def shifted(self) -> SpectralVector:
        first = self.entries[0]
        return SpectralVector(self.entries[1:] + ((first[0] + 1, first[1]),))

    def power_sum(self, s: int) -> KField:
        total = KField()
        for value in self.values():
            total = total + value ** s
        return total

    def __str__(self):
        return '[' + ', '.join(str(v) for v in self.values()) + ']'


def spectral_vector(alpha: Sequence[int], label: HookLabel) -> SpectralVector:
    r = rank_function(alpha)
    c = content_vector(label)
    return SpectralVector(tuple((a + 1, c[r[i] - 1]) for i, a in enumerate(alpha)))


def b_coeff(alpha: Sequence[int], label: HookLabel, i: int) -> KField:
    """
    kappa / (zeta(i) - zeta(i+1))
    """
    zeta = spectral_vector(alpha, label).entries
    gap_int = zeta[i - 1][0] - zeta[i][0]
    gap_content = zeta[i - 1][1] - zeta[i][1]
    if gap_int == 0 and gap_content == 0:
        raise DegenerateSpectralGap(f'zeta({i}) = zeta({i + 1}) at alpha={tuple(alpha)}, {label}')
    return KField((0, 1), (gap_int, gap_content))


class NodeMemo:
    """
    Thread-safe LRU table of built polynomials keyed by (alpha, N, m, family, E).
    Concurrent writers store identical values, so the last write simply wins.
    """

    def __init__(self, maxsize: int = 4096):
        self.maxsize = maxsize
        self.hits = 0
        self.misses = 0
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def __contains__(self, key):
        with self._lock:
            return key in self._data

    def clear(self):
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self):
        return len(self._data)


_memo = NodeMemo()
_store = None


def configure_memo(maxsize: int):
    _memo.maxsize = max(1, maxsize)


def set_store(store):
    """
    Attaches an on-disk store with load(alpha, label) and save(alpha, label, poly)
    """
    global _store
    _store = store


def memo_info() -> Dict:
    return {'size': len(_memo), 'maxsize': _memo.maxsize, 'hits': _memo.hits, 'misses': _memo.misses}


def clear_memo():
    _memo.clear()


def _key(alpha: Composition, label: HookLabel):
    return alpha, label.N, label.m, label.family, label.E


def canonical_path(alpha: Sequence[int]) -> List[Tuple[str, int]]:
    """
    Moves from the zero composition to alpha: ('affine', 0) or ('step', i), where a step
    at beta with beta_i < beta_(i+1) produces s_i beta
    """
    current = list(alpha)
    moves = []
    while any(current):
        descent = next((i for i in range(1, len(current)) if current[i - 1] > current[i]), None)
        if descent is not None:
            moves.append(('step', descent))
            current[descent - 1], current[descent] = current[descent], current[descent - 1]
        else:
            moves.append(('affine', 0))
            current = [current[-1] - 1] + current[:-1]
    moves.reverse()
    return moves


def _nodes(moves: List[Tuple[str, int]], N: int) -> List[Composition]:
    nodes = [(0,) * N]
    for kind, i in moves:
        beta = list(nodes[-1])
        if kind == 'affine':
            nodes.append(psi_shift(beta))
        else:
            beta[i - 1], beta[i] = beta[i], beta[i - 1]
            nodes.append(tuple(beta))
    return nodes


def step(J: SuperPoly, beta: Sequence[int], label: HookLabel, i: int) -> SuperPoly:
    """
    J_{s_i beta} = (s_i - b) J_beta for beta_i < beta_(i+1)
    """
    return sp_apply_si(i, J) - J * b_coeff(beta, label, i)


def build_jack(alpha: Sequence[int], label: HookLabel) -> SuperPoly:
    alpha = check_composition(alpha, label.N)
    key = _key(alpha, label)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    if _store is not None:
        stored = _store.load(alpha, label)
        if stored is not None:
            _memo.put(key, stored)
            return stored

    moves = canonical_path(alpha)
    nodes = _nodes(moves, label.N)
    start, J = 0, None
    for t in range(len(nodes) - 1, -1, -1):
        J = _memo.get(_key(nodes[t], label)) if t else None
        if J is not None:
            start = t
            break
    if J is None:
        J = SuperPoly.from_fermion(build_T(label))
        _memo.put(_key(nodes[0], label), J)
    logging.debug(f'Building J for alpha={alpha}, {label}: {len(moves) - start} moves')

    for t in range(start, len(moves)):
        kind, i = moves[t]
        J = affine_shift(J) if kind == 'affine' else step(J, nodes[t], label, i)
        _memo.put(_key(nodes[t + 1], label), J)

    if _store is not None:
        _store.save(alpha, label, J)
    return J


def equal_entry_factor(alpha: Sequence[int], label: HookLabel, i: int) -> int:
    """
    For alpha_i = alpha_(i+1) with r(i), r(i)+1 both in E or both outside: s_i J = factor * J
    """
    if alpha[i - 1] != alpha[i]:
        raise UnsupportedMove(f'alpha_{i} != alpha_{i + 1}')
    j = rank_function(alpha)[i - 1]
    inside, next_inside = contains(label.E, j), contains(label.E, j + 1)
    if inside != next_inside:
        raise UnsupportedMove(f'r({i})={j} and {j + 1} lie on different sides of E')
    return -1 if inside else 1


def jump(J: SuperPoly, alpha: Sequence[int], label: HookLabel, i: int) -> Tuple[SuperPoly, HookLabel]:
    """
    Moves the label at fixed alpha when alpha_i = alpha_(i+1): with j = r(i) the label changes
    to s_j E. Forward moves (the inductive direction of the basis) give (s_i - b) J; backward
    moves divide by 1 - b^2.
    """
    if alpha[i - 1] != alpha[i]:
        raise UnsupportedMove(f'a jump needs alpha_{i} = alpha_{i + 1}')
    j = rank_function(alpha)[i - 1]
    inside, next_inside = contains(label.E, j), contains(label.E, j + 1)
    if inside == next_inside:
        raise UnsupportedMove(f'r({i})={j} and {j + 1} lie on the same side of E')
    forward = next_inside if label.family == 0 else inside
    if forward and j + 1 == label.N:
        raise UnsupportedMove(f'no jump through position N={label.N}')
    target = label.with_set(label.E ^ (1 << (j - 1)) ^ (1 << j))
    b = b_coeff(alpha, label, i)
    moved = sp_apply_si(i, J) - J * b
    if not forward:
        moved = moved / (ONE - b * b)
    return moved, target


def leading_block(alpha: Sequence[int], label: HookLabel):
    """
    r_alpha^-1 T_E, the expected coefficient of x^alpha
    """
    return apply_group(inverse_permutation(rank_function(alpha)), build_T(label))


def verify_eigen(p: SuperPoly, alpha: Sequence[int], label: HookLabel) -> bool:
    zeta = spectral_vector(alpha, label)
    for i in range(1, label.N + 1):
        if cherednik_U(i, p) != p * zeta.value(i):
            logging.info(f'U_{i} eigenvalue check failed for alpha={tuple(alpha)}, {label}')
            return False
    return True
