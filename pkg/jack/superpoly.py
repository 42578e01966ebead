from __future__ import annotations

from typing import Dict, Iterator, List, Sequence, Tuple

from errors import InvariantViolation, MalformedInput, WrongCardinality
from fermionic_basis import (FermionPoly, check_permutation, complement, inv_count, mask_of, permute_phi, phi_name,
                             popcount, positions_of, sigma, transposition_on_phi)
from kappa_field import KAPPA, KField, ZERO

Composition = Tuple[int, ...]
Monomial = Tuple[Composition, int]


def check_composition(alpha: Sequence[int], N: int) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != N or any(a < 0 for a in alpha):
        raise MalformedInput(f'{alpha} is not a composition with {N} nonnegative parts')
    return alpha


def psi_shift(alpha: Sequence[int]) -> Composition:
    """
    (a_1, ..., a_N) -> (a_2, ..., a_N, a_1 + 1)
    """
    return tuple(alpha[1:]) + (alpha[0] + 1,)


def dominance_precedes(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """
    alpha < beta in dominance: all partial sums of alpha are at most those of beta, alpha != beta
    """
    if tuple(alpha) == tuple(beta):
        return False
    left = right = 0
    for a, b in zip(alpha, beta):
        left += a
        right += b
        if left > right:
            return False
    return True


def order_precedes(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """
    The triangularity order: same degree, then dominance of the rearrangements, then of the compositions
    """
    if sum(alpha) != sum(beta):
        return False
    plus_a = tuple(sorted(alpha, reverse=True))
    plus_b = tuple(sorted(beta, reverse=True))
    if plus_a != plus_b:
        return dominance_precedes(plus_a, plus_b)
    return dominance_precedes(alpha, beta)


def _accumulate(acc: Dict, key, value: KField):
    acc[key] = acc[key] + value if key in acc else value


class SuperPoly:
    """
    A polynomial in x_1..x_N and theta_1..theta_N, homogeneous of fermionic degree m:
    (composition, subset bitmask) -> coefficient
    """
    __slots__ = ('N', 'm', 'terms')

    def __init__(self, N: int, m: int, terms: Dict[Monomial, KField] | None = None):
        self.N = N
        self.m = m
        self.terms = {}
        for (alpha, mask), coeff in (terms or {}).items():
            alpha = check_composition(alpha, N)
            if popcount(mask) != m or mask >> N:
                raise WrongCardinality(f'{positions_of(mask)} is not an {m}-subset of 1..{N}')
            coeff = coeff if isinstance(coeff, KField) else KField.const(coeff)
            if coeff:
                self.terms[(alpha, mask)] = coeff

    @classmethod
    def _wrap(cls, N: int, m: int, terms: Dict[Monomial, KField]) -> SuperPoly:
        obj = object.__new__(cls)
        obj.N, obj.m = N, m
        obj.terms = {key: c for key, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls, N: int, m: int) -> SuperPoly:
        return cls._wrap(N, m, {})

    @classmethod
    def from_fermion(cls, p: FermionPoly, alpha: Sequence[int] | None = None) -> SuperPoly:
        alpha = tuple(alpha) if alpha is not None else (0,) * p.N
        return cls._wrap(p.N, p.m, {(alpha, mask): c for mask, c in p.terms.items()})

    @classmethod
    def monomial(cls, alpha: Sequence[int], positions: Sequence[int], N: int, coeff=1) -> SuperPoly:
        mask = mask_of(positions)
        return cls(N, popcount(mask), {(tuple(alpha), mask): coeff})

    def _check(self, other: SuperPoly):
        if (self.N, self.m) != (other.N, other.m):
            raise MalformedInput(f'cannot combine degree {self.m} (N={self.N}) with degree {other.m} (N={other.N})')

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, alpha: Sequence[int], mask: int) -> KField:
        return self.terms.get((tuple(alpha), mask), ZERO)

    def block(self, alpha: Sequence[int]) -> FermionPoly:
        """
        The fermionic coefficient of x^alpha
        """
        alpha = tuple(alpha)
        return FermionPoly._wrap(self.N, self.m, {mask: c for (a, mask), c in self.terms.items() if a == alpha})

    def compositions(self) -> List[Composition]:
        return sorted({alpha for alpha, _ in self.terms})

    def degrees(self) -> List[int]:
        return sorted({sum(alpha) for alpha, _ in self.terms})

    def homogeneous_part(self, degree: int) -> SuperPoly:
        return SuperPoly._wrap(self.N, self.m, {k: c for k, c in self.terms.items() if sum(k[0]) == degree})

    def items(self) -> Iterator[Tuple[Monomial, KField]]:
        return iter(sorted(self.terms.items(), key=lambda item: item[0]))

    def __add__(self, other: SuperPoly) -> SuperPoly:
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(terms, key, c)
        return SuperPoly._wrap(self.N, self.m, terms)

    def __neg__(self) -> SuperPoly:
        return SuperPoly._wrap(self.N, self.m, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: SuperPoly) -> SuperPoly:
        return self + (-other)

    def __mul__(self, scalar) -> SuperPoly:
        if isinstance(scalar, SuperPoly):
            return NotImplemented
        return SuperPoly._wrap(self.N, self.m, {key: c * scalar for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> SuperPoly:
        inverse = (scalar if isinstance(scalar, KField) else KField.const(scalar)).inverse()
        return self * inverse

    def __eq__(self, other):
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return (self.N, self.m) == (other.N, other.m) and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, self.m, frozenset(self.terms.items())))

    def to_json(self) -> Dict:
        return {
            'N': self.N,
            'm': self.m,
            'terms': [{'alpha': list(alpha), 'set': list(positions_of(mask)), 'coeff': c.to_json()}
                      for (alpha, mask), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Dict) -> SuperPoly:
        try:
            terms = {}
            for term in data['terms']:
                terms[(tuple(term['alpha']), mask_of(term['set']))] = KField.from_json(term['coeff'])
            return cls(data['N'], data['m'], terms)
        except (KeyError, TypeError) as e:
            raise MalformedInput(f'not a serialized superpolynomial: {e}') from e

    def pretty(self) -> str:
        if not self.terms:
            return '0'
        return '\n'.join(f'{_coefficient_text(c)} · {monomial_name(alpha, mask)}' for (alpha, mask), c in self.items())

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f'SuperPoly(N={self.N}, m={self.m}, terms={len(self.terms)})'


def _coefficient_text(c: KField) -> str:
    text = str(c)
    return f'({text})' if ' ' in text and not text.startswith('(') else text


def monomial_name(alpha: Sequence[int], mask: int) -> str:
    xs = [f'x{i}' if a == 1 else f'x{i}^{a}' for i, a in enumerate(alpha, start=1) if a]
    theta = phi_name(mask) if mask else ''
    return ' '.join(xs + ([theta] if theta else [])) or '1'


def sp_apply_transposition(i: int, j: int, p: SuperPoly) -> SuperPoly:
    """
    Swaps x_i, x_j and theta_i, theta_j together
    """
    terms = {}
    for (alpha, mask), c in p.terms.items():
        swapped = list(alpha)
        swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
        sign, target = transposition_on_phi(i, j, mask)
        terms[(tuple(swapped), target)] = c if sign > 0 else -c
    return SuperPoly._wrap(p.N, p.m, terms)


def sp_apply_si(i: int, p: SuperPoly) -> SuperPoly:
    if not 1 <= i < p.N:
        raise MalformedInput(f's_{i} needs 1 <= i < {p.N}')
    return sp_apply_transposition(i, i + 1, p)


def sp_apply_perm(w: Sequence[int], p: SuperPoly) -> SuperPoly:
    """
    w p(x, theta) = p(xw, theta w): the exponent of x_i moves to x_{w(i)}
    """
    w = check_permutation(w, p.N)
    terms = {}
    for (alpha, mask), c in p.terms.items():
        moved = [0] * p.N
        for i, a in enumerate(alpha):
            moved[w[i] - 1] = a
        sign, target = permute_phi(w, mask)
        terms[(tuple(moved), target)] = c if sign > 0 else -c
    return SuperPoly._wrap(p.N, p.m, terms)


def mul_x(i: int, p: SuperPoly) -> SuperPoly:
    terms = {}
    for (alpha, mask), c in p.terms.items():
        raised = list(alpha)
        raised[i - 1] += 1
        terms[(tuple(raised), mask)] = c
    return SuperPoly._wrap(p.N, p.m, terms)


def divided_difference(alpha: Sequence[int], i: int, j: int) -> List[Tuple[int, Composition]]:
    """
    (x^alpha - x^((i j) alpha)) / (x_i - x_j) as a list of (sign, exponent)
    """
    a, b = alpha[i - 1], alpha[j - 1]
    if a == b:
        return []
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    result = []
    for t in range(a - b):
        beta = list(alpha)
        beta[i - 1] = a - 1 - t
        beta[j - 1] = b + t
        result.append((sign, tuple(beta)))
    if len(result) != abs(alpha[i - 1] - alpha[j - 1]):
        raise InvariantViolation('divided difference lost a term')
    return result


def dunkl_D(i: int, p: SuperPoly) -> SuperPoly:
    if not 1 <= i <= p.N:
        raise MalformedInput(f'D_{i} needs 1 <= i <= {p.N}')
    acc: Dict[Monomial, KField] = {}
    for (alpha, mask), c in p.terms.items():
        a = alpha[i - 1]
        if a:
            lowered = list(alpha)
            lowered[i - 1] -= 1
            _accumulate(acc, (tuple(lowered), mask), c * a)
        kc = c * KAPPA
        for j in range(1, p.N + 1):
            if j == i or alpha[j - 1] == a:
                continue
            sign, target = transposition_on_phi(i, j, mask)
            for dd_sign, beta in divided_difference(alpha, i, j):
                _accumulate(acc, (beta, target), kc if sign * dd_sign > 0 else -kc)
    return SuperPoly._wrap(p.N, p.m, acc)


def cherednik_U(i: int, p: SuperPoly) -> SuperPoly:
    """
    U_i p = D_i(x_i p) - kappa * sum over j < i of (i, j) p
    """
    result = dunkl_D(i, mul_x(i, p))
    for j in range(1, i):
        result = result - sp_apply_transposition(i, j, p) * KAPPA
    return result


def affine_shift(p: SuperPoly) -> SuperPoly:
    """
    x_N (w_N^-1 p) with w_N = s_1 s_2 ... s_(N-1)
    """
    N = p.N
    w_inverse = (N,) + tuple(range(1, N))
    terms = {}
    for (alpha, mask), c in p.terms.items():
        sign, target = permute_phi(w_inverse, mask)
        terms[(psi_shift(alpha), target)] = c if sign > 0 else -c
    return SuperPoly._wrap(N, p.m, terms)


def sp_delta_dual(p: SuperPoly) -> SuperPoly:
    terms = {}
    for (alpha, mask), c in p.terms.items():
        terms[(alpha, complement(mask, p.N))] = c if sigma(inv_count(mask, p.N)) > 0 else -c
    return SuperPoly._wrap(p.N, p.N - p.m, terms)


def sp_neg_kappa(p: SuperPoly) -> SuperPoly:
    return SuperPoly._wrap(p.N, p.m, {key: c.neg_kappa() for key, c in p.terms.items()})
