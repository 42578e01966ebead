from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from errors import AlreadyPresent, MalformedInput, WrongCardinality
from kappa_field import KField, ZERO

# A subset E of {1..N} is an int bitmask, bit i-1 standing for position i.


def mask_of(positions: Iterable[int]) -> int:
    mask = 0
    for i in positions:
        if i < 1:
            raise MalformedInput(f'positions are 1-based, got {i}')
        mask |= 1 << (i - 1)
    return mask


def positions_of(mask: int) -> Tuple[int, ...]:
    """
    Ascending 1-based positions of the subset
    """
    result = []
    i = 1
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return tuple(result)


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def complement(mask: int, N: int) -> int:
    return ((1 << N) - 1) ^ mask


def contains(mask: int, i: int) -> bool:
    return bool(mask >> (i - 1) & 1)


def sigma(n: int) -> int:
    return -1 if n % 2 else 1


def s_count(j: int, E: int) -> int:
    """
    #{i in E : i > j}
    """
    return popcount(E >> j)


def inv_count(E: int, N: int) -> int:
    """
    #{(i, j) in E x E^C : i < j}
    """
    rest = complement(E, N)
    return sum(s_count(i, rest) for i in positions_of(E))


def inv_prime_count(E: int, N: int) -> int:
    """
    inv(E) with the pairs ending at N left out
    """
    rest = complement(E, N) & ~(1 << (N - 1))
    return sum(s_count(i, rest) for i in positions_of(E))


def mul_theta(E: int, j: int) -> Tuple[int, int]:
    """
    phi_E * theta_j = sign * phi_{E + j}
    """
    if contains(E, j):
        raise AlreadyPresent(f'theta_{j} already occurs in {positions_of(E)}')
    return sigma(s_count(j, E)), E | (1 << (j - 1))


def transposition_on_phi(i: int, j: int, E: int) -> Tuple[int, int]:
    if i == j:
        raise MalformedInput('a transposition needs two distinct positions')
    in_i, in_j = contains(E, i), contains(E, j)
    if in_i == in_j:
        return (-1 if in_i else 1), E
    if in_j:
        i, j = j, i
    rest = E & ~(1 << (i - 1))
    sign = sigma(s_count(i, E) + s_count(j, rest))
    return sign, rest | (1 << (j - 1))


def permute_phi(w: Sequence[int], E: int) -> Tuple[int, int]:
    """
    Direct evaluation of w(phi_E) = theta_{w(e1)}...theta_{w(em)}: the sign is the parity of that word
    """
    word = [w[e - 1] for e in positions_of(E)]
    inversions = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
    return sigma(inversions), mask_of(word)


def reduced_word(w: Sequence[int]) -> List[int]:
    """
    Adjacent transpositions s_i in the order they are applied, obtained by bubble sort of w
    """
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            return word


def check_permutation(w: Sequence[int], N: int) -> Tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(1, N + 1)):
        raise MalformedInput(f'{w} is not a permutation of 1..{N}')
    return w


class FermionPoly:
    """
    A homogeneous element of the anti-commuting algebra: subset bitmask -> coefficient
    """
    __slots__ = ('N', 'm', 'terms')

    def __init__(self, N: int, m: int, terms: Dict[int, KField] | None = None):
        self.N = N
        self.m = m
        self.terms = {}
        for mask, coeff in (terms or {}).items():
            if popcount(mask) != m or mask >> N:
                raise WrongCardinality(f'{positions_of(mask)} is not an {m}-subset of 1..{N}')
            coeff = coeff if isinstance(coeff, KField) else KField.const(coeff)
            if coeff:
                self.terms[mask] = coeff

    @classmethod
    def _wrap(cls, N: int, m: int, terms: Dict[int, KField]) -> FermionPoly:
        obj = object.__new__(cls)
        obj.N, obj.m = N, m
        obj.terms = {mask: c for mask, c in terms.items() if c}
        return obj

    def _check(self, other: FermionPoly):
        if (self.N, self.m) != (other.N, other.m):
            raise MalformedInput(f'cannot combine degree {self.m} (N={self.N}) with degree {other.m} (N={other.N})')

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mask: int) -> KField:
        return self.terms.get(mask, ZERO)

    def items(self) -> List[Tuple[int, KField]]:
        return sorted(self.terms.items())

    def __add__(self, other: FermionPoly) -> FermionPoly:
        self._check(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            terms[mask] = terms[mask] + c if mask in terms else c
        return FermionPoly._wrap(self.N, self.m, terms)

    def __neg__(self) -> FermionPoly:
        return FermionPoly._wrap(self.N, self.m, {mask: -c for mask, c in self.terms.items()})

    def __sub__(self, other: FermionPoly) -> FermionPoly:
        return self + (-other)

    def __mul__(self, scalar) -> FermionPoly:
        if isinstance(scalar, FermionPoly):
            return NotImplemented
        return FermionPoly._wrap(self.N, self.m, {mask: c * scalar for mask, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FermionPoly):
            return NotImplemented
        return (self.N, self.m) == (other.N, other.m) and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, self.m, frozenset(self.terms.items())))

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def to_json(self) -> Dict:
        return {
            'N': self.N,
            'm': self.m,
            'terms': [{'set': list(positions_of(mask)), 'coeff': c.to_json()} for mask, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Dict) -> FermionPoly:
        terms = {mask_of(t['set']): KField.from_json(t['coeff']) for t in data['terms']}
        return cls(data['N'], data['m'], terms)

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'({c})·{phi_name(mask)}' for mask, c in self.items())

    def __repr__(self):
        return f'FermionPoly(N={self.N}, m={self.m}, {self})'


def phi_name(mask: int) -> str:
    return ''.join(f'θ{i}' for i in positions_of(mask)) or '1'


def phi(E: int, N: int) -> FermionPoly:
    return FermionPoly._wrap(N, popcount(E), {E: KField.const(1)})


def apply_transposition(i: int, j: int, p: FermionPoly) -> FermionPoly:
    terms = {}
    for mask, c in p.terms.items():
        sign, target = transposition_on_phi(i, j, mask)
        terms[target] = c if sign > 0 else -c
    return FermionPoly._wrap(p.N, p.m, terms)


def apply_group(w: Sequence[int], p: FermionPoly) -> FermionPoly:
    """
    w(p) for w in one-line notation, through the adjacent transpositions of w
    """
    word = reduced_word(check_permutation(w, p.N))
    terms = {}
    for mask, c in p.terms.items():
        sign = 1
        for i in word:
            step, mask = transposition_on_phi(i, i + 1, mask)
            sign *= step
        terms[mask] = c if sign > 0 else -c
    return FermionPoly._wrap(p.N, p.m, terms)


def delta_dual(p: FermionPoly) -> FermionPoly:
    """
    phi_E -> sigma(inv(E)) phi_{E^C}
    """
    terms = {}
    for mask, c in p.terms.items():
        terms[complement(mask, p.N)] = c if sigma(inv_count(mask, p.N)) > 0 else -c
    return FermionPoly._wrap(p.N, p.N - p.m, terms)


def psi_vector(E: int, N: int) -> FermionPoly:
    size = popcount(E)
    if size < 1:
        raise WrongCardinality('psi needs a nonempty set')
    terms = {}
    for j in positions_of(E):
        terms[E & ~(1 << (j - 1))] = KField.const(sigma(s_count(j, E)))
    return FermionPoly._wrap(N, size - 1, terms)


def eta_vector(E: int, N: int) -> FermionPoly:
    size = popcount(E)
    if size >= N:
        raise WrongCardinality('eta needs a proper subset')
    terms = {}
    for j in positions_of(complement(E, N)):
        terms[E | (1 << (j - 1))] = KField.const(sigma(s_count(j, E)))
    return FermionPoly._wrap(N, size + 1, terms)


def lowering_D(p: FermionPoly) -> FermionPoly:
    """
    Sum of the left derivatives d/d(theta_i)
    """
    if p.m == 0:
        return FermionPoly._wrap(p.N, 0, {})
    terms = {}
    for mask, c in p.terms.items():
        for i in positions_of(mask):
            target = mask & ~(1 << (i - 1))
            value = c if sigma(popcount(mask & ((1 << (i - 1)) - 1))) > 0 else -c
            terms[target] = terms[target] + value if target in terms else value
    return FermionPoly._wrap(p.N, p.m - 1, terms)


def raising_M(p: FermionPoly) -> FermionPoly:
    """
    Sum of the left multiplications by theta_i
    """
    if p.m == p.N:
        return FermionPoly._wrap(p.N, p.N, {})
    terms = {}
    for mask, c in p.terms.items():
        for i in positions_of(complement(mask, p.N)):
            target = mask | (1 << (i - 1))
            value = c if sigma(popcount(mask & ((1 << (i - 1)) - 1))) > 0 else -c
            terms[target] = terms[target] + value if target in terms else value
    return FermionPoly._wrap(p.N, p.m + 1, terms)


def project(p: FermionPoly, target: int) -> FermionPoly:
    """
    Projection onto ker D (target 0) or ker M (target 1)
    """
    scale = Fraction(1, p.N)
    if target == 0:
        return lowering_D(raising_M(p)) * scale
    if target == 1:
        return raising_M(lowering_D(p)) * scale
    raise MalformedInput(f'projection target must be 0 or 1, got {target}')


def fermion_inner(p: FermionPoly, q: FermionPoly) -> KField:
    """
    The form in which the phi_E are orthonormal
    """
    if (p.N, p.m) != (q.N, q.m):
        return ZERO
    total = ZERO
    for mask, c in p.terms.items():
        if mask in q.terms:
            total = total + c * q.terms[mask]
    return total
