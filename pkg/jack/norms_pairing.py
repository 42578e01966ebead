from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from errors import MalformedInput, ParameterOutOfRange
from fermionic_basis import complement, positions_of
from hook_tableaux import HookLabel, content_vector, t_norm_field
from jack_graph import build_jack, partition_of, rank_function
from kappa_field import KAPPA, KField, ONE, ZERO, kf_eval, kf_rising
from superpoly import Composition, SuperPoly, dunkl_D


@dataclass
class NormReport:
    """
    A closed-form norm, optionally with the value of the pairing oracle next to it.
    For the minimal polynomials the kappa-free constant is kept apart from the product.
    """
    closed_form: KField
    oracle_value: Optional[KField] = None
    constant_free_part: Optional[KField] = None
    constant: Optional[Fraction] = None
    details: Dict = field(default_factory=dict)

    @property
    def matches_oracle(self) -> Optional[bool]:
        if self.oracle_value is None:
            return None
        return self.closed_form == self.oracle_value

    def to_json(self) -> Dict:
        result = {'closed_form': self.closed_form.to_json(), 'pretty': str(self.closed_form)}
        if self.oracle_value is not None:
            result['oracle_value'] = self.oracle_value.to_json()
            result['matches_oracle'] = self.matches_oracle
        if self.constant_free_part is not None:
            result['constant_free_part'] = self.constant_free_part.to_json()
            result['constant'] = f'{self.constant.numerator}/{self.constant.denominator}'
        result.update(self.details)
        return result


def _dunkl_power(g: SuperPoly, alpha: Composition, cache: Dict[Composition, SuperPoly]) -> SuperPoly:
    """
    D^alpha g, peeling the smallest index first and memoizing every prefix
    """
    if alpha in cache:
        return cache[alpha]
    i = next(i for i, a in enumerate(alpha, start=1) if a)
    rest = list(alpha)
    rest[i - 1] -= 1
    result = dunkl_D(i, _dunkl_power(g, tuple(rest), cache))
    cache[alpha] = result
    return result


def pairing_oracle(f: SuperPoly, g: SuperPoly, cache: Dict[int, Dict] | None = None) -> KField:
    """
    <f, g> from the adjointness <x_i f, g> = <f, D_i g>, degree orthogonality and the
    orthonormal basis phi_E at degree zero.
    :param cache: derivatives of g per bosonic degree, reused across calls with the same g
    """
    if (f.N, f.m) != (g.N, g.m):
        raise MalformedInput('the pairing needs polynomials with the same N and m')
    if cache is None:
        cache = {}
    zero = (0,) * f.N
    pieces = {degree: g.homogeneous_part(degree) for degree in g.degrees()}
    total = ZERO
    for (alpha, mask), c in f.terms.items():
        degree = sum(alpha)
        if degree not in pieces:
            continue
        derivative = _dunkl_power(pieces[degree], alpha, cache.setdefault(degree, {zero: pieces[degree]}))
        value = derivative.coefficient(zero, mask)
        if value:
            total = total + c * value
    return total


def gram_matrix(polys: Sequence[SuperPoly]) -> List[List[KField]]:
    caches = [{} for _ in polys]
    return [[pairing_oracle(f, g, caches[j]) for j, g in enumerate(polys)] for f in polys]


def _poch_linear(a: int, c: int, n: int) -> KField:
    """
    (a + c*kappa)_n
    """
    return kf_rising(KField.linear(a, c), n)


def pi0(n: int, d: int) -> KField:
    """
    (1 - kappa/(n + d kappa)) * product over l < n of (1 - (kappa/(l + d kappa))^2)
    """
    if n < 1:
        raise ParameterOutOfRange(f'pi0 needs n >= 1, got {n}')
    result = ONE - KAPPA / KField.linear(n, d)
    for l in range(1, n):
        ratio = KAPPA / KField.linear(l, d)
        result = result * (ONE - ratio * ratio)
    return result


def pi0_telescoped(n: int, a: int, u: int, v: int) -> KField:
    """
    The product of pi0(n, a+i) over u <= i <= v in closed form
    """
    return (_poch_linear(1, a + u - 1, n) * _poch_linear(1, a + v + 1, n - 1)
            / (_poch_linear(1, a + u, n - 1) * _poch_linear(1, a + v, n)))


def prodjj_closed(n: int) -> KField:
    """
    The product of pi0(j, -j) over 1 <= j <= n in closed form
    """
    return (_poch_linear(1, -(n + 1), n) / _poch_linear(1, -n, n - 1)) / (KField.linear(1, -1) * n)


def _check_partition(lam: Sequence[int]) -> Composition:
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise MalformedInput(f'{lam} is not a partition')
    return lam


def P_product(lam: Sequence[int], label: HookLabel) -> KField:
    lam = _check_partition(lam)
    c = content_vector(label)
    result = ONE
    for i, part in enumerate(lam):
        result = result * _poch_linear(1, c[i], part)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            d = c[i] - c[j]
            for l in range(1, lam[i] - lam[j] + 1):
                ratio = KAPPA / KField.linear(l, d)
                result = result * (ONE - ratio * ratio)
    return result


def P_over_R0(lam: Sequence[int], label: HookLabel) -> KField:
    """
    P(lam, E) / R_0(lam reversed, E) through the pi0 products
    """
    lam = _check_partition(lam)
    c = content_vector(label)
    result = ONE
    for i, part in enumerate(lam):
        result = result * _poch_linear(1, c[i], part)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            if lam[i] > lam[j]:
                result = result * pi0(lam[i] - lam[j], c[i] - c[j])
    return result


def R_product(z: int, alpha: Sequence[int], label: HookLabel) -> KField:
    """
    Product over i < j with alpha_i < alpha_j of 1 + (-1)^z kappa / (zeta(j) - zeta(i))
    """
    r = rank_function(alpha)
    c = content_vector(label)
    sign = -1 if z % 2 else 1
    result = ONE
    for i in range(len(alpha)):
        for j in range(i + 1, len(alpha)):
            if alpha[i] < alpha[j]:
                gap = KField.linear(alpha[j] - alpha[i], c[r[j] - 1] - c[r[i] - 1])
                result = result * (ONE + KAPPA * sign / gap)
    return result


def C_product(z: int, label: HookLabel) -> Fraction:
    """
    The content analogue of R_z; it does not depend on kappa
    """
    c = content_vector(label)
    N = label.N
    first, second = (label.E, complement(label.E, N)) if label.family == 0 else (complement(label.E, N), label.E)
    sign = -1 if z % 2 else 1
    result = Fraction(1)
    for i in positions_of(first):
        for j in positions_of(second):
            if i < j < N:
                result *= 1 + Fraction(sign, c[i - 1] - c[j - 1])
    return result


def jack_norm(alpha: Sequence[int], label: HookLabel, oracle: bool = False) -> NormReport:
    """
    |T_E|^2 P(alpha+, E) / R(alpha, E) with R = R_0 R_1
    """
    alpha = tuple(alpha)
    closed = (t_norm_field(label) * P_product(partition_of(alpha), label)
              / (R_product(0, alpha, label) * R_product(1, alpha, label)))
    report = NormReport(closed_form=closed)
    if oracle:
        J = build_jack(alpha, label)
        report.oracle_value = pairing_oracle(J, J)
    return report


def torus_norm(alpha: Sequence[int], label: HookLabel) -> KField:
    c = content_vector(label)
    weight = ONE
    for i, part in enumerate(partition_of(alpha)):
        weight = weight * _poch_linear(1, c[i], part)
    return jack_norm(alpha, label).closed_form / weight


def nu(label: HookLabel) -> int:
    return label.m + 1 if label.family == 0 else label.N - label.m + 1


def supersym_norm(lam: Sequence[int], label: HookLabel, oracle: bool = False) -> NormReport:
    """
    nu * N!/#G * C_0(E_R) P(lam, E_R) / (R_0(lam reversed, E_R) C_1(E_S))
    """
    from supersymmetrize import build_supersymmetric, require_column_strict, root_sink, stabilizer_order

    lam = _check_partition(lam)
    require_column_strict(lam, label)
    root, sink = root_sink(lam, label)
    stabilizer = stabilizer_order(root, lam)
    constant = (Fraction(nu(label) * math.factorial(label.N), stabilizer)
                * C_product(0, root) / C_product(1, sink))
    product = P_over_R0(lam, root)
    report = NormReport(closed_form=product * constant, constant_free_part=product, constant=constant,
                        details={'root': list(root.positions), 'sink': list(sink.positions),
                                 'stabilizer_order': stabilizer})
    if oracle:
        p = build_supersymmetric(lam, label)
        report.oracle_value = pairing_oracle(p, p)
    return report


def _check_minimal(N: int, m: int, s: int, k: int) -> int:
    M = N - m
    if m < 1 or M < 2:
        raise ParameterOutOfRange(f'minimal polynomials need m >= 1 and N - m >= 2, got N={N}, m={m}')
    if not 0 <= s <= m - 1:
        raise ParameterOutOfRange(f's must lie in [0, {m - 1}], got {s}')
    if not 0 <= k <= M - 2:
        raise ParameterOutOfRange(f'k must lie in [0, {M - 2}], got {k}')
    return M


def minimal_tableau(N: int, m: int, s: int, k: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Values of the minimal family-0 tableau: row (corner first) and column below the corner.
    Corner 0, column 1..m, then the row holds M-1-k entries s followed by k entries s+1.
    """
    M = _check_minimal(N, m, s, k)
    row = (0,) + (s,) * (M - 1 - k) + (s + 1,) * k
    col = tuple(range(1, m + 1))
    return row, col


def minimal_product(N: int, m: int, s: int, k: int) -> KField:
    """
    The denominator-free kappa-dependent part of the norm of the minimal polynomial
    """
    M = _check_minimal(N, m, s, k)
    result = KField.const(math.factorial(s))
    for i in range(1, k):
        result = result * KField.linear(1, i)
    for j in range(1, M - k - 1):
        result = result * _poch_linear(1, j, s)
    for l in range(M - k - 1, M - 1):
        result = result * _poch_linear(2, l, s)
    for i in range(2, m + 1):
        result = result * _poch_linear(1, -i, i - 1)
    result = result * _poch_linear(1, -N, m - s - 1)
    result = result * _poch_linear(m - s + 1, -(m + 1), s)
    return result * KField.linear(m - s, -(N - k))


def minimal_constants(N: int, m: int, s: int, k: int) -> Dict[str, Fraction | int]:
    """
    C_0(E_R), C_1(E_S) and #G for the minimal family in closed form
    """
    M = _check_minimal(N, m, s, k)

    def rising(x, n):
        return math.prod(range(x, x + n)) if n > 0 else 1

    if s >= 1:
        c0 = Fraction(math.factorial(m), math.factorial(s) * rising(M + s + 1, m - s - 1) * (M + s - k))
        c1 = Fraction(rising(M + s + 1, m - s) * (M + s - k) * math.factorial(s), math.factorial(m + 1))
        stabilizer = math.factorial(k) * math.factorial(M - k - 1)
    else:
        c0 = Fraction(math.factorial(m), rising(M + 1, m - 1) * (M - k))
        c1 = Fraction(rising(M + 1, m), math.factorial(m + 1))
        stabilizer = math.factorial(k) * math.factorial(M - k)
    return {'C0_root': c0, 'C1_sink': c1, 'stabilizer_order': stabilizer}


def minimal_norm(N: int, m: int, s: int, k: int) -> NormReport:
    """
    Norm of the family-0 supersymmetric polynomial of the minimal tableau with parameters s, k
    """
    constants = minimal_constants(N, m, s, k)
    constant = (Fraction((m + 1) * math.factorial(N), constants['stabilizer_order'])
                * constants['C0_root'] / constants['C1_sink'])
    product = minimal_product(N, m, s, k)
    row, col = minimal_tableau(N, m, s, k)
    return NormReport(closed_form=product * constant, constant_free_part=product, constant=constant,
                      details={'row': list(row), 'col': list(col),
                               'stabilizer_order': constants['stabilizer_order']})


def is_positive_at(value: KField, kappa0) -> bool:
    return kf_eval(value, kappa0) > 0
