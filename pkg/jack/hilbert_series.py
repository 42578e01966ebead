from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from errors import MalformedInput, ParameterOutOfRange
from hook_tableaux import labels
from supersymmetrize import LabeledTableau


@dataclass(frozen=True)
class QSeries:
    """
    A power series in q kept up to q^trunc. Coefficients are Python ints.
    """
    coeffs: Tuple[int, ...]
    trunc: int

    def __post_init__(self):
        padded = tuple(self.coeffs[:self.trunc + 1]) + (0,) * (self.trunc + 1 - len(self.coeffs))
        object.__setattr__(self, 'coeffs', padded)

    @classmethod
    def one(cls, trunc: int) -> QSeries:
        return cls((1,), trunc)

    @classmethod
    def zero(cls, trunc: int) -> QSeries:
        return cls((), trunc)

    @classmethod
    def monomial(cls, power: int, trunc: int) -> QSeries:
        if power > trunc:
            return cls.zero(trunc)
        return cls((0,) * power + (1,), trunc)

    def coefficient(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n <= self.trunc else 0

    def _common(self, other: QSeries) -> int:
        return min(self.trunc, other.trunc)

    def __add__(self, other: QSeries) -> QSeries:
        trunc = self._common(other)
        return QSeries(tuple(self.coeffs[n] + other.coeffs[n] for n in range(trunc + 1)), trunc)

    def __sub__(self, other: QSeries) -> QSeries:
        trunc = self._common(other)
        return QSeries(tuple(self.coeffs[n] - other.coeffs[n] for n in range(trunc + 1)), trunc)

    def __mul__(self, other: QSeries) -> QSeries:
        trunc = self._common(other)
        result = [0] * (trunc + 1)
        for a, x in enumerate(self.coeffs[:trunc + 1]):
            if x:
                for b in range(trunc + 1 - a):
                    result[a + b] += x * other.coeffs[b]
        return QSeries(tuple(result), trunc)

    def shift(self, power: int) -> QSeries:
        """
        Multiplication by q^power
        """
        return QSeries((0,) * power + self.coeffs, self.trunc)

    def divide_one_minus(self, k: int) -> QSeries:
        """
        Multiplication by 1/(1 - q^k)
        """
        result = list(self.coeffs)
        for n in range(k, self.trunc + 1):
            result[n] += result[n - k]
        return QSeries(tuple(result), self.trunc)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def degree(self) -> int:
        return max((n for n, c in enumerate(self.coeffs) if c), default=-1)

    def to_json(self) -> Dict:
        return {'trunc': self.trunc, 'coeffs': list(self.coeffs)}

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            power = '' if n == 0 else ('q' if n == 1 else f'q^{n}')
            if not power:
                terms.append(str(c))
            else:
                terms.append(power if c == 1 else f'{c}{power}')
        return (' + '.join(terms) or '0') + f' + O(q^{self.trunc + 1})'


def gaussian_binomial(a: int, b: int, trunc: int | None = None) -> QSeries:
    """
    [a choose b]_q through [a, b] = [a-1, b-1] + q^b [a-1, b]
    """
    if not 0 <= b <= a:
        raise ParameterOutOfRange(f'[{a} choose {b}]_q needs 0 <= b <= a')
    trunc = b * (a - b) if trunc is None else trunc
    row = [QSeries.one(trunc)]
    for n in range(1, a + 1):
        nxt = [QSeries.one(trunc)]
        for j in range(1, min(n, b) + 1):
            upper = row[j - 1]
            lower = row[j].shift(j) if j < len(row) else QSeries.zero(trunc)
            nxt.append(upper + lower)
        row = nxt
    return row[b]


def q_pochhammer(n: int, trunc: int) -> QSeries:
    """
    (q;q)_n = (1-q)(1-q^2)...(1-q^n)
    """
    result = QSeries.one(trunc)
    for i in range(1, n + 1):
        result = result - result.shift(i)
    return result


def inv_generating(N: int, m: int, trunc: int | None = None) -> QSeries:
    """
    The sum of q^inv(E) over the family-0 labels of degree m
    """
    if not 0 <= m <= N - 1:
        raise ParameterOutOfRange(f'no family-0 labels for N={N}, m={m}')
    trunc = m * (N - 1 - m) if trunc is None else trunc
    counts = [0] * (trunc + 1)
    for label in labels(N, m, 0):
        if label.inv <= trunc:
            counts[label.inv] += 1
    return QSeries(tuple(counts), trunc)


def Q_series(N: int, m: int, trunc: int) -> QSeries:
    """
    q^(m(m+1)/2) [N-1 choose m]_q; zero outside 0 <= m <= N-1
    """
    if not 0 <= m <= N - 1:
        return QSeries.zero(trunc)
    return gaussian_binomial(N - 1, m, trunc).shift(m * (m + 1) // 2)


def hook_series(N: int, m: int, family: int, trunc: int) -> QSeries:
    """
    Generating function by bosonic degree of the supersymmetric polynomials of one isotype.
    family 0: q^(m(m+1)/2) / ((1-q^N)(q;q)_m (q;q)_(N-m-1))
    family 1: q^(m(m-1)/2) / ((1-q^N)(q;q)_(m-1) (q;q)_(N-m))
    """
    if family == 0:
        if not 0 <= m <= N - 1:
            raise ParameterOutOfRange(f'no family-0 isotype for N={N}, m={m}')
        start, first, second = m * (m + 1) // 2, m, N - m - 1
    else:
        if not 1 <= m <= N:
            raise ParameterOutOfRange(f'no family-1 isotype for N={N}, m={m}')
        start, first, second = m * (m - 1) // 2, m - 1, N - m
    result = QSeries.monomial(start, trunc).divide_one_minus(N)
    for k in list(range(1, first + 1)) + list(range(1, second + 1)):
        result = result.divide_one_minus(k)
    return result


def _strict_sequences(length: int, low: int, total: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    # the smallest completion is low, low+1, ..., low+length-1
    value = low
    while value * length + length * (length - 1) // 2 <= total:
        for rest in _strict_sequences(length - 1, value + 1, total - value):
            yield (value,) + rest
        value += 1


def _weak_sequences(length: int, low: int, total: int, high: int | None = None) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    value = low
    while value * length <= total and (high is None or value <= high):
        for rest in _weak_sequences(length - 1, value, total - value, high):
            yield (value,) + rest
        value += 1


def column_strict_tableaux(N: int, m: int, family: int, degree: int) -> Iterator[LabeledTableau]:
    """
    All column-strict labeled tableaux of one isotype with entries summing to degree:
    a strictly increasing column from the corner and a weakly increasing row after it
    """
    if family == 0:
        column_cells, row_cells = m + 1, N - m - 1
    else:
        column_cells, row_cells = m, N - m
    if column_cells < 1 or row_cells < 0:
        raise ParameterOutOfRange(f'no family-{family} isotype for N={N}, m={m}')
    for column_total in range(degree + 1):
        for column in _strict_sequences(column_cells, 0, column_total):
            for row in _weak_sequences(row_cells, column[0], degree - column_total):
                yield LabeledTableau(family=family, row=(column[0],) + row, col=column[1:])


def count_column_strict(N: int, m: int, family: int, degree: int) -> int:
    return sum(1 for _ in column_strict_tableaux(N, m, family, degree))


def generator_tableaux(N: int, m: int) -> List[LabeledTableau]:
    """
    Family-0 tableaux with column 0, 1, ..., m and a weakly increasing row with entries in [0, m].
    Their degrees are distributed as Q_series(N, m).
    """
    if not 0 <= m <= N - 1:
        raise ParameterOutOfRange(f'no family-0 isotype for N={N}, m={m}')
    row_cells = N - m - 1
    staircase = m * (m + 1) // 2
    result = []
    for extra in range(row_cells * m + 1):
        for row in _weak_sequences(row_cells, 0, extra, high=m):
            result.append(LabeledTableau(family=0, row=(0,) + row, col=tuple(range(1, m + 1))))
    return sorted(result, key=lambda tab: (tab.total() - staircase, tab.row))


def subset_to_parts(k: int, l: int, F: Sequence[int]) -> Tuple[int, ...]:
    """
    F = {i_1 < ... < i_l} in {1..k+l} to j_1 <= ... <= j_l <= k with j_u = #{v not in F : v > i_(l+1-u)}
    """
    members = sorted(set(F))
    if len(members) != l or any(not 1 <= i <= k + l for i in members):
        raise MalformedInput(f'{tuple(F)} is not an {l}-subset of 1..{k + l}')
    rest = [v for v in range(1, k + l + 1) if v not in members]
    return tuple(sum(1 for v in rest if v > members[l - u]) for u in range(1, l + 1))


def parts_to_subset(k: int, l: int, parts: Sequence[int]) -> Tuple[int, ...]:
    """
    Inverse of subset_to_parts: i_u = k + u - j_(l+1-u)
    """
    parts = tuple(parts)
    if len(parts) != l or any(not 0 <= j <= k for j in parts) or any(parts[u] > parts[u + 1] for u in range(l - 1)):
        raise MalformedInput(f'{parts} is not a nondecreasing sequence of {l} parts in [0, {k}]')
    return tuple(k + u - parts[l - u] for u in range(1, l + 1))


def partition_set_bijection(k: int, l: int, value) -> Tuple[int, ...]:
    """
    Sets (set or frozenset) map to parts, sequences of parts map to sets
    """
    if isinstance(value, (set, frozenset)):
        return subset_to_parts(k, l, value)
    return parts_to_subset(k, l, value)


def label_parts(E: int, N: int) -> Tuple[int, ...]:
    """
    The parts attached to E^C within 1..N-1; they sum to inv_prime_count(E^C, N)
    """
    rest = [i for i in range(1, N) if not E >> (i - 1) & 1]
    k = N - 1 - len(rest)
    return subset_to_parts(k, len(rest), rest)


def series_table(N: int, trunc: int) -> Dict[str, List[int]]:
    """
    Coefficient lists of every hook isotype for N variables
    """
    table = {}
    for m in range(N):
        table[f'family=0,m={m}'] = list(hook_series(N, m, 0, trunc).coeffs)
    for m in range(1, N + 1):
        table[f'family=1,m={m}'] = list(hook_series(N, m, 1, trunc).coeffs)
    return table
