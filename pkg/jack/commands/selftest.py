import logging
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from cst_spectra import cst_eigenvalue, ground_state_eigenvalue, ground_state_tableau
from errors import JackError
from fermionic_basis import fermion_inner, project
from hilbert_series import Q_series, count_column_strict, gaussian_binomial, hook_series, inv_generating
from hook_tableaux import HookLabel, build_T, content_vector, jucys_murphy, labels, t_norm_field
from jack_graph import build_jack, spectral_vector, verify_eigen
from kappa_field import KAPPA, KField
from norms_pairing import is_positive_at, jack_norm, minimal_norm, supersym_norm
from superpoly import sp_apply_si, sp_delta_dual, sp_neg_kappa
from supersymmetrize import build_supersymmetric, orbit_labels, realize_tableau, root_sink
from utils import format_table

from .command import Command

WORKED_LABEL = HookLabel.of(4, 2, 0, [2, 3, 4])
WORKED_ALPHA = (0, 1, 1, 0)


def worked_expansion() -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], KField]:
    """
    The expansion of J_{(0,1,1,0), {2,3,4}} term by term
    """
    a = KField((0, 1), (1, -2))
    b = KField((0, 1), (1, -1, -2))
    return {
        ((0, 1, 1, 0), (1, 3)): KField((-1,)),
        ((0, 1, 1, 0), (1, 4)): KField((1,)),
        ((0, 1, 1, 0), (3, 4)): KField((-1,)),
        ((0, 1, 0, 1), (1, 3)): a,
        ((0, 1, 0, 1), (1, 4)): -a,
        ((0, 1, 0, 1), (3, 4)): a,
        ((0, 0, 1, 1), (1, 2)): b * KField((1, -1)),
        ((0, 0, 1, 1), (1, 3)): -b * KField((1, -2)),
        ((0, 0, 1, 1), (2, 3)): b * KField((1, -2)),
        ((0, 0, 1, 1), (1, 4)): -b * KAPPA,
        ((0, 0, 1, 1), (2, 4)): b * KAPPA,
    }


def check_worked_nsjp() -> Tuple[bool, str]:
    J = build_jack(WORKED_ALPHA, WORKED_LABEL)
    expected = worked_expansion()
    found = {(alpha, tuple(i + 1 for i in range(4) if mask >> i & 1)): c for (alpha, mask), c in J.terms.items()}
    zeta = [KField((1, -1)), KField((2, 1)), KField((2, -2)), KField((1,))]
    ok = found == expected and spectral_vector(WORKED_ALPHA, WORKED_LABEL).values() == zeta
    return ok and verify_eigen(J, WORKED_ALPHA, WORKED_LABEL), f'{len(found)} terms'


def check_worked_norm() -> Tuple[bool, str]:
    expected = (KField((3,)) * KField((1, -3)) * KField((1, 2)) * KField((1, -1))
                / (KField((1, 1)) * KField((1, -2))))
    report = jack_norm(WORKED_ALPHA, WORKED_LABEL, oracle=True)
    return report.closed_form == expected and bool(report.matches_oracle), str(report.closed_form)


def check_t_basis() -> Tuple[bool, str]:
    count = 0
    for N in range(2, 5):
        for family, degrees in ((0, range(0, N)), (1, range(1, N + 1))):
            for m in degrees:
                for label in labels(N, m, family):
                    T = build_T(label)
                    c = content_vector(label)
                    for i in range(1, N + 1):
                        if jucys_murphy(i, T) != T * c[i - 1]:
                            return False, f'omega_{i} fails at {label}'
                    if fermion_inner(T, T) != t_norm_field(label):
                        return False, f'|T|^2 fails at {label}'
                    if project(project(T, family), family) != project(T, family):
                        return False, f'projection fails at {label}'
                    count += 1
    return True, f'{count} labels'


def check_supersymmetric_example() -> Tuple[bool, str]:
    lam, label = (2, 1, 1, 0), HookLabel.of(4, 2, 0, [1, 3, 4])
    p = build_supersymmetric(lam, label)
    if any(sp_apply_si(i, p) != p for i in range(1, 4)):
        return False, 'not symmetric'
    root, _ = root_sink(lam, label)
    if spectral_vector(lam, root).power_sum(2) != KField((18, -12, 6)):
        return False, 'wrong U^2 eigenvalue'
    report = supersym_norm(lam, label, oracle=True)
    shape = KField((1, -2)) * KField((2, -3)) * KField((1, -4))
    ok = bool(report.matches_oracle) and (report.closed_form / shape).is_constant()
    return ok, f'norm {report.closed_form}'


def check_orbit() -> Tuple[bool, str]:
    lam = (3, 3, 2, 2, 2, 2, 1, 1, 0, 0)
    label = HookLabel.of(10, 3, 0, [1, 4, 7, 10])
    members = orbit_labels(lam, label)
    root, sink = root_sink(lam, label)
    ok = len(members) == 16 and root.positions == (2, 6, 8, 10) and sink.positions == (1, 3, 7, 10)
    return ok, f'{len(members)} sets, E_R={root.positions}, E_S={sink.positions}'


def check_minimal_norms() -> Tuple[bool, str]:
    count = 0
    for N in range(3, 6):
        for m in range(1, N - 1):
            for s in range(m):
                for k in range(N - m - 1):
                    report = minimal_norm(N, m, s, k)
                    lam, label = realize_tableau(0, report.details['row'], report.details['col'])
                    if supersym_norm(lam, label).closed_form != report.closed_form:
                        return False, f'N={N} m={m} s={s} k={k}'
                    count += 1
    return True, f'{count} cases'


def check_series() -> Tuple[bool, str]:
    if list(gaussian_binomial(5, 2).coeffs) != [1, 1, 2, 2, 2, 1, 1]:
        return False, '[5 choose 2]'
    if [hook_series(4, 2, 0, 7).coefficient(n) for n in range(3, 8)] != [1, 2, 4, 6, 10]:
        return False, 'hook (2,1,1)'
    if [count_column_strict(4, 2, 0, n) for n in range(3, 8)] != [1, 2, 4, 6, 10]:
        return False, 'tableau counts (2,1,1)'
    for N in range(2, 9):
        for m in range(N):
            if inv_generating(N, m) != gaussian_binomial(N - 1, m):
                return False, f'inv generating N={N} m={m}'
            trunc = N * N
            if Q_series(N, m, trunc) + Q_series(N, m - 1, trunc) != gaussian_binomial(N, m, trunc).shift(m * (m - 1) // 2):
                return False, f'Q identity N={N} m={m}'
    return True, 'all identities'


def check_duality() -> Tuple[bool, str]:
    count = 0
    for N in range(2, 4):
        for m in range(N):
            for label in labels(N, m, 0):
                for alpha in _compositions(N, 2):
                    left = sp_delta_dual(build_jack(alpha, label))
                    right = sp_neg_kappa(build_jack(alpha, label.complement_label()))
                    if left != right and left != -right:
                        return False, f'alpha={alpha}, {label}'
                    count += 1
    return True, f'{count} nodes'


def _compositions(N: int, max_degree: int) -> List[Tuple[int, ...]]:
    result = [()]
    for _ in range(N):
        result = [c + (a,) for c in result for a in range(max_degree + 1)]
    return [c for c in result if sum(c) <= max_degree]


def check_spectra() -> Tuple[bool, str]:
    for N in range(1, 9):
        for m in range(N):
            if cst_eigenvalue(ground_state_tableau(N, m, 0)) != ground_state_eigenvalue(N, m, 0):
                return False, f'family 0, N={N} m={m}'
        for m in range(1, N + 1):
            if cst_eigenvalue(ground_state_tableau(N, m, 1)) != ground_state_eigenvalue(N, m, 1):
                return False, f'family 1, N={N} m={m}'
    return True, 'ground states N <= 8'


def check_positivity() -> Tuple[bool, str]:
    count = 0
    for N in range(2, 4):
        points = (0, Fraction(1, 2 * N), Fraction(-1, 2 * N))
        for m in range(N):
            for label in labels(N, m, 0):
                for alpha in _compositions(N, 2):
                    norm = jack_norm(alpha, label).closed_form
                    if not all(is_positive_at(norm, k0) for k0 in points):
                        return False, f'alpha={alpha}, {label}'
                    count += 1
    return True, f'{count} norms'


CHECKS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ('worked_nsjp', check_worked_nsjp),
    ('worked_norm', check_worked_norm),
    ('t_basis', check_t_basis),
    ('supersymmetric_example', check_supersymmetric_example),
    ('orbit', check_orbit),
    ('minimal_norms', check_minimal_norms),
    ('series', check_series),
    ('duality', check_duality),
    ('spectra', check_spectra),
    ('positivity', check_positivity),
]


class SelftestCommand(Command):
    """
    Runs the worked examples and identities as named checks
    """

    def get_source_name(self) -> str:
        return "Selftest"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "selftest",
            "description": "Run the built-in checks and print a pass/fail table; exit status 1 on any failure",
            "parameters": {
                "type": "object",
                "properties": {
                    "only": {"type": "string", "description": "comma separated check names to run"},
                },
                "required": [],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        wanted = set(kwargs['only'].split(',')) if kwargs.get('only') else None
        rows, results = [], {}
        for name, check in CHECKS:
            if wanted is not None and name not in wanted:
                continue
            try:
                ok, detail = check()
            except JackError as e:
                ok, detail = False, f'{type(e).__name__}: {e}'
            logging.info(f'Check {name}: {"pass" if ok else "FAIL"} ({detail})')
            results[name] = {'ok': ok, 'detail': detail}
            rows.append((name, 'pass' if ok else 'FAIL', detail))
        return {'ok': all(r['ok'] for r in results.values()), 'checks': results, 'text': format_table(rows)}
