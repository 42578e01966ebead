from typing import Dict

from errors import UsageError
from hilbert_series import Q_series, count_column_strict, gaussian_binomial, hook_series, inv_generating

from .command import Command


class SeriesCommand(Command):
    """
    Poincare series and Gaussian binomials as coefficient lists
    """

    def get_source_name(self) -> str:
        return "Hilbert series"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "series",
            "description": "Coefficients of q^0..q^trunc of a generating function",
            "parameters": {
                "type": "object",
                "properties": {
                    "N": {"type": "integer", "description": "number of variables"},
                    "m": {"type": "integer", "description": "fermionic degree"},
                    "family": {"type": "integer", "enum": [0, 1], "default": 0, "description": "hook family"},
                    "kind": {"type": "string", "enum": ["Q", "hook", "gaussian", "inv"], "default": "Q",
                             "description": "Q: q^(m(m+1)/2)[N-1 choose m]; hook: supersymmetric polynomials "
                                            "by degree; gaussian: [N choose m]; inv: sum of q^inv(E)"},
                    "trunc": {"type": "integer", "description": "highest power kept; defaults to the full "
                                                               "polynomial or 12 for infinite series"},
                    "check": {"type": "boolean", "description": "for kind=hook, also count tableaux directly"},
                },
                "required": ["N", "m"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        N, m, family = kwargs['N'], kwargs['m'], kwargs.get('family', 0)
        kind, trunc = kwargs.get('kind', 'Q'), kwargs.get('trunc')
        engine.check_limits(N, trunc or 0)
        if kind == 'Q':
            series = Q_series(N, m, trunc if trunc is not None else m * (m + 1) // 2 + m * max(N - 1 - m, 0))
        elif kind == 'gaussian':
            series = gaussian_binomial(N, m, trunc)
        elif kind == 'inv':
            series = inv_generating(N, m, trunc)
        elif kind == 'hook':
            series = hook_series(N, m, family, trunc if trunc is not None else 12)
        else:
            raise UsageError(f'unknown series kind {kind!r}')

        result = {'kind': kind, **series.to_json(), 'text': ','.join(map(str, series.coeffs))}
        if kind == 'hook' and kwargs.get('check'):
            counts = [count_column_strict(N, m, family, n) for n in range(series.trunc + 1)]
            result['counts'] = counts
            result['matches_counts'] = counts == list(series.coeffs)
        return result
