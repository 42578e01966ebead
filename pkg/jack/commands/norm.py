from typing import Dict

from norms_pairing import is_positive_at, jack_norm, minimal_norm, supersym_norm
from supersymmetrize import orbit, realize_tableau
from utils import node_properties, parse_node

from .command import Command


class NormCommand(Command):
    """
    Closed-form norms, optionally compared with the pairing oracle
    """

    def get_source_name(self) -> str:
        return "Norms"

    def get_spec(self) -> [Dict]:
        oracle = {"type": "boolean", "description": "also evaluate the pairing oracle and compare"}
        return [{
            "name": "norm",
            "description": "The squared norm of J_{alpha,E} as a rational function of kappa",
            "parameters": {
                "type": "object",
                "properties": {**node_properties(), "oracle": oracle},
                "required": ["alpha", "set"],
            },
        }, {
            "name": "supernorm",
            "description": "The squared norm of the supersymmetric polynomial p_{lambda,E}",
            "parameters": {
                "type": "object",
                "properties": {**node_properties('lambda'), "oracle": oracle},
                "required": ["lambda", "set"],
            },
        }, {
            "name": "minnorm",
            "description": "The norm of the minimal supersymmetric polynomial with parameters s and k",
            "parameters": {
                "type": "object",
                "properties": {
                    "N": {"type": "integer", "description": "number of variables"},
                    "m": {"type": "integer", "description": "fermionic degree"},
                    "s": {"type": "integer", "description": "row value, 0 <= s <= m-1"},
                    "k": {"type": "integer", "description": "number of entries s+1, 0 <= k <= N-m-2"},
                    "check": {"type": "boolean", "description": "compare with the general norm formula"},
                },
                "required": ["N", "m", "s", "k"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        if function_name == 'minnorm':
            engine.check_limits(kwargs['N'])
            report = minimal_norm(kwargs['N'], kwargs['m'], kwargs['s'], kwargs['k'])
            result = report.to_json()
            if kwargs.get('check'):
                lam, label = realize_tableau(0, result['row'], result['col'])
                result['matches_general'] = supersym_norm(lam, label).closed_form == report.closed_form
            result['text'] = f'{report.constant} * {report.constant_free_part}'
            return result

        if function_name == 'supernorm':
            lam, label = parse_node(engine, kwargs, 'lambda')
            if kwargs.get('oracle'):
                await engine.prefetch(orbit(lam, label))
            report = supersym_norm(lam, label, oracle=kwargs.get('oracle', False))
        else:
            alpha, label = parse_node(engine, kwargs)
            report = jack_norm(alpha, label, oracle=kwargs.get('oracle', False))

        result = report.to_json()
        window = 2 * label.N
        result['positive_near_zero'] = all(is_positive_at(report.closed_form, k0) for k0 in
                                           (0, f'1/{window}', f'-1/{window}'))
        text = str(report.closed_form)
        if report.oracle_value is not None:
            text += f'\noracle {"agrees" if report.matches_oracle else "DISAGREES"}: {report.oracle_value}'
        result['text'] = text
        return result
