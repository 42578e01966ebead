from typing import Dict

from jack_graph import build_jack, canonical_path, spectral_vector, verify_eigen
from superpoly import SuperPoly
from utils import node_properties, parse_node, read_json_file

from .command import Command


class NonsymmetricCommand(Command):
    """
    Builds nonsymmetric Jack superpolynomials J_{alpha,E} and checks their eigenvalues
    """

    def get_source_name(self) -> str:
        return "Jack graph"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "build",
            "description": "Build J_{alpha,E} along the canonical path from T_E",
            "parameters": {
                "type": "object",
                "properties": node_properties(),
                "required": ["alpha", "set"],
            },
        }, {
            "name": "verify",
            "description": "Check U_i J = zeta(i) J for every i; exit status 1 when the check fails",
            "parameters": {
                "type": "object",
                "properties": {
                    **node_properties(),
                    "input": {"type": "string", "description": "a serialized polynomial to check instead of building"},
                },
                "required": ["alpha", "set"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        alpha, label = parse_node(engine, kwargs)
        zeta = spectral_vector(alpha, label)
        if function_name == 'build':
            J = build_jack(alpha, label)
            return {
                'node': {**label.to_json(), 'alpha': list(alpha)},
                'path': [f'{kind} {i}' if kind == 'step' else kind for kind, i in canonical_path(alpha)],
                'spectral_vector': [v.to_json() for v in zeta.values()],
                'poly': J.to_json(),
                'text': f'J = {J.pretty()}\nzeta = {zeta}',
            }

        if kwargs.get('input'):
            J = SuperPoly.from_json(read_json_file(kwargs['input']))
        else:
            J = build_jack(alpha, label)
        ok = verify_eigen(J, alpha, label)
        return {
            'ok': ok,
            'spectral_vector': [v.to_json() for v in zeta.values()],
            'text': f'{"verified" if ok else "FAILED"}: zeta = {zeta}',
        }
