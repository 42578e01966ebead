from typing import Dict

from cst_spectra import content_form_eigenvalue, cst_eigenvalue, hamiltonian_eigencheck, mu_notation, \
    power_sum_eigenvalue
from supersymmetrize import orbit, require_column_strict
from utils import node_properties, parse_node

from .command import Command


class SpectrumCommand(Command):
    """
    Calogero-Sutherland eigenvalues of supersymmetric polynomials
    """

    def get_source_name(self) -> str:
        return "Spectra"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "spectrum",
            "description": "The energy of p_{lambda,E} as a polynomial in kappa",
            "parameters": {
                "type": "object",
                "properties": {
                    **node_properties('lambda'),
                    "check": {"type": "boolean", "description": "build p and apply the shifted U_i operators"},
                },
                "required": ["lambda", "set"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        lam, label = parse_node(engine, kwargs, 'lambda')
        tab = require_column_strict(lam, label)
        energy = cst_eigenvalue(tab)
        result = {
            'mu': mu_notation(tab).to_json(),
            'eigenvalue': energy.to_json(),
            'content_form_agrees': content_form_eigenvalue(lam, label) == energy,
            'power_sums': {str(s): power_sum_eigenvalue(lam, label, s).to_json() for s in (1, 2)},
        }
        text = f'E = {energy}'
        if kwargs.get('check'):
            await engine.prefetch(orbit(lam, label))
            result['ok'] = hamiltonian_eigencheck(lam, label)
            text += f'\noperator check {"passed" if result["ok"] else "FAILED"}'
        result['text'] = text
        return result
