from typing import Dict

from cst_spectra import power_sum_eigenvalue
from errors import NotRowStrict
from supersymmetrize import (antisymmetric_eigenvalue, build_antisymmetric, build_supersymmetric, labeled_tableau,
                             orbit, require_column_strict, root_sink, superpartition_of)
from utils import node_properties, parse_node

from .command import Command


class SupersymCommand(Command):
    """
    Supersymmetric and antisymmetric polynomials assembled from an orbit of nonsymmetric ones
    """

    def get_source_name(self) -> str:
        return "Supersymmetrization"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "supersym",
            "description": "The S_N-invariant polynomial p_{lambda,E} of a column-strict tableau",
            "parameters": {
                "type": "object",
                "properties": {
                    **node_properties('lambda'),
                    "normalization": {"type": "string", "enum": ["orbit", "monic"], "default": "orbit",
                                      "description": "'monic' scales the x^lambda T_{E_R} coefficient to 1"},
                },
                "required": ["lambda", "set"],
            },
        }, {
            "name": "antisym",
            "description": "The antisymmetric polynomial of a row-strict tableau, built from the complement label",
            "parameters": {
                "type": "object",
                "properties": node_properties('lambda'),
                "required": ["lambda", "set"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        lam, label = parse_node(engine, kwargs, 'lambda')
        tab = labeled_tableau(lam, label)
        if function_name == 'antisym':
            if not tab.is_row_strict():
                raise NotRowStrict(f'row {tab.row} of the tableau repeats a value')
            await engine.prefetch(orbit(lam, label.complement_label()))
            q = build_antisymmetric(lam, label)
            eigenvalue = antisymmetric_eigenvalue(lam, label)
            return {
                'tableau': tab.to_json(),
                'poly': q.to_json(),
                'eigenvalue_U2': eigenvalue.to_json(),
                'text': f'q = {q.pretty()}\nsum U_i^2 eigenvalue: {eigenvalue}',
            }

        require_column_strict(lam, label)
        await engine.prefetch(orbit(lam, label))
        p = build_supersymmetric(lam, label, normalization=kwargs.get('normalization', 'orbit'))
        root, sink = root_sink(lam, label)
        eigenvalue = power_sum_eigenvalue(lam, label, 2)
        return {
            'tableau': tab.to_json(),
            'superpartition': str(superpartition_of(tab)),
            'root': list(root.positions),
            'sink': list(sink.positions),
            'poly': p.to_json(),
            'eigenvalue_U2': eigenvalue.to_json(),
            'text': f'p = {p.pretty()}\nsuperpartition {superpartition_of(tab)}, '
                    f'E_R={list(root.positions)}, E_S={list(sink.positions)}\nsum U_i^2 eigenvalue: {eigenvalue}',
        }
