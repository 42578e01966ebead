from typing import Dict

from hook_tableaux import T_norm_sq, build_T, labels, tableau_of
from utils import infer_label, parse_int_list

from .command import Command


class BasisCommand(Command):
    """
    The fermionic basis T_E of a hook isotype and the tableau of a single label
    """

    def get_source_name(self) -> str:
        return "Hook tableaux"

    def get_spec(self) -> [Dict]:
        return [{
            "name": "basis",
            "description": "List every label of an isotype in construction order with T_E and |T_E|^2",
            "parameters": {
                "type": "object",
                "properties": {
                    "N": {"type": "integer", "description": "number of variables"},
                    "m": {"type": "integer", "description": "fermionic degree"},
                    "family": {"type": "integer", "enum": [0, 1], "default": 0, "description": "hook family"},
                },
                "required": ["N", "m"],
            },
        }, {
            "name": "tableau",
            "description": "Show the hook tableau, the content vector and inv of a label",
            "parameters": {
                "type": "object",
                "properties": {
                    "N": {"type": "integer", "description": "number of variables"},
                    "set": {"type": "string", "description": "the label E as comma separated positions"},
                    "family": {"type": "integer", "enum": [0, 1], "default": 0, "description": "hook family"},
                    "m": {"type": "integer", "description": "fermionic degree, inferred from E"},
                },
                "required": ["N", "set"],
            },
        }]

    async def execute(self, function_name, engine, **kwargs) -> Dict:
        N = kwargs['N']
        engine.check_limits(N)
        if function_name == 'tableau':
            label = infer_label(N, parse_int_list(kwargs['set'], 'set'), kwargs.get('family', 0), kwargs.get('m'))
            shape = tableau_of(label)
            return {
                'label': label.to_json(),
                'tableau': shape.to_json(),
                'content': list(label.content()),
                'inv': label.inv,
                'text': f'{label}\nrow {list(shape.row)}\ncol {list(shape.col)}\ncontent {list(label.content())}',
            }

        family = kwargs.get('family', 0)
        entries, lines = [], []
        for label in labels(N, kwargs['m'], family):
            T = build_T(label)
            norm = T_norm_sq(label)
            entries.append({
                'E': list(label.positions),
                'inv': label.inv,
                'content': list(label.content()),
                'norm_sq': f'{norm.numerator}/{norm.denominator}',
                'T': T.to_json(),
            })
            lines.append(f'E={list(label.positions)} inv={label.inv} |T|^2={norm}\n  T = {T}')
        return {'N': N, 'm': kwargs['m'], 'family': family, 'labels': entries, 'text': '\n'.join(lines)}
