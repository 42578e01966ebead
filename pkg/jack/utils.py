from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from errors import MalformedInput, UsageError
from hook_tableaux import HookLabel
from kappa_field import to_fraction, to_qq


def parse_int_list(text: str | None, name: str) -> List[int]:
    """
    Parses '2,3,4' into [2, 3, 4]; an empty string is the empty list
    """
    if text is None:
        raise UsageError(f'--{name} is required')
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(',')]
    except ValueError:
        raise UsageError(f'--{name} must be a comma separated list of integers, got {text!r}')


def parse_rational(text: str, name: str) -> Fraction:
    try:
        return to_fraction(to_qq(text))
    except MalformedInput:
        raise UsageError(f'--{name} must be an integer or p/q, got {text!r}')


def infer_label(N: int, positions: List[int], family: int, m: int | None = None) -> HookLabel:
    """
    The label of a position set; m follows from #E and the family when not given
    """
    inferred = len(positions) - 1 if family == 0 else len(positions) + 1
    if m is not None and m != inferred:
        raise UsageError(f'--m {m} does not match a family-{family} set of size {len(positions)}')
    return HookLabel.of(N, inferred, family, positions)


def read_json_file(path: str) -> Dict:
    try:
        with open(path, 'r') as file:
            return json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f'cannot read {path}: {e}')


def parse_int_env(environ, key: str, default: int) -> int:
    """
    Reads an integer setting; a malformed value is logged and ends the process
    """
    value = environ.get(key, default)
    try:
        return int(value)
    except ValueError:
        logging.error(f'The environment value {key} must be an integer, got {value!r}')
        exit(1)


def format_table(rows: List[Tuple[str, str, str]]) -> str:
    width = max((len(name) for name, _, _ in rows), default=4)
    lines = [f'{"check".ljust(width)}  result  detail']
    for name, status, detail in rows:
        lines.append(f'{name.ljust(width)}  {status.ljust(6)}  {detail}')
    return '\n'.join(lines)


def node_properties(composition: str = 'alpha') -> Dict:
    """
    Parameter specs shared by every subcommand that addresses a node (composition, E)
    """
    return {
        composition: {
            'type': 'string',
            'description': 'comma separated nonnegative integers' if composition == 'alpha'
            else 'comma separated partition, largest part first',
        },
        'set': {'type': 'string', 'description': 'the label E as comma separated positions in 1..N'},
        'family': {'type': 'integer', 'enum': [0, 1], 'default': 0, 'description': 'hook family of E'},
        'N': {'type': 'integer', 'description': 'number of variables, defaults to the composition length'},
        'm': {'type': 'integer', 'description': 'fermionic degree, inferred from E and the family'},
    }


def parse_node(engine, kwargs: Dict, composition: str = 'alpha') -> Tuple[Tuple[int, ...], HookLabel]:
    values = parse_int_list(kwargs.get(composition), composition)
    N = kwargs.get('N') or len(values)
    if N != len(values):
        raise UsageError(f'--N {N} does not match the {len(values)} parts of --{composition}')
    if any(v < 0 for v in values):
        raise UsageError(f'--{composition} parts must be nonnegative')
    if composition == 'lambda' and any(values[i] < values[i + 1] for i in range(N - 1)):
        raise UsageError(f'--lambda must be nonincreasing, got {values}')
    engine.check_limits(N, sum(values))
    label = infer_label(N, parse_int_list(kwargs.get('set'), 'set'), kwargs.get('family', 0), kwargs.get('m'))
    return tuple(values), label
