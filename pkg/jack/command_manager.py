import argparse
import asyncio
import json
import logging
import sys
from typing import Dict, List

from commands.basis import BasisCommand
from commands.nonsymmetric import NonsymmetricCommand
from commands.norm import NormCommand
from commands.selftest import SelftestCommand
from commands.series import SeriesCommand
from commands.spectrum import SpectrumCommand
from commands.supersym import SupersymCommand
from engine import Engine
from errors import InvariantViolation, JackError, UsageError


class CommandManager:
    """
    A class to manage the commands, build the argument parser and run the subcommands
    """

    def __init__(self, config):
        self.config = config
        command_mapping = {
            'basis': BasisCommand,
            'nonsymmetric': NonsymmetricCommand,
            'norm': NormCommand,
            'supersym': SupersymCommand,
            'series': SeriesCommand,
            'spectrum': SpectrumCommand,
            'selftest': SelftestCommand,
        }
        enabled = config.get('commands') or list(command_mapping)
        self.commands = [command_mapping[name]() for name in enabled if name in command_mapping]

    def get_functions_specs(self) -> List[Dict]:
        """
        Return the list of subcommand specs of every enabled command
        """
        return [spec for specs in map(lambda command: command.get_spec(), self.commands) for spec in specs]

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog='jack', description='Nonsymmetric Jack superpolynomials')
        output = parser.add_mutually_exclusive_group()
        output.add_argument('--json', dest='pretty', action='store_false', help='JSON output (default)')
        output.add_argument('--pretty', dest='pretty', action='store_true', help='human readable output')
        parser.set_defaults(pretty=False)
        parser.add_argument('--memo-size', type=int, help='LRU size of the node memo')
        parser.add_argument('--jobs', type=int, help='worker threads for independent node builds')
        parser.add_argument('--unsafe-limits', action='store_true', default=None, help='lift the N and degree caps')
        subparsers = parser.add_subparsers(dest='function_name', required=True)
        for spec in self.get_functions_specs():
            sub = subparsers.add_parser(spec['name'], help=spec['description'], description=spec['description'])
            sub.add_argument('--json', dest='pretty', action='store_false', default=argparse.SUPPRESS)
            sub.add_argument('--pretty', dest='pretty', action='store_true', default=argparse.SUPPRESS)
            required = set(spec['parameters'].get('required', []))
            for name, prop in spec['parameters']['properties'].items():
                flag = f'--{name}'
                if prop['type'] == 'boolean':
                    sub.add_argument(flag, dest=name, action='store_true', help=prop.get('description'))
                    continue
                kind = int if prop['type'] == 'integer' else str
                sub.add_argument(flag, dest=name, type=kind, choices=prop.get('enum'), default=prop.get('default'),
                                 required=name in required, help=prop.get('description'))
        return parser

    def get_command_source_name(self, function_name) -> str:
        command = self.__get_command_by_function_name(function_name)
        if not command:
            return ''
        return command.get_source_name()

    async def call_function(self, function_name, engine, arguments: Dict) -> Dict:
        command = self.__get_command_by_function_name(function_name)
        if not command:
            raise UsageError(f'Function {function_name} not found')
        return await command.execute(function_name, engine, **arguments)

    def run(self, argv: List[str]) -> int:
        """
        Parse argv, run one subcommand and write its output to stdout; returns the exit status
        """
        parser = self.build_parser()
        try:
            args = vars(parser.parse_args(argv))
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        function_name = args.pop('function_name')
        pretty = args.pop('pretty', False)
        config = dict(self.config)
        for key in ('memo_size', 'jobs', 'unsafe_limits'):
            value = args.pop(key)
            if value is not None:
                config[key] = value

        source = self.get_command_source_name(function_name)
        logging.info(f'Running {function_name} ({source})')
        try:
            engine = Engine(config)
            result = asyncio.run(self.call_function(function_name, engine, args))
        except JackError as e:
            logging.error(f'{function_name} ({source}) failed with {type(e).__name__}')
            print(f'{type(e).__name__}: {e}', file=sys.stderr)
            return e.exit_code
        except Exception as e:
            logging.exception(f'{function_name} ({source}) crashed')
            print(f'InternalError: {e}', file=sys.stderr)
            return InvariantViolation.exit_code

        text = result.pop('text', None)
        if pretty and text is not None:
            print(text)
        else:
            print(json.dumps(result, sort_keys=True, indent=2 if pretty else None, default=str))
        return 1 if result.get('ok') is False else 0

    def __get_command_by_function_name(self, function_name):
        return next((command for command in self.commands
                     if function_name in map(lambda spec: spec.get('name'), command.get_spec())), None)
