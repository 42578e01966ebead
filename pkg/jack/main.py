import logging
import os
import sys

from dotenv import load_dotenv

from command_manager import CommandManager
from utils import parse_int_env


def main():
    # Read .env file
    load_dotenv()

    # Setup logging, stdout is reserved for command output
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=os.environ.get('LOG_LEVEL', 'INFO').upper(),
        stream=sys.stderr
    )

    # Setup configurations
    config = {
        'cache_dir': os.environ.get('JACK_CACHE_DIR') or None,
        'max_n': parse_int_env(os.environ, 'JACK_MAX_N', 12),
        'max_degree': parse_int_env(os.environ, 'JACK_MAX_DEGREE', 20),
        'memo_size': parse_int_env(os.environ, 'JACK_MEMO_SIZE', 4096),
        'jobs': parse_int_env(os.environ, 'JACK_JOBS', 1),
        'unsafe_limits': os.environ.get('JACK_UNSAFE_LIMITS', 'false').lower() == 'true',
        'commands': [name for name in os.environ.get('JACK_COMMANDS', '').split(',') if name],
    }

    command_manager = CommandManager(config=config)
    sys.exit(command_manager.run(sys.argv[1:]))


if __name__ == '__main__':
    main()
