from abc import abstractmethod, ABC
from typing import Dict


class Command(ABC):
    """
    A command interface: each command contributes one or more CLI subcommands.
    """

    @abstractmethod
    def get_source_name(self) -> str:
        """
        Return the name of the area of the library the command exposes.
        """
        pass

    @abstractmethod
    def get_spec(self) -> [Dict]:
        """
        Subcommand specs: a name, a description and the parameters as a JSON schema object.
        Parameter types are string, integer or boolean; an optional "enum" restricts the values.
        """
        pass

    @abstractmethod
    async def execute(self, function_name, engine, **kwargs) -> Dict:
        """
        Run the subcommand and return a JSON serializable response.
        A 'text' entry, when present, is the --pretty rendering.
        """
        pass
