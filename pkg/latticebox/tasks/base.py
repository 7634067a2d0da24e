import abc
import json
import sys
from typing import Any, Dict, Sequence, Tuple

from latticebox.config.configuration import Configuration
from latticebox.errors import CheckFailed, MalformedInput
from latticebox.fan import Polytope, Triangulation
from latticebox.parsers import read_polytope_file
from latticebox.reporter import Check


class TaskBase:
    def __init__(self, args, config: Configuration):
        self.args = args
        self.config = config
        self.reporter = config.reporter

    @classmethod
    def from_args(cls, args):
        config = Configuration.from_args(args)
        return cls(args, config)

    @abc.abstractmethod
    def run(self) -> Dict[str, Any]:
        raise NotImplementedError('Implementation for task does not exist.')

    def execute(self, stream=None) -> int:
        """Runs the task, reports its checks and writes the result; returns the exit code."""
        try:
            payload = self.run()
        finally:
            self.reporter.finish()
        self.emit(payload, stream or sys.stdout)
        return 0 if self.reporter.passed else CheckFailed.exit_code

    def emit(self, payload: Dict[str, Any], stream):
        if self.config.output == 'text':
            stream.write(format_text(payload))
        else:
            stream.write(json.dumps(payload, sort_keys=True, indent=2) + '\n')

    def check(self, name: str, expected, actual) -> Check:
        return self.reporter.check(Check.compare(name, expected, actual))

    def require(self, name: str, expected, actual):
        """Records a check and raises CheckFailed when it fails."""
        check = self.check(name, expected, actual)
        if not check.passed:
            raise CheckFailed(
                "Check '{}' failed: expected {}, got {}.".format(name, check.expected, check.actual),
                check.to_dict())
        return check

    def check_oracle_size(self, dim: int):
        if dim > self.config.oracle_max_dimension and not getattr(self.args, 'force', False):
            raise MalformedInput(
                "Oracle requested in dimension {} above oracle-max-dimension {}; pass --force to run it."
                .format(dim, self.config.oracle_max_dimension), {'dimension': dim})

    def load_polytope(self, path: str) -> Tuple[Polytope, Triangulation]:
        polytope_file = read_polytope_file(path)
        polytope, triangulation = polytope_file.load()
        triangulation.validate(full=bool(polytope_file.triangulation) and self.config.validate_subdivisions)
        return polytope, triangulation


def parse_indices(text: str) -> Tuple[int, ...]:
    """Parses "1,2,3"; an empty string is the empty face."""
    if text is None or text.strip() == '':
        return ()
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError:
        raise MalformedInput("Expected comma-separated integers, got {!r}.".format(text))


def format_text(payload: Dict[str, Any], indent: int = 0) -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append('{}{}:'.format(' ' * indent, key))
            lines.append(format_text(value, indent + 2).rstrip('\n'))
        elif isinstance(value, Sequence) and not isinstance(value, str) and value and isinstance(value[0], dict):
            lines.append('{}{}:'.format(' ' * indent, key))
            for item in value:
                lines.append(format_text(item, indent + 2).rstrip('\n'))
                lines.append('')
        else:
            lines.append('{}{}: {}'.format(' ' * indent, key, value))
    return '\n'.join(lines) + '\n'
