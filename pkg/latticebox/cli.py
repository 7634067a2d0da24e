import json
import os
import sys
from argparse import ArgumentParser

from latticebox import __version__
from latticebox.config.configuration import DEFAULT_CONFIG_FILE, OUTPUT_FORMATS, Configuration
from latticebox.ehrhart import METHODS
from latticebox.errors import ConfigurationError, LatticeBoxError, MalformedInput
from latticebox.tasks.analyze import AnalyzeTask, ScanTask
from latticebox.tasks.construct import FamilyTask, FreeSumTask, MakeSimplexTask
from latticebox.tasks.hstar import HStarTask, SeriesTask
from latticebox.tasks.identity import BoxPointsTask, IdentityTask
from latticebox.tasks.reproduce import TARGETS, ReproduceTask
from latticebox.utils.yaml import write_file


class CommandParser(ArgumentParser):
    """ArgumentParser whose usage errors become MalformedInput."""

    def error(self, message):
        raise MalformedInput(message, {'usage': self.format_usage().strip()})


class CliParser(object):
    """Argument parser for the CLI"""

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self._parser = CommandParser(prog='latticebox')
        self._add_arguments()

    def _add_arguments(self):
        """Adds arguments to parser."""
        self._parser.add_argument(
            '-v', '--version',
            action='version',
            version=self.version(),
            help='Show the version number.'
        )
        common = CommandParser(add_help=False)
        common.add_argument('--config-dir', help='Directory holding latticebox.yml (default: working directory)')
        common.add_argument('--output-format', choices=OUTPUT_FORMATS, help='Result format on stdout')
        common.add_argument('--no-color', action='store_true', help='Disable colours in progress output')

        commands = self._parser.add_subparsers(dest='command', metavar='command')
        commands.required = True

        hstar = commands.add_parser('hstar', parents=[common], help='h*-vector of a triangulated polytope')
        hstar.add_argument('file')
        hstar.add_argument('--method', choices=METHODS, default='both')
        hstar.add_argument('--oracle', action='store_true', help='Compare against brute-force counting')
        hstar.add_argument('--force', action='store_true', help='Run the oracle above oracle-max-dimension')

        series = commands.add_parser('series', parents=[common], help='Lattice-point counts of dilates')
        series.add_argument('file')
        series.add_argument('--terms', type=int, required=True)
        series.add_argument('--oracle', action='store_true')
        series.add_argument('--force', action='store_true')

        identity = commands.add_parser('identity', parents=[common], help='Truncated generating-function identity')
        identity.add_argument('file')
        identity.add_argument('--truncate', type=int, required=True)
        identity.add_argument('--lambda', dest='special', default='', help='Special face as point indices')

        boxpoints = commands.add_parser('boxpoints', parents=[common], help='Box points of a face')
        boxpoints.add_argument('file')
        boxpoints.add_argument('--face', required=True)
        boxpoints.add_argument('--rel', default='')

        make_simplex = commands.add_parser('make-simplex', parents=[common], help='Reflexive weighted simplex')
        make_simplex.add_argument('--weights', required=True)
        make_simplex.add_argument('--b', type=int, required=True)
        make_simplex.add_argument('-o', '--output')

        family = commands.add_parser('family', parents=[common], help='Nonunimodal family member')
        family.add_argument('--b', type=int, required=True)
        family.add_argument('--k', type=int, required=True)
        family.add_argument('--r', type=int, required=True)
        family.add_argument('-o', '--output')

        free_sum = commands.add_parser('free-sum', parents=[common], help='Free sum of two polytopes')
        free_sum.add_argument('first')
        free_sum.add_argument('second')
        free_sum.add_argument('-o', '--output', required=True)

        analyze = commands.add_parser('analyze', parents=[common], help='Diagnostics of an h*-vector')
        analyze.add_argument('--hstar', required=True)

        reproduce = commands.add_parser('reproduce', parents=[common], help='Rerun a bundled computation')
        reproduce.add_argument('target', choices=TARGETS)

        scan = commands.add_parser('scan', parents=[common], help='Search reflexive weighted simplices')
        scan.add_argument('--dim', type=int, required=True)
        scan.add_argument('--max-weight', type=int, required=True)
        scan.add_argument('--max-b', type=int, required=True)

        commands.add_parser('init', parents=[common], help='Write a default latticebox.yml')

    def parse(self, argv) -> int:
        try:
            args = self._parser.parse_args(argv[1:])
            return getattr(self, args.command.replace('-', '_'))(args)
        except LatticeBoxError as error:
            self.stdout.write(json.dumps(error.to_dict(), sort_keys=True, indent=2) + '\n')
            self.stderr.write('{}: {}\n'.format(error.code, error.message))
            return error.exit_code

    def _execute(self, task_cls, args) -> int:
        task = task_cls.from_args(args)
        return task.execute(self.stdout)

    # Commands
    def version(self):
        return format_program_version(installed_version(), sys.version.split()[0])

    def init(self, args):
        directory = args.config_dir or os.getcwd()
        config_file = os.path.join(directory, DEFAULT_CONFIG_FILE)
        if os.path.exists(config_file):
            raise ConfigurationError("{} already exists.".format(config_file), {'path': config_file})

        configuration = Configuration(root_path=directory)
        write_file(config_file, configuration.to_dict())

        self.stderr.write("Successfully initialized latticebox configuration.\n")
        return 0

    def hstar(self, args):
        return self._execute(HStarTask, args)

    def series(self, args):
        return self._execute(SeriesTask, args)

    def identity(self, args):
        return self._execute(IdentityTask, args)

    def boxpoints(self, args):
        return self._execute(BoxPointsTask, args)

    def make_simplex(self, args):
        return self._execute(MakeSimplexTask, args)

    def family(self, args):
        return self._execute(FamilyTask, args)

    def free_sum(self, args):
        return self._execute(FreeSumTask, args)

    def analyze(self, args):
        return self._execute(AnalyzeTask, args)

    def reproduce(self, args):
        return self._execute(ReproduceTask, args)

    def scan(self, args):
        return self._execute(ScanTask, args)


def installed_version() -> str:
    import pkg_resources

    try:
        return pkg_resources.require('latticebox')[0].version
    except pkg_resources.DistributionNotFound:
        return __version__


def format_program_version(pkg_version, python_version):
    return u'latticebox {} using Python {}\n'.format(pkg_version, python_version)
