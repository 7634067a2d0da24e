import io
import json
import os
import shutil
import tempfile
import unittest

from .context import latticebox
from latticebox.cli import CliParser, format_program_version

from .fixtures import SQUARE_FILE, write_json


class CliTestSuite(unittest.TestCase):
    """The latticebox command line."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.square = write_json(self.directory, 'square.json', SQUARE_FILE)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def run_cli(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        argv = list(argv)
        if argv[0] != 'init':
            argv += ['--config-dir', self.directory, '--no-color']
        else:
            argv += ['--config-dir', self.directory]
        code = CliParser(stdout=stdout, stderr=stderr).parse(['latticebox'] + argv)
        return code, stdout.getvalue(), stderr.getvalue()

    def run_json(self, *argv):
        code, out, _ = self.run_cli(*argv)
        return code, json.loads(out)

    def test_version(self):
        assert format_program_version('1.0', '3.9.1') == 'latticebox 1.0 using Python 3.9.1\n'
        with self.assertRaises(SystemExit) as context:
            CliParser().parse(['latticebox', '--version'])
        assert context.exception.code == 0

    def test_hstar(self):
        code, payload = self.run_json('hstar', self.square)
        assert code == 0
        assert payload['hstar'] == [1, 2, 1]
        assert payload['method'] == 'both'
        assert payload['special_face'] == [1, 2]
        assert payload['volume'] == 4

    def test_hstar_methods_and_oracle(self):
        for method in ['bm', 'special']:
            code, payload = self.run_json('hstar', self.square, '--method', method, '--oracle')
            assert code == 0
            assert payload['hstar'] == [1, 2, 1]
            assert payload['oracle'] == [1, 2, 1]

    def test_oracle_dimension_guard(self):
        with open(os.path.join(self.directory, 'latticebox.yml'), 'w') as f:
            f.write("oracle-max-dimension: 1\n")
        code, payload = self.run_json('hstar', self.square, '--oracle')
        assert code == 2
        assert payload['error'] == 'MalformedInput'

        code, payload = self.run_json('hstar', self.square, '--oracle', '--force')
        assert code == 0

    def test_series(self):
        code, payload = self.run_json('series', self.square, '--terms', '3', '--oracle')
        assert code == 0
        assert payload['counts'] == [1, 5, 13, 25]
        assert payload['ehrhart_polynomial'] == ['1', '2', '2']

    def test_identity(self):
        for special in ['', '1,2']:
            code, payload = self.run_json('identity', self.square, '--truncate', '8', '--lambda', special)
            assert code == 0
            assert payload['passed'] is True
            assert payload['degree'] == 8

    def test_identity_not_special(self):
        code, out, err = self.run_cli('identity', self.square, '--truncate', '4', '--lambda', '0')
        assert code == 2
        assert json.loads(out)['error'] == 'NotSpecial'
        assert err.startswith('NotSpecial:')

    def test_boxpoints(self):
        code, payload = self.run_json('boxpoints', self.square, '--face', '1,2')
        assert code == 0
        assert payload['points'] == [{'point': [0, 0], 'height': 1, 'fractional_coords': ['1/2', '1/2']}]
        assert payload['polynomial'] == [0, 1]

        code, payload = self.run_json('boxpoints', self.square, '--face', '1,2', '--rel', '1')
        assert [p['point'] for p in payload['points']] == [[0, 0]]

        # the only box point of the cone over (0,1,2) has a zero coefficient on ray 0
        code, payload = self.run_json('boxpoints', self.square, '--face', '0,1,2', '--rel', '1,2')
        assert code == 0
        assert payload['points'] == []
        assert payload['polynomial'] == []

    def test_boxpoints_not_a_face(self):
        code, payload = self.run_json('boxpoints', self.square, '--face', '1,2', '--rel', '0')
        assert code == 2
        assert payload['error'] == 'NotAFace'

    def test_make_simplex(self):
        path = os.path.join(self.directory, 'simplex.json')
        code, payload = self.run_json('make-simplex', '--weights', '1,1', '--b', '2', '-o', path)
        assert code == 0
        assert payload['c'] == 1
        code, payload = self.run_json('hstar', path)
        assert payload['hstar'] == [1, 2, 1]

    def test_make_simplex_not_reflexive(self):
        code, payload = self.run_json('make-simplex', '--weights', '1,2', '--b', '2')
        assert code == 2
        assert payload['error'] == 'NotReflexive'
        assert payload['details']['clause'] == 'sum'

    def test_family(self):
        code, payload = self.run_json('family', '--b', '2', '--k', '2', '--r', '0')
        assert code == 0
        assert payload['dimension'] == 4
        assert payload['hstar'] == [1, 1, 2, 1, 1]

    def test_free_sum(self):
        simplex = os.path.join(self.directory, 'simplex.json')
        total = os.path.join(self.directory, 'sum.json')
        self.run_cli('make-simplex', '--weights', '1,1', '--b', '2', '-o', simplex)
        code, payload = self.run_json('free-sum', simplex, simplex, '-o', total)
        assert code == 0
        assert payload['dimension'] == 4
        code, payload = self.run_json('hstar', total)
        assert payload['hstar'] == [1, 4, 6, 4, 1]

    def test_analyze(self):
        code, payload = self.run_json('analyze', '--hstar', '1,1,2,1,1')
        assert code == 0
        assert payload['unimodal'] is True
        assert payload['macaulay'] is False
        assert payload['gstar'] == {'entries': [1, 0, 1]}

    def test_text_output(self):
        code, out, _ = self.run_cli('analyze', '--hstar', '1,1,2,1,1', '--output-format', 'text')
        assert code == 0
        assert 'unimodal: True' in out

    def test_malformed_indices(self):
        code, payload = self.run_json('analyze', '--hstar', '1,x')
        assert code == 2
        assert payload['error'] == 'MalformedInput'

    def test_missing_file(self):
        code, payload = self.run_json('hstar', os.path.join(self.directory, 'missing.json'))
        assert code == 2
        assert payload['error'] == 'MalformedInput'

    def test_reproduce(self):
        for target in ['ex1.4', 'ex4.3', 'thm1.4']:
            code, payload = self.run_json('reproduce', target)
            assert code == 0, target
            assert payload['failures'] == 0
        code, payload = self.run_json('reproduce', 'ex4.3')
        assert payload['results']['hstar'] == [1, 2, 6, 5, 5, 6, 2, 1]

    def test_scan(self):
        code, payload = self.run_json('scan', '--dim', '1', '--max-weight', '2', '--max-b', '2')
        assert code == 0
        assert payload['count'] == 2
        assert all(r['hstar'] == [1, 1] for r in payload['results'])

    def test_init(self):
        code, _, err = self.run_cli('init')
        assert code == 0
        assert 'Successfully initialized' in err
        assert os.path.isfile(os.path.join(self.directory, 'latticebox.yml'))

        code, out, _ = self.run_cli('init')
        assert code == 2
        assert json.loads(out)['error'] == 'ConfigurationError'

    def test_bad_config(self):
        with open(os.path.join(self.directory, 'latticebox.yml'), 'w') as f:
            f.write("colour: false\n")
        code, payload = self.run_json('analyze', '--hstar', '1,1')
        assert code == 2
        assert payload['error'] == 'ConfigurationError'

    def test_usage_error(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = CliParser(stdout=stdout, stderr=stderr).parse(['latticebox', 'hstar'])
        assert code == 2
        payload = json.loads(stdout.getvalue())
        assert payload['error'] == 'MalformedInput'
        assert payload['details']['usage'].startswith('usage: latticebox hstar')
        assert stderr.getvalue().startswith('MalformedInput:')

    def test_bad_argument_type(self):
        code, payload = self.run_json('family', '--b', 'abc', '--k', '2', '--r', '0')
        assert code == 2
        assert payload['error'] == 'MalformedInput'
        assert 'abc' in payload['message']


if __name__ == '__main__':
    unittest.main()
