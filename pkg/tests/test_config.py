import argparse
import os
import shutil
import tempfile
import unittest

from .context import latticebox
from latticebox.config.configuration import Configuration
from latticebox.errors import ConfigurationError
from latticebox.utils.yaml import parse_file, parse_yaml, write_file


class ConfigurationTestSuite(unittest.TestCase):
    """Project configuration from latticebox.yml."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _write(self, text, name='latticebox.yml'):
        with open(os.path.join(self.directory, name), 'w') as f:
            f.write(text)

    def test_defaults(self):
        configuration = Configuration.from_root_path(self.directory)
        assert configuration.config_path is None
        assert configuration.to_dict() == {
            'max-terms': 1000000,
            'validate-subdivisions': True,
            'oracle-max-dimension': 5,
            'output': 'json',
            'color': True,
        }
        assert configuration.reporter is not None

    def test_file_values(self):
        self._write("max-terms: 10\noutput: text\n")
        configuration = Configuration.from_root_path(self.directory)
        assert configuration.max_terms == 10
        assert configuration.output == 'text'
        assert configuration.config_path.endswith('latticebox.yml')

    def test_env_values(self):
        os.environ['LATTICEBOX_TEST_TERMS'] = '25'
        try:
            self._write("max-terms: !ENV ${LATTICEBOX_TEST_TERMS}\n")
            assert Configuration.from_root_path(self.directory).max_terms == 25
        finally:
            del os.environ['LATTICEBOX_TEST_TERMS']

    def test_unknown_key(self):
        self._write("max-term: 10\n")
        with self.assertRaises(ConfigurationError) as context:
            Configuration.from_root_path(self.directory)
        assert context.exception.details['keys'] == ['max-term']

    def test_wrong_type(self):
        self._write("max-terms: many\n")
        with self.assertRaises(ConfigurationError):
            Configuration.from_root_path(self.directory)
        self._write("max-terms: true\n")
        with self.assertRaises(ConfigurationError):
            Configuration.from_root_path(self.directory)

    def test_invalid_values(self):
        self._write("output: xml\n")
        with self.assertRaises(ConfigurationError):
            Configuration.from_root_path(self.directory)
        self._write("max-terms: 0\n")
        with self.assertRaises(ConfigurationError):
            Configuration.from_root_path(self.directory)

    def test_two_config_files(self):
        self._write("max-terms: 10\n")
        self._write("max-terms: 20\n", name='latticebox.yaml')
        with self.assertRaises(ConfigurationError):
            Configuration.from_root_path(self.directory)

    def test_from_args(self):
        self._write("output: json\n")
        args = argparse.Namespace(config_dir=self.directory, output_format='text', no_color=True)
        configuration = Configuration.from_args(args)
        assert configuration.output == 'text'
        assert configuration.color is False
        assert configuration.args is args


class YamlTestSuite(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_parse_data(self):
        assert parse_yaml(data="a: 1\nb: [1, 2]\n") == {'a': 1, 'b': [1, 2]}
        with self.assertRaises(ValueError):
            parse_yaml()

    def test_env_substitution_in_text(self):
        os.environ['LATTICEBOX_TEST_NAME'] = 'box'
        try:
            assert parse_yaml(data="name: !ENV prefix-${LATTICEBOX_TEST_NAME}\n") == {'name': 'prefix-box'}
        finally:
            del os.environ['LATTICEBOX_TEST_NAME']

    def test_write_and_parse(self):
        path = os.path.join(self.directory, 'out.yml')
        write_file(path, {'max-terms': 5, 'color': False})
        assert parse_file(path) == {'max-terms': 5, 'color': False}

    def test_parse_file_errors(self):
        with self.assertRaises(ConfigurationError):
            parse_file(os.path.join(self.directory, 'missing.yml'))

        path = os.path.join(self.directory, 'list.yml')
        with open(path, 'w') as f:
            f.write("- 1\n- 2\n")
        with self.assertRaises(ConfigurationError):
            parse_file(path)

        empty = os.path.join(self.directory, 'empty.yml')
        open(empty, 'w').close()
        assert parse_file(empty) == {}


if __name__ == '__main__':
    unittest.main()
