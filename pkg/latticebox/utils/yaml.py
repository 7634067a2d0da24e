import os
import re
from typing import Any, Dict

import yaml

from latticebox.errors import ConfigurationError

ENV_PATTERN = re.compile(r'.*?\${(\w+)}.*?')


class EnvLoader(yaml.SafeLoader):
    """SafeLoader resolving ``!ENV`` scalars such as ``!ENV ${LATTICEBOX_MAX_TERMS}``."""


def _construct_env(loader, node):
    value = loader.construct_scalar(node)
    for name in ENV_PATTERN.findall(value):
        value = value.replace('${{{}}}'.format(name), os.environ.get(name, name))
    return yaml.safe_load(value) if value else value


EnvLoader.add_implicit_resolver('!ENV', ENV_PATTERN, None)
EnvLoader.add_constructor('!ENV', _construct_env)


def parse_yaml(path=None, data=None):
    """Loads YAML from a path or a string, substituting environment variables in ``!ENV`` values.

    Substituted values are re-read as YAML scalars, so ``!ENV ${N}`` with N=5 yields 5.
    """
    if path:
        with open(path) as stream:
            return yaml.load(stream, Loader=EnvLoader)
    elif data is not None:
        return yaml.load(data, Loader=EnvLoader)
    else:
        raise ValueError('Either a path or data should be defined as input')


def parse_file(path: str) -> Dict[str, Any]:
    if not os.path.isfile(path):
        raise ConfigurationError('File not found: expected at path {}'.format(path))

    try:
        loaded = parse_yaml(path)
    except yaml.YAMLError as e:
        raise ConfigurationError('Could not parse {}: {}'.format(path, e))

    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        raise ConfigurationError('File does not parse to dictionary: {}'.format(path))

    return loaded


def write_file(path: str, contents):
    with open(path, 'w') as f:
        yaml.dump(contents, f, default_flow_style=False, sort_keys=False)
