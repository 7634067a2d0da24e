from dataclasses import dataclass, field
import glob
import os
from typing import Any, Dict, Optional

from latticebox.errors import ConfigurationError
from latticebox.reporter import Reporter
import latticebox.utils.yaml as yaml

CONFIG_GLOB = 'latticebox.y*ml'
DEFAULT_CONFIG_FILE = 'latticebox.yml'
OUTPUT_FORMATS = ('json', 'text')

# YAML key -> (attribute, type)
KEYS = {
    'max-terms': ('max_terms', int),
    'validate-subdivisions': ('validate_subdivisions', bool),
    'oracle-max-dimension': ('oracle_max_dimension', int),
    'output': ('output', str),
    'color': ('color', bool),
}


@dataclass
class ConfigurationDefaults:
    max_terms: int = 1000000
    validate_subdivisions: bool = True
    oracle_max_dimension: int = 5
    output: str = 'json'
    color: bool = True
    config_path: Optional[str] = None
    args: Any = None
    reporter: Optional[Reporter] = field(default=None, repr=False, compare=False)


@dataclass
class ConfigurationBase:
    root_path: str


@dataclass
class Configuration(ConfigurationDefaults, ConfigurationBase):
    def __post_init__(self):
        Configuration.validate_values(self)
        if self.reporter is None:
            self.reporter = Reporter(color=self.color)

    @classmethod
    def validate_values(cls, self):
        if self.max_terms <= 0:
            raise ConfigurationError("max-terms must be positive, got {}.".format(self.max_terms))
        if self.oracle_max_dimension < 0:
            raise ConfigurationError("oracle-max-dimension must be nonnegative.")
        if self.output not in OUTPUT_FORMATS:
            raise ConfigurationError(
                "output must be one of {}, got {!r}.".format(', '.join(OUTPUT_FORMATS), self.output))

    @classmethod
    def _retrieve_config_path(cls, root_path: str) -> Optional[str]:
        root_path = os.path.normpath(root_path)
        matches = glob.glob(os.path.join(root_path, CONFIG_GLOB))

        if len(matches) > 1:
            raise ConfigurationError(
                "Found more than one configuration file: {}".format(', '.join(sorted(matches))))
        return matches[0] if matches else None

    @classmethod
    def validate(cls, config_dict: Dict[str, Any]):
        unknown = sorted(set(config_dict) - set(KEYS))
        if unknown:
            raise ConfigurationError(
                "Unknown configuration keys: {}".format(', '.join(unknown)), {'keys': unknown})
        for key, value in config_dict.items():
            _, expected = KEYS[key]
            if expected is int and (isinstance(value, bool) or not isinstance(value, int)):
                raise ConfigurationError("{} must be an integer.".format(key), {'key': key})
            if expected is not int and not isinstance(value, expected):
                raise ConfigurationError(
                    "{} must be of type {}.".format(key, expected.__name__), {'key': key})

    @classmethod
    def from_dict(cls, root_path: str, config_dict: Dict[str, Any], config_path: Optional[str] = None,
                  args: Any = None) -> 'Configuration':
        cls.validate(config_dict)
        values = {KEYS[key][0]: value for key, value in config_dict.items()}
        return cls(root_path=root_path, config_path=config_path, args=args, **values)

    @classmethod
    def from_root_path(cls, root_path: str, args: Any = None) -> 'Configuration':
        config_path = cls._retrieve_config_path(root_path)
        config_dict = yaml.parse_file(config_path) if config_path else {}

        return cls.from_dict(root_path, config_dict, config_path=config_path, args=args)

    @classmethod
    def from_args(cls, args: Any) -> 'Configuration':
        root_path = getattr(args, 'config_dir', None) or os.getcwd()
        configuration = cls.from_root_path(root_path, args=args)

        output = getattr(args, 'output_format', None)
        if output:
            configuration.output = output
        if getattr(args, 'no_color', False):
            configuration.color = False
            configuration.reporter = Reporter(color=False)
        Configuration.validate_values(configuration)

        return configuration

    def to_dict(self) -> Dict[str, Any]:
        return {key: getattr(self, attribute) for key, (attribute, _) in KEYS.items()}
