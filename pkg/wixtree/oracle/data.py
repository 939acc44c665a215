#!/usr/bin/python
import os
from warnings import warn
import yaml


# Largest labeled count an exhaustive scan will go through by default
DEFAULT_CAP = 10_000_000
DEFAULT_MAX_N = 8


class CustomLoader(yaml.SafeLoader):
    """
    yaml.SafeLoader that fills the configuration with the content of other
    files written as `!include path_to_other_yaml`.
    """
    def __init__(self, stream):
        super(CustomLoader, self).__init__(stream)

    def include(self, node):
        filename = self.construct_scalar(node)

        with open(filename, 'r') as f:
            return yaml.load(f, CustomLoader)


CustomLoader.add_constructor('!include', CustomLoader.include)


def get_default_cap():
    """
    The enumeration cap: the `WIX_CAP` environment variable if set,
    DEFAULT_CAP otherwise.
    """
    value = os.environ.get('WIX_CAP')
    if value is None:
        return DEFAULT_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ValueError(f"WIX_CAP must be an integer, got {value!r}")
    if cap < 1:
        raise ValueError(f"WIX_CAP must be positive, got {cap}")
    return cap


class Data():
    """
    Run configuration, read from a yaml file or given as a dictionary.

    Recognised sections are `oracle` (cap, jobs, max_n), `search`
    (direction, seed, max_moves) and `output` (format, path).
    """
    sections = {'oracle': ['cap', 'jobs', 'max_n'],
                'search': ['direction', 'seed', 'max_moves'],
                'output': ['format', 'path']}

    def __init__(self, data_path='', data={}):
        """
        Parameters
        ----------
        data_path: string
            The path to the configuration yaml file
        data: dict
            The loaded configuration. Only one of data_path or data can be
            given

        Raises
        ------
        ValueError
            If both or none of data_path and data are given

        """
        if (data_path) and (data):
            raise ValueError('Only one of data_path or data must be given. '
                             'Both set.')
        elif data_path:
            self.data_path = data_path
            self.data = self.read_data(data_path)
        elif data:
            self.data_path = None
            self.data = data
        else:
            raise ValueError('One of data_path or data must be set. '
                             'None set.')
        if self.data is None:
            self.data = {}
        self._check_sections()

    def _check_sections(self):
        for name, content in self.data.items():
            if name not in self.sections:
                warn(f"Unknown section '{name}' in the configuration. "
                     "Ignoring it.")
                continue
            if not isinstance(content, dict):
                raise ValueError(f"Section '{name}' must be a mapping")
            for key in content:
                if key not in self.sections[name]:
                    warn(f"Unknown key '{key}' in section '{name}'")

    def _get_section(self, section):
        """
        Get the data of a given section of the configuration file.

        Parameters
        ----------
        section: string
            Name of the section whose content you want to get.

        Returns
        -------
        content: dictionary
            Dictionary with the content of the given section. If it does not
            exist in the configuration, it returns an empty dictionary
        """
        return self.data.get(section, {})

    def read_data(self, data_path):
        """
        Read the configuration yaml file.

        Parameters
        ----------
        data_path: str
            Path to the configuration yaml file
        """
        if not os.path.isfile(data_path):
            raise ValueError(f"Configuration file {data_path} does not "
                             "exist")
        with open(data_path) as f:
            data = yaml.load(f, CustomLoader)
        return data

    def get_cap(self):
        """
        Enumeration cap. `WIX_CAP` in the environment takes precedence over
        the configured value.
        """
        if 'WIX_CAP' in os.environ:
            return get_default_cap()
        return int(self._get_section('oracle').get('cap', DEFAULT_CAP))

    def get_jobs(self):
        jobs = int(self._get_section('oracle').get('jobs', 1))
        if jobs < 1:
            raise ValueError(f"oracle.jobs must be >= 1, got {jobs}")
        return jobs

    def get_max_n(self):
        return int(self._get_section('oracle').get('max_n', DEFAULT_MAX_N))

    def get_direction(self):
        direction = self._get_section('search').get('direction', 'min')
        if direction not in ['min', 'max']:
            raise ValueError(f"search.direction must be 'min' or 'max', got "
                             f"{direction}")
        return direction

    def get_seed(self):
        return int(self._get_section('search').get('seed', 0))

    def get_max_moves(self):
        max_moves = self._get_section('search').get('max_moves', None)
        return None if max_moves is None else int(max_moves)

    def get_output_format(self):
        fmt = self._get_section('output').get('format', 'json')
        if fmt not in ['json', 'dot']:
            raise ValueError(f"output.format must be 'json' or 'dot', got "
                             f"{fmt}")
        return fmt

    def get_output_path(self):
        return self._get_section('output').get('path', None)
