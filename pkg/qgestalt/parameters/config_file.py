import os
import json
import configparser
import logging
from typing import Optional

__all__ = ['ConfigReader']
logger = logging.getLogger(__name__)


class ConfigReader:
    """
    A class used to read an INI configuration file and check for any already
    defined environment variables.

    ...

    Attributes
    ----------
    filepath : str
        the file path of the configuration file, or None for environment-only configuration
    env_prefix : str
        prefix of overriding environment variables, `<PREFIX>_<SECTION>_<KEY>`
    config_dict : dict
        a dictionary to store the configuration data

    Methods
    -------
    load_config():
        Reads the configuration file and store it in a dictionary.
    """

    def __init__(self, config_file: Optional[str] = None, env_prefix: str = "QGESTALT"):
        """
        Constructs all the necessary attributes for the ConfigReader object.

        Parameters
        ----------
            config_file : str
                file path of the configuration file
            env_prefix : str
                prefix of the environment variables that override file values
        """
        self.filepath = config_file
        self.env_prefix = env_prefix
        self.config_dict = self.load_config()

    def env_name(self, section: str, key: str) -> str:
        return f"{self.env_prefix}_{section}_{key}".upper()

    def load_config(self) -> dict:
        """
        Reads the configuration file and store it in a dictionary.
        If any environment variable exists for a key, it replaces the value in the file.

        Returns
        -------
        dict
            a dictionary that contains the configuration data

        Raises
        ------
        FileNotFoundError
            if a configuration file was named but does not exist
        configparser.Error
            if the file is not valid INI
        """
        config_dict = {}
        if not self.filepath:
            return config_dict
        if not os.path.isfile(self.filepath):
            raise FileNotFoundError(f"Configuration file does not exist: {self.filepath}")

        config = configparser.ConfigParser()
        try:
            config.read(self.filepath)
        except configparser.Error as e:
            logger.error(f'Error reading configuration file: {e}')
            raise

        for section in config.sections():
            config_dict[section] = {}
            for key, value in config.items(section):
                env_value = os.getenv(self.env_name(section, key))
                config_dict[section][key] = env_value if env_value is not None else value
        return config_dict

    def __getitem__(self, key):
        return self.config_dict[key]

    def __contains__(self, key):
        return key in self.config_dict

    def get(self, section, key, default=None):
        """
        Return a typed value. The environment wins over the file, so a key need not
        appear in the file to be set.
        """
        env_value = os.getenv(self.env_name(section, key))
        value = env_value if env_value is not None else self.config_dict.get(section, {}).get(key, default)

        if isinstance(value, str):
            if value.isdigit():
                value = int(value)
            elif value.lower() == 'true':
                value = True
            elif value.lower() == 'false':
                value = False
            else:
                # numbers with a sign or fraction, dicts and lists
                try:
                    value = json.loads(value)
                except json.JSONDecodeError:
                    pass

        return value

    def items(self, section) -> dict:
        return {key: self.get(section, key) for key in self.config_dict.get(section, {})}

    def __repr__(self):
        """
        Returns a string that represents the configuration dictionary in INI format.

        Returns
        -------
        str
            a string that represents the configuration dictionary in INI format
        """
        output = []
        for section, values in self.config_dict.items():
            output.append(f'[{section}]')
            for key, val in values.items():
                output.append(f'{key} = {val}')
            output.append('')
        return '\n'.join(output)
