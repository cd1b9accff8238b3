import configparser
import os
import tempfile

import pytest

from qgestalt.parameters import ConfigReader


def write_config(content):
    with tempfile.NamedTemporaryFile(mode='w', suffix='.ini', delete=False) as temp:
        temp.write(content)
        return temp.name


def test_load_config():
    """
    Test that load_config reads a configuration file into a dictionary and that
    QGESTALT_<SECTION>_<KEY> environment variables replace file values.
    """
    temp_path = write_config("[music]\ngrid = 4\nmode = strong\n")
    os.environ["QGESTALT_MUSIC_GRID"] = "8"
    try:
        config_reader = ConfigReader(temp_path)
        assert config_reader.config_dict == {"music": {"grid": "8", "mode": "strong"}}
    finally:
        os.remove(temp_path)
        del os.environ["QGESTALT_MUSIC_GRID"]


def test_repr():
    """
    Test that __repr__ renders the configuration dictionary in INI format.
    """
    temp_path = write_config("[classifier]\nthreshold = 0.9\n")
    try:
        assert str(ConfigReader(temp_path)) == "[classifier]\nthreshold = 0.9\n"
    finally:
        os.remove(temp_path)


def test_dictionary_access():
    temp_path = write_config("[output]\nformat = csv\n")
    try:
        config_reader = ConfigReader(temp_path)
        assert "output" in config_reader
        assert config_reader["output"]["format"] == "csv"
        assert "music" not in config_reader
    finally:
        os.remove(temp_path)


def test_get():
    """
    Test that get returns typed values, or the default when the key is missing.
    """
    temp_path = write_config("[classifier]\n"
                             "threshold = 0.85\n"
                             "workers = 4\n"
                             "verbose = true\n"
                             "quiet = false\n"
                             "degree = highly\n"
                             "grid = [1, 2]\n")
    try:
        config_reader = ConfigReader(temp_path)
        assert config_reader.get("classifier", "threshold") == 0.85
        assert config_reader.get("classifier", "workers") == 4
        assert config_reader.get("classifier", "verbose") is True
        assert config_reader.get("classifier", "quiet") is False
        assert config_reader.get("classifier", "degree") == "highly"
        assert config_reader.get("classifier", "grid") == [1, 2]
        assert config_reader.get("classifier", "missing", "default") == "default"
        assert config_reader.get("nosection", "key") is None
        assert config_reader.items("classifier")["workers"] == 4
    finally:
        os.remove(temp_path)


def test_environment_without_file():
    os.environ["QGESTALT_SELFTEST_SEED"] = "11"
    try:
        config_reader = ConfigReader()
        assert config_reader.config_dict == {}
        assert config_reader.get("selftest", "seed") == 11
    finally:
        del os.environ["QGESTALT_SELFTEST_SEED"]


def test_errors():
    with pytest.raises(FileNotFoundError):
        ConfigReader("/nonexistent/qgestalt.ini")
    temp_path = write_config("threshold = 0.9\n")
    try:
        with pytest.raises(configparser.Error):
            ConfigReader(temp_path)
    finally:
        os.remove(temp_path)
