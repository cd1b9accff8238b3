import logging

import pytest

from qgestalt.generic import Basic
from qgestalt.generic.exceptions import InvalidConfigError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def test_logger_named_after_class():
    """Test that each Basic subclass logs under its own class name"""
    class Probe(Basic):
        pass
    assert Probe().logger.name == 'Probe'


def test_pass_returns_value(caplog):
    """Test Basic._pass method"""
    basic = Basic()
    with caplog.at_level(logging.INFO):
        assert basic._pass(42) == 42
        assert basic._pass([1, 2], info="Info message") == [1, 2]
    assert "Info message" in caplog.text


def test_pass_without_info_is_silent(caplog):
    basic = Basic()
    with caplog.at_level(logging.INFO):
        basic._pass("value")
    assert caplog.text == ""


def test_fail_logs_and_raises(caplog):
    """Test Basic._fail method"""
    basic = Basic()
    with caplog.at_level(logging.INFO):
        with pytest.raises(InvalidConfigError):
            basic._fail(InvalidConfigError("bad grid"), info="while loading")
    assert "while loading" in caplog.text
    assert "invalid configuration: bad grid" in caplog.text
