import logging
from typing import NoReturn, TypeVar

from .exceptions import QGestaltError

__all__ = ['Basic']
logger = logging.getLogger(__name__)

T = TypeVar('T')


class Basic:
    """
    A Basic class to be inherited by the stateful front objects of the package.
    It attaches a per-class logger and offers two helpers that pair a log line with
    the outcome of an operation.

    Methods
    -------
    _pass(val, info) -> val:
        Logs an info message and returns the given value.
    _fail(error, info) -> NoReturn:
        Logs the error (and optional context) and raises it.
    """
    def __init__(self, **kwargs):
        self.logger = logging.getLogger(self.__class__.__name__)

    def _pass(self, val: T, info: str = "") -> T:
        """
        Log an info message and return the provided value.

        Parameters:
        val: The value produced by the successful operation.
        info (str): optional. The info message to log.

        Returns:
        The provided value, unchanged.
        """
        if info:
            self.logger.info(info)
        return val

    def _fail(self, error: QGestaltError, info: str = "") -> NoReturn:
        """
        Log an error and raise it.

        Parameters:
        error (QGestaltError): The error to log and raise.
        info (str): optional. Context logged at info level before the error.
        """
        if info:
            self.logger.info(info)
        self.logger.error(str(error))
        raise error
