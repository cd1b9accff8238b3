from enum import Enum
from typing import Union

__all__ = ['ClassLabel']


class ClassLabel(Enum):
    """Three-valued answer to "is this an instance of the concept?": YES!, NO!, PERHAPS!"""
    POSITIVE = '+'
    NEGATIVE = '-'
    INDETERMINATE = '?'

    @classmethod
    def of(cls, token: Union[str, 'ClassLabel']) -> 'ClassLabel':
        """
        Map a label token ('+', '-', '?') or a ClassLabel to a ClassLabel.

        Raises:
            ValueError: If the token is not one of the three labels.
        """
        if isinstance(token, ClassLabel):
            return token
        try:
            return cls(str(token).strip())
        except ValueError:
            raise ValueError(f"unknown label token {token!r}; expected one of '+', '-', '?'") from None

    def swapped(self) -> 'ClassLabel':
        """Exchange + and -; ? is fixed."""
        if self is ClassLabel.POSITIVE:
            return ClassLabel.NEGATIVE
        if self is ClassLabel.NEGATIVE:
            return ClassLabel.POSITIVE
        return self

    def __str__(self):
        return self.value
