__all__ = ['QGestaltError', 'InvalidFeatureError', 'InvalidStateError', 'InvalidDensityError',
           'NotAnEncodingError', 'EmptyMixtureError', 'InvalidWeightsError', 'NotPSDError',
           'DimensionMismatchError', 'FidelityConsistencyError', 'InvalidThresholdError',
           'InconsistentLabelingError', 'InsufficientExperienceError', 'EmptyDatasetError',
           'ThemeSyntaxError', 'QuantizationError', 'EncodingLengthError', 'MalformedRowError',
           'BatchClassificationError', 'InvalidConfigError', 'InvalidThemeError']


class QGestaltError(Exception):
    """Base class for every domain error raised by qgestalt."""
    kind = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f'{self.kind}: {self.message}'


class InvalidFeatureError(QGestaltError):
    kind = "invalid feature"


class InvalidStateError(QGestaltError):
    kind = "invalid state"


class InvalidDensityError(QGestaltError):
    kind = "invalid density operator"


class NotAnEncodingError(QGestaltError):
    kind = "not an encoding"


class EmptyMixtureError(QGestaltError):
    kind = "empty mixture"


class InvalidWeightsError(QGestaltError):
    kind = "invalid weights"


class NotPSDError(QGestaltError):
    kind = "not positive semidefinite"


class DimensionMismatchError(QGestaltError):
    kind = "dimension mismatch"


class FidelityConsistencyError(QGestaltError):
    kind = "fidelity out of range"


class InvalidThresholdError(QGestaltError):
    kind = "invalid threshold"


class InconsistentLabelingError(QGestaltError):
    kind = "inconsistent labeling"


class InsufficientExperienceError(QGestaltError):
    kind = "insufficient experience"


class EmptyDatasetError(QGestaltError):
    kind = "empty dataset"


class ThemeSyntaxError(QGestaltError):
    """Theme file error, positioned at a 1-based line and column."""
    kind = "theme syntax error"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        return f'{self.kind} at line {self.line}, column {self.column}: {self.message}'


class InvalidThemeError(QGestaltError):
    kind = "invalid theme"


class QuantizationError(QGestaltError):
    kind = "quantization error"


class EncodingLengthError(QGestaltError):
    kind = "encoding length"


class MalformedRowError(QGestaltError):
    kind = "malformed row"

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line

    def __str__(self):
        return f'{self.kind} at line {self.line}: {self.message}'


class BatchClassificationError(QGestaltError):
    kind = "batch classification"

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"item {index}: {cause}")
        self.index = index
        self.cause = cause


class InvalidConfigError(QGestaltError):
    kind = "invalid configuration"
