import os
import configparser
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from qgestalt.generic.exceptions import InvalidConfigError, InvalidThresholdError
from qgestalt.music.encoding import DEFAULT_GRID, DEFAULT_MELODIC_LEN, EncodingConfig
from qgestalt.music.similarity import SimilarityMode
from qgestalt.similarity.threshold import DEFAULT_DEGREES, DEFAULT_THRESHOLD, SimilarityThreshold
from .config_file import ConfigReader

__all__ = ['RunConfig', 'OUTPUT_FORMATS', 'SEED_ENV']
logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('text', 'csv')
SEED_ENV = 'QGESTALT_SEED'

# config-file (section, key) -> RunConfig field
_FILE_KEYS = {
    ('classifier', 'threshold'): 'threshold',
    ('classifier', 'workers'): 'workers',
    ('similarity', 'threshold'): 'similarity',
    ('music', 'melodic_len'): 'melodic_len',
    ('music', 'grid'): 'grid',
    ('music', 'span'): 'span',
    ('music', 'mode'): 'mode',
    ('output', 'format'): 'output_format',
    ('output', 'path'): 'output',
    ('selftest', 'seed'): 'seed',
}


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one CLI run.

    Attributes
    ----------
    threshold : float
        Classifier threshold r* in (1/2, 1]; 0.9 by default.
    similarity : Optional[float]
        Threshold r in [0, 1] of the pairwise similarity reports; None means `threshold`.
    melodic_len : int
        Melodic channel length L.
    grid : int
        Rhythm ticks per beat.
    span : Optional[int]
        Rhythm ticks; None means the longest theme of the run.
    mode : SimilarityMode
        Similarity channels used by the musical commands.
    output_format : str
        'text' or 'csv'.
    output : Optional[str]
        Report file; None for standard output.
    seed : int
        Seed of the synthetic data used by selftest.
    workers : int
        Threads for batch classification.
    degrees : dict
        Verbal similarity degrees and their thresholds.
    """
    threshold: float = DEFAULT_THRESHOLD
    similarity: Optional[float] = None
    melodic_len: int = DEFAULT_MELODIC_LEN
    grid: int = DEFAULT_GRID
    span: Optional[int] = None
    mode: SimilarityMode = SimilarityMode.STRONG
    output_format: str = 'text'
    output: Optional[str] = None
    seed: int = 0
    workers: int = 1
    degrees: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_DEGREES))

    def __post_init__(self):
        try:
            object.__setattr__(self, 'mode', SimilarityMode.of(self.mode))
        except ValueError as e:
            raise InvalidConfigError(str(e)) from None
        object.__setattr__(self, 'threshold', self.resolve_threshold(self.threshold))
        if self.similarity is not None:
            object.__setattr__(self, 'similarity', self.resolve_threshold(self.similarity, classifier=False))
        for name in ('melodic_len', 'grid', 'workers'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidConfigError(f"{name} must be an integer >= 1, got {value!r}")
        if self.span is not None and (not isinstance(self.span, int) or self.span < 1):
            raise InvalidConfigError(f"span must be an integer >= 1, got {self.span!r}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise InvalidConfigError(f"seed must be an integer, got {self.seed!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise InvalidConfigError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")

    def resolve_threshold(self, value: Union[float, str], classifier: bool = True) -> float:
        """
        Accept a number or a verbal degree ("highly", ...) and return the threshold, which must
        be classifier-grade (in (1/2, 1]) unless `classifier` is False.
        """
        grade = SimilarityThreshold.classifier if classifier else SimilarityThreshold.of
        try:
            if isinstance(value, str):
                try:
                    value = float(value)
                except ValueError:
                    return grade(SimilarityThreshold.from_label(value, self.degrees)).value
            return grade(value).value
        except InvalidThresholdError as e:
            raise InvalidConfigError(e.message) from None

    @property
    def pair_threshold(self) -> SimilarityThreshold:
        """Threshold of the pairwise similarity reports."""
        return SimilarityThreshold(self.threshold if self.similarity is None else self.similarity)

    @property
    def encoding(self) -> EncodingConfig:
        return EncodingConfig(self.melodic_len, self.grid, self.span)

    @classmethod
    def load(cls, config_file: Optional[str] = None, **overrides) -> 'RunConfig':
        """
        Build a configuration from defaults, then the environment seed and an optional INI
        file, then explicit overrides (None values are ignored).

        Raises:
            InvalidConfigError: If a value is out of range or the file cannot be read.
        """
        values = {}
        seed = os.getenv(SEED_ENV)
        if seed is not None:
            try:
                values['seed'] = int(seed)
            except ValueError:
                raise InvalidConfigError(f"{SEED_ENV} must be an integer, got {seed!r}") from None

        try:
            config = ConfigReader(config_file=config_file)
        except (configparser.Error, IOError) as e:
            raise InvalidConfigError(f"Error loading configuration file {config_file}: {e}") from e
        # without a file, QGESTALT_<SECTION>_<KEY> variables still apply
        for (section, key), name in _FILE_KEYS.items():
            value = config.get(section, key)
            if value is not None:
                values[name] = value
        if 'degrees' in config:
            values['degrees'] = {**DEFAULT_DEGREES, **config.items('degrees')}
        if config_file:
            logger.info(f'Run configuration loaded from {config_file}.')

        values.update({name: value for name, value in overrides.items() if value is not None})
        config = cls(**values)
        logger.debug(f"{config!r}")
        return config
