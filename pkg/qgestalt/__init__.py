from .qstate import FeatureVector, PureState, DensityOperator, amplitude_encode, projector, mixture
from .similarity import fidelity, fidelity_pure, r_similar, SimilarityThreshold
from .classifier import ClassLabel, QuantumDataSet, build_dataset, centroids, classify, classify_batch
from .music import AbstractTheme, SimilarityMode, encode_theme, classify_theme, parse_theme

__version__ = '0.1.0'
