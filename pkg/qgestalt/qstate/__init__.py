from .states import FeatureVector, PureState, DensityOperator, require_same_dimension
from .encoding import amplitude_encode, decode_features
from .operators import projector, mixture, uniform_mixture, spectral_sqrt, psd_sqrt
