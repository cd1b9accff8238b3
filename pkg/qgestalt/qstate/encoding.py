"""
Amplitude encoding of feature vectors into pure states of R^(d+1) and its inverse.
"""
import logging
from typing import Sequence, Union

import numpy as np

from qgestalt.generic.exceptions import InvalidFeatureError, NotAnEncodingError
from .states import FeatureVector, PureState

__all__ = ['amplitude_encode', 'decode_features', 'DECODE_FLOOR']
logger = logging.getLogger(__name__)

DECODE_FLOOR = 1e-12


def amplitude_encode(x: Union[FeatureVector, Sequence[float], np.ndarray]) -> PureState:
    """
    Encode x = (x_1..x_d) as the unit vector (x_1, ..., x_d, 1) / ||(x_1, ..., x_d, 1)||.

    Args:
        x: A FeatureVector or anything FeatureVector accepts.

    Returns:
        PureState: A state of dimension d + 1 whose last amplitude is positive.

    Raises:
        InvalidFeatureError: If x is empty or holds NaN/Inf.
    """
    features = x if isinstance(x, FeatureVector) else FeatureVector(x)
    extended = np.append(features.values, 1.0)
    # hypot-style scaling keeps huge features from overflowing the squared norm
    scale = float(np.max(np.abs(extended)))
    scaled = extended / scale
    norm = float(np.linalg.norm(scaled))
    if not np.isfinite(norm):
        raise InvalidFeatureError(f"features too large to encode: {features.values.tolist()}")
    return PureState(scaled / norm)


def decode_features(psi: PureState) -> FeatureVector:
    """
    Recover x_i = psi_i / psi_{d+1} from an amplitude-encoded state.

    Raises:
        NotAnEncodingError: If the last amplitude is not above DECODE_FLOOR, i.e. psi
            is not in the image of amplitude_encode.
    """
    last = float(psi.amplitudes[-1])
    if last <= DECODE_FLOOR:
        raise NotAnEncodingError(f"last amplitude {last!r} is not positive; state is not an encoding")
    return FeatureVector(psi.amplitudes[:-1] / last)
