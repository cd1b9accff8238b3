from .threshold import SimilarityThreshold, similarity_degree, DEFAULT_THRESHOLD, DEFAULT_DEGREES, SIMILARITY_TOL
from .fidelity import fidelity_pure, fidelity, raw_fidelity, r_similar
