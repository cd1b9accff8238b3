from .theme import ThemeEvent, AbstractTheme, REST
from .theme_parser import parse_theme, load_theme
from .encoding import (EncodingConfig, MusicalIdeaState, encode_melodic, encode_rhythmic, onset_pattern,
                       encode_theme, corpus_span)
from .similarity import SimilarityMode, channel_fidelities, musical_similar
from .classifier import (MusicalDataSet, build_musical_dataset, MusicalCentroids, musical_centroids,
                         centroid_fidelities, classify_theme, MusicalVerdict, MusicalClassifier)
from .fixtures import fixture_names, fixture_path, load_fixture, load_fixtures
