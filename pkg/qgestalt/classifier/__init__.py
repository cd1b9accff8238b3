from .labels import ClassLabel
from .dataset import QuantumDataSet, build_dataset, partition_labeled
from .centroids import CentroidPair, positive_centroid, negative_centroid, centroids, classical_centroid
from .classify import classify, classify_batch, decide, score, Verdict, GestaltClassifier
