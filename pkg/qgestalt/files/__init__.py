from .file_actions import FileActions
from .feature_csv import ingest_features, ingest_queries, ingest_manifest, features_to_csv, write_features
