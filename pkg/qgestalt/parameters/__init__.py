from .config_file import ConfigReader
from .run_config import RunConfig, OUTPUT_FORMATS, SEED_ENV
