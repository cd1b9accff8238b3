from .str_functions import rremove, tokens_with_columns
from .list_functions import numbered_content_lines
