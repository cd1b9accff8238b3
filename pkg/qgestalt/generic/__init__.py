from .basic_object import Basic
from .exceptions import *
