from .exceptions import *
from .config import ConfigManager
from .cache import CacheManager
