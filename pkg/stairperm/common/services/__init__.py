from .logger import Logger
from .settings import Settings, get_settings
