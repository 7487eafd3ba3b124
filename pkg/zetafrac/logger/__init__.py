from zetafrac.settings import settings
from .custom_logger import CustomLogger, set_log_level

# Exposing a global structlog-style logger
GLOBAL_LOGGER = CustomLogger(log_dir=settings.log_dir, level=settings.log_level).get_logger(__name__)

__all__ = ["CustomLogger", "GLOBAL_LOGGER", "set_log_level"]
