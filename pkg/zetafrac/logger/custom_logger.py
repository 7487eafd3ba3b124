import os
import sys
import logging
from datetime import datetime
import structlog

class CustomLogger:
    def __init__(self, log_dir: str | None = None, level: str = "INFO"):
        self.level = getattr(logging, str(level).upper(), logging.INFO)
        self.log_file_path = None
        if log_dir:
            self.logs_dir = os.path.join(os.getcwd(), log_dir)
            os.makedirs(self.logs_dir, exist_ok=True)
            log_file = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
            self.log_file_path = os.path.join(self.logs_dir, log_file)

    def get_logger(self, name=__name__):
        logger_name = os.path.basename(str(name))

        # stdout carries verification records, so the console stream is stderr
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.level)
        console_handler.setFormatter(logging.Formatter("%(message)s"))
        handlers: list[logging.Handler] = [console_handler]

        if self.log_file_path:
            file_handler = logging.FileHandler(self.log_file_path)
            file_handler.setLevel(self.level)
            file_handler.setFormatter(logging.Formatter('%(message)s'))
            handlers.append(file_handler)

        logging.basicConfig(
            level=self.level,
            handlers=handlers,
        )

        structlog.configure(
            processors=[
                structlog.stdlib.filter_by_level,
                structlog.processors.TimeStamper(fmt="iso", utc=True, key="timestamp"),
                structlog.processors.add_log_level,
                structlog.processors.EventRenamer(to="event"),
                structlog.processors.JSONRenderer()
            ],
            logger_factory=structlog.stdlib.LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            cache_logger_on_first_use=True,
        )

        return structlog.getLogger(logger_name)


def set_log_level(level: str) -> None:
    """Adjust the root level after settings overrides are known (CLI flags)."""
    resolved = getattr(logging, str(level).upper(), logging.INFO)
    root = logging.getLogger()
    root.setLevel(resolved)
    for handler in root.handlers:
        handler.setLevel(resolved)
