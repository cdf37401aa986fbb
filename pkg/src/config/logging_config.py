"""
Logging configuration for the hyperspace toolkit.

Console output goes to stderr: stdout carries command output and must stay
byte-stable.
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Dict, Any, Optional

from .settings import settings


class LoggingConfig:
    """Logging configuration with an optional rotating log file."""

    def __init__(self, level: Optional[str] = None, file_logging: bool = True):
        self.level_name = (level or settings.LOG_LEVEL).upper()
        self.log_file = Path(settings.LOG_FILE_PATH) if settings.LOG_FILE_PATH and file_logging else None

        # Log rotation settings
        self.max_bytes = settings.LOG_MAX_SIZE
        self.backup_count = settings.LOG_BACKUP_COUNT

    @property
    def level(self) -> int:
        return getattr(logging, self.level_name, logging.INFO)

    def get_formatter(self, include_extra: bool = False) -> logging.Formatter:
        """Get logging formatter with optional extra fields."""
        if include_extra:
            format_string = (
                "%(asctime)s - %(name)s - %(levelname)s - "
                "%(filename)s:%(lineno)d - %(funcName)s - %(message)s"
            )
        else:
            format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

        return logging.Formatter(format_string, datefmt="%Y-%m-%d %H:%M:%S")

    def setup_console_handler(self) -> logging.Handler:
        """Setup console handler on stderr."""
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(self.level)
        handler.setFormatter(self.get_formatter())
        return handler

    def setup_file_handler(self) -> Optional[logging.Handler]:
        """Setup rotating file handler, or None when the directory is not writable."""
        try:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            handler = logging.handlers.RotatingFileHandler(
                filename=self.log_file,
                maxBytes=self.max_bytes,
                backupCount=self.backup_count,
                encoding="utf-8",
            )
        except (PermissionError, OSError) as e:
            sys.stderr.write(f"Warning: Could not set up file logging ({e}). Using console logging only.\n")
            return None

        handler.setLevel(self.level)
        handler.setFormatter(self.get_formatter(include_extra=True))
        return handler

    def configure_root_logger(self) -> None:
        """Configure the root logger with all handlers."""
        root_logger = logging.getLogger()
        root_logger.setLevel(self.level)
        root_logger.handlers.clear()
        root_logger.addHandler(self.setup_console_handler())

        if self.log_file is not None and not settings.DEBUG:
            file_handler = self.setup_file_handler()
            if file_handler is not None:
                root_logger.addHandler(file_handler)

    def configure_specific_loggers(self) -> None:
        """Pin third-party loggers and set application loggers to the configured level."""
        for library in ("networkx", "asyncio", "graphviz"):
            logging.getLogger(library).setLevel(logging.WARNING)

        app_loggers = [
            "src.handlers",
            "src.services",
            "src.repositories",
            "src.middleware",
        ]
        for logger_name in app_loggers:
            logging.getLogger(logger_name).setLevel(self.level)

    def configure_all(self) -> Dict[str, Any]:
        """Configure all logging components and return configuration info."""
        self.configure_root_logger()
        self.configure_specific_loggers()

        logger = logging.getLogger(__name__)
        logger.debug(f"Logging configured at {self.level_name}, log file {self.log_file or 'none'}")

        return {
            "log_level": self.level_name,
            "debug_mode": settings.DEBUG,
            "log_file": str(self.log_file) if self.log_file else None,
            "rotation": {
                "max_bytes": self.max_bytes,
                "backup_count": self.backup_count,
            },
        }


def setup_logging(level: Optional[str] = None, file_logging: bool = True) -> Dict[str, Any]:
    """
    Setup logging for a command-line run.

    Args:
        level: overrides LOG_LEVEL
        file_logging: False keeps logging on stderr even when LOG_FILE_PATH is set

    Returns:
        Summary of the applied configuration
    """
    return LoggingConfig(level, file_logging).configure_all()


class LogContext:
    """Context manager for adding structured context to logs."""

    def __init__(self, **context):
        self.context = context
        self.old_factory = logging.getLogRecordFactory()

    def __enter__(self):
        def record_factory(*args, **kwargs):
            record = self.old_factory(*args, **kwargs)
            for key, value in self.context.items():
                setattr(record, key, value)
            return record

        logging.setLogRecordFactory(record_factory)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        logging.setLogRecordFactory(self.old_factory)
