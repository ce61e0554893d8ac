# logging_config.py
"""
Centralized logging configuration for the motzkin toolkit.
Console output goes to stderr so that command results on stdout stay
byte-for-byte deterministic; an optional file receives everything.
"""
from __future__ import annotations

import logging
import sys
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: int = logging.WARNING, log_file: Optional[str] = None) -> None:
    """
    Configures the root logger to output to the console and, optionally, a file.
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)  # handlers do the filtering

    # This prevents adding duplicate handlers if the function is called again.
    if logger.handlers:
        return

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, mode='w')
        file_handler.setLevel(logging.DEBUG)  # Log everything to the file
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.debug("Logging configured. Detailed logs will be written to '%s'", log_file)
