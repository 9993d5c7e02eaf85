import logging
import os
import sys
from datetime import datetime


def setup_logger(level=logging.INFO, log_dir='logs'):
    """
    Set up the root logger with console and file handlers.

    Args:
        level: Logging level (default: INFO)
        log_dir: Directory receiving the timestamped run log

    Returns:
        The configured root logger
    """
    os.makedirs(log_dir, exist_ok=True)
    log_filename = os.path.join(log_dir, f'twistlab_{datetime.now().strftime("%Y%m%d_%H%M%S")}.log')

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))

    file_handler = logging.FileHandler(log_filename)
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))

    root_logger.addHandler(console_handler)
    root_logger.addHandler(file_handler)

    root_logger.info(f"Logging to {log_filename}")
    root_logger.info(f"Log level: {logging.getLevelName(level)}")

    return root_logger
