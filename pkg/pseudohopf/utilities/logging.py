import logging


def get_logger(name: str) -> logging.Logger:
    """Get a logger in the pseudohopf namespace."""
    return logging.getLogger(f'pseudohopf.{name}')
