"""Utility modules."""

from .constants import *
from .logging_config import setup_logging, get_logger
from .performance import performance_monitor, Stopwatch

__all__ = ['setup_logging', 'get_logger', 'performance_monitor', 'Stopwatch']
