"""
Carlitz numbers - Core Package
Exact arithmetic over F_r(T), Carlitz towers and special numbers,
classical Cauchy/Stirling families and the identity verification suite.
"""

__version__ = "1.0.0"

from .arith import FieldParams, Poly, RatFunc, make_field
from .carlitz import CarlitzCache, carlitz_table
from .classical import classical_table
from .config import CliConfig, FieldSpec, SuiteConfig, load_suite_config
from .utils import setup_logging
from .verification import run_all

__all__ = [
    'FieldParams',
    'Poly',
    'RatFunc',
    'make_field',
    'CarlitzCache',
    'carlitz_table',
    'classical_table',
    'CliConfig',
    'FieldSpec',
    'SuiteConfig',
    'load_suite_config',
    'setup_logging',
    'run_all',
]
