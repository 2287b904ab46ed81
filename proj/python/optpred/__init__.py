"""Optimal polynomial prediction measures on [-1, 1]."""

from ._optpred import *  # noqa: F401,F403
from ._optpred import __doc__  # noqa: F401

__version__ = "0.1.0"
