"""Finite-group harmonic analysis: irreps, nonabelian Fourier transforms, and
the d'Alembert, Wilson and long functional equations."""

from ._core import *  # noqa: F401,F403
from ._core import CocycleError, ValidationError  # noqa: F401

__version__ = "0.1.0"
