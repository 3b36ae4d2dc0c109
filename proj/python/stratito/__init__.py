# SPDX-License-Identifier: Apache-2.0
"""Spectral SPDE toolbox: Ito-Stratonovich correctors, paired integrators,
and cross-variation checks on the torus."""

from _stratito import *  # noqa: F401,F403
from _stratito import __doc__  # noqa: F401

__version__ = "0.1.0"
