"""Exact symmetry algebra and phase-space tools for two coupled oscillators."""
from __future__ import annotations

from .catalog import GENERATOR_NAMES, SP4_MEMBERS, Ordering, generator, o33_generator, sp4_generator
from .exactnum import ExactMatrix, GaussRational

__all__ = [
    "GENERATOR_NAMES",
    "SP4_MEMBERS",
    "Ordering",
    "generator",
    "sp4_generator",
    "o33_generator",
    "ExactMatrix",
    "GaussRational",
]

__version__ = "0.1.0"
