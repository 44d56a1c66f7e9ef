"""
Operator models: the abstract (A, A*) contract and the two bundled instances.
"""

from .base import HilbertModel
from .diagonal import DiagonalSequence
from .momentum import MomentumLine
from .registry import ModelRegistry

__all__ = [
    "DiagonalSequence",
    "HilbertModel",
    "ModelRegistry",
    "MomentumLine",
]
