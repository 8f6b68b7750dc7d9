"""Ideal balleans on finite sets and windows of the naturals, their hyperballeans and coarse maps."""

from .ideals import Ideal
from .subsets import GroundSet
from .verdict import Verdict

__all__ = ["GroundSet", "Ideal", "Verdict"]
