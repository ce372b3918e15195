"""Secrecy gain of formally unimodular Construction A lattices."""

from .gf2code import BinaryCode, DualityClass, WeightEnumerator
from .secrecy import SecrecyReport, secrecy_gain

__all__ = ["BinaryCode", "DualityClass", "WeightEnumerator", "SecrecyReport", "secrecy_gain"]
__version__ = "0.1.0"
