"""Desk-scale Ramsey combinatorics on trees with a successor operation."""

from .words import Alphabet, Word, WordTree

__all__ = ["Alphabet", "Word", "WordTree"]
__version__ = "0.1.0"
