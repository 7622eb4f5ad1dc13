"""Exact arithmetic for the affine Weyl groups A2~, C2~, G2~ (and A1~).

Bruhat order, galleries and foldings, annexes with their boundaries, checks of
the boundary theorems, and SVG pictures.
"""
from ._kernels import BACKEND
from .annex import Annex, annex
from .bruhat import interval, leq, leq_oracle, shadow
from .coxeter_core import (
    Element, GroupContext, Hyperplane, from_word, get_context, parse_word, reduced_word,
    right_descents, word_of)
from .root_data import TYPE_TAGS, UnsupportedTypeError

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Annex", "annex", "interval", "leq", "leq_oracle", "shadow", "Element",
    "GroupContext", "Hyperplane", "from_word", "get_context", "parse_word", "reduced_word",
    "right_descents", "word_of", "TYPE_TAGS", "UnsupportedTypeError",
]
