"""Piling algorithms for right-angled Artin groups.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .conjugacy import class_key, conjugate, cyclic_match
from .errors import PilingError, ResourceExhausted
from .extension import ExtElement, ext_conjugate, ext_inverse, ext_multiply
from .graph import DefiningGraph, LengthPreservingAut, identity_aut, inversion_aut, load_aut, load_graph, validate_aut
from .growth import ext_conj_growth, raag_conj_growth
from .piling import Piling, build_piling, extract_normal_word, piling_equal, render
from .twisted import tcp, tcp_inversions, twisted_class_set
from .word import Word

__version__ = "0.1.0"

__all__ = [
    "DefiningGraph", "ExtElement", "LengthPreservingAut", "Piling", "PilingError",
    "ResourceExhausted", "Word", "build_piling", "class_key", "conjugate",
    "cyclic_match", "ext_conj_growth", "ext_conjugate", "ext_inverse",
    "ext_multiply", "extract_normal_word", "identity_aut", "inversion_aut", "load_aut", "load_graph",
    "piling_equal", "raag_conj_growth", "render", "tcp", "tcp_inversions",
    "twisted_class_set", "validate_aut",
]
