"""Exact computations in two-colored Temperley-Lieb algebras.

Submodules, bottom up: ``polyarith`` (Z[x_s, x_t] and its fractions),
``qnum`` (two-colored quantum numbers and cyclotomic factors), ``rings``
(coefficient rings and specializations), ``diagram``, ``tlalgebra``, ``jw``
(Jones-Wenzl projectors), ``realization`` and ``cli``.
"""
from .jw import existence_check, jw_generic, jw_specialize, rotatability_check
from .qnum import Color, S, T, qbinom, quantum_number
from .rings import Specialization, parse_ring

__version__ = "0.1.0"
__all__ = [
    "Color", "S", "T", "Specialization", "existence_check", "jw_generic",
    "jw_specialize", "parse_ring", "qbinom", "quantum_number", "rotatability_check",
]
