"""Groups, words, Cayley balls and growth."""

from grouplab.core.alphabet import IDENTITY, GeneratorAlphabet, Word, format_word, parse_word
from grouplab.core.cayley import ball, geodesic, geodesic_between, growth_table, spheres
from grouplab.core.growth import GrowthTable, LogLinearFit, fit_log_linear, trusted_window
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics, GroupOracle
from grouplab.core.small_cancellation import SmallCancellation

__all__ = [
    "IDENTITY",
    "FreeGroup",
    "FreeProductOfCyclics",
    "GeneratorAlphabet",
    "GroupOracle",
    "GrowthTable",
    "LogLinearFit",
    "SmallCancellation",
    "Word",
    "ball",
    "fit_log_linear",
    "format_word",
    "geodesic",
    "geodesic_between",
    "growth_table",
    "parse_word",
    "spheres",
    "trusted_window",
]
