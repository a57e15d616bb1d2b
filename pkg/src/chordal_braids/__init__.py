"""Chordal graphs, colored pure braid groups and their limits over simplices.

Modules:

* ``graph``       chordal graphs, elimination orderings, maximal simplices
* ``freegroup``   reduced words in free groups and substitution maps
* ``purebraid``   pure braid words, the Artin action, forgetting and combing
* ``gamma``       tuples of braids over the maximal simplices of a chordal graph
* ``trees``       rooted trees and their comparability graphs
* ``invariants``  exponents, chromatic and Poincare polynomials, region counts
* ``selftest``    randomized cross-check suites
"""

from . import freegroup, gamma, graph, invariants, purebraid, selftest, trees
from .errors import ChordalBraidError
from .freegroup import Alphabet, FreeWord
from .gamma import LimitElement, from_edge_word, normal_form
from .graph import Graph, find_peo, is_chordal, parse_edge_list
from .purebraid import BraidWord, comb, uncomb
from .trees import RootedTree, parse_newick

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BraidWord",
    "ChordalBraidError",
    "FreeWord",
    "Graph",
    "LimitElement",
    "RootedTree",
    "comb",
    "find_peo",
    "freegroup",
    "from_edge_word",
    "gamma",
    "graph",
    "invariants",
    "is_chordal",
    "normal_form",
    "parse_edge_list",
    "parse_newick",
    "purebraid",
    "selftest",
    "trees",
    "uncomb",
]
