"""Expanded (corona) trees, maximal independent set counting, and exact
verification of generalized Fibonacci identities."""

from corona_fib.fib_core import FibSequence, fib, parse_rational, term
from corona_fib.graph_core import ExpandedTree, Tree, expand, path_tree, random_tree
from corona_fib.mis_engine import count_mis, count_mis_containing, enumerate_mis
from corona_fib.report import IdentityReport
from corona_fib.xk_iter import XkTower, xk_value

__all__ = [
    "ExpandedTree",
    "FibSequence",
    "IdentityReport",
    "Tree",
    "XkTower",
    "count_mis",
    "count_mis_containing",
    "enumerate_mis",
    "expand",
    "fib",
    "parse_rational",
    "path_tree",
    "random_tree",
    "term",
    "xk_value",
]
