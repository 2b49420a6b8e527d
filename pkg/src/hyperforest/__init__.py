"""Exact generating functions and counts of spanning hyperforests on complete hypergraphs."""

from .exact import TruncatedSeries, UniPoly, poly_eval, series_compose, series_exp, series_reversion
from .forest_counts import (
    p_poly,
    pi_allones_explicit,
    pi_poly,
    rooted_counts,
    rooted_total,
    unrooted_counts,
    unrooted_total,
    unrooted_uniform_laguerre,
)
from .hypergraph import Hypergraph, enumerate_forests, is_hyperforest, oracle_tables
from .weights import RootedTable, UnrootedTable, WeightSpec

__version__ = "0.1.0"
