"""Hypergraphs and brute-force enumeration of their spanning hyperforests.

Vertices are labelled ``1..n``.  A set of hyperedges is a hyperforest exactly
when ``sum_A (|A| - 1) - |V| + c == 0``, where ``c`` counts connected
components; that global test is what the enumerator uses, so the result does
not depend on the order the edges are listed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from .errors import ResourceLimitError
from .exact import UniPoly
from .weights import RootedTable, UnrootedTable, WeightSpec, parse_rational

__all__ = [
    "Hypergraph",
    "Forest",
    "UnionFind",
    "is_hyperforest",
    "euler_excess",
    "enumerate_forests",
    "oracle_tables",
    "forest_polynomial",
    "rooted_forest_polynomial",
    "rooted_weight",
    "DEFAULT_MAX_EDGES",
]

DEFAULT_MAX_EDGES = 25


class UnionFind:
    """Disjoint sets over ``1..n`` with path halving and union by size."""

    def __init__(self, n):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.components = n

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True

    def merge(self, vertices):
        it = iter(vertices)
        first = next(it)
        for v in it:
            self.union(first, v)

    def groups(self, n):
        out = {}
        for v in range(1, n + 1):
            out.setdefault(self.find(v), []).append(v)
        return [frozenset(g) for g in out.values()]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set ``{1..n}``, distinct hyperedges of size >= 2, one weight per hyperedge."""

    n: int
    edges: tuple[frozenset, ...]
    weights: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(set(edges)) != len(edges):
            raise ValueError("repeated hyperedge")
        for e in edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {sorted(e)} has fewer than 2 vertices")
            if not all(isinstance(v, int) and 1 <= v <= self.n for v in e):
                raise ValueError(f"hyperedge {sorted(e)} is not inside 1..{self.n}")
        weights = self.weights or (Fraction(1),) * len(edges)
        if len(weights) != len(edges):
            raise ValueError("need exactly one weight per hyperedge")
        object.__setattr__(
            self, "weights", tuple(Fraction(w) if isinstance(w, int) else w for w in weights)
        )

    @classmethod
    def complete(cls, n, w: WeightSpec, keep_zero=False):
        """All subsets of size >= 2 weighted by cardinality; zero-weight edges dropped unless asked."""
        edges, weights = [], []
        for size in range(2, n + 1):
            wk = w(size)
            if wk == 0 and not keep_zero:
                continue
            for e in combinations(range(1, n + 1), size):
                edges.append(frozenset(e))
                weights.append(wk)
        return cls(n, tuple(edges), tuple(weights))

    @classmethod
    def uniform(cls, n, k):
        return cls.complete(n, WeightSpec.uniform(k))

    @classmethod
    def from_json(cls, data):
        """Build from ``{"n": 4, "edges": [[1, 2], [2, 3, 4]], "weights": ...}``.

        ``weights`` is optional (default 1 everywhere).  It may be a list with one
        exact rational per edge, or an object mapping a cardinality (as a string)
        to the weight for every edge of that size.  Rationals are ints or strings
        such as ``"3/2"``.
        """
        n = int(data["n"])
        edges = tuple(frozenset(int(v) for v in e) for e in data.get("edges", []))
        raw = data.get("weights")
        if raw is None:
            weights = ()
        elif isinstance(raw, list):
            weights = tuple(parse_rational(x) for x in raw)
        elif isinstance(raw, dict):
            by_size = {int(k): parse_rational(v) for k, v in raw.items()}
            weights = tuple(by_size.get(len(e), Fraction(1)) for e in edges)
        else:
            raise ValueError("weights must be a list or an object")
        return cls(n, edges, weights)

    def to_json(self):
        def enc(w):
            if isinstance(w, Fraction):
                return str(w.numerator) if w.denominator == 1 else str(w)
            raise TypeError("only rational weights serialize to JSON")

        return {
            "n": self.n,
            "edges": [sorted(e) for e in self.edges],
            "weights": [enc(w) for w in self.weights],
        }

    def with_weights(self, w: WeightSpec):
        return Hypergraph(self.n, self.edges, tuple(w(len(e)) for e in self.edges))


@dataclass(frozen=True)
class Forest:
    edges: tuple[int, ...]
    components: tuple[frozenset, ...]
    weight: object

    @property
    def k(self):
        return len(self.components)


def euler_excess(n, edges) -> int:
    """``sum_A (|A|-1) - n + c``; nonnegative, zero exactly for hyperforests."""
    uf = UnionFind(n)
    rank = 0
    for e in edges:
        rank += len(e) - 1
        uf.merge(e)
    return rank - n + uf.components


def is_hyperforest(G: Hypergraph, S) -> bool:
    """``S`` is an iterable of edge indices into ``G.edges``."""
    return euler_excess(G.n, [G.edges[i] for i in S]) == 0


def _components(n, edges):
    uf = UnionFind(n)
    for e in edges:
        uf.merge(e)
    return tuple(sorted(uf.groups(n), key=min))


def enumerate_forests(G: Hypergraph, max_edges=DEFAULT_MAX_EDGES):
    """Yield every spanning hyperforest of ``G`` once, as a :class:`Forest`.

    Depth-first over edge indices; a partial set that is already not a forest
    is abandoned together with all its supersets.
    """
    m = len(G.edges)
    if max_edges is not None and m > max_edges:
        raise ResourceLimitError("hyperedge", max_edges, m)
    edges = G.edges

    def rec(start, chosen, rank):
        comps = _components(G.n, [edges[i] for i in chosen])
        yield Forest(tuple(chosen), comps, prod((G.weights[i] for i in chosen), start=Fraction(1)))
        for i in range(start, m):
            extra = len(edges[i]) - 1
            if rank + extra > G.n - 1:
                continue
            chosen.append(i)
            if is_hyperforest(G, chosen):
                yield from rec(i + 1, chosen, rank + extra)
            chosen.pop()

    yield from rec(0, [], 0)


def oracle_tables(G: Hypergraph, w: WeightSpec | None = None, max_edges=DEFAULT_MAX_EDGES):
    """Rooted and unrooted forest tables of ``G`` by enumeration.

    A forest with components ``F_1..F_l`` contributes its edge-weight product to
    ``u[l]`` and that product times ``|F_1|...|F_l|`` (one root per component) to ``t[l]``.
    """
    if w is not None:
        G = G.with_weights(w)
    u = [Fraction(0)] * (G.n + 1)
    t = [Fraction(0)] * (G.n + 1)
    for f in enumerate_forests(G, max_edges):
        u[f.k] += f.weight
        t[f.k] += f.weight * prod(len(c) for c in f.components)
    return RootedTable(G.n, t), UnrootedTable(G.n, u)


def forest_polynomial(G: Hypergraph, max_edges=DEFAULT_MAX_EDGES) -> UniPoly:
    """``sum_F (prod_A w_A) lam^k(F)`` as a polynomial in ``lam``."""
    return _ring_poly(G, "λ", lambda f: f.weight, max_edges)


def rooted_forest_polynomial(G: Hypergraph, max_edges=DEFAULT_MAX_EDGES) -> UniPoly:
    """``sum_F (prod_A w_A) prod_alpha (t |V(F_alpha)|)`` as a polynomial in ``t``."""
    return _ring_poly(
        G, "t", lambda f: f.weight * prod(len(c) for c in f.components), max_edges
    )


def _ring_poly(G, var, weight_of, max_edges):
    total = UniPoly((), var)
    for f in enumerate_forests(G, max_edges):
        total = total + weight_of(f) * UniPoly.monomial(f.k, 1, var)
    return total


def rooted_weight(G: Hypergraph, roots, max_edges=DEFAULT_MAX_EDGES):
    """Total weight of spanning forests whose trees each contain exactly one of ``roots``."""
    roots = list(roots)
    if len(set(roots)) != len(roots):
        return Fraction(0)
    rs = set(roots)
    total = Fraction(0)
    for f in enumerate_forests(G, max_edges):
        if f.k == len(roots) and all(len(c & rs) == 1 for c in f.components):
            total += f.weight
    return total
