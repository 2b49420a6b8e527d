"""Cardinality-indexed hyperedge weights and the tables of forest counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import UniPoly

__all__ = ["WeightSpec", "RootedTable", "UnrootedTable", "parse_rational", "format_rational"]


def parse_rational(text) -> Fraction:
    """Parse ``"3"``, ``"-1/2"`` (or an int) into an exact Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError("floats are not exact; pass a string such as '1/2'")
    text = str(text).strip()
    if not text or any(ch in text for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class WeightSpec:
    """Weight ``w_k`` for hyperedges of cardinality ``k >= 2``.

    ``kind`` is ``"uniform"`` (``w_j = 1`` iff ``j == k``), ``"ones"``
    (``w_j = 1`` for every ``j``) or ``"map"`` (finite explicit support).
    """

    kind: str
    k: int = 0
    mapping: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        if self.kind == "uniform":
            if self.k < 2:
                raise ValueError("uniform weights need k >= 2")
        elif self.kind == "map":
            seen = set()
            for key, val in self.mapping:
                if key < 2:
                    raise ValueError(f"hyperedge cardinality must be >= 2, got {key}")
                if key in seen:
                    raise ValueError(f"duplicate cardinality {key}")
                if not isinstance(val, Fraction):
                    raise TypeError("map weights must be Fractions")
                seen.add(key)
        elif self.kind != "ones":
            raise ValueError(f"unknown weight kind {self.kind!r}")

    @classmethod
    def uniform(cls, k: int) -> "WeightSpec":
        return cls("uniform", k=k)

    @classmethod
    def ones(cls) -> "WeightSpec":
        return cls("ones")

    @classmethod
    def from_map(cls, mapping) -> "WeightSpec":
        items = sorted((int(k), parse_rational(v)) for k, v in dict(mapping).items())
        return cls("map", mapping=tuple((k, v) for k, v in items if v != 0))

    @classmethod
    def parse(cls, spec: str) -> "WeightSpec":
        """Parse ``uniform:K``, ``ones`` or ``map:2=1,3=1/2``."""
        spec = spec.strip()
        if spec == "ones":
            return cls.ones()
        head, _, body = spec.partition(":")
        if head == "uniform" and body:
            return cls.uniform(int(body))
        if head == "map":
            mapping = {}
            for item in filter(None, (p.strip() for p in body.split(","))):
                key, eq, val = item.partition("=")
                if not eq:
                    raise ValueError(f"bad map entry {item!r}, expected K=RATIONAL")
                k = int(key)
                if k in mapping:
                    raise ValueError(f"duplicate cardinality {k}")
                mapping[k] = parse_rational(val)
            return cls.from_map(mapping)
        raise ValueError(f"bad weight spec {spec!r}; use uniform:K, ones or map:2=1,3=1/2")

    def __call__(self, k: int) -> Fraction:
        if k < 2:
            raise ValueError("weights are defined for cardinality >= 2")
        if self.kind == "ones":
            return Fraction(1)
        if self.kind == "uniform":
            return Fraction(int(k == self.k))
        return dict(self.mapping).get(k, Fraction(0))

    def items(self, max_k: int):
        """Nonzero ``(k, w_k)`` pairs with ``2 <= k <= max_k``."""
        if self.kind == "ones":
            return [(k, Fraction(1)) for k in range(2, max_k + 1)]
        if self.kind == "uniform":
            return [(self.k, Fraction(1))] if self.k <= max_k else []
        return [(k, v) for k, v in self.mapping if k <= max_k]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, v in self.mapping)

    def __str__(self):
        if self.kind == "ones":
            return "ones"
        if self.kind == "uniform":
            return f"uniform:{self.k}"
        return "map:" + ",".join(f"{k}={format_rational(v)}" for k, v in self.mapping)


class _ForestTable:
    var = "x"

    def __init__(self, n, values):
        self.n = n
        self.values = tuple(Fraction(v) for v in values)
        if len(self.values) != n + 1:
            raise ValueError(f"table for n={n} needs {n + 1} entries")

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    __hash__ = None

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def polynomial(self) -> UniPoly:
        return UniPoly(self.values, self.var)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def __repr__(self):
        vals = ", ".join(format_rational(v) for v in self.values)
        return f"{type(self).__name__}(n={self.n}, [{vals}])"


class RootedTable(_ForestTable):
    """``values[r]`` is the total weight of rooted hyperforests with ``r`` trees."""

    var = "t"


class UnrootedTable(_ForestTable):
    """``values[p]`` is the total weight of unrooted hyperforests with ``p`` trees."""

    var = "λ"
