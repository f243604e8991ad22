"""Simple loopless graphs on the vertex set [n] and their text format.

Accepted specs: ``complete:n``, ``chain:n``, ``empty:n`` or ``n;i-j,i-j,...``
(vertices are 1-based, e.g. ``3;1-2,2-3``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass


class GraphSpecError(ValueError):
    """Malformed graph spec; ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        edges = frozenset(tuple(e) for e in self.edges)
        for i, j in edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad edge {i}-{j} for n={self.n}")
        object.__setattr__(self, "edges", edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def outdegree(self, i: int) -> int:
        return sum(1 for a, _ in self.edges if a == i)

    def __str__(self) -> str:
        return f"{self.n};" + ",".join(f"{i}-{j}" for i, j in self.sorted_edges())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def chain_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def all_graphs(n: int):
    """Every G contained in C([n], 2), ordered by edge-subset bitmask."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    pairs = itertools.combinations(range(1, n + 1), 2)
    return Graph(n, frozenset(p for p in pairs if rng.random() < density))


def random_graphs(n: int, count: int, seed: int = 0) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(n, rng) for _ in range(count)]


_NAMED = {"complete": complete_graph, "chain": chain_graph, "empty": empty_graph}


def _parse_int(text: str, offset: int) -> int:
    stripped = text.strip()
    if not stripped.isdigit():
        raise GraphSpecError(f"expected a positive integer, got {text!r}", offset)
    return int(stripped)


def parse_graph(spec: str) -> Graph:
    spec = spec.strip()
    if ":" in spec:
        name, _, rest = spec.partition(":")
        if name not in _NAMED:
            raise GraphSpecError(f"unknown graph family {name!r}", 0)
        n = _parse_int(rest, len(name) + 1)
        if n < 1:
            raise GraphSpecError("n must be positive", len(name) + 1)
        return _NAMED[name](n)

    head, sep, body = spec.partition(";")
    if not sep:
        raise GraphSpecError("expected 'family:n' or 'n;i-j,...'", 0)
    n = _parse_int(head, 0)
    if n < 1:
        raise GraphSpecError("n must be positive", 0)
    edges: set[tuple[int, int]] = set()
    offset = len(head) + 1
    if body.strip():
        for token in body.split(","):
            left, dash, right = token.partition("-")
            if not dash:
                raise GraphSpecError(f"edge {token!r} is not of the form i-j", offset)
            i = _parse_int(left, offset)
            j = _parse_int(right, offset + len(left) + 1)
            if i == j:
                raise GraphSpecError(f"loop {i}-{j}", offset)
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphSpecError(f"vertex out of range in {token.strip()!r}", offset)
            edge = (min(i, j), max(i, j))
            if edge in edges:
                raise GraphSpecError(f"duplicate edge {edge[0]}-{edge[1]}", offset)
            edges.add(edge)
            offset += len(token) + 1
    return Graph(n, frozenset(edges))
