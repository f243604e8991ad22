"""Set partitions of [n]: arc diagrams, endpoint notation, nonnesting and
connectivity statistics, G-partitions, and the type-refined counting formulas
for nonnesting partitions.

All counts are exact Python integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator

from .graph import Graph


@dataclass(frozen=True)
class SetPartition:
    """A partition of [n]; blocks are stored sorted, ordered by minimum."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if any(len(b) == 0 for b in blocks):
            raise ValueError("empty block")
        elements = [x for b in blocks for x in b]
        if sorted(elements) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition [{self.n}]")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "SetPartition":
        """Partition whose blocks are the connected pieces of ``arcs``."""
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in arcs:
            parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            groups.setdefault(find(x), []).append(x)
        return cls(n, tuple(groups.values()))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {x: idx for idx, b in enumerate(self.blocks) for x in b}

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


@dataclass(frozen=True)
class EndpointPair:
    """Endpoint notation (alpha, beta): arcs a_i b_i with a_1 < a_2 < ..."""

    n: int
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        alpha, beta = tuple(self.alpha), tuple(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(alpha) != len(beta):
            raise ValueError("alpha and beta differ in length")
        for a, b in zip(alpha, beta):
            if not (1 <= a < b <= self.n):
                raise ValueError(f"arc {a}{b} violates 1 <= a < b <= n")
        if any(x >= y for x, y in zip(alpha, alpha[1:])):
            raise ValueError("alpha is not strictly increasing")
        if len(set(beta)) != len(beta):
            raise ValueError("beta has repeated entries")

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.alpha, self.beta))

    @property
    def blocks(self) -> int:
        return self.n - len(self.alpha)

    def __str__(self) -> str:
        return f"({''.join(map(str, self.alpha)) or '∅'},{''.join(map(str, self.beta)) or '∅'})"

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}


@dataclass(frozen=True)
class TypeVector:
    """Block-size multiplicities (r_1, ..., r_n) with sum i*r_i = n."""

    n: int
    r: tuple

    def __post_init__(self):
        r = tuple(self.r)
        object.__setattr__(self, "r", r)
        if len(r) != self.n or any(x < 0 for x in r):
            raise ValueError(f"type vector must have {self.n} nonnegative entries")
        if sum(i * x for i, x in enumerate(r, start=1)) != self.n:
            raise ValueError("sum of i*r_i must equal n")

    @property
    def k(self) -> int:
        return sum(self.r)


def arcs(p: SetPartition) -> list[tuple[int, int]]:
    out = [(b[i], b[i + 1]) for b in p.blocks for i in range(len(b) - 1)]
    return sorted(out)


def to_endpoint(p: SetPartition) -> EndpointPair:
    a = arcs(p)
    return EndpointPair(p.n, tuple(i for i, _ in a), tuple(j for _, j in a))


def from_endpoint(e: EndpointPair) -> SetPartition:
    # EndpointPair validation already enforces the bijection conditions
    return SetPartition.from_arcs(e.n, e.arcs)


def nesting_pairs(p: SetPartition) -> int:
    beta = to_endpoint(p).beta
    return sum(1 for i in range(len(beta)) for j in range(i + 1, len(beta)) if beta[i] > beta[j])


def is_nonnesting(p: SetPartition) -> bool:
    a = arcs(p)
    return not any(i < k < l < j for i, j in a for k, l in a)


def connected_components(p: SetPartition) -> int:
    spanned = [False] * (p.n + 1)
    for i, j in arcs(p):
        for m in range(i, j):
            spanned[m] = True
    return 1 + sum(1 for m in range(1, p.n) if not spanned[m])


def type_vector(p: SetPartition) -> TypeVector:
    sizes = Counter(len(b) for b in p.blocks)
    return TypeVector(p.n, tuple(sizes.get(i, 0) for i in range(1, p.n + 1)))


def is_g_partition(p: SetPartition, g: Graph) -> bool:
    if p.n != g.n:
        raise ValueError("partition and graph live on different vertex sets")
    return all((i, j) in g.edges for i, j in arcs(p))


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n in lexicographic order."""
    word = [0] * n

    def rec(pos, top):
        if pos == n:
            yield tuple(word)
            return
        for v in range(top + 2):
            word[pos] = v
            yield from rec(pos + 1, max(top, v))

    if n == 0:
        yield ()
        return
    yield from rec(1, 0)


def _from_rgs(rgs) -> SetPartition:
    blocks: dict[int, list[int]] = {}
    for x, label in enumerate(rgs, start=1):
        blocks.setdefault(label, []).append(x)
    return SetPartition(len(rgs), tuple(blocks.values()))


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    if n < 1:
        raise ValueError("n must be positive")
    for rgs in restricted_growth_strings(n):
        yield _from_rgs(rgs)


def enumerate_g_partitions(g: Graph) -> Iterator[SetPartition]:
    return (p for p in enumerate_partitions(g.n) if is_g_partition(p, g))


def enumerate_nonnesting(n: int) -> Iterator[SetPartition]:
    return (p for p in enumerate_partitions(n) if is_nonnesting(p))


def g_stirling_numbers(g: Graph) -> list[int]:
    """[Stir(G, 0), Stir(G, 1), ..., Stir(G, n)].

    Elements are added in increasing order; a new element m may only join a
    block whose current maximum i has im in G, so states are the sets of
    current block maxima.
    """
    states: Counter = Counter({frozenset(): 1})
    for m in range(1, g.n + 1):
        nxt: Counter = Counter()
        for maxima, count in states.items():
            nxt[maxima | {m}] += count
            for i in maxima:
                if (i, m) in g.edges:
                    nxt[(maxima - {i}) | {m}] += count
        states = nxt
    out = [0] * (g.n + 1)
    for maxima, count in states.items():
        out[len(maxima)] += count
    return out


def g_stirling(g: Graph, k: int) -> int:
    if not 1 <= k <= g.n:
        return 0
    return g_stirling_numbers(g)[k]


def stirling2(n: int, k: int) -> int:
    """Classical Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    row = [1] + [0] * k
    for m in range(1, n + 1):
        for j in range(min(m, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def kreweras_count(t: TypeVector) -> int:
    n, k = t.n, t.k
    return factorial(n) // (factorial(n - k + 1) * prod(factorial(x) for x in t.r))


def rhoades_count(t: TypeVector, d: int) -> int:
    """Nonnesting partitions of type ``t`` with ``d`` connected components."""
    n, k = t.n, t.k
    if d < 1 or k < d:
        return 0
    if k == n:
        # only the all-singletons type has n blocks
        return 1 if d == n else 0
    num = d * factorial(n - d - 1) * factorial(k - 1)
    den = factorial(n - k - 1) * factorial(k - d) * prod(factorial(x) for x in t.r)
    return num // den


def all_types(n: int) -> Iterator[TypeVector]:
    """Every type vector of [n] (integer partitions of n as multiplicities)."""

    def rec(remaining, largest):
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield [part] + rest

    for parts in rec(n, n):
        sizes = Counter(parts)
        yield TypeVector(n, tuple(sizes.get(i, 0) for i in range(1, n + 1)))
