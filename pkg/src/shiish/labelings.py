"""Combinatorial labels for regions of the deleted Shi and Ish arrangements.

A region inside the cone x_{w(1)} > ... > x_{w(n)} is labeled by an order
ideal of the Shi poset (equivalently a nonnesting partition of positions,
the ceiling diagram (w, pi)) or by an order filter of the Ish poset
(equivalently a vector eps of ceiling levels, the diagram (w, eps)).
Permutations are tuples in one-line notation: ``w[q - 1] = w(q)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from . import geometry
from .arrangement import Arrangement, build_ish, build_shi
from .geometry import Census, RegionCert
from .graph import Graph
from .lp import GT, LT, StrictSystem, feasible_strict
from .partitions import (
    EndpointPair,
    SetPartition,
    arcs,
    connected_components,
    enumerate_g_partitions,
    is_nonnesting,
    stirling2,
    to_endpoint,
)
from .poset import Poset


def positions(w) -> dict:
    """value -> 1-based position, i.e. the inverse permutation."""
    return {v: q for q, v in enumerate(w, start=1)}


def permutations(n: int) -> Iterator[tuple]:
    return itertools.permutations(range(1, n + 1))


def _difference(h):
    """(u, v, b) for a hyperplane x_u - x_v = b, 1-based."""
    u = next(k for k, c in enumerate(h.a) if c == 1) + 1
    v = next(k for k, c in enumerate(h.a) if c == -1) + 1
    return u, v, h.b


# --------------------------------------------------------------------------
# posets


class ShiPoset(Poset):
    """Non-inversions (i, j) of w, as positions, whose values form an edge.

    (i', j') <= (i, j) iff the arc i'j' nests inside ij: i <= i' and j' <= j.
    """

    def __init__(self, g: Graph, w):
        self.g, self.w = g, tuple(w)
        n = len(w)
        els = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
               if w[i - 1] < w[j - 1] and g.has_edge(w[i - 1], w[j - 1])]
        super().__init__(els, lambda x, y: y[0] <= x[0] and x[1] <= y[1])

    def hyperplane(self, e) -> tuple:
        """(u, v): the element is x_u - x_v = 1."""
        return self.w[e[0] - 1], self.w[e[1] - 1]


class IshPoset(Poset):
    """Pairs (i, j) standing for x_1 - x_j = i, ij in G, j right of 1 in w.

    (i, j) <= (i', j') iff i <= i' and j' is weakly left of j.
    """

    def __init__(self, g: Graph, w):
        self.g, self.w = g, tuple(w)
        pos = positions(w)
        self.pos = pos
        els = [(i, j) for i, j in g.sorted_edges() if pos[1] < pos[j]]
        super().__init__(els, lambda x, y: x[0] <= y[0] and pos[y[1]] <= pos[x[1]])


def shi_poset(g: Graph, w) -> ShiPoset:
    return ShiPoset(g, w)


def ish_poset(g: Graph, w) -> IshPoset:
    return IshPoset(g, w)


# --------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class ShiCeilingDiagram:
    w: tuple
    pi: SetPartition

    kind = "shi"

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def arcs(self) -> list:
        return arcs(self.pi)

    @property
    def c(self) -> int:
        return len(self.arcs)

    def is_valid(self, g: Graph) -> bool:
        if not is_nonnesting(self.pi):
            return False
        w = self.w
        return all(w[i - 1] < w[j - 1] and g.has_edge(w[i - 1], w[j - 1]) for i, j in self.arcs)

    def sort_key(self):
        return (self.w, self.arcs)

    def to_json(self) -> dict:
        return {"kind": "shi", "w": list(self.w), "arcs": [list(a) for a in self.arcs]}

    def __str__(self) -> str:
        return f"({''.join(map(str, self.w))}, {self.pi})"


@dataclass(frozen=True)
class IshCeilingDiagram:
    w: tuple
    eps: tuple

    kind = "ish"

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def c(self) -> int:
        return sum(1 for e in self.eps if e)

    def ceilings(self) -> list:
        """(level, vertex) for each nonzero entry: x_1 - x_vertex = level."""
        return [(e, self.w[q]) for q, e in enumerate(self.eps) if e]

    def is_valid(self, g: Graph) -> bool:
        w, eps = self.w, self.eps
        one = positions(w)[1]
        nonzero = [e for e in eps if e]
        if any(b <= a for a, b in zip(nonzero, nonzero[1:])):
            return False
        for q, e in enumerate(eps, start=1):
            if not 0 <= e < w[q - 1]:
                return False
            if e and (q <= one or not g.has_edge(e, w[q - 1])):
                return False
        return True

    def sort_key(self):
        return (self.w, self.eps)

    def to_json(self) -> dict:
        return {"kind": "ish", "w": list(self.w), "eps": list(self.eps)}

    def __str__(self) -> str:
        return f"({''.join(map(str, self.w))}, {self.eps})"


def shi_diagram_from_antichain(w, antichain) -> ShiCeilingDiagram:
    return ShiCeilingDiagram(tuple(w), SetPartition.from_arcs(len(w), antichain))


def ish_diagram_from_antichain(w, antichain) -> IshCeilingDiagram:
    pos = positions(w)
    eps = [0] * len(w)
    for level, j in antichain:
        eps[pos[j] - 1] = level
    return IshCeilingDiagram(tuple(w), tuple(eps))


def enumerate_shi_diagrams(g: Graph, w) -> list[ShiCeilingDiagram]:
    """One diagram per order ideal of the Shi poset (via its maximal antichain)."""
    poset = shi_poset(g, w)
    out = [shi_diagram_from_antichain(w, a) for a in poset.antichains()]
    return sorted(out, key=ShiCeilingDiagram.sort_key)


def enumerate_ish_diagrams(g: Graph, w) -> list[IshCeilingDiagram]:
    """One diagram per order filter of the Ish poset (via its minimal antichain)."""
    poset = ish_poset(g, w)
    out = [ish_diagram_from_antichain(w, a) for a in poset.antichains()]
    return sorted(out, key=IshCeilingDiagram.sort_key)


def enumerate_diagrams(g: Graph, kind: str) -> Iterator:
    each = enumerate_shi_diagrams if kind == "shi" else enumerate_ish_diagrams
    for w in permutations(g.n):
        yield from each(g, w)


def shi_ideal(d: ShiCeilingDiagram, g: Graph) -> frozenset:
    return shi_poset(g, d.w).down_closure(d.arcs)


def ish_filter(d: IshCeilingDiagram, g: Graph) -> frozenset:
    return ish_poset(g, d.w).up_closure(d.ceilings())


# --------------------------------------------------------------------------
# statistics


def shi_dof(d: ShiCeilingDiagram) -> int:
    return connected_components(d.pi)


def ish_dof(d: IshCeilingDiagram) -> int:
    one = positions(d.w)[1]
    nonzero = [q for q, e in enumerate(d.eps, start=1) if e]
    k = max(nonzero) if nonzero else one
    return d.n - k + one


def dof(d) -> int:
    return shi_dof(d) if d.kind == "shi" else ish_dof(d)


def shi_ceiling_partition(d: ShiCeilingDiagram) -> EndpointPair:
    w = d.w
    moved = SetPartition(d.n, tuple(tuple(w[x - 1] for x in b) for b in d.pi.blocks))
    return to_endpoint(moved)


def ish_ceiling_partition(d: IshCeilingDiagram) -> EndpointPair:
    cs = d.ceilings()
    return EndpointPair(d.n, tuple(a for a, _ in cs), tuple(b for _, b in cs))


def ceiling_partition(d) -> EndpointPair:
    return shi_ceiling_partition(d) if d.kind == "shi" else ish_ceiling_partition(d)


# --------------------------------------------------------------------------
# region <-> diagram


def diagram_signs(d, arr: Arrangement) -> str:
    """The sign vector of the region labeled by ``d`` in ``arr``."""
    g = arr.graph
    pos = positions(d.w)
    if d.kind == "shi":
        above = {shi_poset(g, d.w).hyperplane(e) for e in shi_ideal(d, g)}
    else:
        above = {(1, j, i) for i, j in ish_filter(d, g)}
    out = []
    for h in arr:
        u, v, b = _difference(h)
        if b == 0:
            out.append("+" if pos[u] < pos[v] else "-")
        elif pos[u] > pos[v]:
            out.append("-" if b > 0 else "+")
        elif d.kind == "shi":
            out.append("-" if (u, v) in above else "+")
        else:
            out.append("-" if (u, v, b) in above else "+")
    return "".join(out)


def diagram_to_region(d, arr: Arrangement) -> RegionCert:
    if arr.kind != d.kind:
        raise ValueError(f"{d.kind} diagram cannot label a {arr.kind} arrangement")
    signs = diagram_signs(d, arr)
    system = StrictSystem(arr.n)
    for h, s in zip(arr, signs):
        system.add(h.a, h.b, GT if s == "+" else LT)
    x = feasible_strict(system)
    if x is None:
        raise ValueError(f"diagram {d} labels an empty region")
    return RegionCert(arr, signs, tuple(x))


def witness_permutation(x) -> tuple:
    order = sorted(range(len(x)), key=lambda k: x[k], reverse=True)
    if len(set(x)) != len(x):
        raise ValueError("witness has tied coordinates")
    return tuple(k + 1 for k in order)


def region_to_diagram(r: RegionCert, arr: Arrangement = None, ceiling_set=None):
    arr = r.arrangement if arr is None else arr
    w = witness_permutation(r.witness)
    pos = positions(w)
    ceiling_set = geometry.ceilings(r) if ceiling_set is None else ceiling_set
    found = [_difference(arr.hyperplanes[i]) for i in sorted(ceiling_set)]
    if arr.kind == "shi":
        return ShiCeilingDiagram(w, SetPartition.from_arcs(arr.n, [(pos[u], pos[v]) for u, v, _ in found]))
    if arr.kind == "ish":
        eps = [0] * arr.n
        for _, v, b in found:
            eps[pos[v] - 1] = b
        return IshCeilingDiagram(w, tuple(eps))
    raise ValueError(f"no diagrams for arrangement kind {arr.kind!r}")


def diagram_ceilings(d, arr: Arrangement) -> frozenset:
    """Indices of the hyperplanes the diagram marks as ceilings."""
    if d.kind == "shi":
        wanted = {(d.w[i - 1], d.w[j - 1], 1) for i, j in d.arcs}
    else:
        wanted = {(1, j, i) for i, j in d.ceilings()}
    return frozenset(idx for idx, h in enumerate(arr) if _difference(h) in wanted)


def ish_filter_witness(f, w) -> tuple:
    """The boundary point built from the minimal elements of an Ish filter.

    Position q gets -max{level of a minimal element at a position <= q}
    (max of nothing is 0); the value at position q is the coordinate of
    x_{w(q)}. The point lies on every ceiling and satisfies every filter
    hyperplane weakly, inside the closed cone of w.
    """
    w = tuple(w)
    pos = positions(w)
    f = list(f)
    mins = [x for x in f if not any(y != x and y[0] <= x[0] and pos[x[1]] <= pos[y[1]] for y in f)]
    x = [Fraction(0)] * len(w)
    for q in range(1, len(w) + 1):
        levels = [i for i, j in mins if pos[j] <= q]
        x[w[q - 1] - 1] = Fraction(-max(levels, default=0))
    return tuple(x)


def ish_interior_point(d: IshCeilingDiagram, g: Graph) -> tuple:
    """An explicit strict interior point of the region labeled by ``d``.

    After the position of 1 the value -x at position q sits strictly between
    the highest level in columns <= q outside the filter and the next
    integer, increasing with q; before it coordinates just decrease.
    """
    n = d.n
    pos = positions(d.w)
    one = pos[1]
    poset = ish_poset(g, d.w)
    filt = poset.up_closure(d.ceilings())
    below = [0] * (n + 1)
    for i, j in poset.elements:
        if (i, j) not in filt:
            below[pos[j]] = max(below[pos[j]], i)
    x = [Fraction(0)] * n
    running = 0
    for q in range(1, n + 1):
        if q <= one:
            x[d.w[q - 1] - 1] = Fraction(one - q, n + 1)
        else:
            running = max(running, below[q])
            x[d.w[q - 1] - 1] = -(running + Fraction(q - one, n + 1))
    return tuple(x)


# --------------------------------------------------------------------------
# dominant regions


def dominant_bijection(g: Graph) -> list[tuple]:
    """Pairs (shi diagram, ish diagram, c) over the identity cone.

    The two posets share their element set (the edges of G) with opposite
    orders, so an antichain is the maximal set of a Shi ideal and the minimal
    set of an Ish filter simultaneously.
    """
    ident = tuple(range(1, g.n + 1))
    shi, ish = shi_poset(g, ident), ish_poset(g, ident)
    assert sorted(shi.elements) == sorted(ish.elements)
    pairs = []
    for a in shi.antichains():
        pairs.append((shi_diagram_from_antichain(ident, a), ish_diagram_from_antichain(ident, a), len(a)))
    return sorted(pairs, key=lambda t: (t[2], t[0].arcs))


def narayana(n: int, c: int) -> int:
    """Dominant regions of Shi(K_n) with c ceilings: N(n, c + 1)."""
    return comb(n, c) * comb(n - 1, c) // (c + 1)


# --------------------------------------------------------------------------
# counting


def count_by_ceiling_partition(g: Graph, e: EndpointPair) -> int:
    if not all(g.has_edge(a, b) for a, b in e.arcs):
        return 0
    n, k = e.n, e.blocks
    return factorial(n) // factorial(n - k + 1)


def count_by_ceiling_partition_and_dof(g: Graph, e: EndpointPair, d: int) -> int:
    n, k = e.n, e.blocks
    if d < 1 or d > k or not all(g.has_edge(a, b) for a, b in e.arcs):
        return 0
    if k == n:
        # ceilingless: one region per cone, each with n degrees of freedom
        return factorial(n) if d == n else 0
    num = d * factorial(n - d - 1) * factorial(k - 1)
    return num // (factorial(n - k - 1) * factorial(k - d))


def labeling_census(g: Graph, kind: str) -> Census:
    census = Census()
    ident = tuple(range(1, g.n + 1))
    for d in enumerate_diagrams(g, kind):
        census.add(d.c, dof(d), d.w == ident)
    return census


def formula_census(g: Graph) -> Census:
    """(c, d) table from the per-ceiling-partition formula summed over G-partitions."""
    census = Census()
    for p in enumerate_g_partitions(g):
        e = to_endpoint(p)
        for d in range(1, e.blocks + 1):
            count = count_by_ceiling_partition_and_dof(g, e, d)
            if count:
                census.cd[(len(e.alpha), d)] += count
    return census


def stirling_identity_check(n: int) -> bool:
    lhs = (n + 1) ** (n - 1)
    rhs = sum(stirling2(n, k) * factorial(n) // factorial(n - k + 1) for k in range(1, n + 1))
    return lhs == rhs


def build_for(kind: str, g: Graph) -> Arrangement:
    return build_shi(g) if kind == "shi" else build_ish(g)

