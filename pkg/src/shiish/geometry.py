"""Regions of an arrangement as sign vectors with exact interior witnesses,
and the per-region statistics read off geometrically: walls, ceilings,
recession-cone dimension and dominance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import Arrangement, GuardError
from .linalg import rank as matrix_rank
from .lp import EQ, GT, LE, LT, StrictSystem, feasible_strict

GEOMETRY_MAX_HYPERPLANES = 22


@dataclass(frozen=True)
class RegionCert:
    """``signs[h]`` is '+' when a.x > b on the region for hyperplane h."""

    arrangement: Arrangement = field(compare=False, hash=False, repr=False)
    signs: str
    witness: tuple

    def system(self, skip: Optional[int] = None) -> StrictSystem:
        s = StrictSystem(self.arrangement.n)
        for idx, (h, sign) in enumerate(zip(self.arrangement, self.signs)):
            if idx != skip:
                s.add(h.a, h.b, GT if sign == "+" else LT)
        return s

    def check_witness(self) -> bool:
        return signs_of(self.arrangement, self.witness) == self.signs


@dataclass(frozen=True)
class RegionStats:
    ceilings: frozenset
    walls: frozenset
    dof: int
    dominant: bool

    @property
    def c(self) -> int:
        return len(self.ceilings)


def signs_of(arr: Arrangement, x) -> Optional[str]:
    """Sign vector of a point, or None if it lies on some hyperplane."""
    out = []
    for h in arr:
        v = h.value(x)
        if v == 0:
            return None
        out.append("+" if v > 0 else "-")
    return "".join(out)


def enumerate_regions(arr: Arrangement, max_hyperplanes: int = GEOMETRY_MAX_HYPERPLANES,
                      method: str = "auto") -> list[RegionCert]:
    """Regions by incremental insertion in the arrangement's hyperplane order.

    Each partial region keeps a strict witness; the side of the new
    hyperplane the witness already lies on needs no LP.
    """
    if len(arr) > max_hyperplanes:
        raise GuardError(f"region enumeration refused for {len(arr)} > {max_hyperplanes} hyperplanes")
    n = arr.n
    zero = tuple(Fraction(0) for _ in range(n))
    partial = [("", StrictSystem(n), zero)]
    for h in arr:
        nxt = []
        for signs, system, x in partial:
            v = h.value(x)
            for sign, rel in (("+", GT), ("-", LT)):
                if (v > 0 and sign == "+") or (v < 0 and sign == "-"):
                    nxt.append((signs + sign, system.extended([(h.a, h.b, rel)]), x))
                    continue
                grown = system.extended([(h.a, h.b, rel)])
                y = feasible_strict(grown, method)
                if y is not None:
                    nxt.append((signs + sign, grown, tuple(y)))
        partial = nxt
    regions = [RegionCert(arr, signs, tuple(x)) for signs, _, x in partial]
    assert all(r.check_witness() for r in regions)
    return regions


def walls(r: RegionCert, method: str = "auto") -> frozenset:
    out = set()
    for idx, h in enumerate(r.arrangement):
        system = r.system(skip=idx).add(h.a, h.b, EQ)
        if feasible_strict(system, method) is not None:
            out.add(idx)
    return frozenset(out)


def origin_sign(h) -> Optional[str]:
    if h.b == 0:
        return None
    return "-" if h.b > 0 else "+"


def ceilings(r: RegionCert, wall_set: Optional[frozenset] = None, method: str = "auto") -> frozenset:
    wall_set = walls(r, method) if wall_set is None else wall_set
    hs = r.arrangement.hyperplanes
    return frozenset(i for i in wall_set if hs[i].b != 0 and r.signs[i] == origin_sign(hs[i]))


def recession_dim(r: RegionCert, method: str = "auto") -> int:
    """dim Rec(R) = n - rank of the implicit equalities of {A v <= 0}."""
    n = r.arrangement.n
    rows = []
    for h, sign in zip(r.arrangement, r.signs):
        rows.append(tuple(-x for x in h.a) if sign == "+" else h.a)
    implicit = []
    for i, row in enumerate(rows):
        s = StrictSystem(n)
        for j, other in enumerate(rows):
            if j != i:
                s.add(other, 0, LE)
        s.add(row, -1, LE)
        if feasible_strict(s, method) is None:
            implicit.append(row)
    return n - matrix_rank(implicit)


def coxeter_indices(arr: Arrangement) -> dict:
    """(i, j) -> hyperplane index for each x_i - x_j = 0 present."""
    out = {}
    for idx, h in enumerate(arr):
        if h.b != 0:
            continue
        nz = [(k + 1, c) for k, c in enumerate(h.a) if c]
        if len(nz) == 2 and {c for _, c in nz} == {1, -1}:
            (i, ci), (j, _) = nz
            out[(i, j)] = (idx, ci)
    return out


def is_dominant(r: RegionCert) -> bool:
    n = r.arrangement.n
    cox = coxeter_indices(r.arrangement)
    if len(cox) != n * (n - 1) // 2:
        raise ValueError("dominance needs every Coxeter hyperplane in the arrangement")
    # x_i - x_j > 0 for i < j; ci records the sign of x_i's coefficient
    return all((r.signs[idx] == "+") == (ci == 1) for (_, _), (idx, ci) in cox.items())


def region_stats(r: RegionCert, method: str = "auto") -> RegionStats:
    w = walls(r, method)
    return RegionStats(ceilings(r, w), w, recession_dim(r, method), is_dominant(r))


@dataclass
class Census:
    """Region counts per (ceilings, dof), with the dominant sub-tables."""

    cd: Counter = field(default_factory=Counter)
    dominant_c: Counter = field(default_factory=Counter)
    dominant_cd: Counter = field(default_factory=Counter)

    def add(self, c: int, d: int, dominant: bool) -> None:
        self.cd[(c, d)] += 1
        if dominant:
            self.dominant_c[c] += 1
            self.dominant_cd[(c, d)] += 1

    @property
    def total(self) -> int:
        return sum(self.cd.values())

    def by_dof(self, d: int) -> int:
        return sum(v for (_, dd), v in self.cd.items() if dd == d)

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "cd": [[c, d, v] for (c, d), v in sorted(self.cd.items())],
            "dominant_c": [[c, v] for c, v in sorted(self.dominant_c.items())],
            "dominant_cd": [[c, d, v] for (c, d), v in sorted(self.dominant_cd.items())],
        }

    def __eq__(self, other) -> bool:
        return (+self.cd == +other.cd and +self.dominant_c == +other.dominant_c
                and +self.dominant_cd == +other.dominant_cd)


def region_census(arr: Arrangement, regions=None) -> Census:
    regions = enumerate_regions(arr) if regions is None else regions
    census = Census()
    for r in regions:
        st = region_stats(r)
        census.add(st.c, st.dof, st.dominant)
    return census


def region_record(r: RegionCert, stats: RegionStats) -> dict:
    return {
        "signs": r.signs,
        "witness": [f"{x.numerator}/{x.denominator}" for x in map(Fraction, r.witness)],
        "c": stats.c,
        "d": stats.dof,
        "dominant": stats.dominant,
    }
