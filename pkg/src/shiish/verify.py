"""Side-by-side checks of the deleted Shi and Ish arrangements of a graph."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arrangement import build_ish, build_shi, charpoly_closed_form, charpoly_interpolated
from .geometry import Census, region_census
from .graph import Graph
from .labelings import labeling_census

WORKERS_ENV = "SHIISH_WORKERS"


@dataclass
class GraphVerdict:
    graph: str
    charpoly: str
    charpoly_equal: bool
    dominant_c_equal: bool
    census_equal: bool
    geometry_agrees: bool | None
    dominant_cd_differs: bool
    censuses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.charpoly_equal and self.dominant_c_equal and self.census_equal
                and self.geometry_agrees is not False)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "charpoly": self.charpoly,
            "charpoly_equal": self.charpoly_equal,
            "dominant_c_equal": self.dominant_c_equal,
            "census_equal": self.census_equal,
            "geometry_agrees": self.geometry_agrees,
            "dominant_cd_differs": self.dominant_cd_differs,
            "passed": self.passed,
        }


def verify_graph(g: Graph, geometry: bool = True) -> GraphVerdict:
    shi, ish = build_shi(g), build_ish(g)
    closed = charpoly_closed_form(g)
    chi_shi, chi_ish = charpoly_interpolated(shi), charpoly_interpolated(ish)
    comb: dict[str, Census] = {"shi": labeling_census(g, "shi"), "ish": labeling_census(g, "ish")}
    censuses = {f"{k}_combinatorial": v for k, v in comb.items()}
    geometry_agrees = None
    if geometry:
        geo = {"shi": region_census(shi), "ish": region_census(ish)}
        censuses.update({f"{k}_geometric": v for k, v in geo.items()})
        geometry_agrees = all(geo[k] == comb[k] for k in ("shi", "ish"))
    tables = [comb] + ([geo] if geometry else [])
    return GraphVerdict(
        graph=str(g),
        charpoly=closed.factored(),
        charpoly_equal=chi_shi == chi_ish == closed,
        dominant_c_equal=all(+t["shi"].dominant_c == +t["ish"].dominant_c for t in tables),
        census_equal=all(+t["shi"].cd == +t["ish"].cd for t in tables),
        geometry_agrees=geometry_agrees,
        dominant_cd_differs=+comb["shi"].dominant_cd != +comb["ish"].dominant_cd,
        censuses=censuses,
    )


def _verify_task(args):
    g, geometry = args
    return verify_graph(g, geometry)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def verify_graphs(graphs, geometry: bool = True, workers: int | None = None) -> list[GraphVerdict]:
    """Verdicts in input order; fans out to a process pool when workers > 1."""
    workers = worker_count() if workers is None else workers
    tasks = [(g, geometry) for g in graphs]
    if workers <= 1 or len(tasks) <= 1:
        return [_verify_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_task, tasks))
