"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import arrangement as arr_mod
from . import geometry, labelings, partitions
from .arrangement import GuardError
from .graph import GraphSpecError, all_graphs, complete_graph, chain_graph, parse_graph, random_graphs
from .verify import verify_graphs

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    arrangement: str = "both"
    fmt: str = "table"
    max_hyperplanes: int = geometry.GEOMETRY_MAX_HYPERPLANES
    max_mobius: int = arr_mod.MOBIUS_MAX_HYPERPLANES
    max_field_n: int = arr_mod.FINITE_FIELD_MAX_N
    seed: int = 0

    def __post_init__(self):
        if min(self.max_hyperplanes, self.max_mobius, self.max_field_n) <= 0:
            raise UsageError("guards must be positive")


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def census_table(census: geometry.Census, n: int, title: str) -> str:
    lines = [title, "c\\d " + " ".join(f"{d:>5}" for d in range(1, n + 1))]
    cs = sorted({c for c, _ in census.cd}) or [0]
    for c in range(0, max(cs) + 1):
        cells = [census.cd.get((c, d), 0) for d in range(1, n + 1)]
        lines.append(f"{c:>3} " + " ".join(f"{x or '':>5}" for x in cells))
    lines.append(f"total {census.total}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# charpoly


def cmd_charpoly(cfg: RunConfig, method: str, out) -> int:
    g = parse_graph(cfg.graph)
    kinds = ["shi", "ish"] if cfg.arrangement == "both" else [cfg.arrangement]
    results = {}
    if method in ("all", "closed"):
        results["closed"] = arr_mod.charpoly_closed_form(g)
    if method in ("all", "product"):
        try:
            results["product"] = arr_mod.charpoly_product_form(g)
        except arr_mod.ClosureViolation as exc:
            if method == "product":
                raise UsageError(str(exc))
    for kind in kinds:
        arr = arr_mod.build(kind, g)
        if method in ("all", "interpolated"):
            if arr.n > cfg.max_field_n:
                if method == "interpolated":
                    raise GuardError(f"finite-field sweep refused for n = {arr.n}")
            else:
                results[f"interpolated_{kind}"] = arr_mod.charpoly_interpolated(arr)
        if method in ("all", "mobius"):
            if len(arr) > cfg.max_mobius:
                if method == "mobius":
                    raise GuardError(f"Moebius computation refused for {len(arr)} hyperplanes")
            else:
                results[f"mobius_{kind}"] = arr_mod.charpoly_via_mobius(arr, cfg.max_mobius)
    polys = list(results.values())
    agree = all(p == polys[0] for p in polys)
    chi = polys[0]
    rank = g.n - 1
    report = {
        "graph": str(g),
        "methods": {k: v.to_json() for k, v in results.items()},
        "polynomial": chi.to_json(),
        "factored": chi.factored(),
        "agree": agree,
        "regions": arr_mod.zaslavsky_regions(chi, g.n),
        "relatively_bounded": arr_mod.zaslavsky_rel_bounded(chi, rank),
    }
    if cfg.fmt == "json":
        _emit(out, _json(report))
    elif cfg.fmt == "csv":
        _emit(out, _csv(["method"] + [f"c{i}" for i in range(g.n + 1)],
                        [[k] + list(v.coeffs) for k, v in results.items()]))
    else:
        width = max(len(k) for k in results)
        lines = [f"graph {g}"]
        lines += [f"  {k:<{width}}  {v}" for k, v in results.items()]
        lines.append(f"chi(p) = {chi.factored()}")
        lines.append(f"regions {report['regions']}, relatively bounded {report['relatively_bounded']}")
        lines.append("methods agree" if agree else "METHODS DISAGREE")
        _emit(out, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FAIL


# --------------------------------------------------------------------------
# regions


def _plot_data(arr, regions, diagrams) -> dict:
    # coordinates s = x1 - x2, t = x2 - x3 on the plane x1 + x2 + x3 = 0
    lines = [{"hyperplane": str(h), "s": h.a[0], "t": h.a[0] + h.a[1], "rhs": h.b} for h in arr]
    pts = []
    for r, d in zip(regions, diagrams):
        x = [Fraction(v) for v in r.witness]
        pts.append({"signs": r.signs, "s": str(x[0] - x[1]), "t": str(x[1] - x[2]), "label": str(d)})
    return {"basis": "s = x1 - x2, t = x2 - x3", "lines": lines, "regions": pts}


def cmd_regions(cfg: RunConfig, combinatorial_only: bool, dump: Optional[str], plot_data: bool, out) -> int:
    g = parse_graph(cfg.graph)
    kind = "shi" if cfg.arrangement == "both" else cfg.arrangement
    arr = arr_mod.build(kind, g)
    combinatorial = labelings.labeling_census(g, kind)
    report = {"graph": str(g), "arrangement": kind, "combinatorial": combinatorial.to_json()}
    agree = True
    dump_lines = []
    if not combinatorial_only:
        if len(arr) > cfg.max_hyperplanes:
            raise GuardError(f"{len(arr)} hyperplanes exceed the geometry guard {cfg.max_hyperplanes}; "
                             "try --combinatorial-only")
        regions = geometry.enumerate_regions(arr, cfg.max_hyperplanes)
        census = geometry.Census()
        diagrams = []
        for r in regions:
            st = geometry.region_stats(r)
            census.add(st.c, st.dof, st.dominant)
            d = labelings.region_to_diagram(r, arr, st.ceilings)
            diagrams.append(d)
            dump_lines.append(json.dumps(geometry.region_record(r, st), sort_keys=True))
            dump_lines.append(json.dumps(d.to_json(), sort_keys=True))
        report["geometric"] = census.to_json()
        agree = census == combinatorial
        report["agree"] = agree
        if plot_data:
            if g.n != 3:
                raise UsageError("--plot-data is only available for n = 3")
            report["plot_data"] = _plot_data(arr, regions, diagrams)
    elif dump:
        for d in labelings.enumerate_diagrams(g, kind):
            dump_lines.append(json.dumps(d.to_json(), sort_keys=True))
    if dump:
        text = "\n".join(dump_lines) + ("\n" if dump_lines else "")
        if dump == "-":
            out.write(text)
        else:
            with open(dump, "w") as fh:
                fh.write(text)

    if cfg.fmt == "json":
        _emit(out, _json(report))
    elif cfg.fmt == "csv":
        rows = [["combinatorial", c, d, v] for (c, d), v in sorted(combinatorial.cd.items())]
        if "geometric" in report:
            rows += [["geometric", c, d, v] for c, d, v in report["geometric"]["cd"]]
        _emit(out, _csv(["source", "c", "d", "count"], rows))
    else:
        parts = [census_table(combinatorial, g.n, f"{kind}({g}) combinatorial census")]
        if "geometric" in report:
            geo = geometry.Census()
            for c, d, v in report["geometric"]["cd"]:
                geo.cd[(c, d)] = v
            parts.append(census_table(geo, g.n, f"{kind}({g}) geometric census"))
            parts.append("censuses agree" if agree else "CENSUSES DISAGREE")
        if plot_data:
            parts.append(_json(report["plot_data"]))
        _emit(out, "\n\n".join(parts))
    return EXIT_OK if agree else EXIT_FAIL


# --------------------------------------------------------------------------
# verify


def cmd_verify(cfg: RunConfig, all_n: Optional[int], random_count: int, random_n: int,
               skip_geometry: bool, out) -> int:
    if all_n is not None:
        if all_n > 4:
            raise GuardError(f"--all-graphs is limited to n <= 4 (got {all_n})")
        graphs = list(all_graphs(all_n))
    elif random_count:
        graphs = random_graphs(random_n, random_count, cfg.seed)
    elif cfg.graph:
        graphs = [parse_graph(cfg.graph)]
    else:
        raise UsageError("verify needs --graph, --all-graphs or --random")
    for g in graphs:
        if g.n > cfg.max_field_n:
            raise GuardError(f"finite-field sweep refused for n = {g.n}")
        if not skip_geometry and g.n * (g.n - 1) // 2 + len(g.edges) > cfg.max_hyperplanes:
            raise GuardError(f"graph {g} exceeds the geometry guard; try --skip-geometry")
    verdicts = verify_graphs(graphs, geometry=not skip_geometry)
    passed = sum(v.passed for v in verdicts)
    differs = any(v.dominant_cd_differs for v in verdicts)
    exhaustive = all_n is not None and all_n >= 3
    negative_ok = differs or not exhaustive
    ok = passed == len(verdicts) and negative_ok
    summary = {
        "graphs": len(verdicts),
        "passed": passed,
        "geometry": not skip_geometry,
        "dominant_cd_differs_somewhere": differs,
        "negative_control_required": exhaustive,
        "ok": ok,
        "results": [v.to_json() for v in verdicts],
    }
    if cfg.fmt == "json":
        _emit(out, _json(summary))
    elif cfg.fmt == "csv":
        keys = ["graph", "charpoly", "charpoly_equal", "dominant_c_equal", "census_equal",
                "geometry_agrees", "dominant_cd_differs", "passed"]
        _emit(out, _csv(keys, [[v.to_json()[k] for k in keys] for v in verdicts]))
    else:
        lines = []
        for v in verdicts:
            flag = "pass" if v.passed else "FAIL"
            lines.append(f"{flag}  {v.graph:<28} chi = {v.charpoly}")
        lines.append(f"{passed}/{len(verdicts)} graphs pass")
        lines.append("dominant (c,d) tables differ for some graph: " + ("yes" if differs else "no"))
        lines.append("OK" if ok else "FAILED")
        _emit(out, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# dominant


def cmd_dominant(cfg: RunConfig, out) -> int:
    g = parse_graph(cfg.graph)
    pairs = labelings.dominant_bijection(g)
    counts: dict[int, int] = {}
    for _, _, c in pairs:
        counts[c] = counts.get(c, 0) + 1
    by_c = [counts.get(c, 0) for c in range(max(counts) + 1)]
    expected = None
    if g == complete_graph(g.n):
        expected = [labelings.narayana(g.n, c) for c in range(g.n)]
    elif g == chain_graph(g.n):
        expected = [comb(g.n - 1, c) for c in range(g.n)]
    ok = expected is None or by_c == expected
    report = {
        "graph": str(g),
        "pairs": [{"shi": s.to_json(), "ish": i.to_json(), "c": c} for s, i, c in pairs],
        "by_c": by_c,
        "expected": expected,
        "ok": ok,
    }
    if cfg.fmt == "json":
        _emit(out, _json(report))
    elif cfg.fmt == "csv":
        _emit(out, _csv(["c", "shi_arcs", "ish_eps"],
                        [[c, json.dumps(s.arcs), json.dumps(list(i.eps))] for s, i, c in pairs]))
    else:
        lines = [f"dominant regions of Shi/Ish({g})"]
        lines += [f"  c={c}  shi {s}  <->  ish {i}" for s, i, c in pairs]
        lines.append("counts by c: " + ",".join(map(str, by_c)))
        if expected is not None:
            lines.append("expected:    " + ",".join(map(str, expected)) + ("  ok" if ok else "  MISMATCH"))
        _emit(out, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# partitions


def _parse_type(text: str) -> partitions.TypeVector:
    try:
        r = tuple(int(x) for x in text.split(","))
        return partitions.TypeVector(len(r), r)
    except ValueError as exc:
        raise UsageError(f"bad type vector {text!r}: {exc}")


def cmd_partitions(cfg: RunConfig, args, out) -> int:
    tool = args.tool
    ok = True
    report: dict = {"tool": tool}
    if tool == "kreweras":
        t = _parse_type(args.type)
        value = partitions.kreweras_count(t)
        report["value"] = value
        if args.verify:
            oracle = sum(1 for p in partitions.enumerate_nonnesting(t.n) if partitions.type_vector(p) == t)
            report["oracle"], ok = oracle, oracle == value
    elif tool == "rhoades":
        t = _parse_type(args.type)
        value = partitions.rhoades_count(t, args.d)
        report["value"] = value
        if args.verify:
            oracle = sum(1 for p in partitions.enumerate_nonnesting(t.n)
                         if partitions.type_vector(p) == t and partitions.connected_components(p) == args.d)
            report["oracle"], ok = oracle, oracle == value
    elif tool == "stirling":
        g = parse_graph(args.graph)
        value = partitions.g_stirling_numbers(g)[1:]
        report["value"] = value
        if args.verify:
            oracle = [0] * g.n
            for p in partitions.enumerate_g_partitions(g):
                oracle[len(p) - 1] += 1
            report["oracle"], ok = oracle, oracle == value
    elif tool == "identity":
        if args.n is None:
            raise UsageError("identity needs --n")
        ok = labelings.stirling_identity_check(args.n)
        report["value"] = ok
    elif tool == "enumerate":
        if args.graph:
            g = parse_graph(args.graph)
            stream = partitions.enumerate_g_partitions(g)
        elif args.n is None:
            raise UsageError("enumerate needs --n or --graph")
        elif args.nonnesting:
            stream = partitions.enumerate_nonnesting(args.n)
        else:
            stream = partitions.enumerate_partitions(args.n)
        items = [partitions.to_endpoint(p) for p in stream]
        report["value"] = [e.to_json() for e in items]
        report["count"] = len(items)
    report["ok"] = ok

    if cfg.fmt == "json":
        _emit(out, _json(report))
    elif cfg.fmt == "csv":
        if tool == "enumerate":
            _emit(out, _csv(["alpha", "beta"], [["".join(map(str, e["alpha"])), "".join(map(str, e["beta"]))]
                                                for e in report["value"]]))
        else:
            _emit(out, _csv(["tool", "value", "ok"], [[tool, json.dumps(report["value"]), ok]]))
    else:
        if tool == "enumerate":
            lines = [str(partitions.from_endpoint(partitions.EndpointPair(args.n or g.n, tuple(e["alpha"]),
                                                                          tuple(e["beta"]))))
                     for e in report["value"]]
            lines.append(f"{report['count']} partitions")
        elif tool == "identity":
            lines = [f"(n+1)^(n-1) identity for n={args.n}: " + ("holds" if ok else "FAILS")]
        else:
            v = report["value"]
            lines = [",".join(map(str, v)) if isinstance(v, list) else str(v)]
            if "oracle" in report:
                lines.append("oracle agrees" if ok else f"ORACLE DISAGREES ({report['oracle']})")
        _emit(out, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["table", "json", "csv"], default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-hyperplanes", type=int, default=geometry.GEOMETRY_MAX_HYPERPLANES)
    common.add_argument("--max-mobius", type=int, default=arr_mod.MOBIUS_MAX_HYPERPLANES)
    common.add_argument("--max-field-n", type=int, default=arr_mod.FINITE_FIELD_MAX_N)

    parser = argparse.ArgumentParser(prog="shiish", description="Deleted Shi and Ish arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomials")
    p.add_argument("--graph", required=True)
    p.add_argument("--arrangement", choices=["shi", "ish", "both"], default="both")
    p.add_argument("--method", choices=["all", "closed", "interpolated", "mobius", "product"], default="all")

    p = sub.add_parser("regions", parents=[common], help="(c, d) census of regions")
    p.add_argument("--graph", required=True)
    p.add_argument("--arrangement", choices=["shi", "ish"], default="shi")
    p.add_argument("--combinatorial-only", action="store_true")
    p.add_argument("--dump", metavar="FILE", help="JSON-lines regions and diagrams ('-' for stdout)")
    p.add_argument("--plot-data", action="store_true", help="line/point data for n = 3 pictures")

    p = sub.add_parser("verify", parents=[common], help="check the Shi/Ish coincidences")
    p.add_argument("--graph")
    p.add_argument("--all-graphs", type=int, metavar="N")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="seeded random graphs")
    p.add_argument("--n", type=int, default=4, help="vertex count for --random")
    p.add_argument("--skip-geometry", action="store_true")

    p = sub.add_parser("dominant", parents=[common], help="dominant-region bijection")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("partitions", parents=[common], help="set-partition counts")
    p.add_argument("tool", choices=["kreweras", "rhoades", "stirling", "identity", "enumerate"])
    p.add_argument("--type")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--graph")
    p.add_argument("--n", type=int)
    p.add_argument("--nonnesting", action="store_true")
    p.add_argument("--verify", action="store_true")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=args.command,
            graph=getattr(args, "graph", None),
            arrangement=getattr(args, "arrangement", "both"),
            fmt=args.fmt,
            max_hyperplanes=args.max_hyperplanes,
            max_mobius=args.max_mobius,
            max_field_n=args.max_field_n,
            seed=args.seed,
        )
        if args.command == "charpoly":
            return cmd_charpoly(cfg, args.method, out)
        if args.command == "regions":
            return cmd_regions(cfg, args.combinatorial_only, args.dump, args.plot_data, out)
        if args.command == "verify":
            return cmd_verify(cfg, args.all_graphs, args.random, args.n, args.skip_geometry, out)
        if args.command == "dominant":
            return cmd_dominant(cfg, out)
        if args.command == "partitions":
            return cmd_partitions(cfg, args, out)
    except (GraphSpecError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
