"""Exact feasibility of mixed strict/non-strict linear systems.

Two exact deciders are provided:

* ``simplex``: a dense two-phase simplex over ``Fraction`` with Bland's rule,
  used to maximize a slack margin ``t`` (strictly feasible iff optimum t > 0).
* ``difference``: when every constraint reads ``x_u - x_v (<,<=,=,>) b`` the
  system is a difference-constraint graph; shortest paths with weights in
  Z + Z*eps (eps a positive infinitesimal) decide strict feasibility and the
  potentials give a witness once eps is fixed small enough.

``feasible_strict`` picks ``difference`` whenever it applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

LT, LE, EQ, GE, GT = "<", "<=", "=", ">=", ">"
_RELATIONS = {LT, LE, EQ, GE, GT}


@dataclass(frozen=True)
class Constraint:
    a: tuple
    b: int
    rel: str

    def holds(self, x) -> bool:
        lhs = sum(ai * xi for ai, xi in zip(self.a, x))
        return {
            LT: lhs < self.b,
            LE: lhs <= self.b,
            EQ: lhs == self.b,
            GE: lhs >= self.b,
            GT: lhs > self.b,
        }[self.rel]


@dataclass
class StrictSystem:
    n: int
    constraints: list = field(default_factory=list)

    def add(self, a: Sequence[int], b: int, rel: str) -> "StrictSystem":
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        if len(a) != self.n:
            raise ValueError("coefficient vector has wrong length")
        if not any(a):
            raise ValueError("zero normal vector")
        self.constraints.append(Constraint(tuple(int(x) for x in a), int(b), rel))
        return self

    def extended(self, extra) -> "StrictSystem":
        out = StrictSystem(self.n, list(self.constraints))
        for a, b, rel in extra:
            out.add(a, b, rel)
        return out

    def satisfied_by(self, x) -> bool:
        return all(c.holds(x) for c in self.constraints)


# --------------------------------------------------------------------------
# simplex


class Unbounded(Exception):
    pass


def _pivot(tab, basis, r, c):
    piv = tab[r][c]
    tab[r] = [x / piv for x in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            row_r = tab[r]
            tab[i] = [x - f * y for x, y in zip(tab[i], row_r)]
    basis[r] = c


def _run(tab, basis, ncols, allowed):
    """Maximize the objective held in the last row (as reduced costs).

    The last row stores -c_j + ..., so a negative entry means improving.
    Bland's rule on the smallest improving column and smallest basis index.
    """
    m = len(tab) - 1
    while True:
        col = next((j for j in range(ncols) if allowed[j] and tab[m][j] < 0), None)
        if col is None:
            return
        best = None
        for i in range(m):
            if tab[i][col] > 0:
                ratio = tab[i][-1] / tab[i][col]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded
        _pivot(tab, basis, best[1], col)


def linprog_max(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """max c.y subject to a_ub y <= b_ub, a_eq y = b_eq, y >= 0 (exact).

    Returns ``("optimal", value, y)``, ``("infeasible", None, None)`` or
    ``("unbounded", None, None)``.
    """
    nv = len(c)
    rows = []
    for a, b in zip(a_ub, b_ub):
        rows.append(([Fraction(x) for x in a], Fraction(b), True))
    for a, b in zip(a_eq, b_eq):
        rows.append(([Fraction(x) for x in a], Fraction(b), False))
    m = len(rows)
    n_slack = sum(1 for r in rows if r[2])
    n_art = m
    ncols = nv + n_slack + n_art
    tab = []
    basis = []
    s = 0
    for i, (a, b, is_ub) in enumerate(rows):
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if is_ub:
            row[nv + s] = Fraction(1)
            s += 1
        if b < 0:
            row = [-x for x in row]
        row[nv + n_slack + i] = Fraction(1)
        tab.append(row)
        basis.append(nv + n_slack + i)

    # phase 1: maximize -sum(artificials)
    obj = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        obj = [o - x for o, x in zip(obj, tab[i])]
    for i in range(m):
        obj[nv + n_slack + i] = Fraction(0)
    tab.append(obj)
    allowed = [True] * ncols
    _run(tab, basis, ncols, allowed)
    if tab[m][-1] != 0:
        return "infeasible", None, None

    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nv + n_slack:
            col = next((j for j in range(nv + n_slack) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)

    # phase 2
    allowed = [j < nv + n_slack for j in range(ncols)]
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(nv):
        obj[j] = -Fraction(c[j])
    for i in range(m):
        cb = -obj[basis[i]]
        if cb != 0:
            obj = [o + cb * x for o, x in zip(obj, tab[i])]
    tab[m] = obj
    try:
        _run(tab, basis, ncols, allowed)
    except Unbounded:
        return "unbounded", None, None
    y = [Fraction(0)] * nv
    for i in range(m):
        if basis[i] < nv:
            y[basis[i]] = tab[i][-1]
    return "optimal", tab[m][-1], y


def _simplex_feasible(system: StrictSystem) -> Optional[list[Fraction]]:
    n = system.n
    # variables: x+ (n), x- (n), t+, t-
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for con in system.constraints:
        a = list(con.a)
        if con.rel in (LT, LE):
            sign = 1
        elif con.rel in (GT, GE):
            sign = -1
        else:
            a_eq.append(a + [-x for x in a] + [0, 0])
            b_eq.append(con.b)
            continue
        t = 1 if con.rel in (LT, GT) else 0
        row = [sign * x for x in a]
        a_ub.append(row + [-x for x in row] + [t, -t])
        b_ub.append(sign * con.b)
    a_ub.append([0] * (2 * n) + [1, -1])
    b_ub.append(1)
    c = [0] * (2 * n) + [1, -1]
    status, value, y = linprog_max(c, a_ub, b_ub, a_eq, b_eq)
    if status != "optimal":
        return None
    has_strict = any(con.rel in (LT, GT) for con in system.constraints)
    if has_strict and value <= 0:
        return None
    if not has_strict and value < 0:
        # margin is irrelevant without strict rows; any feasible point works
        pass
    return [y[i] - y[n + i] for i in range(n)]


# --------------------------------------------------------------------------
# difference constraints


def _as_difference(a) -> Optional[tuple[int, int]]:
    """(u, v) with a = e_u - e_v, or None."""
    plus = [i for i, x in enumerate(a) if x == 1]
    minus = [i for i, x in enumerate(a) if x == -1]
    if len(plus) == 1 and len(minus) == 1 and sum(1 for x in a if x) == 2:
        return plus[0], minus[0]
    return None


def is_difference_system(system: StrictSystem) -> bool:
    return all(_as_difference(c.a) is not None for c in system.constraints)


def _difference_feasible(system: StrictSystem) -> Optional[list[Fraction]]:
    n = system.n
    # weight c - s*eps is encoded as c*scale - s; path sums carry at most n
    # strict edges, so scale > 2n keeps the lexicographic order
    scale = 2 * n + 3
    edges = []  # (from v, to u, weight): x_u <= x_v + weight

    def upper(u, v, bound, strict):
        edges.append((v, u, bound * scale - (1 if strict else 0)))

    for con in system.constraints:
        u, v = _as_difference(con.a)
        if con.rel in (LT, LE):
            upper(u, v, con.b, con.rel == LT)
        elif con.rel in (GT, GE):
            upper(v, u, -con.b, con.rel == GT)
        else:
            upper(u, v, con.b, False)
            upper(v, u, -con.b, False)

    dist = [0] * n  # virtual source with zero edges to every node
    for _ in range(n):
        changed = False
        for v, u, w in edges:
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
                changed = True
        if not changed:
            break
    else:
        if any(dist[v] + w < dist[u] for v, u, w in edges):
            return None

    eps = Fraction(1, scale)
    x = []
    for dval in dist:
        whole = -((-dval) // scale)  # ceil
        ticks = whole * scale - dval  # 0 <= ticks < scale
        x.append(whole - ticks * eps)
    return x


def feasible_strict(system: StrictSystem, method: str = "auto") -> Optional[list[Fraction]]:
    """An exact rational point satisfying ``system``, or None if infeasible."""
    if method == "auto":
        method = "difference" if is_difference_system(system) else "simplex"
    if method == "difference":
        x = _difference_feasible(system)
    elif method == "simplex":
        x = _simplex_feasible(system)
    else:
        raise ValueError(f"unknown method {method!r}")
    if x is not None and not system.satisfied_by(x):
        raise AssertionError("witness fails its own system")
    return x
