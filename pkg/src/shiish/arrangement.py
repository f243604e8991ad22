"""Coxeter, deleted Shi and deleted Ish arrangements and their
characteristic polynomials, computed three independent ways:

* finite-field point counts interpolated through n+1 primes,
* the G-Stirling closed form,
* the Moebius function of the intersection poset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .graph import Graph
from .linalg import is_consistent, rank as matrix_rank, rref
from .partitions import g_stirling_numbers
from .poly import IntPolynomial, falling, lagrange_interpolate

MOBIUS_MAX_HYPERPLANES = 14
FINITE_FIELD_MAX_N = 6


class GuardError(RuntimeError):
    """A computation was refused because it exceeds a configured size guard."""


class PrimeThresholdError(ArithmeticError):
    """Interpolated coefficients were not integral: prime threshold too low."""


class ClosureViolation(ValueError):
    def __init__(self, triple):
        i, j, k = triple
        super().__init__(f"graph lacks closure: {j}{k} in G but {i}{k} not in G (i<j<k = {i},{j},{k})")
        self.triple = triple


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane a.x = b."""

    a: tuple
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not any(self.a):
            raise ValueError("hyperplane normal is zero")

    @classmethod
    def difference(cls, n: int, i: int, j: int, b: int) -> "Hyperplane":
        """x_i - x_j = b with 1-based i, j."""
        a = [0] * n
        a[i - 1] = 1
        a[j - 1] = -1
        return cls(tuple(a), b)

    def key(self) -> tuple:
        g = gcd(*self.a, self.b)
        return tuple(x // g for x in self.a) + (self.b // g,)

    def value(self, x) -> Fraction:
        return sum(ai * xi for ai, xi in zip(self.a, x)) - self.b

    def __str__(self) -> str:
        terms = []
        for idx, c in enumerate(self.a, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}x{idx}")
        text = "".join(terms).lstrip("+")
        return f"{text}={self.b}"


@dataclass
class Arrangement:
    n: int
    hyperplanes: list
    kind: str = "custom"
    graph: Optional[Graph] = field(default=None, compare=False)

    def __post_init__(self):
        seen = set()
        for h in self.hyperplanes:
            if len(h.a) != self.n:
                raise ValueError(f"hyperplane {h} lives in the wrong dimension")
            if h.key() in seen:
                raise ValueError(f"duplicate hyperplane {h}")
            seen.add(h.key())

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def same_hyperplanes(self, other: "Arrangement") -> bool:
        return {h.key() for h in self} == {h.key() for h in other}


def _dedupe(hyperplanes):
    out, seen = [], set()
    for h in hyperplanes:
        if h.key() not in seen:
            seen.add(h.key())
            out.append(h)
    return out


def _cox_hyperplanes(n: int):
    return [Hyperplane.difference(n, i, j, 0) for i, j in itertools.combinations(range(1, n + 1), 2)]


def build_cox(n: int) -> Arrangement:
    if n < 2:
        raise ValueError("Coxeter arrangement needs n >= 2")
    return Arrangement(n, _cox_hyperplanes(n), "cox")


def build_shi(g: Graph) -> Arrangement:
    if g.n < 2:
        raise ValueError("deleted Shi arrangement needs n >= 2")
    extra = [Hyperplane.difference(g.n, i, j, 1) for i, j in g.sorted_edges()]
    return Arrangement(g.n, _dedupe(_cox_hyperplanes(g.n) + extra), "shi", g)


def build_ish(g: Graph) -> Arrangement:
    if g.n < 2:
        raise ValueError("deleted Ish arrangement needs n >= 2")
    # x_1 - x_j = i with i >= 1, never a Coxeter hyperplane
    extra = [Hyperplane.difference(g.n, 1, j, i) for i, j in g.sorted_edges()]
    return Arrangement(g.n, _dedupe(_cox_hyperplanes(g.n) + extra), "ish", g)


def build(kind: str, g: Graph) -> Arrangement:
    if kind == "shi":
        return build_shi(g)
    if kind == "ish":
        return build_ish(g)
    if kind == "cox":
        return build_cox(g.n)
    raise ValueError(f"unknown arrangement kind {kind!r}")


def rank(arr: Arrangement) -> int:
    return matrix_rank([h.a for h in arr])


# --------------------------------------------------------------------------
# finite field method


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, int(m**0.5) + 1))


def primes_above(n: int, count: int) -> list[int]:
    out, m = [], n + 1
    while len(out) < count:
        if is_prime(m):
            out.append(m)
        m += 1
    return out


def count_complement_points(arr: Arrangement, p: int) -> int:
    """#(F_p^n minus the reduced arrangement), by pruned exhaustive sweep.

    Coordinates are assigned in order and a hyperplane is tested as soon as
    its last variable is fixed, so points on any Coxeter hyperplane are cut
    at the first collision (the sweep visits only injective prefixes). When
    every normal sums to zero the count is translation invariant along
    (1, ..., 1) and x_1 is pinned to 0.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= arr.n:
        raise ValueError(f"prime {p} must exceed n = {arr.n}")
    n = arr.n
    checks = [[] for _ in range(n)]
    for h in arr:
        last = max(i for i, x in enumerate(h.a) if x)
        checks[last].append(([x % p for x in h.a], h.b % p))

    translation = all(sum(h.a) == 0 for h in arr)
    x = [0] * n

    def rec(pos):
        if pos == n:
            return 1
        total = 0
        for v in range(p):
            x[pos] = v
            ok = True
            for a, b in checks[pos]:
                if sum(ai * xi for ai, xi in zip(a, x[: pos + 1])) % p == b:
                    ok = False
                    break
            if ok:
                total += rec(pos + 1)
        return total

    if translation:
        x[0] = 0
        if any(b == 0 for _, b in checks[0]):
            return 0
        return p * rec(1)
    return rec(0)


def charpoly_interpolated(arr: Arrangement, primes=None, check_prime: Optional[int] = None) -> IntPolynomial:
    """Degree-n interpolant through point counts at the n+1 smallest primes > n."""
    if arr.n > FINITE_FIELD_MAX_N:
        raise GuardError(f"finite-field sweep refused for n = {arr.n} > {FINITE_FIELD_MAX_N}")
    primes = primes or primes_above(arr.n, arr.n + 1)
    pts = [(q, count_complement_points(arr, q)) for q in primes]
    coeffs = lagrange_interpolate(pts)
    if any(c.denominator != 1 for c in coeffs):
        raise PrimeThresholdError("prime threshold too low: non-integer interpolation coefficients")
    poly = IntPolynomial(tuple(int(c) for c in coeffs))
    if poly.degree != arr.n or poly.leading != 1:
        raise PrimeThresholdError("prime threshold too low: interpolant is not monic of degree n")
    if check_prime is not None and count_complement_points(arr, check_prime) != poly(check_prime):
        raise PrimeThresholdError(f"held-out prime {check_prime} disagrees with the interpolant")
    return poly


def charpoly_closed_form(g: Graph) -> IntPolynomial:
    """p * sum_k (-1)^k Stir(G, n-k) (p-k-1)(p-k-2)...(p-n+1)."""
    n = g.n
    stir = g_stirling_numbers(g)
    total = IntPolynomial((0,))
    for k in range(n):
        term = falling(k + 1, n - 1) * stir[n - k]
        total = total + (term if k % 2 == 0 else -term)
    return IntPolynomial.monomial(1) * total


def closure_violation(g: Graph):
    """First triple i<j<k with jk in G and ik not in G, else None.

    The product formula needs every edge into k to extend leftward; the
    other orientation (ij in G forces ik in G) already fails for G = {23}.
    """
    for i, j, k in itertools.combinations(range(1, g.n + 1), 3):
        if (j, k) in g.edges and (i, k) not in g.edges:
            return (i, j, k)
    return None


def charpoly_product_form(g: Graph) -> IntPolynomial:
    triple = closure_violation(g)
    if triple is not None:
        raise ClosureViolation(triple)
    out = IntPolynomial.monomial(1)
    for i in range(1, g.n):
        out = out * IntPolynomial.linear(g.outdegree(i) + i)
    return out


# --------------------------------------------------------------------------
# intersection poset


@dataclass(frozen=True)
class Flat:
    """A nonempty intersection of hyperplanes.

    ``key`` is the RREF of the defining augmented system; ``support`` is the
    set of all hyperplane indices containing the flat.
    """

    key: tuple
    support: frozenset
    dim: int


def _flat_of(arr: Arrangement, indices) -> Optional[Flat]:
    rows = [list(arr.hyperplanes[i].a) + [arr.hyperplanes[i].b] for i in indices]
    red = rref(rows)
    if not is_consistent(red):
        return None
    return Flat(red, frozenset(indices), arr.n - len(red))


def intersection_poset(arr: Arrangement, max_hyperplanes: int = MOBIUS_MAX_HYPERPLANES) -> list[Flat]:
    """All flats, built rank by rank; sorted by decreasing dimension."""
    if len(arr) > max_hyperplanes:
        raise GuardError(f"intersection poset refused for {len(arr)} > {max_hyperplanes} hyperplanes")
    m = len(arr)

    def saturate(flat_key, support):
        # add every hyperplane containing the flat
        full = set(support)
        for h in range(m):
            if h in full:
                continue
            rows = [list(r) for r in flat_key] + [list(arr.hyperplanes[h].a) + [arr.hyperplanes[h].b]]
            if len(rref(rows)) == len(flat_key):
                full.add(h)
        return frozenset(full)

    top = Flat((), frozenset(), arr.n)
    flats = {(): top}
    frontier = [top]
    while frontier:
        nxt = []
        for flat in frontier:
            for h in range(m):
                if h in flat.support:
                    continue
                cand = _flat_of(arr, sorted(flat.support | {h}))
                if cand is None or cand.key in flats:
                    continue
                cand = Flat(cand.key, saturate(cand.key, cand.support), cand.dim)
                flats[cand.key] = cand
                nxt.append(cand)
        frontier = nxt
    return sorted(flats.values(), key=lambda f: (-f.dim, sorted(f.support)))


def mobius_from_bottom(flats: list[Flat]) -> dict:
    """mu(R^n, X) for every flat X, keyed by flat key."""
    mu = {}
    for x in flats:  # decreasing dimension, so predecessors come first
        if not x.support:
            mu[x.key] = 1
            continue
        mu[x.key] = -sum(mu[y.key] for y in flats if y.dim > x.dim and y.support < x.support)
    return mu


def charpoly_via_mobius(arr: Arrangement, max_hyperplanes: int = MOBIUS_MAX_HYPERPLANES) -> IntPolynomial:
    flats = intersection_poset(arr, max_hyperplanes)
    mu = mobius_from_bottom(flats)
    coeffs = [0] * (arr.n + 1)
    for x in flats:
        coeffs[x.dim] += mu[x.key]
    return IntPolynomial(tuple(coeffs))


# --------------------------------------------------------------------------
# Zaslavsky


def zaslavsky_regions(chi: IntPolynomial, n: int) -> int:
    return (-1) ** n * chi(-1)


def zaslavsky_rel_bounded(chi: IntPolynomial, r: int) -> int:
    return (-1) ** r * chi(1)
