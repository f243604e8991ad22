"""Univariate integer polynomials in p, stored low degree first."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The factor (p - root)."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "var": "p"}

    def __str__(self) -> str:
        terms = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            mag = abs(c)
            body = "p" if deg == 1 else f"p^{deg}" if deg > 1 else ""
            text = body if mag == 1 and body else f"{mag}{body}"
            if not terms:
                terms.append(("-" if c < 0 else "") + text)
            else:
                terms.append(("- " if c < 0 else "+ ") + text)
        return " ".join(terms) if terms else "0"

    def factored(self) -> str:
        """Best-effort factorization: integer roots pulled out, rest verbatim."""
        roots, rest = integer_roots(self)
        if not roots:
            return str(self)
        parts = []
        for r in sorted(set(roots), key=lambda r: (r != 0, abs(r), r)):
            mult = roots.count(r)
            base = "p" if r == 0 else f"(p - {r})" if r > 0 else f"(p + {-r})"
            parts.append(base + (f"^{mult}" if mult > 1 else ""))
        if rest.degree > 0:
            parts.append(f"({rest})")
        lead = "" if rest.degree > 0 or rest.coeffs[0] == 1 else ("-" if rest.coeffs[0] == -1 else str(rest.coeffs[0]))
        return lead + "".join(parts)


def _divide_linear(f: IntPolynomial, root: int) -> IntPolynomial:
    """Synthetic division of f by (p - root); caller guarantees exactness."""
    out = []
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * root + c
        out.append(acc)
    assert out[-1] == 0
    return IntPolynomial(tuple(reversed(out[:-1])))


def integer_roots(f: IntPolynomial) -> tuple[list[int], IntPolynomial]:
    """Integer roots of f with multiplicity, and the remaining cofactor."""
    roots: list[int] = []
    while f.degree > 0 and f.coeffs[0] == 0:
        roots.append(0)
        f = IntPolynomial(f.coeffs[1:])
    changed = True
    while changed and f.degree > 0:
        changed = False
        c0 = abs(f.coeffs[0])
        for d in _divisors(c0):
            for r in (d, -d):
                if f(r) == 0:
                    roots.append(r)
                    f = _divide_linear(f, r)
                    changed = True
                    break
            if changed:
                break
    return roots, f


def _divisors(m: int) -> list[int]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def falling(start: int, stop: int) -> IntPolynomial:
    """(p - start)(p - start - 1)...(p - stop); the empty product when start > stop."""
    out = IntPolynomial((1,))
    for r in range(start, stop + 1):
        out = out * IntPolynomial.linear(r)
    return out


def lagrange_interpolate(points) -> list[Fraction]:
    """Coefficients (low degree first) of the polynomial through ``points``."""
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    m = len(points)
    result = [Fraction(0)] * m
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            result[k] += c * scale
    return result
