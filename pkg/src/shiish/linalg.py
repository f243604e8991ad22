"""Exact row reduction over the rationals."""

from __future__ import annotations

from fractions import Fraction


def rref(rows) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row-echelon form with zero rows dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][col]
        m[pivot_row] = [x / piv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(row) for row in m[:pivot_row])


def rank(rows) -> int:
    return len(rref(rows))


def is_consistent(reduced) -> bool:
    """False iff an augmented RREF contains a row (0 ... 0 | c) with c != 0."""
    return not any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in reduced)
