import itertools
from math import comb

import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_partitions(n):
    """Set partitions of [n] by inserting each element into an existing block
    or a new one; independent of the restricted-growth enumerator."""
    parts = [[]]
    for x in range(1, n + 1):
        nxt = []
        for p in parts:
            for i in range(len(p)):
                nxt.append([b + [x] if k == i else list(b) for k, b in enumerate(p)])
            nxt.append([list(b) for b in p] + [[x]])
        parts = nxt
    return [tuple(tuple(b) for b in p) for p in parts]


def brute_arcs(blocks):
    return sorted((b[i], b[i + 1]) for b in blocks for i in range(len(b) - 1))


def bell(n):
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def brute_complement(arr, p):
    """Full sweep of F_p^n, no pruning and no translation trick."""
    total = 0
    for v in itertools.product(range(p), repeat=arr.n):
        if all((sum(a * x for a, x in zip(h.a, v)) - h.b) % p for h in arr):
            total += 1
    return total


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def whitney_charpoly(arr):
    """Coefficient list of chi via Whitney's subset expansion:
    sum over consistent subsets S of (-1)^|S| p^(n - rank S)."""
    from shiish.linalg import rank

    coeffs = [0] * (arr.n + 1)
    hs = list(arr)
    for size in range(len(hs) + 1):
        for sub in itertools.combinations(hs, size):
            r = rank([h.a for h in sub]) if sub else 0
            if sub and rank([list(h.a) + [h.b] for h in sub]) != r:
                continue
            coeffs[arr.n - r] += (-1) ** size
    return coeffs
