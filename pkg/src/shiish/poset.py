"""Finite posets given by an explicit element list and a ``leq`` predicate."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence


class Poset:
    def __init__(self, elements: Sequence, leq: Callable):
        self.elements = list(elements)
        self.leq = leq

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def is_partial_order(self) -> bool:
        els = self.elements
        if not all(self.leq(x, x) for x in els):
            return False
        for x in els:
            for y in els:
                if x != y and self.leq(x, y) and self.leq(y, x):
                    return False
                for z in els:
                    if self.leq(x, y) and self.leq(y, z) and not self.leq(x, z):
                        return False
        return True

    def antichains(self) -> Iterator[tuple]:
        """All antichains, each in element-list order, lexicographically."""
        els = self.elements

        def rec(start, chosen):
            yield tuple(chosen)
            for i in range(start, len(els)):
                x = els[i]
                if all(not self.comparable(x, y) for y in chosen):
                    chosen.append(x)
                    yield from rec(i + 1, chosen)
                    chosen.pop()

        yield from rec(0, [])

    def down_closure(self, gens) -> frozenset:
        return frozenset(x for x in self.elements if any(self.leq(x, g) for g in gens))

    def up_closure(self, gens) -> frozenset:
        return frozenset(x for x in self.elements if any(self.leq(g, x) for g in gens))

    def maximal(self, subset) -> frozenset:
        return frozenset(x for x in subset if not any(self.lt(x, y) for y in subset))

    def minimal(self, subset) -> frozenset:
        return frozenset(x for x in subset if not any(self.lt(y, x) for y in subset))

    def is_ideal(self, subset) -> bool:
        return all(y in subset for x in subset for y in self.elements if self.leq(y, x))

    def is_filter(self, subset) -> bool:
        return all(y in subset for x in subset for y in self.elements if self.leq(x, y))
