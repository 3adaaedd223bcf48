"""Iteration counters for the solver phases, with their closed-form bounds.

Each counter records the exact number of innermost iterations a phase
performed; the bounds are the worst-case loop sizes for an instance with n
strings whose longest string has length c.  A counter exceeding its bound
means a loop runs outside its intended shape, so `violations` is checked by
the CLI whenever counters are requested.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Counters:
    pair_build: int = 0
    core_scan: int = 0
    dp_right: int = 0
    dp_left: int = 0
    composition: int = 0
    window_scan: int = 0

    NAMES = ("pair_build", "core_scan", "dp_right", "dp_left", "composition", "window_scan")

    @staticmethod
    def bounds(n: int, c: int) -> dict[str, int]:
        # window_scan covers the interior-absorption terms, whose inner
        # placement search has no tight polynomial shape; its bound is the
        # product of its loop ranges (anchor/interior-set choices, window
        # cells, placement tree) and is deliberately loose: cutoff and budget
        # pruning keep real runs far below it
        return {
            "pair_build": n * n * (2 * c) ** 2,
            "core_scan": n ** 3 * (3 * c) ** 2,
            "dp_right": n * n * 2 ** n,
            "dp_left": n * n * 2 ** n,
            "composition": n ** 3 * 2 ** n,
            "window_scan": n ** 4 * 3 ** n * (3 * c) ** 2 * c ** n,
        }

    def merge(self, other: "Counters") -> None:
        for name in self.NAMES:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def report(self, n: int, c: int) -> dict[str, dict[str, int]]:
        bounds = self.bounds(n, c)
        return {name: {"count": getattr(self, name), "bound": bounds[name]} for name in self.NAMES}

    def violations(self, n: int, c: int) -> list[str]:
        bounds = self.bounds(n, c)
        return [
            f"{name}: count {getattr(self, name)} exceeds bound {bounds[name]}"
            for name in self.NAMES
            if getattr(self, name) > bounds[name]
        ]
