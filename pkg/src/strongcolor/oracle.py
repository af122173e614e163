"""Exact backtracking search for c-strong colorings with a bounded palette.

Vertices are visited by descending degree. A vertex may only take a color at
most one above the largest color used so far, which removes palette
permutations without losing solutions. A branch is cut as soon as some edge
touching the new vertex can no longer reach ``min(|e|, strength)`` colors.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from strongcolor.coloring import Coloring, verify_strong
from strongcolor.errors import BudgetExhausted, OracleSizeError
from strongcolor.setfam import Hypergraph

MAX_VERTICES = 16
BUDGET_ENV = "STRONGCOLOR_ORACLE_BUDGET"
DEFAULT_BUDGET = 50_000_000


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class OracleResult:
    strength: int
    min_colors: Optional[int]
    witness: Optional[Coloring]
    explored: int

    def to_dict(self) -> dict:
        return {
            "strength": self.strength,
            "min_colors": self.min_colors,
            "witness": None if self.witness is None else {str(v): c for v, c in sorted(self.witness.items())},
            "explored": self.explored,
        }


class _Search:
    def __init__(self, H: Hypergraph, strength: int, k: int, budget: int):
        degree = {v: 0 for v in H.vertices}
        for e in H.edges:
            for v in e:
                degree[v] += 1
        self.order = sorted(H.vertices, key=lambda v: (-degree[v], v))
        pos = {v: i for i, v in enumerate(self.order)}
        # edges as position lists, with the required color count
        self.edges = [([pos[v] for v in e], min(len(e), strength)) for e in H.edges]
        self.touching = [[] for _ in self.order]
        for idx, (e, _) in enumerate(self.edges):
            for p in e:
                self.touching[p].append(idx)
        self.k = k
        self.budget = budget
        self.explored = 0
        self.colors = [0] * len(self.order)

    def feasible(self, p: int) -> bool:
        colors = self.colors
        for idx in self.touching[p]:
            e, need = self.edges[idx]
            seen = set()
            free = 0
            for q in e:
                if colors[q]:
                    seen.add(colors[q])
                else:
                    free += 1
            if len(seen) + min(free, self.k - len(seen)) < need:
                return False
        return True

    def run(self, p: int = 0, top: int = 0) -> bool:
        if p == len(self.order):
            return True
        for c in range(1, min(top + 1, self.k) + 1):
            self.explored += 1
            if self.explored > self.budget:
                raise BudgetExhausted(
                    f"oracle node budget of {self.budget} exhausted", explored=self.explored
                )
            self.colors[p] = c
            if self.feasible(p) and self.run(p + 1, max(top, c)):
                return True
        self.colors[p] = 0
        return False


def _guard(H: Hypergraph, max_vertices: int):
    if len(H.vertices) > max_vertices:
        raise OracleSizeError(
            f"oracle is limited to {max_vertices} vertices, got {len(H.vertices)}"
        )


def _exists(H, strength, k, budget):
    search = _Search(H, strength, k, budget)
    if not search.run():
        return None, search.explored
    return {v: search.colors[i] for i, v in enumerate(search.order)}, search.explored


def oracle_exists_coloring(
    H: Hypergraph,
    strength: int,
    k: int,
    *,
    max_vertices: int = MAX_VERTICES,
    budget: Optional[int] = None,
) -> Optional[Coloring]:
    """A ``strength``-strong coloring of ``H`` with at most ``k`` colors, or None.

    None is returned only after the search space is exhausted. Running out of
    ``budget`` nodes raises :class:`BudgetExhausted` instead.
    """
    if k < 1:
        raise ValueError("k must be positive")
    _guard(H, max_vertices)
    witness, _ = _exists(H, strength, k, default_budget() if budget is None else budget)
    return witness


def oracle_min_colors(
    H: Hypergraph,
    strength: int,
    max_colors: int,
    *,
    max_vertices: int = MAX_VERTICES,
    budget: Optional[int] = None,
) -> OracleResult:
    """Smallest palette size admitting a ``strength``-strong coloring, up to ``max_colors``.

    Tries k = 1, 2, ... in turn. ``budget`` caps the total number of search
    nodes over all k.
    """
    _guard(H, max_vertices)
    remaining = default_budget() if budget is None else budget
    explored = 0
    for k in range(1, max_colors + 1):
        try:
            witness, n = _exists(H, strength, k, remaining)
        except BudgetExhausted as exc:
            raise BudgetExhausted(str(exc), explored=explored + exc.explored) from None
        explored += n
        remaining -= n
        if witness is not None:
            assert verify_strong(H, witness, strength).valid
            return OracleResult(strength, k, witness, explored)
    return OracleResult(strength, None, None, explored)
