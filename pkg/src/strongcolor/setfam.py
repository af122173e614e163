"""Hypergraph representation and the set-family predicates used by the colorings.

Edges are kept as sorted vertex tuples in canonical order (size, then
lexicographic). Every "pick an edge" step downstream uses that order, so all
results are deterministic. Intersections run on int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, ...]


def canonical_key(edge: Edge) -> tuple[int, Edge]:
    return (len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    """A ground set of integer vertices with a family of non-empty edges.

    Use :meth:`from_edges` to build one; it deduplicates and sorts. Vertices
    covered by no edge are allowed and still get colored.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be strictly increasing")
        if any(v < 0 for v in self.vertices):
            raise ValueError("vertex ids must be non-negative")
        ground = set(self.vertices)
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not a sorted vertex tuple")
            if not ground.issuperset(e):
                raise ValueError(f"edge {e} is not inside the ground set")
        if list(self.edges) != sorted(set(self.edges), key=canonical_key):
            raise ValueError("edges must be deduplicated and in canonical order")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()) -> "Hypergraph":
        es = {tuple(sorted(set(e))) for e in edges}
        ground = set(vertices)
        for e in es:
            ground.update(e)
        return cls(tuple(sorted(ground)), tuple(sorted(es, key=canonical_key)))

    def __len__(self):
        return len(self.edges)

    @cached_property
    def bit(self) -> dict[int, int]:
        """Vertex id -> single-bit mask."""
        return {v: 1 << i for i, v in enumerate(self.vertices)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        bit = self.bit
        return tuple(reduce(int.__or__, (bit[v] for v in e), 0) for e in self.edges)

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    def mask_of(self, vs: Iterable[int]) -> int:
        bit = self.bit
        return reduce(int.__or__, (bit[v] for v in vs), 0)

    def unmask(self, mask: int) -> frozenset[int]:
        return frozenset(v for v in self.vertices if self.bit[v] & mask)

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Same ground set, different edge family."""
        return Hypergraph.from_edges(edges, self.vertices)


@dataclass(frozen=True)
class Triple:
    """Three edges of a hypergraph with empty common intersection.

    ``i, j, k`` index ``H.edges``; ``intersections`` holds e_i&e_j, e_i&e_k,
    e_j&e_k and ``privates`` the vertices lying in exactly one of the three.
    """

    i: int
    j: int
    k: int
    edges: tuple[frozenset[int], frozenset[int], frozenset[int]]
    union_: frozenset[int] = field(init=False)
    intersections: tuple[frozenset[int], frozenset[int], frozenset[int]] = field(init=False)
    privates: tuple[frozenset[int], frozenset[int], frozenset[int]] = field(init=False)

    def __post_init__(self):
        a, b, c = self.edges
        if a & b & c:
            raise ValueError("triple has a common vertex")
        object.__setattr__(self, "union_", a | b | c)
        object.__setattr__(self, "intersections", (a & b, a & c, b & c))
        object.__setattr__(self, "privates", (a - b - c, b - a - c, c - a - b))

    @classmethod
    def of(cls, H: Hypergraph, i: int, j: int, k: int) -> "Triple":
        es = H.edge_sets
        return cls(i, j, k, (es[i], es[j], es[k]))

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def as_tuples(self) -> list[Edge]:
        return [tuple(sorted(e)) for e in self.edges]


def intersecting_witness(H: Hypergraph, t: int) -> Optional[tuple[Edge, Edge]]:
    """First pair of edges (canonical order) sharing fewer than t vertices."""
    ms = H.masks
    for a, b in combinations(range(len(ms)), 2):
        if (ms[a] & ms[b]).bit_count() < t:
            return (H.edges[a], H.edges[b])
    return None


def is_t_intersecting(H: Hypergraph, t: int) -> bool:
    return intersecting_witness(H, t) is None


def property_pt_witness(H: Hypergraph, t: int) -> Optional[tuple[Edge, ...]]:
    """First group of i edges (2 <= i <= t) whose common part is below t+1-i."""
    if t < 2:
        raise ValueError(f"property P_t needs t >= 2, got {t}")
    ms = H.masks
    for i in range(2, t + 1):
        need = t + 1 - i
        for group in combinations(range(len(ms)), i):
            common = reduce(int.__and__, (ms[g] for g in group))
            if common.bit_count() < need:
                return tuple(H.edges[g] for g in group)
    return None


def has_property_pt(H: Hypergraph, t: int) -> bool:
    return property_pt_witness(H, t) is None


def minimal_edges(H: Hypergraph) -> Hypergraph:
    """Keep only the containment-minimal edges; the ground set is unchanged."""
    ms = H.masks
    keep = []
    for a, ma in enumerate(ms):
        # a proper subset is strictly smaller, so it sits earlier in canonical order
        if not any(ms[b] & ma == ms[b] for b in range(a) if len(H.edges[b]) < len(H.edges[a])):
            keep.append(H.edges[a])
    return Hypergraph(H.vertices, tuple(keep))


def find_min_union_empty_triple(H: Hypergraph) -> Optional[Triple]:
    """Empty-intersection triple of minimum union size, or None if none exists.

    Ties go to the lexicographically smallest index triple. The scan is
    exhaustive with pruning on the running best union size.
    """
    ms = H.masks
    m = len(ms)
    best = None
    best_size = len(H.vertices) + 1
    for a in range(m):
        for b in range(a + 1, m):
            ab_union = ms[a] | ms[b]
            if ab_union.bit_count() >= best_size:
                continue
            ab_common = ms[a] & ms[b]
            for c in range(b + 1, m):
                if ab_common & ms[c]:
                    continue
                size = (ab_union | ms[c]).bit_count()
                if size < best_size:
                    best, best_size = (a, b, c), size
    if best is None:
        return None
    return Triple.of(H, *best)


def private_parts(T: Triple) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    return T.privates
