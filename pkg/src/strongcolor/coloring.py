"""Strong colorings: the verifier, the P_t recursion and the 5-color pipeline.

A coloring is a plain ``dict`` mapping every ground-set vertex to a color
``>= 1``. A coloring is c-strong when each edge e sees at least
``min(|e|, c)`` distinct colors.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from strongcolor.errors import InternalVerificationError, MissingVertexError, PreconditionError
from strongcolor.setfam import (
    Edge,
    Hypergraph,
    Triple,
    find_min_union_empty_triple,
    intersecting_witness,
    minimal_edges,
    property_pt_witness,
)

Coloring = dict[int, int]


@dataclass
class Trace:
    path: str
    case_id: Optional[int] = None
    swapped: bool = False
    final_case_id: Optional[int] = None
    chosen_triple: Optional[list[Edge]] = None


@dataclass
class ColoringReport:
    valid: bool
    strength: int
    colors_used: int
    failing_edges: list[tuple[Edge, int]] = field(default_factory=list)
    trace: Optional[Trace] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["failing_edges"] = [{"edge": list(e), "distinct_colors": n} for e, n in self.failing_edges]
        if self.trace is not None and self.trace.chosen_triple is not None:
            d["trace"]["chosen_triple"] = [list(e) for e in self.trace.chosen_triple]
        return d


def verify_strong(H: Hypergraph, C: Coloring, c: int) -> ColoringReport:
    """Check that every edge of ``H`` gets at least ``min(|e|, c)`` colors under ``C``."""
    for v in H.vertices:
        if v not in C:
            raise MissingVertexError(v)
    failing = []
    for e in H.edges:
        seen = len({C[v] for v in e})
        if seen < min(len(e), c):
            failing.append((e, seen))
    used = len({C[v] for v in H.vertices})
    return ColoringReport(valid=not failing, strength=c, colors_used=used, failing_edges=failing)


def _check(H, C, c, max_colors, what):
    report = verify_strong(H, C, c)
    if not report.valid:
        raise InternalVerificationError(
            f"{what} produced a coloring that is not {c}-strong", report.failing_edges
        )
    if report.colors_used > max_colors:
        raise InternalVerificationError(
            f"{what} used {report.colors_used} colors, bound is {max_colors}"
        )
    return report


def _rainbow(edge, palette):
    # round-robin over 1..palette along the sorted edge
    return {v: i % palette + 1 for i, v in enumerate(sorted(edge))}


# ---------------------------------------------------------------------------
# P_t recursion


def _lemma(vertices: tuple[int, ...], edges: list[frozenset[int]], t: int) -> Coloring:
    """Colors from 1..t+1; assumes the family has property P_t.

    Besides being t-strong, whenever every edge has at least t vertices and the
    ground set itself is an edge, that edge receives ``min(|V|, t+1)`` colors.
    This is what the enclosing level needs for its minimal edge.
    """
    distinct = sorted(set(edges), key=lambda e: (len(e), sorted(e)))
    if not distinct:
        return dict.fromkeys(vertices, 1)
    C = dict.fromkeys(vertices, t + 1)
    e0 = distinct[0]
    if len(distinct) == 1:
        C.update(_rainbow(e0, min(len(e0), t + 1)))
        return C
    inner = sorted(e0)
    if t == 2:
        C.update(dict.fromkeys(inner, 2))
        C[inner[0]] = 1
        if len(e0) == 1:
            outside = [v for v in vertices if v not in e0]
            if outside:
                C[outside[0]] = 2
        return C
    C.update(_lemma(tuple(inner), [h & e0 for h in distinct], t - 1))
    return C


def lemma_coloring(H: Hypergraph, t: int) -> Coloring:
    """t-strong coloring with at most t+1 colors of a family with property P_t.

    Recursion: take the first containment-minimal edge e0, give every vertex
    outside it color t+1, and color e0 by recursing at strength t-1 on the
    traces ``h & e0``. At t = 2, e0 gets color 1 on its first vertex and 2 on
    the rest.

    Raises
    ------
    PreconditionError
        If ``H`` lacks property P_t; the witness is the offending edge group.
    InternalVerificationError
        If the result fails verification (a defect, never expected).
    """
    if t < 2:
        raise ValueError(f"lemma coloring needs t >= 2, got {t}")
    witness = property_pt_witness(H, t)
    if witness is not None:
        raise PreconditionError(
            f"hypergraph does not have property P_{t}: {len(witness)} edges meet in "
            f"fewer than {t + 1 - len(witness)} vertices",
            witness,
        )
    C = _lemma(H.vertices, list(H.edge_sets), t)
    _check(H, C, t, t + 1, "lemma coloring")
    return C


# ---------------------------------------------------------------------------
# Five-color pipeline for 2-intersecting families


@dataclass(frozen=True)
class LabeledTriple:
    """A triple with roles assigned: ``positions[r]`` is the triple slot playing e_{r+1}."""

    triple: Triple
    case_id: int
    positions: tuple[int, int, int]

    def role(self, r: int) -> frozenset[int]:
        return self.triple.edges[self.positions[r - 1]]

    def private(self, r: int) -> frozenset[int]:
        return self.triple.privates[self.positions[r - 1]]

    def edge_index(self, r: int) -> int:
        return self.triple.indices[self.positions[r - 1]]

    @property
    def e1(self):
        return self.role(1)

    @property
    def e2(self):
        return self.role(2)

    @property
    def e3(self):
        return self.role(3)

    @property
    def X(self) -> frozenset[int]:
        return self.triple.union_


_CASE_BY_PRIVATE_COUNT = {3: 1, 2: 2, 1: 3, 0: 4}


def relabel_triple(T: Triple) -> LabeledTriple:
    """Pick the case from the number of non-empty private parts and assign roles.

    Case 2 moves the edge without a private part into role e2; Case 3 moves the
    only edge with one into role e2. Other roles keep canonical order.
    """
    nonempty = [bool(p) for p in T.privates]
    case_id = _CASE_BY_PRIVATE_COUNT[sum(nonempty)]
    if case_id == 2:
        middle = nonempty.index(False)
    elif case_id == 3:
        middle = nonempty.index(True)
    else:
        return LabeledTriple(T, case_id, (0, 1, 2))
    rest = [s for s in range(3) if s != middle]
    return LabeledTriple(T, case_id, (rest[0], middle, rest[1]))


def color_X(L: LabeledTriple) -> Coloring:
    """Color the union of the triple.

    Private parts of e1, e2, e3 get 1, 2, 3. In e1&e3 the smallest vertex gets
    1 and the rest 3; in e1&e2 the smallest gets 2 and the rest 4; all of
    e2&e3 gets 5.
    """
    e1, e2, e3 = L.e1, L.e2, L.e3
    i13, i12 = sorted(e1 & e3), sorted(e1 & e2)
    if len(i13) < 2 or len(i12) < 2:
        raise PreconditionError(
            "triple edges meet in fewer than two vertices; input is not 2-intersecting",
            [tuple(sorted(e1)), tuple(sorted(e3 if len(i13) < 2 else e2))],
        )
    C: Coloring = {}
    for r in (1, 2, 3):
        C.update(dict.fromkeys(L.private(r), r))
    C.update(dict.fromkeys(i13, 3))
    C[i13[0]] = 1
    C.update(dict.fromkeys(i12, 4))
    C[i12[0]] = 2
    C.update(dict.fromkeys(e2 & e3, 5))
    return C


def greedy_outside_case1(H: Hypergraph, partial: Coloring, X) -> Coloring:
    """Extend a coloring of X to all of V with colors 1 and 2, one vertex at a time.

    Vertices outside X go in ascending order. A vertex gets 1 when it is the
    last uncolored vertex of some edge whose other vertices only use colors 2
    and 3; otherwise it gets 2. The order matters, so this must stay sequential.
    """
    C = dict(partial)
    by_vertex: dict[int, list[Edge]] = {}
    for e in H.edges:
        for v in e:
            by_vertex.setdefault(v, []).append(e)
    for w in H.vertices:
        if w in X:
            continue
        closes_23 = any(
            all(u in C and C[u] in (2, 3) for u in f if u != w) for f in by_vertex.get(w, ())
        )
        C[w] = 1 if closes_23 else 2
    return C


def case3_detect_swap(H: Hypergraph, L: LabeledTriple, C: Coloring) -> Optional[Triple]:
    """Look for an edge colored only with 2 and 3 in a tentative Case 3 coloring.

    If there is one, f, the triple (f, e2, e3) has the same union as the old
    one and at least two private parts, so it replaces the old triple.
    """
    for idx, f in enumerate(H.edges):
        if all(C[v] in (2, 3) for v in f):
            break
    else:
        return None
    indices = sorted((idx, L.edge_index(2), L.edge_index(3)))
    new = Triple.of(H, *indices)
    assert new.union_ == L.X, "swapped triple must keep the union"
    assert sum(1 for p in new.privates if p) >= 2, "swapped triple needs two private parts"
    return new


def _color_from_triple(G: Hypergraph, L: LabeledTriple) -> Coloring:
    C = color_X(L)
    if L.case_id == 1:
        return greedy_outside_case1(G, C, L.X)
    fill = 2 if L.case_id == 2 else 1
    for v in G.vertices:
        C.setdefault(v, fill)
    return C


def theorem_coloring(H: Hypergraph) -> tuple[Coloring, ColoringReport]:
    """3-strong coloring with at most five colors of a 2-intersecting hypergraph.

    Families where every three edges meet go through :func:`lemma_coloring`
    at t = 3 (at most four colors). Otherwise the smallest-union triple with
    empty intersection is colored and the rest of the vertices are filled in
    according to how many of its edges have private vertices.

    Raises
    ------
    PreconditionError
        If two edges share fewer than two vertices.
    InternalVerificationError
        If the final coloring fails verification (a defect, never expected).
    """
    witness = intersecting_witness(H, 2)
    if witness is not None:
        raise PreconditionError("hypergraph is not 2-intersecting", witness)

    if not H.edges:
        C = dict.fromkeys(H.vertices, 1)
        trace = Trace("trivial")
    elif len(H.edges) == 1:
        C = dict.fromkeys(H.vertices, 1)
        C.update(_rainbow(H.edges[0], 3))
        trace = Trace("trivial")
    else:
        G = minimal_edges(H)
        first = G.edges[0]
        if len(first) == 2:
            # a 2-vertex edge lies inside every other edge, so it is the only minimal one
            C = dict.fromkeys(H.vertices, 3)
            C[first[0]], C[first[1]] = 1, 2
            trace = Trace("size2-minimal")
        else:
            C, trace = _reduced_coloring(G)

    report = _check(H, C, 3, 5, "theorem coloring")
    if trace.path == "lemma" and report.colors_used > 4:
        raise InternalVerificationError(f"lemma path used {report.colors_used} colors")
    report.trace = trace
    return C, report


def _reduced_coloring(G: Hypergraph) -> tuple[Coloring, Trace]:
    T = find_min_union_empty_triple(G)
    if T is None:
        return lemma_coloring(G, 3), Trace("lemma")
    L = relabel_triple(T)
    C = _color_from_triple(G, L)
    swapped = False
    case_id = L.case_id
    if case_id == 3:
        new = case3_detect_swap(G, L, C)
        if new is not None:
            swapped = True
            L = relabel_triple(new)
            assert L.case_id in (1, 2), f"swap landed in case {L.case_id}"
            C = _color_from_triple(G, L)
    trace = Trace(
        "triple",
        case_id=case_id,
        swapped=swapped,
        final_case_id=L.case_id,
        chosen_triple=L.triple.as_tuples(),
    )
    return C, trace
