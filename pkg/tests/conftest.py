import itertools
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from strongcolor import io
from strongcolor.generators import gen_random_2_intersecting
from strongcolor.setfam import Hypergraph

CORPUS_DIR = Path(__file__).parent / "data" / "corpus"


def corpus_paths():
    return sorted(CORPUS_DIR.glob("*.hg"))


def load_corpus():
    return {p.stem: io.read_hypergraph(p) for p in corpus_paths()}


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def H(*edges, vertices=()):
    return Hypergraph.from_edges(edges, vertices)


def distinct_counts(edges, C):
    """Independent recount of distinct colors per edge."""
    return [len(set(C[v] for v in e)) for e in edges]


def naive_exists(hg, strength, k):
    """Enumerate every map V -> {1..k} with numpy; True iff one is strength-strong.

    Deliberately shares nothing with the backtracking oracle.
    """
    n = len(hg.vertices)
    if not hg.edges:
        return True
    grid = np.array(list(itertools.product(range(1, k + 1), repeat=n)), dtype=np.int8).reshape(-1, n)
    col = {v: i for i, v in enumerate(hg.vertices)}
    ok = np.ones(len(grid), dtype=bool)
    for e in hg.edges:
        sub = np.sort(grid[:, [col[v] for v in e]], axis=1)
        distinct = 1 + (np.diff(sub, axis=1) != 0).sum(axis=1)
        ok &= distinct >= min(len(e), strength)
    return bool(ok.any())


def brute_min_union_triple(hg):
    best = None
    for a, b, c in itertools.combinations(range(len(hg.edges)), 3):
        ea, eb, ec = (set(hg.edges[x]) for x in (a, b, c))
        if ea & eb & ec:
            continue
        size = len(ea | eb | ec)
        if best is None or size < best[0]:
            best = (size, (a, b, c))
    return best


RANDOM_SETTINGS = [
    (8, 6, 4, 6),
    (9, 5, 4, 6),
    (10, 6, 5, 7),
    (10, 8, 5, 7),
    (11, 6, 5, 7),
    (12, 5, 5, 7),
    (12, 10, 7, 9),
    (14, 8, 7, 10),
    (14, 20, 8, 11),
    (14, 40, 9, 12),
]


@st.composite
def two_intersecting(draw):
    n, m, lo, hi = draw(st.sampled_from(RANDOM_SETTINGS[:8]))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    return gen_random_2_intersecting(n, m, lo, hi, seed)


@st.composite
def small_hypergraphs(draw, max_vertex=7, max_edges=7):
    edges = draw(
        st.lists(
            st.frozensets(st.integers(1, max_vertex), min_size=1, max_size=max_vertex),
            min_size=0,
            max_size=max_edges,
        )
    )
    return Hypergraph.from_edges(edges)


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
