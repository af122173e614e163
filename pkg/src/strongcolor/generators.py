"""Instance generators: named tightness families and seeded random families.

Random families use rejection sampling with Python's ``random.Random``
(Mersenne Twister). Attempt ``a`` under seed ``s`` draws from its own stream
seeded by a BLAKE2b digest of ``(s, a)``, so the corpus does not depend on
how many attempts earlier calls consumed.
"""

from __future__ import annotations

import hashlib
import random
from itertools import combinations
from typing import Optional

from strongcolor.errors import GenerationError
from strongcolor.setfam import Hypergraph, is_t_intersecting

PRNG_ID = "python-random-mt19937/blake2b-subseed-v1"
FAMILIES = (
    "complete_uniform",
    "sunflower",
    "apex_clique",
    "random_2_intersecting",
    "random_intersecting",
)
MAX_RANDOM_N = 16
MAX_ATTEMPTS = 20_000


def _ensure(ok, message):
    if not ok:
        raise ValueError(message)


def gen_complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of {1..n}."""
    _ensure(1 <= k <= n <= 20, f"need 1 <= k <= n <= 20, got n={n}, k={k}")
    return Hypergraph.from_edges(combinations(range(1, n + 1), k))


def gen_sunflower(core_size: int, petals: int, petal_size: int, allow_empty: bool = False) -> Hypergraph:
    """Core {1..core_size} plus ``petals`` pairwise disjoint petals numbered after it."""
    _ensure(2 <= core_size <= 32, f"core_size must be in 2..32, got {core_size}")
    _ensure(1 <= petal_size <= 32, f"petal_size must be in 1..32, got {petal_size}")
    _ensure(0 <= petals <= 64, f"petals must be in 0..64, got {petals}")
    if petals == 0 and not allow_empty:
        raise ValueError("a sunflower with no petals has no edges")
    core = list(range(1, core_size + 1))
    edges = []
    nxt = core_size + 1
    for _ in range(petals):
        edges.append(core + list(range(nxt, nxt + petal_size)))
        nxt += petal_size
    H = Hypergraph.from_edges(edges, core if petals == 0 else ())
    assert is_t_intersecting(H, 2)
    return H


def gen_apex_clique(k: int) -> Hypergraph:
    """Edges {0, a, b} for all pairs a < b in {1..k+1}: K_{k+1} with a common apex."""
    _ensure(2 <= k <= 8, f"k must be in 2..8, got {k}")
    H = Hypergraph.from_edges((0, a, b) for a, b in combinations(range(1, k + 2), 2))
    # K_3 plus apex is still 2-intersecting; from K_4 on it is not
    assert is_t_intersecting(H, 1) and is_t_intersecting(H, 2) == (k == 2)
    return H


def subseed_rng(seed: int, attempt: int) -> random.Random:
    digest = hashlib.blake2b(f"{seed}:{attempt}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _draw_family(rng, n, m, min_size, max_size):
    universe = range(1, n + 1)
    return [rng.sample(universe, rng.randint(min_size, max_size)) for _ in range(m)]


def _check_random_params(n, m, min_size, max_size, seed, smallest):
    _ensure(1 <= n <= MAX_RANDOM_N, f"n must be in 1..{MAX_RANDOM_N}, got {n}")
    _ensure(m >= 1, f"m must be positive, got {m}")
    _ensure(smallest <= min_size <= max_size <= n, f"need {smallest} <= min_size <= max_size <= n")
    _ensure(0 <= seed < 2**64, "seed must be a 64-bit unsigned integer")


def _rejection(n, m, min_size, max_size, seed, attempts, accept, what):
    for attempt in range(attempts):
        edges = _draw_family(subseed_rng(seed, attempt), n, m, min_size, max_size)
        H = Hypergraph.from_edges(edges, range(1, n + 1))
        if accept(H):
            return H
    raise GenerationError(
        f"no {what} family after {attempts} attempts (n={n}, m={m}, sizes "
        f"{min_size}..{max_size}); loosen the parameters, e.g. larger edges or fewer of them"
    )


def gen_random_2_intersecting(
    n: int, m: int, min_size: int, max_size: int, seed: int, attempts: int = MAX_ATTEMPTS
) -> Hypergraph:
    """Draw ``m`` random edges until the family is 2-intersecting.

    Duplicate draws collapse, so the result may have fewer than ``m`` edges.
    The ground set is always {1..n}.
    """
    _check_random_params(n, m, min_size, max_size, seed, 2)
    return _rejection(
        n, m, min_size, max_size, seed, attempts, lambda H: is_t_intersecting(H, 2), "2-intersecting"
    )


def gen_random_intersecting(
    n: int, m: int, min_size: int, max_size: int, seed: int, attempts: int = MAX_ATTEMPTS
) -> Hypergraph:
    """Like :func:`gen_random_2_intersecting` but only pairwise intersecting, edges of size >= 2."""
    _check_random_params(n, m, min_size, max_size, seed, 2)
    return _rejection(
        n, m, min_size, max_size, seed, attempts, lambda H: is_t_intersecting(H, 1), "intersecting"
    )


def generate(family: str, params: list[int], seed: Optional[int] = None) -> Hypergraph:
    """Dispatch on a family name with positional integer parameters."""
    family = family.replace("-", "_")
    if family == "complete_uniform":
        return gen_complete_uniform(*_arity(family, params, 2))
    if family == "sunflower":
        return gen_sunflower(*_arity(family, params, 3))
    if family == "apex_clique":
        return gen_apex_clique(*_arity(family, params, 1))
    if family in ("random_2_intersecting", "random_intersecting"):
        n, m, lo, hi = _arity(family, params, 4)
        fn = gen_random_2_intersecting if family == "random_2_intersecting" else gen_random_intersecting
        return fn(n, m, lo, hi, 0 if seed is None else seed)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _arity(family, params, n):
    if len(params) != n:
        raise ValueError(f"{family} takes {n} integer parameters, got {len(params)}")
    return params


# ---------------------------------------------------------------------------
# Branch witnesses

TARGETS = ("trivial", "size2-minimal", "lemma", "1", "2", "3", "4", "case3-swap")

# parameter rotation for the random phase; all accept quickly and mix every case
_WITNESS_SETTINGS = (
    (9, 5, 4, 6),
    (10, 6, 5, 7),
    (10, 8, 5, 7),
    (11, 6, 5, 7),
    (11, 8, 5, 8),
    (12, 8, 6, 8),
    (12, 12, 6, 9),
)
_SMALL_N = 6


def trace_matches(trace, target: str) -> bool:
    target = str(target)
    if target == "case3-swap":
        return trace.swapped
    if target in ("1", "2", "3", "4"):
        return trace.path == "triple" and trace.case_id == int(target) and not trace.swapped
    return trace.path == target


def _small_families():
    """Families of one to three edges on {1..6}, edges of size >= 2."""
    subsets = [s for k in range(2, _SMALL_N + 1) for s in combinations(range(1, _SMALL_N + 1), k)]
    for r in (1, 2, 3):
        for family in combinations(subsets, r):
            yield family


def find_branch_witness(target, budget: int = 50_000, seed: int = 0) -> Optional[Hypergraph]:
    """Search for an instance that drives the 5-color pipeline down ``target``.

    ``target`` is one of ``TARGETS`` (case ids may be given as ints). The
    first half of the budget enumerates small families exhaustively, the
    rest draws seeded random 2-intersecting families. Returns None when the
    budget runs out.
    """
    from strongcolor.coloring import theorem_coloring

    target = str(target)
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    spent = 0
    for family in _small_families():
        if spent >= budget // 2:
            break
        spent += 1
        H = Hypergraph.from_edges(family)
        if not is_t_intersecting(H, 2):
            continue
        if trace_matches(theorem_coloring(H)[1].trace, target):
            return H
    attempt = 0
    while spent < budget:
        n, m, lo, hi = _WITNESS_SETTINGS[attempt % len(_WITNESS_SETTINGS)]
        sub = int.from_bytes(hashlib.blake2b(f"witness:{seed}:{attempt}".encode(), digest_size=8).digest(), "big")
        attempt += 1
        spent += 1
        try:
            H = gen_random_2_intersecting(n, m, lo, hi, sub, attempts=200)
        except GenerationError:
            continue
        if trace_matches(theorem_coloring(H)[1].trace, target):
            return H
    return None
