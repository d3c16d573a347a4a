"""Shared helpers: seeded random tensors and hypergraphs.

All randomness is driven by explicit ``random.Random`` instances so every
test run sees the same instances.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement, permutations

import pytest

from hypersym import CubicalTensor, Hypergraph, is_connected


def random_symmetric_tensor(
    rng: random.Random,
    n: int,
    r: int,
    density: float = 0.5,
    lo: int = 0,
    hi: int = 3,
) -> CubicalTensor:
    """Random symmetric integer tensor; entries drawn per orbit of indices."""
    items = []
    for key in combinations_with_replacement(range(1, n + 1), r):
        if rng.random() < density:
            v = rng.randint(lo, hi)
            if v:
                for p in set(permutations(key)):
                    items.append((p, v))
    return CubicalTensor(r, n, items)


def random_tensor(
    rng: random.Random,
    n: int,
    r: int,
    density: float = 0.3,
    lo: int = -3,
    hi: int = 3,
) -> CubicalTensor:
    """Random (generally non-symmetric) integer tensor."""
    items = []
    for key in _all_indices(n, r):
        if rng.random() < density:
            v = rng.randint(lo, hi)
            if v:
                items.append((key, v))
    return CubicalTensor(r, n, items)


def _all_indices(n: int, r: int):
    idx = [1] * r
    while True:
        yield tuple(idx)
        pos = r - 1
        while pos >= 0 and idx[pos] == n:
            idx[pos] = 1
            pos -= 1
        if pos < 0:
            return
        idx[pos] += 1


def random_hypergraph(
    rng: random.Random, n: int, r: int, density: float = 0.3
) -> Hypergraph:
    """Random r-uniform hypergraph on [n] with each r-set kept independently."""
    edges = [e for e in combinations(range(1, n + 1), r) if rng.random() < density]
    return Hypergraph(r, n, edges)


def random_graph_with_odd_transversal(
    rng: random.Random, n: int, r: int, max_tries: int = 200
) -> tuple[Hypergraph, frozenset[int]]:
    """Connected r-uniform graph built so a chosen X meets every edge oddly.

    Picks a random nonempty X, keeps only candidate edges with odd |e ∩ X|,
    and rejection-samples edge subsets until the graph is connected and
    spans all n vertices.
    """
    if r % 2:
        raise ValueError("only even r admits this construction")
    for _ in range(max_tries):
        size = rng.randint(1, n)
        x = frozenset(rng.sample(range(1, n + 1), size))
        candidates = [
            e for e in combinations(range(1, n + 1), r) if len(set(e) & x) % 2 == 1
        ]
        if not candidates:
            continue
        density = min(1.0, max(0.25, 3.0 / max(1, len(candidates) / n)))
        edges = [e for e in candidates if rng.random() < density]
        if not edges:
            continue
        g = Hypergraph(r, n, edges)
        covered = set()
        for e in g.edges:
            covered.update(e)
        if len(covered) == n and is_connected(g):
            return g, x
    raise RuntimeError("could not sample a connected instance")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


# Acceptance reporting: one line per criterion in the terminal summary,
# immune to output capture.
ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


def record_acceptance(num: int, desc: str, status: str) -> None:
    ACCEPTANCE_RESULTS.append((num, desc, status))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, status in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"ACCEPTANCE {num:02d}: {status} — {desc}")
