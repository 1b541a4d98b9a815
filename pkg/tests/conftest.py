"""Shared helpers for the test suite.

Random-instance generators all take an explicit ``random.Random`` so every
test that samples is reproducible from its own seed.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from dihom import Digraph, VertexMap

DATA_DIR = Path(__file__).parent / "data"


def brute_force_homs(g: Digraph, h: Digraph) -> list[VertexMap]:
    """Every homomorphism g -> h, found by trying all |H|^|G| vertex maps.

    Deliberately naive; serves as the oracle for the backtracking search.
    """
    found = []
    for image in itertools.product(range(h.n), repeat=g.n):
        if all(h.has_edge(image[u], image[v]) for (u, v) in g.edges):
            found.append(VertexMap(image))
    return found


def random_digraph(rng: random.Random, n: int, p: float = 0.4, loops: bool = True) -> Digraph:
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v and not loops:
                continue
            if rng.random() < p:
                edges.append((u, v))
    return Digraph(n, edges)


def random_oriented(rng: random.Random, n: int, p: float = 0.6) -> Digraph:
    """Loopless digraph with at most one edge per unordered pair."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            if r < p / 2:
                edges.append((u, v))
            elif r < p:
                edges.append((v, u))
    return Digraph(n, edges)


def random_dag(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    """Random acyclic digraph; edges only go from lower to higher labels."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Digraph(n, edges)


def random_tournament(rng: random.Random, n: int) -> Digraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, edges)


def circulant(n: int, shifts: tuple[int, ...]) -> Digraph:
    return Digraph(n, [(i, (i + s) % n) for i in range(n) for s in shifts])


def relabel(g: Digraph, perm: list[int]) -> Digraph:
    """Copy of g with vertex v renamed perm[v]."""
    return Digraph(g.n, [(perm[u], perm[v]) for (u, v) in g.edges])


# The two tournaments whose hom complexes from the directed triangle are a
# 15-gon and a Moebius strip.  Both are rotational: i beats i+s (mod n).
def pentagon_tournament() -> Digraph:
    return circulant(5, (3, 4))


def heptagon_tournament() -> Digraph:
    return circulant(7, (4, 5, 6))


# Five-vertex digraph used to exercise the neighborhood complexes by hand;
# its out-complex has facets {0,1,3} and {0,2,3}, its in-complex has facets
# {2,3,4}, {0,2} and {1,2,4}.
def nbd_example_digraph() -> Digraph:
    return Digraph(
        5,
        [(0, 1), (2, 0), (2, 1), (3, 0), (2, 3), (4, 0), (4, 2), (4, 3), (1, 3)],
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD16)
