"""Standard digraph families, Mycielski-type constructions and
isomorphism utilities.

All constructors return :class:`~dihom.digraph.Digraph` objects on dense
labels.  The enumeration of tournaments works up to isomorphism and is
deterministic: representatives are canonical forms, emitted in increasing
canonical-key order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .digraph import Digraph, product, quotient
from .errors import InvalidSize, InvalidVariant, SizeCapExceeded


def transitive_tournament(n: int) -> Digraph:
    """The transitive tournament: edge ``(i, j)`` for every ``i < j``."""
    if n < 1:
        raise InvalidSize(f"transitive tournament needs n >= 1, got {n}")
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def directed_path(n: int) -> Digraph:
    """The directed path on ``n`` vertices ``0 -> 1 -> ... -> n-1``."""
    if n < 1:
        raise InvalidSize(f"directed path needs n >= 1, got {n}")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    """The directed cycle ``0 -> 1 -> ... -> n-1 -> 0`` (``n >= 3``)."""
    if n < 3:
        raise InvalidSize(f"directed cycle needs n >= 3, got {n}")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def interval_bidirected(n: int) -> Digraph:
    """Fully looped path on ``n + 1`` vertices with both directions of
    every consecutive edge: the reflexive "interval" used for homotopies
    that may move back and forth."""
    if n < 0:
        raise InvalidSize(f"interval length must be non-negative, got {n}")
    edges = [(i, i) for i in range(n + 1)]
    for i in range(n):
        edges.append((i, i + 1))
        edges.append((i + 1, i))
    return Digraph(n + 1, edges)


def interval_directed_looped(n: int) -> Digraph:
    """Fully looped path on ``n + 1`` vertices with forward edges only."""
    if n < 0:
        raise InvalidSize(f"interval length must be non-negative, got {n}")
    edges = [(i, i) for i in range(n + 1)]
    edges.extend((i, i + 1) for i in range(n))
    return Digraph(n + 1, edges)


def line_digraph(n: int, orientation: Sequence[int]) -> Digraph:
    """Fully looped path on ``n + 1`` vertices with one edge per
    consecutive pair, oriented by ``orientation``.

    ``orientation[i]`` truthy gives ``i -> i+1``; falsy gives ``i+1 -> i``.
    For example ``line_digraph(3, [1, 0, 0])`` has edges
    ``0 -> 1``, ``2 -> 1``, ``3 -> 2`` besides the loops.
    """
    if n < 0:
        raise InvalidSize(f"interval length must be non-negative, got {n}")
    if len(orientation) != n:
        raise InvalidSize(
            f"orientation must have exactly {n} entries, got {len(orientation)}"
        )
    edges = [(i, i) for i in range(n + 1)]
    for i, bit in enumerate(orientation):
        edges.append((i, i + 1) if bit else (i + 1, i))
    return Digraph(n + 1, edges)


def complete_bipartite_digraph(m: int, n: int) -> Digraph:
    """All ``m * n`` edges from ``{0..m-1}`` to ``{m..m+n-1}``."""
    if m < 1 or n < 1:
        raise InvalidSize(f"both sides must be nonempty, got ({m}, {n})")
    return Digraph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


# ---------------------------------------------------------------------------
# Mycielski-type constructions
# ---------------------------------------------------------------------------

# The three looped interval templates the constructions quotient against.
# Layer 0 of the product is the base copy for variants 1 and 2; variant 3
# keeps layer 1 and collapses both outer layers.
_INTERVALS = {
    1: Digraph(3, [(0, 0), (0, 1), (1, 2)]),
    2: Digraph(3, [(0, 0), (1, 0), (2, 1)]),
    3: Digraph(3, [(1, 1), (0, 1), (1, 2)]),
}


def mycielskian(g: Digraph, variant: int) -> Digraph:
    """Directed Mycielskian of ``g``.

    All three variants are quotients of the product of ``g`` with a looped
    three-vertex interval; they differ in the interval's orientation and in
    which layers get collapsed to a point.

    * ``variant=1`` and ``variant=2``: ``2 * g.n + 1`` vertices.  Labels
      ``0..n-1`` are the base copy of ``g``, ``n..2n-1`` the twin copy,
      ``2n`` the apex obtained by collapsing the outer layer.
    * ``variant=3``: ``g.n + 2`` vertices.  Labels ``0..n-1`` are the base
      copy, ``n`` and ``n+1`` the two apexes obtained by collapsing each
      outer layer.
    """
    if variant not in _INTERVALS:
        raise InvalidVariant(f"variant must be 1, 2 or 3, got {variant!r}")
    if g.n == 0:
        raise InvalidSize("mycielskian needs a nonempty digraph")
    p = product(g, _INTERVALS[variant])  # vertex (v, layer) -> 3 * v + layer
    n = g.n
    if variant in (1, 2):
        classes: list[list[int]] = [[3 * v] for v in range(n)]
        classes += [[3 * v + 1] for v in range(n)]
        classes.append([3 * v + 2 for v in range(n)])
    else:
        classes = [[3 * v + 1] for v in range(n)]
        classes.append([3 * v for v in range(n)])
        classes.append([3 * v + 2 for v in range(n)])
    return quotient(p, classes)


# ---------------------------------------------------------------------------
# Sphere tournaments
# ---------------------------------------------------------------------------


def sphere_tournament(n: int) -> Digraph:
    """A tournament on ``2n + 3`` vertices whose out-neighborhood complex
    is a triangulated ``n``-sphere.

    The ``n = 1`` instance is a fixed 5-vertex tournament; for ``n >= 2``
    the out-neighborhoods follow a uniform pattern.  Vertices are labeled
    ``0 .. 2n+2``.
    """
    if n < 1:
        raise InvalidSize(f"sphere tournament needs n >= 1, got {n}")
    if n == 1:
        outs = {0: {3}, 1: {0, 4}, 2: {0, 1}, 3: {1, 2}, 4: {0, 2, 3}}
    else:
        # Stated 1-indexed on [2n+3], shifted down by one.  The set
        # difference below is intentionally vacuous when i - n - 2 < 1.
        outs = {}
        size = 2 * n + 3
        outs[0] = {n + 2}
        for i in range(2, n + 2):  # 2 <= i <= n+1
            outs[i - 1] = set(range(i - 1)) | {n + 1 + i}
        for i in range(n + 2, size + 1):  # n+2 <= i <= 2n+3
            outs[i - 1] = set(range(i - 1)) - {i - n - 3}
    edges = [(v, w) for v, targets in outs.items() for w in targets]
    return Digraph(max(outs) + 1, edges)


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------


def _reveal(g: Digraph, v: int, placed: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency bits contributed by appending ``v`` after ``placed``."""
    seg = [1 if g.has_edge(v, v) else 0]
    for p in placed:
        seg.append(1 if g.has_edge(v, p) else 0)
        seg.append(1 if g.has_edge(p, v) else 0)
    return tuple(seg)


def canonical_key(g: Digraph) -> int:
    """A complete isomorphism invariant: the lexicographically smallest
    adjacency bit string over all vertex orderings.

    Bits are revealed by growing the leading principal submatrix: placing
    a vertex contributes its loop bit followed by its adjacency with each
    previously placed vertex (both directions).  The result is packed into
    an integer, most significant bit first (``n * n`` bits total).
    """
    n = g.n
    if n == 0:
        return 0
    # Frontier of partial orderings achieving the minimal bit prefix.
    # States with the same remaining set and the same per-vertex adjacency
    # profile against their placed sequence have identical futures, so we
    # deduplicate on that.
    states: list[tuple[tuple[int, ...], frozenset[int]]] = [((), frozenset(range(n)))]
    key = 0
    for _ in range(n):
        best_seg: tuple[int, ...] | None = None
        new_states: dict[object, tuple[tuple[int, ...], frozenset[int]]] = {}
        for placed, remaining in states:
            for v in remaining:
                seg = _reveal(g, v, placed)
                if best_seg is not None and seg > best_seg:
                    continue
                if best_seg is None or seg < best_seg:
                    best_seg = seg
                    new_states = {}
                placed2 = placed + (v,)
                rem2 = remaining - {v}
                dedup = (
                    rem2,
                    tuple(_reveal(g, w, placed2) for w in sorted(rem2)),
                )
                new_states.setdefault(dedup, (placed2, rem2))
        assert best_seg is not None
        for bit in best_seg:
            key = key << 1 | bit
        states = list(new_states.values())
    return key


def digraph_from_key(n: int, key: int) -> Digraph:
    """Rebuild the digraph encoded by a canonical key (inverse of the
    packing used in :func:`canonical_key`)."""
    bits = [(key >> (n * n - 1 - i)) & 1 for i in range(n * n)]
    pos = 0
    edges = []
    for k in range(n):
        if bits[pos]:
            edges.append((k, k))
        pos += 1
        for p in range(k):
            if bits[pos]:
                edges.append((k, p))
            pos += 1
            if bits[pos]:
                edges.append((p, k))
            pos += 1
    return Digraph(n, edges)


def canonical_form(g: Digraph) -> Digraph:
    """A canonical representative of the isomorphism class of ``g``."""
    return digraph_from_key(g.n, canonical_key(g))


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    """Digraph isomorphism via canonical forms (practical for n <= ~10)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    prof_g = sorted((g.out_degree(v), g.in_degree(v), g.has_loop(v)) for v in range(g.n))
    prof_h = sorted((h.out_degree(v), h.in_degree(v), h.has_loop(v)) for v in range(h.n))
    if prof_g != prof_h:
        return False
    return canonical_key(g) == canonical_key(h)


def automorphism_group_order(g: Digraph) -> int:
    """Number of adjacency-preserving permutations of the vertices."""
    n = g.n
    profile = [(g.out_degree(v), g.in_degree(v), g.has_loop(v)) for v in range(n)]
    count = 0

    def extend(mapping: list[int], used: set[int]) -> None:
        nonlocal count
        v = len(mapping)
        if v == n:
            count += 1
            return
        for w in range(n):
            if w in used or profile[w] != profile[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(v, u) != g.has_edge(w, mapping[u]) or g.has_edge(
                    u, v
                ) != g.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping.append(w)
                used.add(w)
                extend(mapping, used)
                mapping.pop()
                used.remove(w)

    extend([], set())
    return count


def enumerate_tournaments(n: int) -> list[Digraph]:
    """All tournaments on ``n`` vertices up to isomorphism.

    Representatives are canonical forms, listed in increasing canonical-key
    order.  Supported for ``1 <= n <= 7`` (the counts grow too fast past
    that for this exhaustive scheme).
    """
    if n < 1:
        raise InvalidSize(f"tournament size must be >= 1, got {n}")
    if n > 7:
        raise SizeCapExceeded(f"tournament enumeration supported up to n = 7, got {n}")
    reps = [Digraph(1)]
    for size in range(2, n + 1):
        seen: dict[int, None] = {}
        for t in reps:
            base = list(t.edges)
            for mask in range(1 << (size - 1)):
                edges = list(base)
                for j in range(size - 1):
                    if mask >> j & 1:
                        edges.append((size - 1, j))
                    else:
                        edges.append((j, size - 1))
                seen.setdefault(canonical_key(Digraph(size, edges)), None)
        reps = [digraph_from_key(size, key) for key in sorted(seen)]
    return reps


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


def homotopy_witness_pair() -> tuple[Digraph, Digraph]:
    """A digraph pair ``(G, H)`` separating the three homotopy relations.

    ``G`` is the bidirected edge without loops.  ``H`` is built so that the
    homomorphism complex of ``(G, H)`` consists of six isolated points
    while the exponential digraph still has one-way arrows between some of
    them: there are map pairs that are connected by a directed homotopy but
    not a bidirected one, and pairs connected by an undirected homotopy but
    not a directed one in either orientation.
    """
    g = Digraph(2, [(0, 1), (1, 0)])
    h = Digraph(
        6,
        [
            (0, 2),
            (1, 3),
            (0, 1),
            (1, 0),
            (2, 3),
            (3, 2),
            (4, 2),
            (5, 3),
            (4, 5),
            (5, 4),
        ],
    )
    return g, h
