"""Reconfiguration of homomorphisms and oriented colorings.

Connectivity questions about the one-skeleton of the hom complex: can one
homomorphism be turned into another by single-vertex moves, and how many
moves are needed?  Against transitive tournaments the answer is tight —
the pointwise minimum of two homomorphisms is a homomorphism, and walking
through it realizes the Hamming distance exactly.
"""

from __future__ import annotations

from .constructions import enumerate_tournaments, transitive_tournament
from .digraph import Digraph, VertexMap, has_homomorphism, is_homomorphism
from .errors import (
    Disconnected,
    EmptyHom,
    HasLoop,
    NotAHomomorphism,
    SizeCapExceeded,
)
from .homcomplex import MultiHom, hom_one_skeleton, is_multihom


def is_connected_hom(g: Digraph, h: Digraph) -> bool:
    """Is the one-skeleton of the hom complex connected?

    Raises :class:`EmptyHom` when there are no homomorphisms at all.
    """
    sk = hom_one_skeleton(g, h)
    if len(sk) == 0:
        raise EmptyHom("no homomorphisms to connect")
    return sk.is_connected()


def diameter(g: Digraph, h: Digraph) -> int:
    """Largest reconfiguration distance between homomorphisms ``g -> h``.

    Runs a breadth-first search from every map.  Raises :class:`EmptyHom`
    with no maps and :class:`Disconnected` when some pair is unreachable.
    """
    sk = hom_one_skeleton(g, h)
    if len(sk) == 0:
        raise EmptyHom("no homomorphisms")
    best = 0
    for start in range(len(sk)):
        dist = sk.bfs_distances(start)
        if min(dist) < 0:
            raise Disconnected("the hom complex is not connected")
        best = max(best, max(dist))
    return best


def _one_move_ok(
    a: VertexMap, b: VertexMap, g: Digraph, h: Digraph
) -> bool:
    """Consecutive path maps must differ at one vertex with the doubled
    assignment still a multihomomorphism."""
    diff = [v for v in range(g.n) if a.image[v] != b.image[v]]
    if len(diff) != 1:
        return False
    v = diff[0]
    masks = tuple(
        (1 << a.image[u]) if u != v else (1 << a.image[v] | 1 << b.image[v])
        for u in range(g.n)
    )
    return is_multihom(MultiHom._from_masks(masks), g, h)


def meet_path(
    f: VertexMap, g: VertexMap, source: Digraph, n: int
) -> list[VertexMap]:
    """A reconfiguration path from ``f`` to ``g`` in the hom complex of
    ``(source, T_n)`` through their pointwise minimum.

    The path changes vertices where the minimum disagrees with ``f`` in
    increasing order of their ``g``-value, then walks back up to ``g``
    symmetrically; its length is exactly the Hamming distance between the
    endpoints.  Both endpoints are included in the returned list.
    """
    target = transitive_tournament(n)
    for m in (f, g):
        if not is_homomorphism(m, source, target):
            raise NotAHomomorphism(f"{m!r} is not a homomorphism into T_{n}")
    meet = VertexMap(min(a, b) for a, b in zip(f.image, g.image))

    def leg(start: VertexMap, other: VertexMap) -> list[VertexMap]:
        # Walk from start down to the meet, lowering vertices where the
        # other map is smaller, in increasing other-value order.
        moved = sorted(
            (v for v in range(source.n) if other.image[v] < start.image[v]),
            key=lambda v: (other.image[v], v),
        )
        path = [start]
        current = list(start.image)
        for v in moved:
            current[v] = other.image[v]
            path.append(VertexMap(current))
        return path

    down = leg(f, g)  # f .. meet
    up = leg(g, f)  # g .. meet
    if down[-1] != meet or up[-1] != meet:
        raise RuntimeError("meet construction failed to reach the pointwise minimum")
    path = down + up[-2::-1]
    for a, b in zip(path, path[1:]):
        if not _one_move_ok(a, b, source, target):
            raise RuntimeError("meet path produced an invalid move")
    return path


def oriented_chromatic_number(g: Digraph) -> tuple[int, Digraph]:
    """Smallest tournament size admitting a homomorphism from ``g``,
    together with a witness tournament.

    Only defined for loopless digraphs (:class:`HasLoop` otherwise).  The
    search is exhaustive over tournaments on up to 7 vertices; digraphs
    needing more (for instance anything with a bidirected pair, which can
    never map to a tournament) raise :class:`SizeCapExceeded`.
    """
    for v in range(g.n):
        if g.has_loop(v):
            raise HasLoop(f"vertex {v} has a loop")
    if g.n == 0:
        return 0, Digraph(0)
    for n in range(1, 8):
        for t in enumerate_tournaments(n):
            if has_homomorphism(g, t):
                return n, t
    raise SizeCapExceeded(
        "no tournament on up to 7 vertices admits a homomorphism"
    )
