"""Homomorphism complexes of digraph pairs.

A *multihomomorphism* from ``G`` to ``H`` assigns a nonempty set of
``H``-vertices to every ``G``-vertex so that every edge of ``G`` maps to a
complete set of edges: ``a(u) x a(v)`` must lie in ``E(H)`` for every edge
``(u, v)`` (loops included, so a looped ``G``-vertex needs its whole
assignment set mutually adjacent and looped in ``H``).

Ordered under pointwise inclusion, the multihomomorphisms form the face
poset of a polyhedral complex: :func:`hom_poset` materializes it.  Its
minimal cells are the plain homomorphisms; cells where a single vertex
carries a doubled assignment are the edges of :func:`hom_one_skeleton`.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .complexes import (
    Poset,
    SimplicialComplex,
    face_poset,
    out_neighborhood_complex,
)
from .constructions import transitive_tournament
from .digraph import (
    DEFAULT_CAP,
    Digraph,
    VertexMap,
    _bits,
    enumerate_homomorphisms,
)
from .errors import EmptyComplex, InvalidRange, ShapeMismatch, SizeCapExceeded


class MultiHom:
    """A tuple of nonempty vertex sets, one per source vertex.

    Pure data, stored as bitmasks; whether it actually is a
    multihomomorphism for a given graph pair is the business of
    :func:`is_multihom` and :func:`hom_poset`.
    """

    __slots__ = ("_masks",)

    def __init__(self, assignments: Iterable[Iterable[int]]):
        masks = []
        for s in assignments:
            m = 0
            for v in s:
                if v < 0:
                    raise ShapeMismatch(f"negative vertex {v} in assignment")
                m |= 1 << v
            if m == 0:
                raise ShapeMismatch("assignment sets must be nonempty")
            masks.append(m)
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def _from_masks(cls, masks: tuple[int, ...]) -> "MultiHom":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_masks", masks)
        return obj

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("MultiHom is immutable")

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def assignments(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self._masks)

    def __len__(self) -> int:
        return len(self._masks)

    def __getitem__(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._masks[v]))

    def dimension(self) -> int:
        """Cell dimension: total assignment size minus the vertex count."""
        return sum(m.bit_count() - 1 for m in self._masks)

    def leq(self, other: "MultiHom") -> bool:
        """Pointwise containment."""
        return len(self._masks) == len(other._masks) and all(
            a & ~b == 0 for a, b in zip(self._masks, other._masks)
        )

    def is_singleton(self) -> bool:
        return all(m.bit_count() == 1 for m in self._masks)

    def singleton_map(self) -> VertexMap:
        if not self.is_singleton():
            raise ShapeMismatch("cell has a non-singleton assignment")
        return VertexMap(m.bit_length() - 1 for m in self._masks)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Deterministic sort key: per-vertex sorted member tuples."""
        return tuple(tuple(_bits(m)) for m in self._masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiHom):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"MultiHom({[sorted(s) for s in self.assignments]})"


def multihom_of_map(f: VertexMap) -> MultiHom:
    """The all-singleton cell of a vertex map."""
    return MultiHom._from_masks(tuple(1 << t for t in f.image))


def is_multihom(a: MultiHom, g: Digraph, h: Digraph) -> bool:
    """Does ``a`` satisfy the edge condition for the pair ``(g, h)``?

    Raises :class:`ShapeMismatch` when the assignment tuple has the wrong
    length or mentions vertices outside ``h``.
    """
    if len(a) != g.n:
        raise ShapeMismatch(f"cell has {len(a)} assignments, graph has {g.n} vertices")
    full = (1 << h.n) - 1
    for m in a.masks:
        if m & ~full:
            raise ShapeMismatch("assignment mentions a vertex outside the target")
    for u, v in g.edges:
        target = a.masks[v]
        for x in _bits(a.masks[u]):
            if target & ~h.out_mask(x):
                return False
    return True


class HomPoset:
    """The poset of all multihomomorphisms ``g -> h`` under pointwise
    inclusion.

    The cell tuple is sorted by :meth:`MultiHom.key`, so iteration order is
    deterministic.  Because the cell set is closed downwards, covering
    pairs are found structurally: drop one member from one assignment set.
    """

    __slots__ = ("source", "target", "cells", "_index")

    def __init__(self, source: Digraph, target: Digraph, cells: Iterable[MultiHom]):
        cs = tuple(sorted(cells, key=MultiHom.key))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "cells", cs)
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(cs)})

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("HomPoset is immutable")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[MultiHom]:
        return iter(self.cells)

    def __contains__(self, cell: MultiHom) -> bool:
        return cell in self._index

    def index(self, cell: MultiHom) -> int:
        return self._index[cell]

    def leq(self, a: MultiHom, b: MultiHom) -> bool:
        return a.leq(b)

    def minimal_cells(self) -> list[MultiHom]:
        """The honest homomorphisms (all-singleton cells)."""
        return [c for c in self.cells if c.is_singleton()]

    def homomorphisms(self) -> list[VertexMap]:
        return [c.singleton_map() for c in self.minimal_cells()]

    def maximal_cells(self) -> list[MultiHom]:
        return [
            c
            for i, c in enumerate(self.cells)
            if next(self._covers_above(i), None) is None
        ]

    def _covers_above(self, i: int) -> Iterator[int]:
        cell = self.cells[i]
        masks = cell.masks
        hn = self.target.n
        for v in range(len(masks)):
            for x in range(hn):
                if masks[v] >> x & 1:
                    continue
                bigger = MultiHom._from_masks(
                    masks[:v] + (masks[v] | 1 << x,) + masks[v + 1 :]
                )
                j = self._index.get(bigger)
                if j is not None:
                    yield j

    def covering_index_pairs(self) -> list[tuple[int, int]]:
        """All covers ``(i, j)``: cell ``i`` is cell ``j`` minus one member."""
        out = []
        for j, cell in enumerate(self.cells):
            masks = cell.masks
            for v, m in enumerate(masks):
                if m.bit_count() == 1:
                    continue
                for x in _bits(m):
                    smaller = MultiHom._from_masks(
                        masks[:v] + (m ^ 1 << x,) + masks[v + 1 :]
                    )
                    out.append((self._index[smaller], j))
        return out

    def dimension_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for c in self.cells:
            d = c.dimension()
            census[d] = census.get(d, 0) + 1
        return census

    def euler_characteristic(self) -> int:
        """Alternating cell count of the polyhedral complex."""
        return sum((-1) ** d * k for d, k in self.dimension_census().items())

    def components(self) -> list[list[MultiHom]]:
        n = len(self.cells)
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, j in self.covering_index_pairs():
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
        groups: dict[int, list[MultiHom]] = {}
        for i, c in enumerate(self.cells):
            groups.setdefault(find(i), []).append(c)
        return list(groups.values())

    def is_connected(self) -> bool:
        return len(self.cells) > 0 and len(self.components()) == 1

    def as_poset(self) -> Poset:
        covers = [
            (self.cells[i], self.cells[j]) for i, j in self.covering_index_pairs()
        ]
        return Poset.from_covers(self.cells, covers)

    def __repr__(self) -> str:
        return f"HomPoset({len(self.cells)} cells)"


def hom_poset(g: Digraph, h: Digraph, cap: int = DEFAULT_CAP) -> HomPoset:
    """Materialize the full multihomomorphism poset of ``(g, h)``.

    Backtracks vertex by vertex, restricting each assignment set to the
    common neighborhoods imposed by the already-assigned neighbors.  Raises
    :class:`SizeCapExceeded` after ``cap`` cells.
    """
    n = g.n
    full = (1 << h.n) - 1
    common_out: dict[int, int] = {}
    common_in: dict[int, int] = {}

    def co(mask: int) -> int:
        r = common_out.get(mask)
        if r is None:
            r = full
            for x in _bits(mask):
                r &= h.out_mask(x)
            common_out[mask] = r
        return r

    def ci(mask: int) -> int:
        r = common_in.get(mask)
        if r is None:
            r = full
            for x in _bits(mask):
                r &= h.in_mask(x)
            common_in[mask] = r
        return r

    in_masks = [g.in_mask(v) & ((1 << v) - 1) for v in range(n)]
    out_masks = [g.out_mask(v) & ((1 << v) - 1) for v in range(n)]
    loops = [g.has_edge(v, v) for v in range(n)]
    cells: list[MultiHom] = []
    masks: list[int] = [0] * n

    def rec(v: int) -> None:
        if v == n:
            if len(cells) >= cap:
                raise SizeCapExceeded(f"hom poset exceeds cap of {cap} cells")
            cells.append(MultiHom._from_masks(tuple(masks)))
            return
        allowed = full
        for u in _bits(in_masks[v]):
            allowed &= co(masks[u])
        for u in _bits(out_masks[v]):
            allowed &= ci(masks[u])
        s = allowed
        while s:
            if not loops[v] or s & ~co(s) == 0:
                masks[v] = s
                rec(v + 1)
            s = (s - 1) & allowed
        masks[v] = 0

    if n == 0:
        # One empty cell: the unique map from the empty digraph.
        return HomPoset(g, h, [MultiHom._from_masks(())])
    rec(0)
    return HomPoset(g, h, cells)


class HomSkeleton:
    """The homomorphisms ``g -> h`` with the adjacency of the complex's
    one-skeleton.

    Two maps are adjacent when they differ at exactly one vertex *and* the
    doubled assignment at that vertex is still a multihomomorphism.  The
    second condition is what loops in ``g`` add: differing at one vertex is
    not enough if the two values there are not interchangeable (see the
    tests for a two-looped-vertices example where the skeleton stays
    edgeless).
    """

    __slots__ = ("maps", "edges", "_adj", "_index")

    def __init__(self, maps: Iterable[VertexMap], edges: Iterable[tuple[int, int]]):
        ms = tuple(maps)
        es = frozenset(tuple(sorted(e)) for e in edges)
        adj: list[list[int]] = [[] for _ in ms]
        for i, j in sorted(es):
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "maps", ms)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_adj", tuple(map(tuple, adj)))
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(ms)})

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("HomSkeleton is immutable")

    def __len__(self) -> int:
        return len(self.maps)

    def index(self, f: VertexMap) -> int:
        return self._index[f]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def bfs_distances(self, start: int) -> list[int]:
        dist = [-1] * len(self.maps)
        dist[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in self._adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.maps)
        comps = []
        for root in range(len(self.maps)):
            if seen[root]:
                continue
            comp = []
            todo = [root]
            seen[root] = True
            while todo:
                v = todo.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        todo.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.maps) > 0 and len(self.components()) == 1

    def __repr__(self) -> str:
        return f"HomSkeleton({len(self.maps)} maps, {len(self.edges)} edges)"


def hom_one_skeleton(g: Digraph, h: Digraph) -> HomSkeleton:
    """Vertices and edges of the homomorphism complex of ``(g, h)``."""
    maps = enumerate_homomorphisms(g, h)
    index = {f: i for i, f in enumerate(maps)}
    edges = []
    for i, f in enumerate(maps):
        for v in range(g.n):
            fv = f.image[v]
            for t in range(fv + 1, h.n):
                other = index.get(VertexMap(f.image[:v] + (t,) + f.image[v + 1 :]))
                if other is None:
                    continue
                doubled = MultiHom._from_masks(
                    tuple(
                        (1 << x) if u != v else (1 << fv | 1 << t)
                        for u, x in enumerate(f.image)
                    )
                )
                if is_multihom(doubled, g, h):
                    edges.append((i, other))
    return HomSkeleton(maps, edges)


# ---------------------------------------------------------------------------
# The nu closure operator
# ---------------------------------------------------------------------------


class NuReduction:
    """The closure operator ``X -> outN(inN(X))`` on the nonempty faces of
    the out-neighborhood complex, together with its image.

    ``order_complex_dimension`` is the longest-chain dimension of the image
    poset, which is what the dimension bounds for bipartite-free digraphs
    are about.
    """

    __slots__ = ("face_poset", "mapping", "image_poset", "image_complex")

    def __init__(
        self,
        poset: Poset,
        mapping: dict[frozenset, frozenset],
        image_poset: Poset,
        image_complex: SimplicialComplex,
    ):
        object.__setattr__(self, "face_poset", poset)
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "image_poset", image_poset)
        object.__setattr__(self, "image_complex", image_complex)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("NuReduction is immutable")

    @property
    def order_complex_dimension(self) -> int:
        """Length (in edges) of the longest chain in the image poset."""
        p = self.image_poset
        down = p.down_masks()
        order = sorted(range(len(p.elements)), key=lambda i: down[i].bit_count())
        height = [0] * len(p.elements)
        best = -1
        for i in order:
            h = 0
            m = down[i]
            while m:
                low = m & -m
                h = max(h, height[low.bit_length() - 1] + 1)
                m ^= low
            height[i] = h
            best = max(best, h)
        return best

    def __repr__(self) -> str:
        return (
            f"NuReduction({len(self.face_poset.elements)} faces -> "
            f"{len(self.image_poset.elements)} closed faces)"
        )


def closure_nu(g: Digraph, cap: int = DEFAULT_CAP) -> NuReduction:
    """Compute the closure operator on the out-neighborhood face poset.

    Raises :class:`EmptyComplex` when the digraph has no edges (so the
    complex has no nonempty faces).
    """
    nb = out_neighborhood_complex(g)
    p = face_poset(nb, cap)
    if not p.elements:
        raise EmptyComplex("the out-neighborhood complex has no nonempty faces")
    full = (1 << g.n) - 1

    def nu(face: frozenset) -> frozenset:
        senders = full
        for x in face:
            senders &= g.in_mask(x)
        closed = full
        for y in _bits(senders):
            closed &= g.out_mask(y)
        return frozenset(_bits(closed))

    mapping = {f: nu(f) for f in p.elements}
    image = sorted(set(mapping.values()), key=nb.face_key)
    relation = [
        (a, b) for a, b in itertools.permutations(image, 2) if a < b
    ]
    image_poset = Poset(image, relation)
    image_complex = SimplicialComplex(nb.vertices, image)
    return NuReduction(p, mapping, image_poset, image_complex)


# ---------------------------------------------------------------------------
# Staircase cells
# ---------------------------------------------------------------------------


class StaircaseCell:
    """A maximal cell of the hom poset of two transitive tournaments,
    packaged with the interval-partition certificate."""

    __slots__ = ("cell", "blocks", "target_size")

    def __init__(self, cell: MultiHom, target_size: int):
        object.__setattr__(self, "cell", cell)
        object.__setattr__(self, "blocks", cell.key())
        object.__setattr__(self, "target_size", target_size)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("StaircaseCell is immutable")

    @property
    def is_staircase(self) -> bool:
        """Do the blocks form consecutive intervals partitioning the target?

        Checks that each block is a contiguous run, that consecutive blocks
        abut (max of one block + 1 = min of the next), and that together
        they cover every target vertex exactly once.
        """
        blocks = self.blocks
        if not blocks:
            return False
        expected_low = 0
        for b in blocks:
            if not b:
                return False
            if list(b) != list(range(b[0], b[-1] + 1)):
                return False
            if b[0] != expected_low:
                return False
            expected_low = b[-1] + 1
        return expected_low == self.target_size

    def __repr__(self) -> str:
        return f"StaircaseCell({[list(b) for b in self.blocks]})"


def staircase_cells(m: int, n: int, cap: int = DEFAULT_CAP) -> list[StaircaseCell]:
    """Maximal cells of the hom poset of transitive tournaments ``m <= n``.

    Every maximal cell partitions ``0 .. n-1`` into ``m`` consecutive
    intervals, so there are ``C(n-1, m-1)`` of them; the certificates let
    callers verify that shape directly.
    """
    if not (2 <= m <= n):
        raise InvalidRange(f"need 2 <= m <= n, got ({m}, {n})")
    p = hom_poset(transitive_tournament(m), transitive_tournament(n), cap)
    return [StaircaseCell(c, n) for c in p.maximal_cells()]
