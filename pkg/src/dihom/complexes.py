"""Abstract simplicial complexes, finite posets, and the neighborhood
complexes of digraphs.

Conventions
-----------
Two degenerate complexes are distinguished throughout the package:

* the *void* complex has no faces at all (not even the empty face);
* the *empty* complex has the empty face as its only face.

The distinction matters for reduced homology (the empty complex has one
unit of homology in degree -1, the void complex has none) and comes up
naturally: the out-neighborhood complex of an edgeless digraph is empty,
not void.

Faces are ``frozenset`` objects over the complex's vertex labels.  Labels
can be any hashable values; ordering questions (orientation of simplices,
deterministic enumeration) always go through the position of a label in
the complex's ``vertices`` tuple, never through comparing labels.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable

from .digraph import Digraph, _bits
from .errors import (
    EmptyComplex,
    FaceNotInComplex,
    InvalidVertex,
    SizeCapExceeded,
)
from .digraph import DEFAULT_CAP

Face = frozenset


class SimplicialComplex:
    """An abstract simplicial complex given by generating sets.

    Dominated generators are dropped so ``facets`` holds exactly the
    maximal faces.  Pass no generating sets for the void complex, or a
    single empty set for the empty complex.
    """

    __slots__ = ("vertices", "facets", "_pos", "_faces")

    def __init__(self, vertices: Iterable[Hashable], faces: Iterable[Iterable[Hashable]]):
        vs = tuple(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise InvalidVertex("duplicate vertex label")
        candidates = {frozenset(f) for f in faces}
        for f in candidates:
            for v in f:
                if v not in pos:
                    raise InvalidVertex(f"face {set(f)} mentions unknown vertex {v!r}")
        facets = {
            f for f in candidates if not any(f < g for g in candidates)
        }
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "facets", frozenset(facets))
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_faces", None)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("SimplicialComplex is immutable")

    # -- queries -----------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == frozenset({frozenset()})

    def face_key(self, face: Face) -> tuple[int, ...]:
        """Deterministic sort key: positions of the face's vertices."""
        return tuple(sorted(self._pos[v] for v in face))

    def faces(self) -> frozenset[Face]:
        """All faces, including the empty face unless the complex is void."""
        cached = self._faces
        if cached is None:
            out: set[Face] = set()
            for f in self.facets:
                elems = tuple(f)
                for k in range(len(elems) + 1):
                    out.update(map(frozenset, itertools.combinations(elems, k)))
            cached = frozenset(out)
            object.__setattr__(self, "_faces", cached)
        return cached

    def has_face(self, face: Iterable[Hashable]) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def faces_by_dimension(self) -> dict[int, list[Face]]:
        """Faces grouped by dimension, each group sorted by face key.

        Includes the empty face at dimension ``-1`` when present.
        """
        grouped: dict[int, list[Face]] = {}
        for f in self.faces():
            grouped.setdefault(len(f) - 1, []).append(f)
        return {
            d: sorted(fs, key=self.face_key) for d, fs in sorted(grouped.items())
        }

    def f_vector(self) -> tuple[int, ...]:
        """Counts of faces in dimensions ``0 .. dim``."""
        by_dim = self.faces_by_dimension()
        top = max(by_dim, default=-1)
        return tuple(len(by_dim.get(d, ())) for d in range(0, top + 1))

    def dimension(self) -> int:
        """Top dimension; ``-1`` for the empty complex, ``-2`` for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic (a point gives 1)."""
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))

    # -- derived complexes ---------------------------------------------------

    def link(self, face: Iterable[Hashable]) -> "SimplicialComplex":
        f = frozenset(face)
        if not self.has_face(f):
            raise FaceNotInComplex(f"{set(face)} is not a face")
        cofacets = [g - f for g in self.facets if f <= g]
        support = frozenset().union(*cofacets) if cofacets else frozenset()
        return SimplicialComplex(
            (v for v in self.vertices if v in support), cofacets
        )

    def induced(self, keep: Iterable[Hashable]) -> "SimplicialComplex":
        s = frozenset(keep)
        return SimplicialComplex(
            (v for v in self.vertices if v in s),
            (f & s for f in self.facets),
        )

    def suspension(self) -> "SimplicialComplex":
        """Join with two fresh cone points (labels ``("susp", 0/1)``)."""
        apexes = (("susp", 0), ("susp", 1))
        for a in apexes:
            if a in self._pos:
                raise InvalidVertex(f"vertex label {a!r} already used")
        facets = [f | {a} for f in self.facets for a in apexes]
        return SimplicialComplex(self.vertices + apexes, facets)

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        shown = sorted(map(self.face_key, self.facets))
        return f"SimplicialComplex({len(self.vertices)} vertices, facets={shown})"


def void_complex() -> SimplicialComplex:
    return SimplicialComplex((), ())


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex((), (frozenset(),))


def simplex_boundary(n: int) -> SimplicialComplex:
    """The boundary of the ``n``-simplex: a triangulated ``(n-1)``-sphere."""
    verts = range(n + 1)
    return SimplicialComplex(verts, itertools.combinations(verts, n))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(range(n + 1), [range(n + 1)])


class Poset:
    """A finite poset on an explicit tuple of element labels.

    The strict order is stored as per-element bitmasks over element
    indices, so comparability and cover queries stay cheap even for a few
    thousand elements.  The relation passed to the constructor is validated
    (irreflexive, antisymmetric, transitive); :meth:`from_covers` skips the
    transitivity check by construction.
    """

    __slots__ = ("elements", "_pos", "_up")

    def __init__(
        self,
        elements: Iterable[Hashable],
        less_than: Iterable[tuple[Hashable, Hashable]],
        *,
        _up: list[int] | None = None,
    ):
        elems = tuple(elements)
        pos = {x: i for i, x in enumerate(elems)}
        if len(pos) != len(elems):
            raise ValueError("duplicate poset element")
        if _up is None:
            up = [0] * len(elems)
            for a, b in less_than:
                i, j = pos[a], pos[b]
                if i == j:
                    raise ValueError(f"relation is not irreflexive: {a!r} < {a!r}")
                up[i] |= 1 << j
            for i in range(len(elems)):
                if up[i] >> i & 1:
                    raise ValueError("relation is not irreflexive")
                for j in _bits(up[i]):
                    if up[j] >> i & 1:
                        raise ValueError("relation is not antisymmetric")
                    if up[j] & ~up[i]:
                        raise ValueError("relation is not transitive")
        else:
            up = _up
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_up", tuple(up))

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("Poset is immutable")

    @classmethod
    def from_covers(
        cls,
        elements: Iterable[Hashable],
        covers: Iterable[tuple[Hashable, Hashable]],
    ) -> "Poset":
        """Build a poset as the transitive closure of covering pairs.

        The cover relation must be acyclic (it always is when it comes from
        an actual poset).
        """
        elems = tuple(elements)
        pos = {x: i for i, x in enumerate(elems)}
        succ: list[list[int]] = [[] for _ in elems]
        indeg = [0] * len(elems)
        for a, b in covers:
            succ[pos[a]].append(pos[b])
            indeg[pos[b]] += 1
        # Kahn order, then accumulate reachability masks in reverse.
        order: list[int] = [i for i in range(len(elems)) if indeg[i] == 0]
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if len(order) != len(elems):
            raise ValueError("cover relation has a cycle")
        up = [0] * len(elems)
        for v in reversed(order):
            m = 0
            for w in succ[v]:
                m |= up[w] | (1 << w)
            up[v] = m
        return cls(elems, (), _up=up)

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: Hashable) -> int:
        return self._pos[x]

    def lt(self, a: Hashable, b: Hashable) -> bool:
        return bool(self._up[self._pos[a]] >> self._pos[b] & 1)

    def lt_index(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def down_masks(self) -> list[int]:
        down = [0] * len(self.elements)
        for i, m in enumerate(self._up):
            for j in _bits(m):
                down[j] |= 1 << i
        return down

    def covering_index_pairs(self) -> list[tuple[int, int]]:
        """Covers ``(i, j)``: ``i < j`` with nothing strictly between."""
        down = self.down_masks()
        out = []
        for i, m in enumerate(self._up):
            for j in _bits(m):
                if not (m & down[j]):
                    out.append((i, j))
        return out

    def covering_pairs(self) -> list[tuple[Hashable, Hashable]]:
        e = self.elements
        return [(e[i], e[j]) for i, j in self.covering_index_pairs()]

    def minimal_elements(self) -> list[Hashable]:
        down = self.down_masks()
        return [x for i, x in enumerate(self.elements) if not down[i]]

    def maximal_elements(self) -> list[Hashable]:
        return [x for i, x in enumerate(self.elements) if not self._up[i]]

    def is_connected(self) -> bool:
        """Connectivity of the comparability graph (empty poset: False)."""
        n = len(self.elements)
        if n == 0:
            return False
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.covering_index_pairs():
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == n

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements)"


def poset_product(p: Poset, q: Poset) -> Poset:
    """Componentwise order on pairs of elements."""
    elems = [(a, b) for a in p.elements for b in q.elements]
    np_, nq = len(p.elements), len(q.elements)
    up: list[int] = []
    pu, qu = p._up, q._up
    for i in range(np_):
        pi = pu[i] | (1 << i)
        for j in range(nq):
            qj = qu[j] | (1 << j)
            m = 0
            for i2 in _bits(pi):
                for j2 in _bits(qj):
                    m |= 1 << (i2 * nq + j2)
            m &= ~(1 << (i * nq + j))
            up.append(m)
    return Poset(elems, (), _up=up)


# ---------------------------------------------------------------------------
# Digraph-derived complexes
# ---------------------------------------------------------------------------


def out_neighborhood_complex(g: Digraph) -> SimplicialComplex:
    """The complex generated by the out-neighborhoods of ``g``.

    Its vertices are the digraph vertices of positive in-degree.  With no
    edges at all this is the empty complex (the empty set is the only
    out-neighborhood).
    """
    vertices = [v for v in range(g.n) if g.in_degree(v) > 0]
    return SimplicialComplex(vertices, (g.out_neighbors(v) for v in range(g.n)))


def in_neighborhood_complex(g: Digraph) -> SimplicialComplex:
    """Mirror of :func:`out_neighborhood_complex` (in-neighborhoods)."""
    return out_neighborhood_complex(g.reverse())


def universality_graph(x: SimplicialComplex) -> Digraph:
    """A digraph whose out-neighborhood complex realizes ``x``.

    Vertices ``0 .. k-1`` stand for the vertices of ``x`` (in ``x.vertices``
    order); one extra apex vertex per facet points at that facet's members.
    Raises :class:`EmptyComplex` for the void complex.
    """
    if x.is_void:
        raise EmptyComplex("cannot realize the void complex")
    k = len(x.vertices)
    facets = sorted(x.facets, key=x.face_key)
    edges = []
    for r, f in enumerate(facets):
        for v in f:
            edges.append((k + r, x.vertices.index(v)))
    return Digraph(k + len(facets), edges)


def face_poset(x: SimplicialComplex, cap: int = DEFAULT_CAP) -> Poset:
    """Poset of nonempty faces ordered by inclusion.

    Faces are listed by dimension, then by face key, so the element order
    is deterministic.  Raises :class:`SizeCapExceeded` when the number of
    nonempty faces exceeds ``cap``.
    """
    total = sum(2 ** len(f) for f in x.facets)  # cheap overestimate
    if total > cap:
        count = sum(1 for f in x.faces() if f)
        if count > cap:
            raise SizeCapExceeded(f"face poset would have {count} elements (cap {cap})")
    by_dim = x.faces_by_dimension()
    elems: list[Face] = []
    for d in sorted(by_dim):
        if d >= 0:
            elems.extend(by_dim[d])
    if len(elems) > cap:
        raise SizeCapExceeded(f"face poset would have {len(elems)} elements (cap {cap})")
    covers = []
    for f in elems:
        for v in f:
            sub = f - {v}
            if sub:
                covers.append((sub, f))
    return Poset.from_covers(elems, covers)


def order_complex(p: Poset, cap: int = DEFAULT_CAP) -> SimplicialComplex:
    """The complex of chains of ``p``; vertices are the poset elements.

    The empty poset yields the empty complex.  Raises
    :class:`SizeCapExceeded` when the total number of nonempty chains
    exceeds ``cap``.
    """
    n = len(p.elements)
    if n == 0:
        return empty_complex()
    down = p.down_masks()
    order = sorted(range(n), key=lambda i: down[i].bit_count())
    chains_ending = [0] * n
    total = 0
    for i in order:
        c = 1
        m = down[i]
        while m:
            low = m & -m
            c += chains_ending[low.bit_length() - 1]
            m ^= low
        chains_ending[i] = c
        total += c
        if total > cap:
            raise SizeCapExceeded(f"order complex would have over {cap} chains")
    # Maximal chains: saturated cover-paths from minimal to maximal elements.
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, j in p.covering_index_pairs():
        succ[i].append(j)
    elems = p.elements
    facets: list[frozenset] = []
    stack: list[int] = []

    def walk(i: int) -> None:
        stack.append(i)
        if not succ[i]:
            facets.append(frozenset(elems[j] for j in stack))
        else:
            for j in succ[i]:
                walk(j)
        stack.pop()

    for i in range(n):
        if not down[i]:
            walk(i)
    return SimplicialComplex(elems, facets)


def directed_clique_complex(g: Digraph, max_vertices: int = 16) -> SimplicialComplex:
    """Faces are vertex sets that admit an ordering ``v0, ..., vk`` with
    every forward pair ``(vi, vj)``, ``i < j``, an edge.  Loops are ignored.

    A directed 3-cycle therefore gives a hollow triangle: all three edges
    are faces but the full triple admits no such ordering.

    The subset dynamic program is exponential in ``g.n``; graphs above
    ``max_vertices`` vertices are rejected with :class:`SizeCapExceeded`.
    """
    if g.n > max_vertices:
        raise SizeCapExceeded(
            f"directed clique complex supported up to {max_vertices} vertices"
        )
    n = g.n
    om = [g.out_mask(v) & ~(1 << v) for v in range(n)]
    ok = [False] * (1 << n)
    ok[0] = True
    faces = []
    for s in range(1, 1 << n):
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            rest = s ^ low
            # v can come first iff it points at everything else
            if om[v] & rest == rest and ok[rest]:
                ok[s] = True
                break
            m ^= low
        if ok[s]:
            faces.append(frozenset(_bits(s)))
    return SimplicialComplex(range(n), faces)
