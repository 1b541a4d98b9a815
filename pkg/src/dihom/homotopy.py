"""Foldings, stiff reductions, and homotopy relations on homomorphisms.

A vertex ``v`` folds onto ``w`` when both neighborhoods of ``v`` are
contained in those of ``w``; deleting ``v`` then changes nothing up to
homotopy, on either side of the hom complex.  Iterating all folds gives
the *stiff reduction*, which is unique up to isomorphism regardless of the
fold order.  A digraph is *dismantlable* when its stiff reduction is the
single looped vertex.

Three successively coarser relations on homomorphisms ``G -> H`` are
provided.  Consider the digraph whose vertices are the homomorphisms, with
an arrow ``f -> g`` when ``(f(v), g(w))`` is an edge of ``H`` for every
edge ``(v, w)`` of ``G``:

* *bihomotopic*: joined by a path of mutual arrows (equivalently, in the
  same connected component of the hom complex);
* *dihomotopic*: joined by a directed path (a preorder, not symmetric);
* *line-homotopic*: joined by a path of arrows ignoring direction.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .digraph import (
    DEFAULT_CAP,
    Digraph,
    VertexMap,
    enumerate_homomorphisms,
    induced_subgraph,
    is_homomorphism,
)
from .errors import InvalidFold, NotAHomomorphism
from .homcomplex import hom_one_skeleton, hom_poset


def all_folds(g: Digraph) -> list[tuple[int, int]]:
    """All pairs ``(v, w)`` such that ``v`` folds onto ``w``."""
    out = []
    for v in range(g.n):
        iv, ov = g.in_mask(v), g.out_mask(v)
        for w in range(g.n):
            if w != v and iv & ~g.in_mask(w) == 0 and ov & ~g.out_mask(w) == 0:
                out.append((v, w))
    return out


def find_fold(g: Digraph) -> tuple[int, int] | None:
    """The lexicographically smallest fold pair, or ``None`` if stiff."""
    folds = all_folds(g)
    return min(folds) if folds else None


def fold(g: Digraph, v: int, w: int) -> Digraph:
    """Delete the foldable vertex ``v`` (labels above ``v`` shift down).

    Raises :class:`InvalidFold` unless ``v`` genuinely folds onto ``w``.
    """
    if not (0 <= v < g.n and 0 <= w < g.n) or v == w:
        raise InvalidFold(f"({v}, {w}) is not a fold")
    if g.in_mask(v) & ~g.in_mask(w) or g.out_mask(v) & ~g.out_mask(w):
        raise InvalidFold(
            f"vertex {v} does not fold onto {w}: neighborhoods not nested"
        )
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def is_stiff(g: Digraph) -> bool:
    return find_fold(g) is None


def stiff_reduction(g: Digraph) -> Digraph:
    """Fold until stiff, always taking the lexicographically first fold.

    The result is independent of the fold order up to isomorphism, so this
    deterministic policy is just a convenient normal form.
    """
    while True:
        f = find_fold(g)
        if f is None:
            return g
        g = fold(g, *f)


def is_dismantlable(g: Digraph) -> bool:
    """True when the stiff reduction is a single looped vertex."""
    r = stiff_reduction(g)
    return r.n == 1 and r.has_loop(0)


# ---------------------------------------------------------------------------
# Homotopy relations
# ---------------------------------------------------------------------------


def _hom_arrow(f: VertexMap, g: VertexMap, source: Digraph, target: Digraph) -> bool:
    """Arrow ``f -> g`` in the exponential digraph restricted to Hom."""
    return all(target.has_edge(f(v), g(w)) for (v, w) in source.edges)


def _require_hom(f: VertexMap, g: Digraph, h: Digraph) -> None:
    if not is_homomorphism(f, g, h):
        raise NotAHomomorphism(f"{f!r} is not a homomorphism")


def _reachable(
    adj: Sequence[Sequence[int]], start: int
) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


class _HomRelations:
    """Shared setup for the three relations: the hom list and its arrows."""

    def __init__(self, g: Digraph, h: Digraph):
        self.maps = enumerate_homomorphisms(g, h)
        self.index = {f: i for i, f in enumerate(self.maps)}
        n = len(self.maps)
        arrows = [[False] * n for _ in range(n)]
        for i, f in enumerate(self.maps):
            for j, f2 in enumerate(self.maps):
                arrows[i][j] = _hom_arrow(f, f2, g, h)
        self.arrow = arrows
        self.di_adj = [
            [j for j in range(n) if arrows[i][j] and i != j] for i in range(n)
        ]
        self.bi_adj = [
            [j for j in self.di_adj[i] if arrows[j][i]] for i in range(n)
        ]
        self.line_adj = [
            sorted(
                j
                for j in range(n)
                if j != i and (arrows[i][j] or arrows[j][i])
            )
            for i in range(n)
        ]


def bihomotopic(f: VertexMap, g: VertexMap, source: Digraph, target: Digraph) -> bool:
    """Are ``f`` and ``g`` joined by a path of mutual arrows?

    Cross-checked against connectivity in the hom complex's one-skeleton;
    the two computations agree because multiple assignment entries can be
    exchanged one vertex at a time.
    """
    for m in (f, g):
        _require_hom(m, source, target)
    rel = _HomRelations(source, target)
    i, j = rel.index[f], rel.index[g]
    connected = j in _reachable(rel.bi_adj, i)
    skeleton = hom_one_skeleton(source, target)
    si, sj = skeleton.index(f), skeleton.index(g)
    comp = next(c for c in skeleton.components() if si in c)
    if connected != (sj in comp):
        raise RuntimeError("bidirected reachability disagrees with the one-skeleton")
    return connected


def dihomotopic(f: VertexMap, g: VertexMap, source: Digraph, target: Digraph) -> bool:
    """Is there a directed arrow path from ``f`` to ``g``?  Not symmetric."""
    for m in (f, g):
        _require_hom(m, source, target)
    rel = _HomRelations(source, target)
    return rel.index[g] in _reachable(rel.di_adj, rel.index[f])


def line_homotopic(f: VertexMap, g: VertexMap, source: Digraph, target: Digraph) -> bool:
    """Are ``f`` and ``g`` joined by a path of arrows ignoring direction?"""
    for m in (f, g):
        _require_hom(m, source, target)
    rel = _HomRelations(source, target)
    return rel.index[g] in _reachable(rel.line_adj, rel.index[f])


class HomotopyClasses:
    """Partition of the homomorphisms under one of the three relations.

    For the directed relation the classes come from the equivalence
    closure of the preorder; the raw preorder (all reachable ordered pairs,
    reflexive pairs included) is kept alongside since it carries strictly
    more information.
    """

    __slots__ = ("relation", "classes", "preorder")

    def __init__(self, relation: str, classes, preorder=None):
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "preorder", preorder)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("HomotopyClasses is immutable")

    def class_of(self, f: VertexMap) -> frozenset:
        for c in self.classes:
            if f in c:
                return c
        raise KeyError(f)

    def __repr__(self) -> str:
        return f"HomotopyClasses({self.relation}, {len(self.classes)} classes)"


def homotopy_classes(
    source: Digraph, target: Digraph, relation: str = "bi"
) -> HomotopyClasses:
    """Partition all homomorphisms under ``"bi"``, ``"di"`` or ``"line"``.

    Directed homotopy is only a preorder; its classes are those of the
    equivalence closure (which coincide with the line-homotopy classes),
    and the returned object also carries the raw reachability pairs.
    """
    if relation not in ("bi", "di", "line"):
        raise ValueError(f"unknown relation {relation!r}")
    rel = _HomRelations(source, target)
    n = len(rel.maps)
    adj = rel.bi_adj if relation == "bi" else rel.line_adj
    seen = [False] * n
    classes = []
    for root in range(n):
        if seen[root]:
            continue
        comp = _reachable(adj, root)
        for i in comp:
            seen[i] = True
        classes.append(frozenset(rel.maps[i] for i in comp))
    classes.sort(key=lambda c: min(f.image for f in c))
    preorder = None
    if relation == "di":
        pairs = []
        for i in range(n):
            for j in sorted(_reachable(rel.di_adj, i)):
                pairs.append((rel.maps[i], rel.maps[j]))
        preorder = tuple(pairs)
    return HomotopyClasses(relation, tuple(classes), preorder)


# ---------------------------------------------------------------------------
# Dismantlability versus connectivity of hom posets
# ---------------------------------------------------------------------------


class DismantlabilityReport:
    """Comparison of ``is_dismantlable`` with hom poset connectivity.

    ``results`` holds ``(witness, status)`` pairs with status one of
    ``"connected"``, ``"disconnected"``, ``"empty"``.  A dismantlable
    digraph must see every status ``"connected"``; ``violations`` collects
    witnesses contradicting that, and the report is truthy when there are
    none.  (For a non-dismantlable digraph a finite witness list can never
    prove anything, so all-connected there is not a violation.)
    """

    __slots__ = ("graph", "dismantlable", "results", "violations")

    def __init__(self, graph, dismantlable, results, violations):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "dismantlable", dismantlable)
        object.__setattr__(self, "results", results)
        object.__setattr__(self, "violations", violations)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("DismantlabilityReport is immutable")

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"DismantlabilityReport(dismantlable={self.dismantlable}, {state})"


def dismantlable_iff_connected_check(
    g: Digraph,
    witnesses: Iterable[Digraph] = (),
    cap: int = DEFAULT_CAP,
) -> DismantlabilityReport:
    """Probe the equivalence "dismantlable iff every hom poset into the
    digraph is connected" on a list of witness sources.

    The digraph itself is always tested first (the self-test is what drives
    the hard direction of the equivalence).  An empty hom poset counts as
    not connected.
    """
    dismantlable = is_dismantlable(g)
    results = []
    violations = []
    for t in (g, *witnesses):
        p = hom_poset(t, g, cap)
        if len(p) == 0:
            status = "empty"
        elif p.is_connected():
            status = "connected"
        else:
            status = "disconnected"
        results.append((t, status))
        if dismantlable and status != "connected":
            violations.append(t)
    return DismantlabilityReport(g, dismantlable, tuple(results), tuple(violations))
