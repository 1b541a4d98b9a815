"""Discrete Morse matchings and collapsibility.

A partial matching on a poset pairs elements along covering relations.  It
is *acyclic* when the Hasse diagram, with matched covers pointing up and
all other covers pointing down, has no directed cycle.  An acyclic
matching with one critical cell on the face poset of a complex certifies
collapsibility.

Besides the generic checker this module provides the explicit matching
that collapses homomorphism posets into transitive tournaments, and two
facet-driven collapsing engines for simplicial complexes.
"""

from __future__ import annotations

import itertools
import random
from typing import Hashable, Iterable, Iterator, Sequence

from .complexes import Poset, SimplicialComplex
from .constructions import transitive_tournament
from .digraph import DEFAULT_CAP, Digraph
from .errors import EmptyHom, InvalidMatching, InvalidVariant, NotAcyclic
from .homcomplex import HomPoset, MultiHom, hom_poset


class Matching:
    """A partial matching: ``pairs`` of (lower, upper) cells plus the
    leftover ``critical`` cells.  Plain data; validation against a poset
    happens in :func:`is_acyclic_matching`."""

    __slots__ = ("pairs", "critical")

    def __init__(
        self,
        pairs: Iterable[tuple[Hashable, Hashable]],
        critical: Iterable[Hashable],
    ):
        object.__setattr__(self, "pairs", tuple((a, b) for a, b in pairs))
        object.__setattr__(self, "critical", tuple(critical))

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("Matching is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return set(self.pairs) == set(other.pairs) and set(self.critical) == set(
            other.critical
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.pairs), frozenset(self.critical)))

    def __repr__(self) -> str:
        return f"Matching({len(self.pairs)} pairs, {len(self.critical)} critical)"


def _poset_structure(p: Poset | HomPoset):
    if isinstance(p, HomPoset):
        return p.cells, p.covering_index_pairs()
    return p.elements, p.covering_index_pairs()


def is_acyclic_matching(p: Poset | HomPoset, m: Matching) -> bool:
    """Validate ``m`` against ``p`` and check acyclicity.

    Raises :class:`InvalidMatching` when a pair is not a covering relation,
    an element is matched twice, or pairs and critical cells fail to
    partition the poset.  Returns ``False`` exactly when the modified Hasse
    diagram has a directed cycle.
    """
    elements, covers = _poset_structure(p)
    index = {x: i for i, x in enumerate(elements)}
    cover_set = set(covers)
    matched_up: dict[int, int] = {}
    used: set[int] = set()
    for a, b in m.pairs:
        if a not in index or b not in index:
            raise InvalidMatching(f"pair ({a!r}, {b!r}) mentions unknown cells")
        ia, ib = index[a], index[b]
        if (ia, ib) not in cover_set:
            raise InvalidMatching(f"({a!r}, {b!r}) is not a covering pair")
        if ia in used or ib in used:
            raise InvalidMatching("a cell appears in two pairs")
        used.update((ia, ib))
        matched_up[ia] = ib
    crit = set()
    for c in m.critical:
        if c not in index:
            raise InvalidMatching(f"unknown critical cell {c!r}")
        ic = index[c]
        if ic in used or ic in crit:
            raise InvalidMatching(f"cell {c!r} is both matched and critical")
        crit.add(ic)
    if len(used) + len(crit) != len(elements):
        raise InvalidMatching("pairs and critical cells do not partition the poset")

    # Modified Hasse diagram: matched covers point up, the rest point down.
    succ: list[list[int]] = [[] for _ in elements]
    for i, j in covers:
        if matched_up.get(i) == j:
            succ[i].append(j)
        else:
            succ[j].append(i)
    state = bytearray(len(elements))  # 0 new, 1 active, 2 done
    for root in range(len(elements)):
        if state[root]:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 1:
                    return False
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                stack.pop()
    return True


def _peel_levels(g: Digraph) -> list[int]:
    """Longest-path-from-vertex levels of a DAG (sinks are level 0)."""
    order: list[int] = []
    indeg = [0] * g.n  # in-degree in the reversed graph = out-degree
    for v in range(g.n):
        indeg[v] = g.out_degree(v)
    todo = [v for v in range(g.n) if indeg[v] == 0]
    level = [0] * g.n
    while todo:
        v = todo.pop()
        order.append(v)
        for u in g.in_neighbors(v):
            level[u] = max(level[u], level[v] + 1)
            indeg[u] -= 1
            if indeg[u] == 0:
                todo.append(u)
    if len(order) != g.n:
        raise NotAcyclic("digraph has a directed cycle")
    return level


def tournament_matching(
    g: Digraph,
    n: int,
    cap: int = DEFAULT_CAP,
    poset: HomPoset | None = None,
) -> Matching:
    """The acyclic matching that collapses the hom poset of ``(g, T_n)``
    (``T_n`` the transitive tournament) to a single critical cell.

    Peels the DAG ``g`` one sink layer at a time.  A sink at peel level
    ``l`` gets the value ``n - 1 - l``; among the cells agreeing with all
    previously frozen sinks, those containing the value at the current sink
    are matched with the cells obtained by removing it.  The single
    unmatched cell is the homomorphism sending each vertex to its level
    value.

    Raises :class:`NotAcyclic` for non-DAGs and :class:`EmptyHom` when
    there is no homomorphism (a directed path on more than ``n`` vertices).
    """
    level = _peel_levels(g)
    if g.n and max(level) >= n:
        raise EmptyHom(
            f"no homomorphism: longest directed path has {max(level) + 1} vertices"
        )
    p = poset if poset is not None else hom_poset(g, transitive_tournament(n), cap)
    cells = p.cells
    by_level: dict[int, list[int]] = {}
    for v in range(g.n):
        by_level.setdefault(level[v], []).append(v)
    pairs: list[tuple[MultiHom, MultiHom]] = []
    live = list(range(len(cells)))
    for lvl in sorted(by_level):
        m = n - 1 - lvl
        bit = 1 << m
        for a in sorted(by_level[lvl]):
            survivors = []
            for i in live:
                mask = cells[i].masks[a]
                if mask == bit:
                    survivors.append(i)
                elif mask & bit:
                    lower = MultiHom._from_masks(
                        cells[i].masks[:a] + (mask ^ bit,) + cells[i].masks[a + 1 :]
                    )
                    pairs.append((lower, cells[i]))
                # cells without the bit are exactly the lowers added above
            live = survivors
    return Matching(pairs, [cells[i] for i in live])


# ---------------------------------------------------------------------------
# Facet-driven collapsing of simplicial complexes
# ---------------------------------------------------------------------------


class _FacetComplex:
    """Mutable working copy of a complex: facets plus, for every face, the
    number of facets containing it.  A face is *free* when that count is 1
    and it is not itself the facet."""

    def __init__(self, x: SimplicialComplex):
        self.positions = {v: i for i, v in enumerate(x.vertices)}
        self.facets: set[frozenset] = set()
        self.count: dict[frozenset, int] = {}
        for f in x.facets:
            self.add_facet(f)

    def key(self, face: frozenset) -> tuple[int, ...]:
        return tuple(sorted(self.positions[v] for v in face))

    def add_facet(self, f: frozenset) -> None:
        self.facets.add(f)
        elems = tuple(f)
        for k in range(len(elems) + 1):
            for sub in itertools.combinations(elems, k):
                s = frozenset(sub)
                self.count[s] = self.count.get(s, 0) + 1

    def remove_facet(self, f: frozenset) -> None:
        self.facets.discard(f)
        elems = tuple(f)
        for k in range(len(elems) + 1):
            for sub in itertools.combinations(elems, k):
                s = frozenset(sub)
                c = self.count[s] - 1
                if c:
                    self.count[s] = c
                else:
                    del self.count[s]

    def free_faces(self) -> list[frozenset]:
        return [
            f
            for f, c in self.count.items()
            if c == 1 and f and f not in self.facets
        ]

    def facet_over(self, face: frozenset) -> frozenset:
        for f in self.facets:
            if face <= f:
                return f
        raise KeyError(face)

    def collapse(self, tau: frozenset, sigma: frozenset) -> None:
        """Remove the interval ``[tau, sigma]``; re-expose the rest of the
        boundary of ``sigma`` as new facets where needed."""
        self.remove_facet(sigma)
        for t in tau:
            delta = sigma - {t}
            if self.count.get(delta, 0) == 0:
                self.add_facet(delta)

    def remove_top_cell(self, sigma: frozenset) -> None:
        """Delete just the facet ``sigma``, keeping its boundary."""
        self.remove_facet(sigma)
        for t in sigma:
            delta = sigma - {t}
            if self.count.get(delta, 0) == 0:
                self.add_facet(delta)

    def to_complex(self, vertices: Sequence) -> SimplicialComplex:
        return SimplicialComplex(vertices, self.facets)


class CollapseResult:
    """Outcome of :func:`collapse_free_pairs`: the fixpoint complex and the
    ordered, replayable log of removed free pairs."""

    __slots__ = ("complex", "log")

    def __init__(self, complex: SimplicialComplex, log: tuple):
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "log", log)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("CollapseResult is immutable")

    def __repr__(self) -> str:
        return f"CollapseResult({len(self.log)} collapses)"


def collapse_free_pairs(
    x: SimplicialComplex,
    strategy: str = "lex",
    seed: int | None = None,
) -> CollapseResult:
    """Repeatedly remove free pairs until none remain.

    A free pair is a face ``tau`` properly contained in exactly one facet
    ``sigma``; removing it deletes the whole interval ``[tau, sigma]``.

    * ``strategy="lex"`` picks the smallest pair by
      ``(dim tau, dim sigma, key tau, key sigma)`` each round, so the run
      is fully deterministic.
    * ``strategy="random"`` draws the free face uniformly using ``seed``.

    The returned log can be replayed with :func:`replay_collapses`.
    """
    if strategy not in ("lex", "random"):
        raise InvalidVariant(f"unknown strategy {strategy!r}")
    rng = random.Random(seed)
    work = _FacetComplex(x)
    log: list[tuple[frozenset, frozenset]] = []
    while True:
        free = work.free_faces()
        if not free:
            break
        if strategy == "lex":
            min_dim = min(len(f) for f in free)
            best = None
            for tau in free:
                if len(tau) != min_dim:
                    continue
                sigma = work.facet_over(tau)
                cand = (len(sigma), work.key(tau), work.key(sigma), tau, sigma)
                if best is None or cand[:3] < best[:3]:
                    best = cand
            tau, sigma = best[3], best[4]
        else:
            tau = rng.choice(sorted(free, key=work.key))
            sigma = work.facet_over(tau)
        work.collapse(tau, sigma)
        log.append((tau, sigma))
    return CollapseResult(work.to_complex(x.vertices), tuple(log))


def replay_collapses(
    x: SimplicialComplex, log: Iterable[tuple[frozenset, frozenset]]
) -> SimplicialComplex:
    """Re-apply a collapse log, verifying every step is a free pair."""
    work = _FacetComplex(x)
    for step, (tau, sigma) in enumerate(log):
        if work.count.get(tau, 0) != 1 or tau in work.facets or not tau:
            raise ValueError(f"step {step}: {set(tau)} is not a free face")
        if work.facet_over(tau) != sigma:
            raise ValueError(f"step {step}: {set(sigma)} is not the facet over the face")
        work.collapse(tau, sigma)
    return work.to_complex(x.vertices)


def random_discrete_morse(x: SimplicialComplex, seed: int) -> tuple[int, ...]:
    """Random discrete Morse vector: collapse random free pairs, and when
    stuck remove a random top-dimensional facet as a critical cell.

    Returns the per-dimension critical cell counts, indexed from 0 to the
    dimension of the input.  A collapsible complex can report an optimal
    ``(1, 0, ..., 0)``, but random runs may do worse; the counts always
    bound the Betti numbers from above.
    """
    rng = random.Random(seed)
    top = max((len(f) - 1 for f in x.facets), default=-1)
    counts = [0] * (top + 1)
    work = _FacetComplex(x)
    while work.facets and work.facets != {frozenset()}:
        free = work.free_faces()
        if free:
            tau = rng.choice(sorted(free, key=work.key))
            work.collapse(tau, work.facet_over(tau))
            continue
        dim = max(len(f) for f in work.facets) - 1
        tops = sorted((f for f in work.facets if len(f) - 1 == dim), key=work.key)
        sigma = rng.choice(tops)
        counts[dim] += 1
        work.remove_top_cell(sigma)
    return tuple(counts)
