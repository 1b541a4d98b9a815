"""Integral simplicial homology via Smith normal form.

Everything here is *reduced* homology of the augmented chain complex: a
point has trivial homology everywhere, and the empty complex (whose only
face is the empty set) has one unit of homology in degree ``-1``.  The
void complex has no homology at all.

The Smith normal form routine is a sparse, pure-integer elimination;
Python's arbitrary-precision arithmetic means entry growth is a speed
concern, not a correctness one.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .complexes import Poset, SimplicialComplex, order_complex
from .digraph import DEFAULT_CAP


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Invariant factors and rank of an integer matrix.

    Returns ``(factors, rank)`` where ``factors`` is the full chain of
    positive invariant factors ``d1 | d2 | ... | dr`` (units included) and
    ``rank == len(factors)``.
    """
    rows: dict[int, dict[int, int]] = {}
    for r, row in enumerate(matrix):
        entries = {c: int(v) for c, v in enumerate(row) if v}
        if entries:
            rows[r] = entries
    return _snf_sparse(rows)


def _snf_sparse(rows: dict[int, dict[int, int]]) -> tuple[tuple[int, ...], int]:
    cols: dict[int, dict[int, int]] = {}
    for r, row in rows.items():
        for c, v in row.items():
            cols.setdefault(c, {})[r] = v
    diagonal: list[int] = []

    def set_entry(r: int, c: int, v: int) -> None:
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v
        else:
            row = rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del rows[r]
            col = cols.get(c)
            if col and r in col:
                del col[r]
                if not col:
                    del cols[c]

    def add_col(dst: int, src: int, q: int) -> None:
        # column dst += q * column src
        for r, v in list(cols.get(src, {}).items()):
            set_entry(r, dst, rows.get(r, {}).get(dst, 0) + q * v)

    def add_row(dst: int, src: int, q: int) -> None:
        for c, v in list(rows.get(src, {}).items()):
            set_entry(dst, c, rows.get(dst, {}).get(c, 0) + q * v)

    while rows:
        # Pivot choice: prefer units, then small magnitude, then low fill.
        best_key = None
        pr = pc = 0
        for r, row in rows.items():
            rl = len(row)
            for c, v in row.items():
                a = abs(v)
                key = (a != 1, a, (rl - 1) * (len(cols[c]) - 1), r, c)
                if best_key is None or key < best_key:
                    best_key = key
                    pr, pc = r, c
        # Euclidean steps until the pivot divides its whole row and column.
        while True:
            v = rows[pr][pc]
            offender = next(
                (c for c, x in rows[pr].items() if c != pc and x % v), None
            )
            if offender is not None:
                q = rows[pr][offender] // v
                add_col(offender, pc, -q)
                pc = offender  # remainder is strictly smaller
                continue
            offender = next(
                (r for r, x in cols[pc].items() if r != pr and x % v), None
            )
            if offender is not None:
                q = cols[pc][offender] // v
                add_row(offender, pr, -q)
                pr = offender
                continue
            break
        v = rows[pr][pc]
        for c in [c for c in rows[pr] if c != pc]:
            add_col(c, pc, -(rows[pr][c] // v))
        for r in [r for r in cols[pc] if r != pr]:
            add_row(r, pr, -(cols[pc][r] // v))
        diagonal.append(abs(v))
        set_entry(pr, pc, 0)

    # The elimination yields an equivalent diagonal matrix; sort it into a
    # divisibility chain with gcd/lcm exchanges.
    changed = True
    while changed:
        changed = False
        diagonal.sort()
        for i in range(len(diagonal) - 1):
            a, b = diagonal[i], diagonal[i + 1]
            if b % a:
                g = math.gcd(a, b)
                diagonal[i], diagonal[i + 1] = g, a * b // g
                changed = True
    return tuple(diagonal), len(diagonal)


class HomologyGroups:
    """Finitely generated graded abelian groups, i.e. a rank and a torsion
    tuple per degree.  Zero groups are never stored, so two results compare
    equal iff they describe the same homology."""

    __slots__ = ("_ranks", "_torsion")

    def __init__(
        self,
        ranks: Mapping[int, int] | None = None,
        torsion: Mapping[int, Iterable[int]] | None = None,
    ):
        rs = {d: int(r) for d, r in (ranks or {}).items() if r}
        ts = {}
        for d, factors in (torsion or {}).items():
            t = tuple(int(f) for f in factors if int(f) > 1)
            if t:
                ts[d] = t
        object.__setattr__(self, "_ranks", rs)
        object.__setattr__(self, "_torsion", ts)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("HomologyGroups is immutable")

    def rank(self, degree: int) -> int:
        return self._ranks.get(degree, 0)

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self._torsion.get(degree, ())

    def degrees(self) -> list[int]:
        return sorted(set(self._ranks) | set(self._torsion))

    @property
    def is_trivial(self) -> bool:
        return not self._ranks and not self._torsion

    def is_trivial_from(self, degree: int) -> bool:
        return all(d < degree for d in self.degrees())

    def shifted(self, offset: int) -> "HomologyGroups":
        return HomologyGroups(
            {d + offset: r for d, r in self._ranks.items()},
            {d + offset: t for d, t in self._torsion.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyGroups):
            return NotImplemented
        return self._ranks == other._ranks and self._torsion == other._torsion

    def __hash__(self) -> int:
        return hash(
            (
                tuple(sorted(self._ranks.items())),
                tuple(sorted(self._torsion.items())),
            )
        )

    def __repr__(self) -> str:
        if self.is_trivial:
            return "HomologyGroups(trivial)"
        parts = []
        for d in self.degrees():
            desc = []
            if self.rank(d):
                desc.append(f"Z^{self.rank(d)}" if self.rank(d) > 1 else "Z")
            desc.extend(f"Z/{t}" for t in self.torsion(d))
            parts.append(f"{d}: " + " + ".join(desc))
        return "HomologyGroups({" + ", ".join(parts) + "})"


def sphere_homology(n: int) -> HomologyGroups:
    """Reduced homology of the ``n``-sphere (``n = -1`` gives the empty
    complex's single unit in degree ``-1``)."""
    return HomologyGroups({n: 1})


class ChainComplex:
    """The augmented simplicial chain complex of a finite complex.

    Faces within each dimension are sorted by the complex's face keys;
    boundary matrices carry the usual alternating signs by position.  The
    identity ``boundary . boundary == 0`` is checked at construction.
    """

    __slots__ = ("faces", "_index", "_boundaries")

    def __init__(self, x: SimplicialComplex):
        by_dim = x.faces_by_dimension()
        faces = {d: list(fs) for d, fs in by_dim.items()}
        index = {
            d: {f: i for i, f in enumerate(fs)} for d, fs in faces.items()
        }
        # boundary[d]: column j (a d-face) -> list of (row, sign)
        boundaries: dict[int, list[list[tuple[int, int]]]] = {}
        for d, fs in faces.items():
            if d - 1 not in faces:
                continue
            lower = index[d - 1]
            cols = []
            for f in fs:
                ordered = sorted(f, key=lambda v: x.face_key(frozenset((v,))))
                col = []
                for i, v in enumerate(ordered):
                    col.append((lower[f - {v}], -1 if i % 2 else 1))
                cols.append(col)
            boundaries[d] = cols
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_boundaries", boundaries)
        self._validate()

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("ChainComplex is immutable")

    def _validate(self) -> None:
        for d, cols in self._boundaries.items():
            below = self._boundaries.get(d - 1)
            if not below:
                continue
            for col in cols:
                acc: dict[int, int] = {}
                for r, s in col:
                    for r2, s2 in below[r]:
                        acc[r2] = acc.get(r2, 0) + s * s2
                if any(acc.values()):
                    raise RuntimeError("boundary of boundary is nonzero")

    def dimensions(self) -> list[int]:
        return sorted(self.faces)

    def rank(self, d: int) -> int:
        return len(self.faces.get(d, ()))

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Dense boundary matrix from ``d``-chains to ``(d-1)``-chains."""
        rows = self.rank(d - 1)
        cols = self._boundaries.get(d)
        if cols is None:
            return [[0] * self.rank(d) for _ in range(rows)]
        m = [[0] * len(cols) for _ in range(rows)]
        for j, col in enumerate(cols):
            for r, s in col:
                m[r][j] = s
        return m

    def boundary_sparse(self, d: int) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = {}
        for j, col in enumerate(self._boundaries.get(d, ())):
            for r, s in col:
                rows.setdefault(r, {})[j] = s
        return rows


def reduced_homology(x: SimplicialComplex) -> HomologyGroups:
    """Reduced integral homology of a simplicial complex."""
    cc = ChainComplex(x)
    dims = cc.dimensions()
    if not dims:
        return HomologyGroups()
    snf: dict[int, tuple[tuple[int, ...], int]] = {}
    for d in dims:
        if d - 1 in cc.faces:
            snf[d] = _snf_sparse(cc.boundary_sparse(d))
        else:
            snf[d] = ((), 0)
    ranks = {}
    torsion = {}
    for d in dims:
        factors_in, rank_in = snf.get(d + 1, ((), 0))
        ranks[d] = cc.rank(d) - snf[d][1] - rank_in
        torsion[d] = factors_in
    return HomologyGroups(ranks, torsion)


def homology_of_poset(p: Poset, cap: int = DEFAULT_CAP) -> HomologyGroups:
    """Reduced homology of a poset's order complex.

    Accepts anything with an ``as_poset()`` method (homomorphism posets do)
    besides plain posets.
    """
    if not isinstance(p, Poset):
        p = p.as_poset()
    return reduced_homology(order_complex(p, cap))


class LerayCertificate:
    """Outcome of a Leray check; truthy iff the property holds.

    On failure, ``witness_face`` and ``witness_degree`` identify a face
    whose link has nontrivial reduced homology in too high a degree.
    """

    __slots__ = ("holds", "witness_face", "witness_degree")

    def __init__(self, holds: bool, face=None, degree=None):
        object.__setattr__(self, "holds", holds)
        object.__setattr__(self, "witness_face", face)
        object.__setattr__(self, "witness_degree", degree)

    def __setattr__(self, name: str, value: object) -> None:  # pragma: no cover
        raise AttributeError("LerayCertificate is immutable")

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        if self.holds:
            return "LerayCertificate(holds)"
        return (
            f"LerayCertificate(fails: link of {set(self.witness_face)} has "
            f"homology in degree {self.witness_degree})"
        )


def is_n_leray(x: SimplicialComplex, n: int) -> LerayCertificate:
    """Check that every link (the empty face included, so the complex
    itself too) has trivial reduced homology in degrees ``>= n``."""
    order = sorted(x.faces(), key=lambda f: (len(f), x.face_key(f)))
    for face in order:
        h = reduced_homology(x.link(face))
        for d in h.degrees():
            if d >= n:
                return LerayCertificate(False, face, d)
    return LerayCertificate(True)
