"""Simplicial complex primitives and exact reduced homology.

A :class:`FaceSet` is an arbitrary finite collection of vertex subsets.  It
need not be closed under taking subsets; the exact-degree complexes used by
the multiplicity computation are generally not.  Reduced homology of such a
collection is taken with the boundary operator projected onto the faces
actually present (absent summands are dropped), guarded by an explicit
check that the projected boundary still squares to zero.

Conventions: a face with k vertices lives in chain degree k-1; the empty
face, when present, spans degree -1.  A FaceSet with no faces at all
("void") has no homology in any degree, unlike the complex {empty face}
whose H~_{-1} is one-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable

from ._bits import bits, complement, mask_of, submasks
from .errors import ChainComplexError
from .exact_linalg import integer_rank


@dataclass(frozen=True)
class FaceSet:
    """A finite collection of vertex subsets, stored as bitmasks."""

    vertex_count: int
    faces: frozenset[int]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if not isinstance(self.faces, frozenset):
            object.__setattr__(self, "faces", frozenset(self.faces))
        full = (1 << self.vertex_count) - 1
        for f in self.faces:
            if f & ~full:
                raise ValueError(f"face {f:b} not within the ambient vertex set")

    @classmethod
    def from_vertex_sets(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "FaceSet":
        """Build from explicit 0-based vertex collections."""
        return cls(vertex_count, frozenset(mask_of(f) for f in faces))

    @classmethod
    def closure(cls, vertex_count: int, generators: Iterable[int]) -> "FaceSet":
        """Downward closure of generator masks, always including the empty face."""
        faces = {0}
        for g in generators:
            faces.update(submasks(g))
        return cls(vertex_count, frozenset(faces))

    @classmethod
    def full_simplex(cls, vertex_count: int) -> "FaceSet":
        return cls(vertex_count, frozenset(range(1 << vertex_count)))

    @property
    def is_void(self) -> bool:
        return not self.faces

    def is_subset_closed(self) -> bool:
        return all(f & ~(1 << i) in self.faces for f in self.faces for i in bits(f))

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(bits(f)) for f in self.faces)


def _require_closed(delta: FaceSet, op: str) -> None:
    if not delta.is_subset_closed():
        raise ValueError(f"{op} requires a subset-closed complex")


def _reindex(mask: int, ambient: int) -> int:
    """Compress a face mask into the coordinates of `ambient` (ascending)."""
    out = 0
    for pos, i in enumerate(bits(ambient)):
        if mask >> i & 1:
            out |= 1 << pos
    return out


def restrict(delta: FaceSet, sigma: int) -> FaceSet:
    """Faces of `delta` contained in `sigma`, re-indexed to sigma's vertices."""
    _require_closed(delta, "restrict")
    faces = frozenset(_reindex(f, sigma) for f in delta.faces if f & ~sigma == 0)
    return FaceSet(bin(sigma).count("1"), faces)


def link(delta: FaceSet, sigma: int) -> FaceSet:
    """The link of `sigma`: faces disjoint from sigma whose union with it is a face."""
    _require_closed(delta, "link")
    hat = complement(sigma, delta.vertex_count)
    faces = frozenset(
        _reindex(f, hat) for f in delta.faces
        if f & sigma == 0 and (f | sigma) in delta.faces
    )
    return FaceSet(bin(hat).count("1"), faces)


def alexander_dual(delta: FaceSet) -> FaceSet:
    """The Alexander dual: subsets whose complement is not a face."""
    _require_closed(delta, "alexander_dual")
    n = delta.vertex_count
    if n > 22:
        raise ValueError("alexander_dual scans 2^n subsets; n > 22 unsupported")
    full = (1 << n) - 1
    faces = frozenset(m for m in range(1 << n) if (full ^ m) not in delta.faces)
    return FaceSet(n, faces)


def _boundary_terms(face: int, present: frozenset[int]) -> Dict[int, int]:
    """Projected boundary of one face: target -> +-1, absent targets dropped."""
    out = {}
    for s, i in enumerate(bits(face)):
        target = face ^ (1 << i)
        if target in present:
            out[target] = 1 if s % 2 == 0 else -1
    return out


def reduced_homology(collection: FaceSet) -> Dict[int, int]:
    """Dimensions of rational reduced homology, as a sparse {degree: dim} map.

    Works for arbitrary face collections via the projected boundary; raises
    ChainComplexError if the projection breaks the chain property (never the
    case for subset-closed complexes or exact-degree complexes).
    """
    faces = collection.faces
    if not faces:
        return {}
    by_degree: Dict[int, list[int]] = {}
    for f in faces:
        by_degree.setdefault(bin(f).count("1") - 1, []).append(f)
    for fl in by_degree.values():
        fl.sort()

    # chain check: the square of the projected boundary must vanish
    for f in faces:
        if bin(f).count("1") >= 2:
            acc: Dict[int, int] = {}
            for mid, s1 in _boundary_terms(f, faces).items():
                for tgt, s2 in _boundary_terms(mid, faces).items():
                    acc[tgt] = acc.get(tgt, 0) + s1 * s2
            if any(acc.values()):
                raise ChainComplexError("projected boundary not a complex")

    ranks: Dict[int, int] = {}
    for j, flist in by_degree.items():
        targets = by_degree.get(j - 1)
        if not targets:
            continue
        index = {f: k for k, f in enumerate(targets)}
        rows = []
        for f in flist:
            row = [0] * len(targets)
            for tgt, s in _boundary_terms(f, faces).items():
                row[index[tgt]] = s
            rows.append(row)
        ranks[j] = integer_rank(rows)

    dims = {}
    for j, flist in by_degree.items():
        h = len(flist) - ranks.get(j, 0) - ranks.get(j + 1, 0)
        if h:
            dims[j] = h

    # Euler characteristic consistency (alternating sums must agree)
    chi_faces = sum((-1) ** j * len(fl) for j, fl in by_degree.items())
    chi_hom = sum((-1) ** j * h for j, h in dims.items())
    if chi_faces != chi_hom:
        raise ChainComplexError("Euler characteristic mismatch in homology")
    return dims
