"""Multiplicity factors: graded Betti numbers from exact-degree complexes.

The factor attached to a squarefree degree at homological index r is the
rational reduced homology dimension, in degree r-1, of the collection of
generator subsets whose support union equals that degree exactly.  These
factors are independent of the line bundle, so a table over all scanned
degrees is the natural cached object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable

from .simplicial import reduced_homology
from .srscan import DegreeSet, gamma_complex


def multiplicity_factors(degree_set: DegreeSet, degree: int) -> Dict[int, int]:
    """Sparse {r: beta} map for one squarefree degree (nonzero entries only)."""
    dims = reduced_homology(gamma_complex(degree_set, degree))
    return {j + 1: h for j, h in sorted(dims.items())}


@dataclass
class MultiplicityTable:
    """Factor maps per squarefree degree; empty maps mark pure-zero degrees."""

    table: Dict[int, Dict[int, int]]

    def factors(self, degree: int) -> Dict[int, int]:
        return self.table[degree]

    def nonzero_degrees(self) -> list[int]:
        return sorted(d for d, f in self.table.items() if f)


def multiplicity_table(degree_set: DegreeSet, degrees: Iterable[int]) -> MultiplicityTable:
    return MultiplicityTable(
        {deg: multiplicity_factors(degree_set, deg) for deg in degrees}
    )
