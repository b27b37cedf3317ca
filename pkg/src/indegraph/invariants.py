"""The shared invariant record and the infinite-length sentinel."""

from __future__ import annotations

import math
from dataclasses import dataclass

# Girth of an acyclic graph, diameter of a disconnected one.
INFINITE = math.inf


def is_infinite(value: int | float) -> bool:
    return isinstance(value, float) and math.isinf(value)


def length_str(value: int | float) -> str:
    """Render a girth or diameter value, finite or not."""
    return "INFINITE" if is_infinite(value) else str(value)


@dataclass(frozen=True)
class InvariantSet:
    """Every audited invariant of one graph I_G(Z_n).

    degree_counts holds the degree profile as (degree, multiplicity)
    pairs in descending degree order, so the record stays tiny even when
    n has a billion vertices. clique_number, chromatic_number and
    hamiltonian are None when the producing backend declined them (the
    oracle beyond its exact-search limits).
    """

    n: int
    edge_count: int
    degree_counts: tuple[tuple[int, int], ...]
    connected: bool
    girth: int | float
    diameter: int | float
    bipartite: bool
    partite_count: int
    clique_number: int | None
    chromatic_number: int | None
    hamiltonian: bool | None

    def degree_sequence(self) -> tuple[int, ...]:
        """Expand the profile into the full descending degree sequence."""
        if self.n > 2_000_000:
            raise ValueError(f"refusing to expand {self.n} degrees")
        out: list[int] = []
        for degree, count in self.degree_counts:
            out.extend([degree] * count)
        return tuple(out)
