"""Closed-form invariants of I_G(Z_n) from the order-class sizes.

The graph is complete multipartite with one part of size phi(d) per
divisor d of n, so every invariant reduces to arithmetic over the
divisors and runs in divisor-enumeration time for any n. The test suite
validates each formula against the brute-force oracle; where the
audited claims are wrong (edge count, clique, chromatic, blanket
Hamiltonicity), the corrected formulas live here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from indegraph.invariants import INFINITE, InvariantSet
from indegraph.zn import (
    check_modulus,
    check_residue,
    divisors,
    element_order,
    euler_phi,
    is_prime,
)


@dataclass(frozen=True)
class PartSizeProfile:
    """Sizes of the order classes of Z_n, ascending."""

    n: int
    sizes: tuple[int, ...]


def part_sizes(n: int) -> PartSizeProfile:
    check_modulus(n)
    return PartSizeProfile(n, tuple(sorted(euler_phi(d) for d in divisors(n))))


def degree(a: int, n: int) -> int:
    """Degree of vertex a: everything outside its own order class."""
    check_residue(a, n)
    return n - euler_phi(element_order(a, n))


def degree_counts(n: int) -> tuple[tuple[int, int], ...]:
    """Degree profile as (degree, multiplicity), descending by degree."""
    check_modulus(n)
    counts: Counter[int] = Counter()
    for d in divisors(n):
        size = euler_phi(d)
        counts[n - size] += size
    return tuple(sorted(counts.items(), reverse=True))


def edge_count(n: int) -> int:
    """(n**2 - sum of squared class sizes) / 2."""
    check_modulus(n)
    squares = sum(euler_phi(d) ** 2 for d in divisors(n))
    return (n * n - squares) // 2


def girth(n: int) -> int | float:
    """3 for composite n (three classes give a triangle), else acyclic."""
    check_modulus(n)
    return INFINITE if is_prime(n) else 3


def diameter(n: int) -> int:
    """1 only for the single edge at n = 2, otherwise 2."""
    check_modulus(n)
    return 1 if n == 2 else 2


def is_bipartite(n: int) -> bool:
    check_modulus(n)
    return is_prime(n)


def is_complete(n: int) -> bool:
    check_modulus(n)
    return n == 2


def clique_chromatic_number(n: int) -> int:
    """Both equal the number of order classes, one vertex per class."""
    check_modulus(n)
    return len(divisors(n))


def is_hamiltonian(n: int) -> bool:
    """Complete multipartite criterion: no class may exceed half of n.

    The largest class is the unit class of size phi(n), so the test is
    2 * phi(n) <= n (and at least three vertices).
    """
    check_modulus(n)
    return n >= 3 and 2 * euler_phi(n) <= n


def invariants(n: int) -> InvariantSet:
    """The full record, by divisor enumeration alone. No graph is built."""
    check_modulus(n)
    return InvariantSet(
        n=n,
        edge_count=edge_count(n),
        degree_counts=degree_counts(n),
        connected=True,
        girth=girth(n),
        diameter=diameter(n),
        bipartite=is_bipartite(n),
        partite_count=clique_chromatic_number(n),
        clique_number=clique_chromatic_number(n),
        chromatic_number=clique_chromatic_number(n),
        hamiltonian=is_hamiltonian(n),
    )
