"""Brute-force oracle for the independent graph of Z_n.

The graph I_G(Z_n) joins two distinct residues exactly when their
additive orders differ. It is materialized here as one neighbor bitmask
per vertex, and every invariant is recomputed from that explicit
structure by a direct algorithm. None of the solvers below lean on the
order-class structure of the graph: they remain valid oracles for the
structural claims they are used to audit, and the pruning rules are
generic necessary conditions, never graph-family shortcuts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd, inf
from typing import Iterator

from indegraph.invariants import INFINITE, InvariantSet
from indegraph.zn import OrderDecomposition, check_modulus

DEFAULT_BUILD_LIMIT = 20_000
DEFAULT_EXACT_SEARCH_LIMIT = 64
DEFAULT_HAMILTONIAN_LIMIT = 24


class CapacityError(Exception):
    """A requested computation exceeds its configured size limit."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class IndependentGraph:
    """I_G(Z_n) with one neighbor bitmask per vertex."""

    n: int
    rows: tuple[int, ...]
    orders: tuple[int, ...]

    # -- basic queries ---------------------------------------------------

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return bool(self.rows[a] >> b & 1)

    def neighbors(self, a: int) -> Iterator[int]:
        self._check_vertex(a)
        return _iter_bits(self.rows[a])

    def degree(self, a: int) -> int:
        self._check_vertex(a)
        return self.rows[a].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return self._degree_tuple

    def edge_count(self) -> int:
        return sum(self._degree_tuple) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges as (a, b) with a < b, lexicographic."""
        for a in range(self.n):
            high = self.rows[a] >> (a + 1)
            for offset in _iter_bits(high):
                yield a, a + 1 + offset

    @cached_property
    def _degree_tuple(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def _check_vertex(self, a: int) -> None:
        if not 0 <= a < self.n:
            raise ValueError(f"vertex {a} out of range [0, {self.n})")

    def _full(self) -> int:
        return (1 << self.n) - 1

    # -- connectivity ----------------------------------------------------

    def _reach(self, start: int) -> int:
        visited = 1 << start
        frontier = visited
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~visited
            visited |= frontier
        return visited

    def is_connected(self) -> bool:
        return self._reach(0) == self._full()

    def _component_count(self) -> int:
        full = self._full()
        seen = 0
        count = 0
        while seen != full:
            rest = full & ~seen
            start = (rest & -rest).bit_length() - 1
            seen |= self._reach(start)
            count += 1
        return count

    # -- distances -------------------------------------------------------

    def diameter(self) -> int | float:
        """Largest shortest-path distance, INFINITE if disconnected."""
        full = self._full()
        best = 0
        for s in range(self.n):
            visited = 1 << s
            frontier = visited
            ecc = 0
            while visited != full:
                nxt = 0
                for v in _iter_bits(frontier):
                    nxt |= self.rows[v]
                    if visited | nxt == full:
                        break
                nxt &= ~visited
                if not nxt:
                    return INFINITE
                visited |= nxt
                frontier = nxt
                ecc += 1
            if ecc > best:
                best = ecc
        return best

    def girth(self) -> int | float:
        """Length of a shortest cycle, INFINITE when the graph is a forest.

        Per-source BFS: every non-tree edge (u, w) seen from source s
        closes a walk of length dist[u] + dist[w] + 1 through s, which
        never undercuts the girth and hits it exactly for sources on a
        shortest cycle. Sources stop as soon as the floor of 3 is hit.
        """
        n = self.n
        if self.edge_count() == n - self._component_count():
            return INFINITE
        best: int | float = inf
        for s in range(n):
            dist = [-1] * n
            parent = [-1] * n
            dist[s] = 0
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                du = dist[u]
                if 2 * du >= best:
                    break
                for w in _iter_bits(self.rows[u]):
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        candidate = du + dist[w] + 1
                        if candidate < best:
                            best = candidate
            if best == 3:
                break
        return best

    # -- colorability ----------------------------------------------------

    def is_bipartite(self) -> bool:
        full = self._full()
        seen = 0
        sides = [0, 0]
        while seen != full:
            rest = full & ~seen
            frontier = rest & -rest
            parity = 0
            while frontier:
                sides[parity] |= frontier
                seen |= frontier
                nxt = 0
                for v in _iter_bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~seen
                parity ^= 1
        for side in sides:
            for v in _iter_bits(side):
                if self.rows[v] & side:
                    return False
        return True

    # -- structure -------------------------------------------------------

    def partite_count(self) -> int:
        """Number of distinct closed non-neighborhoods.

        Vertices sharing their non-neighbor set (themselves included)
        form the parts whenever the graph is complete multipartite.
        """
        full = self._full()
        return len({full ^ row for row in self.rows})


def build(n: int, limit: int = DEFAULT_BUILD_LIMIT) -> IndependentGraph:
    """Construct I_G(Z_n): edges between residues of different order.

    The non-neighbors of a vertex are exactly the members of its own
    order class (itself included), so each adjacency row is the
    complement of one class mask. Moduli above `limit` are refused: the
    rows take n**2 bits in total.
    """
    check_modulus(n)
    if n > limit:
        raise CapacityError(f"n={n} exceeds the graph build limit {limit}")
    orders = tuple(n // gcd(a, n) for a in range(n))
    class_mask: dict[int, int] = {}
    for a, d in enumerate(orders):
        class_mask[d] = class_mask.get(d, 0) | (1 << a)
    full = (1 << n) - 1
    row_of = {d: full ^ mask for d, mask in class_mask.items()}
    return IndependentGraph(n, tuple(row_of[d] for d in orders), orders)


def verify_complete_multipartite(
    graph: IndependentGraph, decomposition: OrderDecomposition
) -> bool:
    """Check adjacency == "different class" for every vertex pair.

    Row equality against the complement of each class mask covers all
    n*(n-1)/2 pairs at once.
    """
    if decomposition.n != graph.n:
        raise ValueError(
            f"decomposition is for n={decomposition.n}, graph has n={graph.n}"
        )
    full = (1 << graph.n) - 1
    covered = 0
    for members in decomposition.classes.values():
        mask = 0
        for a in members:
            mask |= 1 << a
        covered |= mask
        expected = full ^ mask
        for a in members:
            if graph.rows[a] != expected:
                return False
    if covered != full:
        raise ValueError("decomposition does not cover every vertex")
    return True


# -- exact clique and coloring ------------------------------------------


def max_clique(
    graph: IndependentGraph, limit: int = DEFAULT_EXACT_SEARCH_LIMIT
) -> tuple[int, ...]:
    """One maximum clique, by branch and bound with a coloring bound."""
    if graph.n > limit:
        raise CapacityError(f"n={graph.n} exceeds the exact search limit {limit}")
    rows = graph.rows
    best: list[int] = []
    current: list[int] = []

    def expand(candidates: int) -> None:
        nonlocal best
        # Greedy-color the candidate set; a vertex in color class c can
        # extend the clique by at most c more vertices.
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = candidates
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~rows[v] & ~low
                rest ^= low
                order.append(v)
                bounds.append(color)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            sub = candidates & rows[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            candidates &= ~(1 << v)

    expand((1 << graph.n) - 1)
    return tuple(sorted(best))


def clique_number(
    graph: IndependentGraph, limit: int = DEFAULT_EXACT_SEARCH_LIMIT
) -> int:
    return len(max_clique(graph, limit))


def greedy_coloring(graph: IndependentGraph) -> list[int]:
    """Sequential greedy coloring in vertex order; an upper bound for chi."""
    colors = [-1] * graph.n
    for v in range(graph.n):
        used = 0
        for w in _iter_bits(graph.rows[v]):
            if colors[w] >= 0:
                used |= 1 << colors[w]
        colors[v] = (~used & (used + 1)).bit_length() - 1
    return colors


def _k_coloring(graph: IndependentGraph, k: int) -> list[int] | None:
    """Backtracking k-coloring with saturation-first vertex selection."""
    n, rows = graph.n, graph.rows
    colors = [-1] * n
    neighbor_colors = [0] * n
    degrees = graph.degrees()

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (neighbor_colors[v].bit_count(), degrees[v], -v)
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def place(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        # Existing colors plus at most one fresh color: permuting unused
        # colors never helps.
        avail = ~neighbor_colors[v] & ((1 << min(k, used + 1)) - 1)
        for c in _iter_bits(avail):
            colors[v] = c
            touched: list[int] = []
            bit = 1 << c
            for w in _iter_bits(rows[v]):
                if colors[w] < 0 and not neighbor_colors[w] & bit:
                    neighbor_colors[w] |= bit
                    touched.append(w)
            if place(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for w in touched:
                neighbor_colors[w] ^= bit
        return False

    return colors if place(0, 0) else None


def chromatic_number(
    graph: IndependentGraph, limit: int = DEFAULT_EXACT_SEARCH_LIMIT
) -> int:
    """Exact chromatic number, seeded by the clique lower bound."""
    if graph.n > limit:
        raise CapacityError(f"n={graph.n} exceeds the exact search limit {limit}")
    lower = len(max_clique(graph, limit=graph.n))
    upper = max(greedy_coloring(graph)) + 1
    if lower == upper:
        return lower
    for k in range(lower, upper):
        if _k_coloring(graph, k) is not None:
            return k
    return upper


# -- hamiltonicity -------------------------------------------------------


def find_hamiltonian_cycle(
    graph: IndependentGraph, limit: int = DEFAULT_HAMILTONIAN_LIMIT
) -> tuple[int, ...] | None:
    """Exhaustive search for a Hamiltonian cycle.

    Returns the cycle canonicalized to start at vertex 0 with the
    smaller of its two cycle neighbors second, or None when no cycle
    exists. Two generic pruning rules keep refutation fast: every
    unvisited vertex needs two usable connections, and any independent
    set found inside the unvisited region can occupy at most every
    other position of the remaining path.
    """
    if graph.n > limit:
        raise CapacityError(
            f"n={graph.n} exceeds the hamiltonian search limit {limit}"
        )
    n, rows = graph.n, graph.rows
    if n == 2:
        return None
    full = (1 << n) - 1
    by_degree = sorted(range(n), key=lambda v: (rows[v].bit_count(), v))
    path = [0]

    def independent_overflow(unvisited: int) -> bool:
        size = unvisited.bit_count()
        bound = (size + 1) // 2
        count = 0
        avail = unvisited
        for v in by_degree:
            if avail >> v & 1:
                count += 1
                if count > bound:
                    return True
                avail &= ~rows[v] & ~(1 << v)
        return False

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        unvisited = full & ~visited
        usable = unvisited | (1 << v) | 1
        for w in _iter_bits(unvisited):
            if (rows[w] & usable).bit_count() < 2:
                return False
        if independent_overflow(unvisited):
            return False
        for w in _iter_bits(rows[v] & unvisited):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if not extend(0, 1):
        return None
    if path[1] > path[-1]:
        return (0, *reversed(path[1:]))
    return tuple(path)


# -- aggregate ------------------------------------------------------------


def invariants(
    graph: IndependentGraph,
    exact_limit: int = DEFAULT_EXACT_SEARCH_LIMIT,
    hamiltonian_limit: int = DEFAULT_HAMILTONIAN_LIMIT,
) -> InvariantSet:
    """Every invariant the oracle can afford; NP-hard ones may be None."""
    counts = Counter(graph.degrees())
    clique = chromatic = None
    if graph.n <= exact_limit:
        clique = clique_number(graph, limit=exact_limit)
        chromatic = chromatic_number(graph, limit=exact_limit)
    hamiltonian = None
    if graph.n <= hamiltonian_limit:
        hamiltonian = find_hamiltonian_cycle(graph, limit=hamiltonian_limit) is not None
    return InvariantSet(
        n=graph.n,
        edge_count=graph.edge_count(),
        degree_counts=tuple(sorted(counts.items(), reverse=True)),
        connected=graph.is_connected(),
        girth=graph.girth(),
        diameter=graph.diameter(),
        bipartite=graph.is_bipartite(),
        partite_count=graph.partite_count(),
        clique_number=clique,
        chromatic_number=chromatic,
        hamiltonian=hamiltonian,
    )
