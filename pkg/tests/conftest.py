"""Naive reference implementations the tests compare against.

Everything here recomputes from first principles (definition chasing,
exhaustive search) and shares no code with the package, so agreement is
meaningful. Keep these slow and obvious.
"""

from __future__ import annotations

import itertools
from math import inf


def naive_phi(n: int) -> int:
    count = 0
    for a in range(1, n + 1):
        x, y = a, n
        while y:
            x, y = y, x % y
        count += x == 1
    return count


def naive_order(a: int, n: int) -> int:
    k = 1
    while (k * a) % n != 0:
        k += 1
    return k


def naive_adjacent(a: int, b: int, n: int) -> bool:
    return a != b and naive_order(a, n) != naive_order(b, n)


def naive_edges(n: int) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if naive_adjacent(a, b, n)
    ]


def naive_degree(a: int, n: int) -> int:
    return sum(naive_adjacent(a, b, n) for b in range(n))


def _adjacency(n: int) -> list[list[bool]]:
    return [[naive_adjacent(a, b, n) for b in range(n)] for a in range(n)]


def naive_distances(n: int) -> list[list[float]]:
    """All-pairs shortest paths, Floyd-Warshall."""
    adj = _adjacency(n)
    dist = [[0.0 if a == b else (1.0 if adj[a][b] else inf) for b in range(n)] for a in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def naive_diameter(n: int) -> float:
    dist = naive_distances(n)
    return max(dist[a][b] for a in range(n) for b in range(n))


def naive_connected(n: int) -> bool:
    return naive_diameter(n) < inf


def _bfs_distance(adj: list[list[bool]], source: int, target: int) -> float:
    n = len(adj)
    dist = {source: 0}
    queue = [source]
    while queue:
        x = queue.pop(0)
        if x == target:
            return dist[x]
        for w in range(n):
            if adj[x][w] and w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return inf


def naive_girth(n: int) -> float:
    """Shortest cycle through each edge: remove it, measure the detour.

    For an edge (u, v), the shortest cycle using it has length
    1 + dist(u, v) in the graph without that edge.
    """
    adj = _adjacency(n)
    best = inf
    for u, v in naive_edges(n):
        adj[u][v] = adj[v][u] = False
        best = min(best, _bfs_distance(adj, u, v) + 1)
        adj[u][v] = adj[v][u] = True
    return best


def naive_bipartite(n: int) -> bool:
    """Try every 2-coloring. Exponential; keep n small."""
    edges = naive_edges(n)
    for bits in range(1 << n):
        if all((bits >> a) & 1 != (bits >> b) & 1 for a, b in edges):
            return True
    return False


def naive_clique_number(n: int) -> int:
    best = 1 if n else 0
    for size in range(2, n + 1):
        for combo in itertools.combinations(range(n), size):
            if all(naive_adjacent(a, b, n) for a, b in itertools.combinations(combo, 2)):
                best = size
                break
        else:
            break
    return best


def naive_chromatic_number(n: int) -> int:
    edges = naive_edges(n)
    if not edges:
        return 1
    for k in range(2, n + 1):
        for coloring in itertools.product(range(k), repeat=n):
            if all(coloring[a] != coloring[b] for a, b in edges):
                return k
    return n


def naive_hamiltonian(n: int) -> bool:
    """Check every vertex permutation starting at 0. Factorial; n <= 9."""
    if n < 3:
        return False
    for perm in itertools.permutations(range(1, n)):
        cycle = (0, *perm)
        if all(
            naive_adjacent(cycle[i], cycle[(i + 1) % n], n) for i in range(n)
        ):
            return True
    return False
