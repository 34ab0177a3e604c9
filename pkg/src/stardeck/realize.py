"""Turning a precentral function into an actual star decomposition.

Realisation is a feasibility problem: every edge must be handed to one of
its two endpoints, and vertex x must end up holding exactly k*p(x) edges.
An augmenting-path search settles it; when it fails, the set of vertices
unreachable in the residual structure witnesses the failure with negative
supply-demand balance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .designs import Graph, Star
from .precentral import VertexFunction, delta_t, vertex_values


@dataclass(frozen=True)
class Infeasible:
    """Certificate value for a failed construction.

    ``kind`` is "cut" for a vertex subset with negative supply-demand
    balance, "odd-component" for a connected component with an odd number
    of edges (2-star pairing).
    """

    kind: str
    vertices: frozenset[int]


def _checked_values(graph: Graph, k: int, p: VertexFunction) -> tuple[int, ...]:
    values = vertex_values(p, graph.n)
    if k < 2:
        raise ValueError("k must be >= 2")
    if any(v < 0 for v in values):
        raise ValueError("precentral values must be nonnegative")
    if sum(values) * k != graph.edge_count:
        raise ValueError(
            f"sum(p)*k = {sum(values) * k} != |E| = {graph.edge_count}"
        )
    return values


def realize(graph: Graph, k: int, p: VertexFunction) -> list[Star] | Infeasible:
    """A k-star decomposition of the graph with center counts p, if one exists.

    Deterministic: edges are placed in sorted order, lower endpoints first,
    and each vertex's assigned edges are grouped into stars k at a time by
    the other endpoint's index.  On infeasibility returns the witness subset
    (all supply-demand slack lives outside the reachable region, so the
    unreachable vertices have demand exceeding their incident edges).
    """
    values = _checked_values(graph, k, p)
    n = graph.n
    edges = graph.sorted_edges()
    cap = [k * v for v in values]
    used = [0] * n
    holder: list[list[int]] = [[] for _ in range(n)]
    assigned = [-1] * len(edges)

    def attach(ei: int, x: int) -> None:
        assigned[ei] = x
        holder[x].append(ei)
        used[x] += 1

    def place(ei: int, x: int, visited: set[int]) -> bool:
        # make room at x, relocating one of its edges if necessary
        if used[x] < cap[x]:
            attach(ei, x)
            return True
        for ej in holder[x]:
            a, b = edges[ej]
            y = b if a == x else a
            if y in visited:
                continue
            visited.add(y)
            if place(ej, y, visited):
                holder[x].remove(ej)
                used[x] -= 1
                attach(ei, x)
                return True
        return False

    for ei, (a, b) in enumerate(edges):
        visited = {a}
        if place(ei, a, visited):
            continue
        visited.add(b)
        place(ei, b, visited)

    if any(e == -1 for e in assigned):
        reached: set[int] = set()
        frontier: list[int] = []
        for ei, owner in enumerate(assigned):
            if owner == -1:
                for x in edges[ei]:
                    if x not in reached:
                        reached.add(x)
                        frontier.append(x)
        while frontier:
            x = frontier.pop()
            for ej in holder[x]:
                a, b = edges[ej]
                y = b if a == x else a
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        witness = frozenset(range(n)) - reached
        assert witness and len(witness) < n
        return Infeasible("cut", witness)

    stars: list[Star] = []
    for v in range(n):
        assert used[v] == cap[v]
        others = sorted(edges[ei][1] if edges[ei][0] == v else edges[ei][0]
                        for ei in holder[v])
        for i in range(0, len(others), k):
            stars.append(Star(v, frozenset(others[i:i + k])))
    return stars


def subset_check(
    graph: Graph, k: int, p: VertexFunction, max_n: int = 20
) -> tuple[int, ...] | None:
    """Exhaustive supply-demand audit over all nonempty proper vertex subsets.

    Returns the first subset (smallest size, then lexicographic) whose demand
    exceeds its incident edge supply, or None when every subset passes; the
    latter is equivalent to p being realisable.  Guarded to small orders.
    """
    if graph.n > max_n:
        raise ValueError(f"subset_check is exponential; n={graph.n} > {max_n}")
    values = _checked_values(graph, k, p)
    edges = graph.sorted_edges()
    for size in range(1, graph.n):
        for subset in combinations(range(graph.n), size):
            chosen = frozenset(subset)
            supply = sum(1 for a, b in edges if a in chosen or b in chosen)
            demand = k * sum(values[x] for x in subset)
            if supply - demand < 0:
                return subset
    return None


def verify_decomposition(
    graph: Graph,
    k: int,
    stars: list[Star] | tuple[Star, ...],
    p: VertexFunction | None = None,
) -> bool:
    """True iff the stars exactly partition the graph's edges into k-stars.

    When p is given, also requires the center counts to match it.
    Never raises on malformed stars; they simply fail the check.
    """
    seen: set[tuple[int, int]] = set()
    counts = [0] * graph.n
    for star in stars:
        if not (0 <= star.center < graph.n):
            return False
        if len(star.leaves) != k or star.center in star.leaves:
            return False
        if not all(0 <= leaf < graph.n for leaf in star.leaves):
            return False
        for edge in star.edges():
            if edge in seen or edge not in graph.edges:
                return False
            seen.add(edge)
        counts[star.center] += 1
    if len(seen) != graph.edge_count:
        return False
    if p is not None:
        try:
            if tuple(counts) != vertex_values(p, graph.n):
                return False
        except ValueError:
            return False
    return True


__all__ = [
    "Infeasible",
    "realize",
    "subset_check",
    "verify_decomposition",
    "delta_t",
]
