"""Completion pipeline for partial k-star designs.

Any partial design of admissible order n >= 2k with at most u(n, k) stars is
completable, and this module actually builds the completion: pad up to the
threshold, peel off a reducible vertex when possible, then dispatch on the
order regime (direct 2-star pairing for k = 2, relabeling a canonical design
at n = 2k, a closed-form precentral function for small orders, the repaired
minimal precentral function beyond).  Designs over the threshold are
attempted opportunistically and may come back certified-impossible or
unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .designs import (
    Graph,
    PartialDesign,
    Star,
    design_to_doc,
    is_admissible,
    threshold_u,
)
from .extremal import check_blocked_edge
from .oracle import decompose_exhaustive, default_budget
from .precentral import Precentral, find_bad, minimal, suitable
from .realize import Infeasible, realize


class CompletionDefect(RuntimeError):
    """An in-guarantee input hit an internal dead end; this is a bug, not a
    property of the input."""


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of :func:`complete`.

    ``outcome`` is "completed", "impossible", or "unknown".  For impossible
    results ``reason`` is one of "not-admissible", "order-too-small",
    "blocked-edge", "odd-component", or "oracle", with ``certificate``
    carrying the evidence where one exists.
    """

    outcome: str
    design: PartialDesign | None = None
    reason: str | None = None
    certificate: dict | None = None
    trace: tuple[str, ...] = field(default_factory=tuple)

    def to_doc(self) -> dict:
        doc: dict = {"outcome": self.outcome, "trace": list(self.trace)}
        if self.design is not None:
            doc["design"] = design_to_doc(self.design)
        if self.reason is not None:
            doc["reason"] = self.reason
        if self.certificate is not None:
            doc["certificate"] = self.certificate
        return doc


def pad_to_threshold(design: PartialDesign) -> PartialDesign:
    """Greedily add stars until the design has exactly u(n, k) of them.

    Each added star takes the smallest-index vertex with at least k uncovered
    incident edges as center and its k smallest uncovered neighbors as
    leaves.  Below the threshold such a vertex always exists.
    """
    design._require_valid()
    n, k = design.n, design.k
    if not is_admissible(n, k) or n < 2 * k:
        raise ValueError("padding requires an admissible order n >= 2k")
    target = threshold_u(n, k)
    if len(design.stars) > target:
        raise ValueError(
            f"design already has {len(design.stars)} > u = {target} stars"
        )
    leftover = design.leftover()
    adj: list[set[int]] = [set(leftover.neighbors(v)) for v in range(n)]
    stars = list(design.stars)
    while len(stars) < target:
        center = next((v for v in range(n) if len(adj[v]) >= k), None)
        if center is None:
            raise CompletionDefect(
                f"padding stuck at {len(stars)} of {target} stars (n={n}, k={k})"
            )
        leaves = sorted(adj[center])[:k]
        for leaf in leaves:
            adj[center].discard(leaf)
            adj[leaf].discard(center)
        stars.append(Star(center, frozenset(leaves)))
    return PartialDesign(n, k, tuple(stars))


def reduce_design(design: PartialDesign) -> tuple[PartialDesign, int, tuple[Star, ...]]:
    """Remove the smallest vertex that centers stars but is a leaf of none.

    Only defined for reducible designs (order 1 mod k, exactly u stars, such
    a vertex present).  Returns the relabeled smaller design, the removed
    vertex, and its stars under the original labels.  No remaining star
    touches the removed vertex, so dropping it is clean.
    """
    if not design.is_reducible():
        raise ValueError("design is not reducible")
    x = design.reduction_vertex()
    assert x is not None
    removed = tuple(s for s in design.stars if s.center == x)
    kept = [s for s in design.stars if s.center != x]

    def relabel(v: int) -> int:
        return v if v < x else v - 1

    smaller_stars = tuple(
        Star(relabel(s.center), frozenset(relabel(l) for l in s.leaves))
        for s in kept
    )
    smaller = PartialDesign(design.n - 1, design.k, smaller_stars)
    return smaller, x, removed


def decompose_2stars(graph: Graph) -> list[Star] | Infeasible:
    """Decompose a graph into 2-stars (paths of two edges), if possible.

    Possible exactly when every connected component has an even number of
    edges.  Construction: per component, root a spanning tree at the smallest
    vertex and sweep vertices in reverse breadth-first order, pairing each
    vertex's unused non-parent edges two at a time and borrowing the parent
    edge when one is left over.
    """
    n = graph.n
    unused = set(graph.edges)
    seen = [False] * n
    stars: list[Star] = []
    for root in range(n):
        if seen[root] or not graph.neighbors(root):
            continue
        order = [root]
        parent: dict[int, int | None] = {root: None}
        seen[root] = True
        qi = 0
        while qi < len(order):
            w = order[qi]
            qi += 1
            for y in graph.neighbors(w):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = w
                    order.append(y)
        comp_edge_count = sum(graph.degree(v) for v in order) // 2
        if comp_edge_count % 2 != 0:
            return Infeasible("odd-component", frozenset(order))
        for v in reversed(order):
            pending: list[int] = []
            par = parent[v]
            for y in graph.neighbors(v):
                if y == par:
                    continue
                edge = (v, y) if v < y else (y, v)
                if edge in unused:
                    pending.append(y)
            for i in range(0, len(pending) - 1, 2):
                y1, y2 = pending[i], pending[i + 1]
                unused.discard((v, y1) if v < y1 else (y1, v))
                unused.discard((v, y2) if v < y2 else (y2, v))
                stars.append(Star(v, frozenset((y1, y2))))
            if len(pending) % 2 == 1:
                y = pending[-1]
                assert par is not None  # root parity is even by construction
                par_edge = (v, par) if v < par else (par, v)
                assert par_edge in unused
                unused.discard((v, y) if v < y else (y, v))
                unused.discard(par_edge)
                stars.append(Star(v, frozenset((y, par))))
    assert not unused
    return stars


def small_order_precentral(design: PartialDesign) -> Precentral:
    """Closed-form realisable precentral function for small orders.

    Covers non-reducible designs with exactly u(n, k) stars, k >= 3, in the
    range 2k+1 < n <= 3k+1 (the top order only at odd k, where it is
    admissible).  Centers get 2 minus their star count; a computed number of
    highest-leftover-degree non-centers get 2; everyone else gets 1.
    """
    design._require_valid()
    n, k = design.n, design.k
    if k < 3:
        raise ValueError("small_order_precentral requires k >= 3")
    if not is_admissible(n, k):
        raise ValueError(f"n={n} is not admissible for k={k}")
    if not (2 * k + 1 < n <= 3 * k + 1):
        raise ValueError(f"order n={n} outside range 2k+1 < n <= 3k+1 for k={k}")
    if n == 3 * k + 1 and k % 2 == 0:
        raise ValueError(f"order n=3k+1 needs odd k, got k={k}")
    if len(design.stars) != threshold_u(n, k):
        raise ValueError("design must have exactly u(n, k) stars")
    if design.is_reducible():
        raise ValueError("design must be non-reducible")
    leftover = design.leftover()
    central = design.central_function()
    centers = [v for v in range(n) if central[v] >= 1]
    if n <= 3 * k:
        b = n - 2 * k
        assert len(centers) in (2, 3)
        h = 1 if len(centers) == 2 else 0
        assert (b * (b - 1)) % (2 * k) == 0
        boosted = b + h + b * (b - 1) // (2 * k) - 4
    else:
        assert len(centers) in (3, 4)
        h = 1 if len(centers) == 3 else 0
        boosted = h + (3 * k - 7) // 2
    assert 0 <= boosted <= n - len(centers)
    rest = sorted(
        (v for v in range(n) if central[v] == 0),
        key=lambda v: (-leftover.degree(v), v),
    )
    chosen = set(rest[:boosted])
    values = [
        2 - central[v] if central[v] >= 1 else (2 if v in chosen else 1)
        for v in range(n)
    ]
    assert all(v >= 0 for v in values)
    return Precentral.of_graph(leftover, k, values)


@lru_cache(maxsize=None)
def _canonical_design(k: int) -> tuple[Star, ...]:
    """A fixed full k-star design of order 2k, built once per k."""
    graph = Graph.complete(2 * k)
    result = realize(graph, k, minimal(graph, k))
    if isinstance(result, Infeasible):
        raise CompletionDefect(
            f"canonical order-{2 * k} design failed to realize (k={k})"
        )
    return tuple(result)


def _relabel_canonical(design: PartialDesign) -> list[Star]:
    """Map the canonical order-2k design onto the one given star."""
    n, k = design.n, design.k
    star = design.stars[0]
    canon = _canonical_design(k)
    anchor = canon[0]
    mapping: dict[int, int] = {anchor.center: star.center}
    for a, b in zip(anchor.sorted_leaves(), star.sorted_leaves()):
        mapping[a] = b
    rest_from = sorted(set(range(n)) - {anchor.center} - anchor.leaves)
    rest_to = sorted(set(range(n)) - {star.center} - star.leaves)
    for a, b in zip(rest_from, rest_to):
        mapping[a] = b
    return [
        Star(mapping[s.center], frozenset(mapping[l] for l in s.leaves))
        for s in canon
    ]


def _merged(base: PartialDesign, extra: list[Star] | tuple[Star, ...],
            trace: list[str]) -> CompletionResult:
    full = PartialDesign(base.n, base.k, base.stars + tuple(extra))
    violations = full.validate()
    if violations:
        raise CompletionDefect("merged design invalid: " + "; ".join(violations))
    if full.leftover().edge_count != 0:
        raise CompletionDefect("merged design does not cover every edge")
    trace.append("merged")
    return CompletionResult("completed", full, trace=tuple(trace))


def _check_degree_facts(leftover: Graph, k: int) -> None:
    # facts that hold for leftovers of threshold designs in the large regime;
    # violations mean the caller dispatched a graph it should not have
    degrees = leftover.degrees()
    low = [v for v in range(leftover.n) if degrees[v] <= k]
    if len(low) > 1:
        raise CompletionDefect(
            f"expected at most one leftover vertex of degree <= k, found {low}"
        )
    for a, b in leftover.edges:
        if degrees[a] < 2 * k and degrees[b] < 2 * k:
            others = [
                v for v in range(leftover.n)
                if v not in (a, b) and degrees[v] < 2 * k
            ]
            if others:
                raise CompletionDefect(
                    f"adjacent low-degree pair ({a},{b}) plus further "
                    f"low-degree vertices {others} in leftover"
                )


def _realize_or_defect(leftover: Graph, k: int, p: Precentral,
                       context: str) -> list[Star]:
    result = realize(leftover, k, p)
    if isinstance(result, Infeasible):
        witness = sorted(result.vertices)
        raise CompletionDefect(
            f"{context}: realization infeasible, witness subset {witness} "
            "has negative supply-demand balance"
        )
    return result


def complete(
    design: PartialDesign,
    *,
    oracle_budget: int | None = None,
    oracle_max_n: int = 12,
) -> CompletionResult:
    """Complete the design to a full k-star design, or certify why not.

    Designs with at most u(n, k) stars on admissible orders n >= 2k always
    come back "completed" (anything else raises CompletionDefect).  Inputs
    over the threshold are attempted: the result may be "completed", a
    certified "impossible", or "unknown" when only the exhaustive oracle
    could decide and the order or node budget rules it out.
    """
    violations = design.validate()
    if violations:
        raise ValueError("invalid design: " + "; ".join(violations))
    n, k = design.n, design.k
    budget = default_budget() if oracle_budget is None else oracle_budget
    trace: list[str] = ["validated"]
    if n == 1:
        trace.append("trivial-order-1")
        return CompletionResult("completed", design, trace=tuple(trace))
    if not is_admissible(n, k):
        return CompletionResult(
            "impossible", reason="not-admissible", trace=tuple(trace)
        )
    if n < 2 * k:
        return CompletionResult(
            "impossible", reason="order-too-small", trace=tuple(trace)
        )
    u = threshold_u(n, k)
    if len(design.stars) > u:
        return _attempt_over_threshold(design, budget, oracle_max_n, trace)

    work = design
    if len(work.stars) < u:
        work = pad_to_threshold(work)
        trace.append(f"pad+{u - len(design.stars)}")

    if work.is_reducible():
        smaller, x, removed = reduce_design(work)
        trace.append(f"reduce@{x}")
        sub = complete(smaller, oracle_budget=budget, oracle_max_n=oracle_max_n)
        if sub.outcome != "completed" or sub.design is None:
            raise CompletionDefect(
                f"reduced order-{smaller.n} design failed to complete"
            )
        trace.append("recurse{" + ";".join(sub.trace) + "}")

        def relabel(v: int) -> int:
            return v if v < x else v + 1

        stars = [
            Star(relabel(s.center), frozenset(relabel(l) for l in s.leaves))
            for s in sub.design.stars
        ]
        stars.extend(removed)
        # the removed vertex's uncovered edges, in k-sized blocks
        taken = set().union(*(s.leaves for s in removed))
        free = sorted(set(range(n)) - {x} - taken)
        assert len(free) % k == 0
        for i in range(0, len(free), k):
            stars.append(Star(x, frozenset(free[i:i + k])))
        full = PartialDesign(n, k, tuple(stars))
        if full.validate() or full.leftover().edge_count != 0:
            raise CompletionDefect("reduction merge produced a broken design")
        trace.append("merged")
        return CompletionResult("completed", full, trace=tuple(trace))

    if k == 2:
        pairing = decompose_2stars(work.leftover())
        if isinstance(pairing, Infeasible):
            raise CompletionDefect(
                "threshold design leftover has an odd component: "
                f"{sorted(pairing.vertices)}"
            )
        trace.append("construction=2star")
        return _merged(work, pairing, trace)

    if n == 2 * k:
        trace.append("construction=relabel-2k")
        mapped = _relabel_canonical(work)
        full = PartialDesign(n, k, tuple(mapped))
        if work.stars[0] not in full.stars:
            raise CompletionDefect("relabeled canonical design lost the input star")
        if full.validate() or full.leftover().edge_count != 0:
            raise CompletionDefect("relabeled canonical design is broken")
        trace.append("merged")
        return CompletionResult("completed", full, trace=tuple(trace))

    if n == 2 * k + 1:
        # two stars at order 2k+1 always admit a reduction vertex: a doubled
        # center uses all its edges, and distinct centers cannot both be
        # leaves of each other's star without reusing their joining edge
        raise CompletionDefect(
            "order 2k+1 threshold design was not reducible; unreachable"
        )

    leftover = work.leftover()
    if n <= 3 * k + 1:
        trace.append("construction=small-order")
        p = small_order_precentral(work)
        stars = _realize_or_defect(leftover, k, p, "small-order construction")
        return _merged(work, stars, trace)

    trace.append("construction=suitable")
    _check_degree_facts(leftover, k)
    p = suitable(leftover, k)
    residue = find_bad(p, leftover, k)
    if residue is not None:
        raise CompletionDefect(
            f"suitable function still flawed on in-scope leftover: {residue}"
        )
    stars = _realize_or_defect(leftover, k, p, "suitable construction")
    return _merged(work, stars, trace)


def _attempt_over_threshold(
    design: PartialDesign, budget: int, oracle_max_n: int, trace: list[str]
) -> CompletionResult:
    """Best-effort handling of designs with more than u(n, k) stars."""
    n, k = design.n, design.k
    trace.append("over-threshold-attempt")
    cert = check_blocked_edge(design)
    if cert is not None:
        trace.append("certificate=blocked-edge")
        return CompletionResult(
            "impossible",
            reason="blocked-edge",
            certificate=cert.to_doc(),
            trace=tuple(trace),
        )
    leftover = design.leftover()
    if k == 2:
        pairing = decompose_2stars(leftover)
        if isinstance(pairing, Infeasible):
            # even edge count per component characterizes 2-star
            # decomposability, so this is a certificate, not a give-up
            trace.append("certificate=odd-component")
            return CompletionResult(
                "impossible",
                reason="odd-component",
                certificate={"odd_component": sorted(pairing.vertices)},
                trace=tuple(trace),
            )
        trace.append("construction=2star")
        return _merged(design, pairing, trace)
    p = suitable(leftover, k)
    result = realize(leftover, k, p)
    if not isinstance(result, Infeasible):
        trace.append("construction=suitable")
        return _merged(design, result, trace)
    trace.append("realize-infeasible")
    if n > oracle_max_n:
        trace.append("oracle=out-of-reach")
        return CompletionResult(
            "unknown", reason="oracle-out-of-reach", trace=tuple(trace)
        )
    oracle = decompose_exhaustive(leftover, k, budget=budget)
    if oracle.status == "found":
        trace.append("construction=oracle")
        assert oracle.stars is not None
        return _merged(design, list(oracle.stars), trace)
    if oracle.status == "none":
        trace.append("certificate=oracle")
        return CompletionResult(
            "impossible",
            reason="oracle",
            certificate={"oracle_nodes": oracle.nodes},
            trace=tuple(trace),
        )
    trace.append("oracle=budget-exceeded")
    return CompletionResult(
        "unknown", reason="oracle-budget-exceeded", trace=tuple(trace)
    )
