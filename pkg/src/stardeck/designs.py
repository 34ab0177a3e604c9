"""Data model for partial k-star designs.

A k-star is a copy of the complete bipartite graph K_{1,k}: one center joined
to k leaves.  A partial k-star design of order n is a set of pairwise
edge-disjoint k-stars on the vertex set {0, ..., n-1}; it is a (full) design
when the stars cover every edge of the complete graph K_n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Sequence

CentralFunction = tuple[int, ...]


def _norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Star:
    """A k-star: ``center`` joined to each vertex in ``leaves``."""

    center: int
    leaves: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "leaves", frozenset(self.leaves))

    def edges(self) -> list[tuple[int, int]]:
        """The star's edges as normalized (low, high) pairs."""
        return [_norm_edge(self.center, leaf) for leaf in self.leaves]

    def sorted_leaves(self) -> list[int]:
        return sorted(self.leaves)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with normalized edge set."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")
            norm.add(_norm_edge(a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((a, b) for a in range(n) for b in range(a + 1, n)))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(p) for p in pairs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        cached = self.__dict__.get("_adj")
        if cached is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for a, b in self.edges:
                sets[a].add(b)
                sets[b].add(a)
            cached = tuple(tuple(sorted(s)) for s in sets)
            self.__dict__["_adj"] = cached
        return cached

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return self._adjacency()[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency()[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self._adjacency())

    def has_edge(self, a: int, b: int) -> bool:
        return _norm_edge(a, b) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def is_admissible(n: int, k: int) -> bool:
    """True iff k divides the edge count of K_n, i.e. C(n,2) % k == 0."""
    return (n * (n - 1) // 2) % k == 0


def design_exists(n: int, k: int) -> bool:
    """True iff a full k-star design of order n exists.

    That holds exactly when n is admissible and the order is either trivial
    (n = 1) or large enough to host interleaved stars (n >= 2k).
    """
    return is_admissible(n, k) and (n == 1 or n >= 2 * k)


def threshold_u(n: int, k: int) -> int:
    """The completion threshold u(n, k).

    Every partial k-star design of order n >= 2k with at most u(n, k) stars
    extends to a full design, and u(n, k) + 1 stars can be uncompletable.
    The value is the raw formula, which dips to -1 for some admissible
    orders below 2k (where no design exists and already zero stars are
    uncompletable).
    """
    if n < 2 or k < 2:
        raise ValueError("threshold_u requires n >= 2 and k >= 2")
    if n % k == 1:
        return 2 * (n - 1) // k - 2
    return 2 * ((n - 2) // k) - 1


def threshold_u_ab(n: int, k: int) -> int:
    """The threshold computed from the decomposition n = a*k + b, b in 1..k.

    Cross-check form: 2a - 2 when b = 1, else 2a - 1.  Agrees with
    :func:`threshold_u` on every order.
    """
    if n < 2 or k < 2:
        raise ValueError("threshold_u_ab requires n >= 2 and k >= 2")
    b = n % k
    if b == 0:
        b = k
    a = (n - b) // k
    return 2 * a - 2 if b == 1 else 2 * a - 1


@dataclass(frozen=True)
class PartialDesign:
    """A partial k-star design: order ``n``, star size ``k``, star list."""

    n: int
    k: int
    stars: tuple[Star, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "stars", tuple(self.stars))

    def validate(self) -> list[str]:
        """All rule violations, empty when the design is valid."""
        out: list[str] = []
        if self.n < 1:
            out.append(f"n must be >= 1, got {self.n}")
        if self.k < 2:
            out.append(f"k must be >= 2, got {self.k}")
        covered: dict[tuple[int, int], int] = {}
        for i, star in enumerate(self.stars):
            ok = True
            if not (0 <= star.center < self.n):
                out.append(f"star {i}: center {star.center} out of range")
                ok = False
            for leaf in star.sorted_leaves():
                if not (0 <= leaf < self.n):
                    out.append(f"star {i}: leaf {leaf} out of range")
                    ok = False
            if star.center in star.leaves:
                out.append(f"star {i}: center {star.center} is also a leaf")
                ok = False
            if len(star.leaves) != self.k:
                out.append(
                    f"star {i}: has {len(star.leaves)} leaves, expected {self.k}"
                )
            if not ok:
                continue
            for edge in star.edges():
                if edge in covered:
                    a, b = edge
                    out.append(
                        f"edge {{{a},{b}}} covered twice"
                        f" (stars {covered[edge]} and {i})"
                    )
                else:
                    covered[edge] = i
        return out

    def _require_valid(self) -> None:
        violations = self.validate()
        if violations:
            raise ValueError("invalid design: " + "; ".join(violations))

    def covered_edges(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for star in self.stars:
            out.update(star.edges())
        return out

    def leftover(self) -> Graph:
        """The graph of K_n edges not covered by any star."""
        self._require_valid()
        covered = self.covered_edges()
        edges = (
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if (a, b) not in covered
        )
        return Graph.from_edges(self.n, edges)

    def central_function(self) -> CentralFunction:
        """How many stars each vertex centers.  Pure counting; no validity check."""
        counts = [0] * self.n
        for star in self.stars:
            if 0 <= star.center < self.n:
                counts[star.center] += 1
        return tuple(counts)

    def leaf_vertices(self) -> set[int]:
        out: set[int] = set()
        for star in self.stars:
            out.update(star.leaves)
        return out

    def is_reducible(self) -> bool:
        """True iff the design admits the one-vertex reduction step.

        Requires order n = 1 (mod k), exactly u(n, k) stars, and a vertex
        that centers at least one star while being a leaf of none.
        """
        self._require_valid()
        if self.n % self.k != 1:
            return False
        if self.n < 2 or len(self.stars) != threshold_u(self.n, self.k):
            return False
        return self.reduction_vertex() is not None

    def reduction_vertex(self) -> int | None:
        """Smallest vertex centering a star and appearing as a leaf of none."""
        leaves = self.leaf_vertices()
        central = self.central_function()
        for v in range(self.n):
            if central[v] >= 1 and v not in leaves:
                return v
        return None


def random_design(n: int, k: int, m: int, rng: Random) -> PartialDesign:
    """A uniform-ish random partial design with exactly m stars.

    Each star picks a uniformly random center among vertices with at least k
    uncovered incident edges, then a uniform k-subset of its uncovered
    neighbors.  Raises ValueError when no further star fits.
    """
    if n < 1 or k < 2 or m < 0:
        raise ValueError("random_design requires n >= 1, k >= 2, m >= 0")
    adj: list[set[int]] = [set(range(n)) - {v} for v in range(n)]
    stars: list[Star] = []
    for i in range(m):
        eligible = [v for v in range(n) if len(adj[v]) >= k]
        if not eligible:
            raise ValueError(
                f"cannot place star {i + 1} of {m}:"
                f" no vertex has {k} uncovered incident edges"
            )
        center = rng.choice(eligible)
        leaves = rng.sample(sorted(adj[center]), k)
        for leaf in leaves:
            adj[center].discard(leaf)
            adj[leaf].discard(center)
        stars.append(Star(center, frozenset(leaves)))
    return PartialDesign(n, k, tuple(stars))


# --- JSON design documents -------------------------------------------------

def design_to_doc(design: PartialDesign) -> dict:
    """The design as a JSON-ready document with sorted leaf arrays."""
    return {
        "n": design.n,
        "k": design.k,
        "stars": [
            {"center": star.center, "leaves": star.sorted_leaves()}
            for star in design.stars
        ],
    }


def design_from_doc(doc: object) -> PartialDesign:
    """Parse a design document; unknown keys are ignored.

    Raises ValueError with a description of the first structural problem.
    """
    if not isinstance(doc, dict):
        raise ValueError("design document must be a JSON object")
    for key in ("n", "k", "stars"):
        if key not in doc:
            raise ValueError(f"design document missing key {key!r}")
    n, k, stars = doc["n"], doc["k"], doc["stars"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError("'k' must be an integer")
    if not isinstance(stars, list):
        raise ValueError("'stars' must be a list")
    parsed: list[Star] = []
    for i, item in enumerate(stars):
        if not isinstance(item, dict):
            raise ValueError(f"star {i} must be an object")
        if "center" not in item or "leaves" not in item:
            raise ValueError(f"star {i} must have 'center' and 'leaves'")
        center, leaves = item["center"], item["leaves"]
        if not isinstance(center, int) or isinstance(center, bool):
            raise ValueError(f"star {i}: 'center' must be an integer")
        if not isinstance(leaves, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in leaves
        ):
            raise ValueError(f"star {i}: 'leaves' must be a list of integers")
        parsed.append(Star(center, frozenset(leaves)))
    return PartialDesign(n, k, tuple(parsed))


def canonical_dumps(doc: object) -> str:
    """Canonical JSON: sorted keys, no whitespace.  Byte-stable output."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def dumps_design(design: PartialDesign) -> str:
    return canonical_dumps(design_to_doc(design))


def loads_design(text: str) -> PartialDesign:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return design_from_doc(doc)
