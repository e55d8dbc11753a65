"""Multi-indices, their enumeration orders and the intersection graph.

A multi-index is a plain tuple ``(i_1, ..., i_n)`` with entries in
``1..d-1``.  Generators of every presentation are indexed by these tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidInput, SizeLimitExceeded

MultiIndex = tuple[int, ...]

#: refuse to build index sets larger than this
MAX_GENERATORS = 2**20


@dataclass(frozen=True, order=True)
class Params:
    """Ambient dimension ``n`` and hypersurface degree ``d``."""

    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.d, int):
            raise InvalidInput(f"n and d must be integers, got {self.n!r}, {self.d!r}")
        if self.n < 1:
            raise InvalidInput(f"n must be >= 1, got {self.n}")
        if self.d < 2:
            raise InvalidInput(f"d must be >= 2, got {self.d}")

    @property
    def generator_count(self) -> int:
        return (self.d - 1) ** self.n

    def check_size(self, limit: int = MAX_GENERATORS) -> None:
        if self.generator_count > limit:
            raise SizeLimitExceeded(
                f"(d-1)^n = {self.generator_count} exceeds the limit {limit}"
            )

    def is_valid_index(self, i) -> bool:
        return len(i) == self.n and all(1 <= x <= self.d - 1 for x in i)


def as_params(params) -> Params:
    if isinstance(params, Params):
        return params
    n, d = params
    return Params(n, d)


def pairing(i: MultiIndex, j: MultiIndex) -> int:
    """Lattice pairing of the basis vectors labelled by ``i`` and ``j``.

    Returns 0, -1 or -2.
    """
    if len(i) != len(j):
        raise InvalidInput(f"multi-indices of different lengths: {i}, {j}")
    diffs = [a - b for a, b in zip(i, j)]
    if any(abs(x) >= 2 for x in diffs):
        return 0
    if any(x > 0 for x in diffs) and any(x < 0 for x in diffs):
        return 0
    if not any(diffs):
        return -2
    return -1


def natural_indices(params) -> list[MultiIndex]:
    """All multi-indices in increasing lexicographic order."""
    p = as_params(params)
    p.check_size()
    return list(itertools.product(range(1, p.d), repeat=p.n))


def _sort_key(kappa: int, n: int, convention: str):
    if convention == "leading":
        # kappa-th entry decides first, remaining entries keep their positions
        positions = list(range(n))
        if kappa >= 1:
            positions.remove(kappa - 1)
            positions.insert(0, kappa - 1)
    elif convention == "positional":
        positions = list(range(n))
    else:
        raise InvalidInput(f"unknown enumeration convention {convention!r}")

    def key(i):
        return tuple(i[p] if p == kappa - 1 else -i[p] for p in positions)

    return key


def enumerate_indices(params, kappa: int, convention: str = "leading") -> list[MultiIndex]:
    """List the multi-indices in the order used for the loop ``delta_kappa``.

    Every entry is compared by ``>`` except entry ``kappa`` (for ``kappa >= 1``),
    which is compared by ``<``.  With ``convention="leading"`` the natural entry
    is also the most significant one; with ``"positional"`` entries are compared
    strictly left to right.  The two agree for ``kappa in (0, 1)``.
    """
    p = as_params(params)
    if not isinstance(kappa, int) or not 0 <= kappa <= p.n:
        raise InvalidInput(f"kappa must lie in [0, {p.n}], got {kappa!r}")
    return sorted(natural_indices(p), key=_sort_key(kappa, p.n, convention))


@dataclass(frozen=True)
class IntersectionGraph:
    params: Params
    vertices: tuple[MultiIndex, ...]
    edges: frozenset[frozenset]
    triangles: frozenset[frozenset]
    # position in the prec_0 order, used for deterministic emission
    _rank: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    def has_edge(self, i: MultiIndex, j: MultiIndex) -> bool:
        return frozenset((i, j)) in self.edges

    @cached_property
    def adjacency(self) -> dict[MultiIndex, frozenset]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    def ordered_edges(self, order: str = "natural") -> list[tuple[MultiIndex, MultiIndex]]:
        """Edges as pairs, sorted.  ``order`` is ``"natural"`` or ``"prec0"``."""
        return sorted(
            (tuple(sorted(e, key=self._key(order))) for e in self.edges),
            key=lambda pair: tuple(self._key(order)(v) for v in pair),
        )

    def ordered_non_edges(self, order: str = "natural") -> list[tuple[MultiIndex, MultiIndex]]:
        verts = sorted(self.vertices, key=self._key(order))
        return [
            (a, b) for a, b in itertools.combinations(verts, 2) if not self.has_edge(a, b)
        ]

    def ordered_triangles(self, order: str = "natural") -> list[tuple[MultiIndex, ...]]:
        key = self._key(order)
        return sorted(
            (tuple(sorted(t, key=key)) for t in self.triangles),
            key=lambda tri: tuple(key(v) for v in tri),
        )

    def _key(self, order: str):
        if order == "natural":
            return lambda v: v
        if order == "prec0":
            return self._rank.__getitem__
        raise InvalidInput(f"unknown vertex order {order!r}")

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        adj = self.adjacency
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_dot(self, name: str = "G") -> str:
        """Undirected DOT text; vertices and edges in prec_0 order."""
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{label(v)}";')
        for a, b in self.ordered_edges("prec0"):
            lines.append(f'  "{label(a)}" -- "{label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def label(i: MultiIndex) -> str:
    """Concatenated digits, with dots between entries once ``d > 10``."""
    if all(x < 10 for x in i):
        return "".join(map(str, i))
    return ".".join(map(str, i))


def _edge_neighbours(v: MultiIndex, d: int):
    # Nonzero pairing means all differences lie in {0, s} for one sign s.
    n = len(v)
    for s in (1, -1):
        for mask in range(1, 2**n):
            w = tuple(v[k] + s if mask >> k & 1 else v[k] for k in range(n))
            if all(1 <= x <= d - 1 for x in w):
                yield w


def build_graph(params) -> IntersectionGraph:
    p = as_params(params)
    p.check_size()
    vertices = enumerate_indices(p, 0)
    rank = {v: r for r, v in enumerate(vertices)}
    edges = set()
    for v in vertices:
        for w in _edge_neighbours(v, p.d):
            edges.add(frozenset((v, w)))
    adj: dict = {v: set() for v in vertices}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    triangles = set()
    for e in edges:
        a, b = tuple(e)
        for c in adj[a] & adj[b]:
            triangles.add(frozenset((a, b, c)))
    return IntersectionGraph(
        params=p,
        vertices=tuple(vertices),
        edges=frozenset(edges),
        triangles=frozenset(triangles),
        _rank=rank,
    )


def find_single_edge_triple(params, graph: IntersectionGraph | None = None):
    """Three vertices spanning exactly one edge, or ``None``.

    Triples are searched in increasing lexicographic order of the
    multi-indices, so the first hit for ``n = 1`` is ``(1, 2, 4)``.
    """
    g = graph if graph is not None else build_graph(params)
    verts = sorted(g.vertices)
    for tri in itertools.combinations(verts, 3):
        count = sum(g.has_edge(a, b) for a, b in itertools.combinations(tri, 2))
        if count == 1:
            return tri
    return None
