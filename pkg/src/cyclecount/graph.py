"""Labeled simple graphs, canonical family constructors and composition operations.

Vertices are the integers ``1..n``.  The restricted prefix ``{1..r}`` is part
of the graph value, so two graphs that differ only in ``r`` are different
inputs to the counting engines.  Internally vertex ``i`` maps to bit ``i-1``
of an adjacency bitmask.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import ParameterError, ParseError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    r: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ParameterError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        if not (0 <= self.r <= self.n):
            raise ParameterError(f"restricted prefix r={self.r} outside 0..{self.n}")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ParameterError(f"edge {{{u},{v}}} outside vertex range 1..{self.n}")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], r: int = 0) -> "LabeledGraph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges), r)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask of each vertex, indexed from 0."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return tuple(adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def restricted_mask(self) -> int:
        return (1 << self.r) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v - 1]
        return [i + 1 for i in range(self.n) if mask >> i & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v - 1]).count("1")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_r(self, r: int) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges, r)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.adjacency[v - 1] == 0]

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()}, r={self.r})"


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

FAMILY_ARITY = {
    "empty": 1,
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "double_star": 2,
    "wheel": 1,
    "fan": 1,
    "complement_path": 1,
    "complement_cycle": 1,
    "tadpole": 2,
    "lollipop": 2,
    "barbell": 1,
    "complete_bipartite": 2,
}

# smallest legal value of each size parameter
_FAMILY_MIN = {
    "empty": (0,),
    "path": (0,),
    "cycle": (3,),
    "complete": (0,),
    "star": (1,),
    "double_star": (1, 1),
    "wheel": (3,),
    "fan": (1,),
    "complement_path": (0,),
    "complement_cycle": (3,),
    "tadpole": (3, 1),
    "lollipop": (1, 1),
    "barbell": (1,),
    "complete_bipartite": (0, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family with size parameters.

    Size conventions: ``star:N`` has N vertices (K_{1,N-1}); ``wheel:n`` and
    ``fan:n`` have n rim/path vertices plus a hub; ``double_star:k,m`` joins
    the centres of stars on k and m vertices; ``tadpole:n,m`` and
    ``lollipop:n,m`` bridge a C_n / K_n to the end of a P_m; ``barbell:n``
    bridges two copies of K_n.  ``hub_last`` moves the hub (or both
    double-star centres) to the highest labels.
    """

    family: str
    sizes: tuple[int, ...]
    r: int = 0
    hub_last: bool = False

    def __str__(self):
        text = f"{self.family}:{','.join(map(str, self.sizes))}"
        if self.hub_last:
            text += "@last"
        return text


def parse_family(text: str, r: int = 0, hub_last: bool = False) -> FamilySpec:
    """Parse ``NAME:SIZE[,SIZE]`` (optionally suffixed ``@last``)."""
    if text.endswith("@last"):
        text, hub_last = text[: -len("@last")], True
    name, _, sizes = text.partition(":")
    if name not in FAMILY_ARITY:
        raise ParameterError(f"unknown family {name!r}")
    try:
        values = tuple(int(s) for s in sizes.split(",")) if sizes else ()
    except ValueError:
        raise ParameterError(f"bad size list {sizes!r} for family {name}") from None
    return FamilySpec(name, values, r, hub_last)


def _path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def _cycle_edges(vertices):
    return _path_edges(vertices) + [(vertices[-1], vertices[0])]


def _clique_edges(vertices):
    return list(combinations(vertices, 2))


def make_family(spec: FamilySpec) -> LabeledGraph:
    """Build a family member with its canonical labeling."""
    name, sizes = spec.family, spec.sizes
    if name not in FAMILY_ARITY:
        raise ParameterError(f"unknown family {name!r}")
    if len(sizes) != FAMILY_ARITY[name]:
        raise ParameterError(f"family {name} takes {FAMILY_ARITY[name]} size parameter(s), got {len(sizes)}")
    for value, low in zip(sizes, _FAMILY_MIN[name]):
        if value < low:
            raise ParameterError(f"{name}:{','.join(map(str, sizes))} invalid; sizes must be >= {_FAMILY_MIN[name]}")

    hub_last = spec.hub_last
    if name == "empty":
        n, edges = sizes[0], []
    elif name == "path":
        n = sizes[0]
        edges = _path_edges(list(range(1, n + 1)))
    elif name == "cycle":
        n = sizes[0]
        edges = _cycle_edges(list(range(1, n + 1)))
    elif name == "complete":
        n = sizes[0]
        edges = _clique_edges(range(1, n + 1))
    elif name == "star":
        n = sizes[0]
        hub = n if hub_last else 1
        edges = [(hub, v) for v in range(1, n + 1) if v != hub]
    elif name in ("wheel", "fan"):
        rim = sizes[0]
        n = rim + 1
        hub, ring = (n, list(range(1, n))) if hub_last else (1, list(range(2, n + 1)))
        edges = _cycle_edges(ring) if name == "wheel" else _path_edges(ring)
        edges += [(hub, v) for v in ring]
    elif name == "double_star":
        k, m = sizes
        n = k + m
        if hub_last:
            c1, c2 = n - 1, n
            leaves1 = list(range(1, k))
            leaves2 = list(range(k, n - 1))
        else:
            c1, c2 = 1, 2
            leaves1 = list(range(3, k + 2))
            leaves2 = list(range(k + 2, n + 1))
        edges = [(c1, c2)] + [(c1, v) for v in leaves1] + [(c2, v) for v in leaves2]
    elif name == "complement_path":
        return complement(make_family(FamilySpec("path", sizes, spec.r)))
    elif name == "complement_cycle":
        return complement(make_family(FamilySpec("cycle", sizes, spec.r)))
    elif name in ("tadpole", "lollipop"):
        head, tail = sizes
        n = head + tail
        core = list(range(1, head + 1))
        edges = _cycle_edges(core) if name == "tadpole" else _clique_edges(core)
        edges += _path_edges(list(range(head, n + 1)))
    elif name == "barbell":
        half = sizes[0]
        n = 2 * half
        edges = _clique_edges(range(1, half + 1)) + _clique_edges(range(half + 1, n + 1))
        edges.append((half, half + 1))
    elif name == "complete_bipartite":
        a, b = sizes
        n = a + b
        edges = [(u, v) for u in range(1, a + 1) for v in range(a + 1, n + 1)]
    else:  # pragma: no cover - guarded above
        raise ParameterError(name)
    if not 0 <= spec.r <= n:
        raise ParameterError(f"r={spec.r} outside 0..{n} for {spec}")
    return LabeledGraph.from_edges(n, edges, spec.r)


def family(text: str, r: int = 0, hub_last: bool = False) -> LabeledGraph:
    """Shorthand: ``family("wheel:4", r=1)``."""
    return make_family(parse_family(text, r, hub_last))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _check_vertex(g: LabeledGraph, v, role: str):
    if not isinstance(v, int) or not 1 <= v <= g.n:
        raise ParameterError(f"{role} vertex {v!r} not in 1..{g.n}")


def disjoint_union(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return LabeledGraph.from_edges(g1.n + g2.n, edges, g1.r)


def bridge(g1: LabeledGraph, g2: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Disjoint union plus the edge joining ``u`` in g1 to ``v`` in g2."""
    _check_vertex(g1, u, "bridge anchor")
    _check_vertex(g2, v, "bridge anchor")
    joined = disjoint_union(g1, g2)
    return LabeledGraph.from_edges(joined.n, list(joined.edges) + [(u, v + g1.n)], g1.r)


def coalesce(g1: LabeledGraph, g2: LabeledGraph, u: int, v: int) -> LabeledGraph:
    """Identify ``u`` in g1 with ``v`` in g2; g2's other vertices follow g1's."""
    _check_vertex(g1, u, "coalescence anchor")
    _check_vertex(g2, v, "coalescence anchor")
    relabel = {}
    nxt = g1.n + 1
    for w in range(1, g2.n + 1):
        if w == v:
            relabel[w] = u
        else:
            relabel[w] = nxt
            nxt += 1
    edges = list(g1.edges) + [(relabel[a], relabel[b]) for a, b in g2.edges]
    return LabeledGraph.from_edges(g1.n + g2.n - 1, edges, g1.r)


def broom(g: LabeledGraph, w: int, ell: int) -> LabeledGraph:
    """Attach ``ell`` new pendant vertices to ``w``."""
    _check_vertex(g, w, "broom anchor")
    if ell < 0:
        raise ParameterError(f"broom size must be nonnegative, got {ell}")
    edges = list(g.edges) + [(w, g.n + i) for i in range(1, ell + 1)]
    return LabeledGraph.from_edges(g.n + ell, edges, g.r)


def pendant(g: LabeledGraph, w: int) -> LabeledGraph:
    return broom(g, w, 1)


def build_composite(kind: str, g1: LabeledGraph, g2: LabeledGraph | None = None, **anchors) -> LabeledGraph:
    """Dispatch on ``kind`` in {disjoint_union, bridge, coalesce, pendant, broom}.

    Anchors are passed as keywords: ``u``/``v`` for bridge and coalesce,
    ``w`` for pendant, ``w``/``ell`` for broom.
    """
    try:
        if kind == "disjoint_union":
            return disjoint_union(g1, _need(g2))
        if kind == "bridge":
            return bridge(g1, _need(g2), anchors["u"], anchors["v"])
        if kind == "coalesce":
            return coalesce(g1, _need(g2), anchors["u"], anchors["v"])
        if kind == "pendant":
            return pendant(g1, anchors["w"])
        if kind == "broom":
            return broom(g1, anchors["w"], anchors["ell"])
    except KeyError as exc:
        raise ParameterError(f"{kind} needs anchor {exc.args[0]!r}") from None
    raise ParameterError(f"unknown composite kind {kind!r}")


def _need(g2):
    if g2 is None:
        raise ParameterError("operation needs a second graph")
    return g2


def delete_vertices(g: LabeledGraph, removed: Iterable[int]) -> LabeledGraph:
    """Induced subgraph on the surviving vertices, labels compacted in order.

    Order-preserving compaction always maps the surviving members of
    ``{1..r}`` onto a prefix, so the new ``r`` is their count.
    """
    removed = set(removed)
    for v in removed:
        _check_vertex(g, v, "deleted")
    keep = [v for v in range(1, g.n + 1) if v not in removed]
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    r = sum(1 for v in range(1, g.r + 1) if v not in removed)
    return LabeledGraph.from_edges(len(keep), edges, r)


def induced_subgraph(g: LabeledGraph, kept: Iterable[int]) -> LabeledGraph:
    kept = set(kept)
    return delete_vertices(g, [v for v in range(1, g.n + 1) if v not in kept])


def complement(g: LabeledGraph) -> LabeledGraph:
    edges = [e for e in combinations(range(1, g.n + 1), 2) if e not in g.edges]
    return LabeledGraph.from_edges(g.n, edges, g.r)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def serialize_graph(g: LabeledGraph) -> bytes:
    doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "r": g.r}
    return json.dumps(doc, separators=(",", ":")).encode()


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_graph(text: bytes | str) -> LabeledGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    except UnicodeDecodeError as exc:
        raise ParseError("input is not UTF-8", f"byte {exc.start}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    n = doc.get("n")
    if not _is_int(n) or n < 0:
        raise ParseError("'n' must be a nonnegative integer", "$.n")
    r = doc.get("r", 0)
    if not _is_int(r) or not 0 <= r <= n:
        raise ParseError(f"'r' must be an integer in 0..{n}", "$.r")
    raw = doc.get("edges", [])
    if not isinstance(raw, list):
        raise ParseError("'edges' must be a list", "$.edges")
    seen = set()
    for i, pair in enumerate(raw):
        where = f"$.edges[{i}]"
        if not (isinstance(pair, list) and len(pair) == 2 and all(_is_int(x) for x in pair)):
            raise ParseError("edge must be a pair of integers", where)
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range 1..{n}", where)
        if u == v:
            raise ParseError("self-loop", where)
        e = _norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {{{e[0]},{e[1]}}}", where)
        seen.add(e)
    unknown = set(doc) - {"n", "edges", "r"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", "$")
    return LabeledGraph(n, frozenset(seen), r)
