"""Registry of stated formulas, each checked against exact ground truth.

A :class:`Claim` pairs a *claimed* evaluator (the formula as stated) with an
*actual* evaluator (engine or oracle) over a finite parameter grid.
:func:`verify` runs every claim and produces a :class:`DiscrepancyReport`.

Verdicts:

``CONFIRMED``  every grid point agrees.
``REFUTED``    some grid point disagrees and the claim is not asymptotic, or
               it still disagrees at the top of the grid.
``PARTIAL``    an eventual claim (one about large parameters) that fails
               somewhere but agrees on the upper half of every group of grid
               points sharing all parameters except the last.

The witness is the first disagreeing grid point in sorted parameter order.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Sequence

import networkx as nx

from .engine import cached_cycle_polynomial
from .families import (
    broder_recurrence_table,
    closed_form_coefficient,
    closed_form_polynomial,
    composite_identity_polynomial,
    consecutive_cycle_recurrence,
    cycle_table_coefficient,
    kaplansky_circular,
    path_restricted_expanded,
    path_restricted_recurrence,
    path_table_coefficient,
    tadpole_coefficient_expansion,
    totals_claim,
)
from .graph import (
    LabeledGraph,
    bridge,
    broom,
    coalesce,
    delete_vertices,
    disjoint_union,
    family,
    pendant,
)
from .oracle import brute_force_polynomial
from .poly import (
    Poly,
    cycle_full,
    cycle_matching,
    fib,
    harmonic,
    lucas,
    path_fib,
    rising_factorial,
    sturm_real_rooted,
)
from .stats import (
    EULER_GAMMA,
    PHI,
    asymptotic_scan,
    default_corpus,
    moments_from_polynomial,
    stated_moment_formula,
    shape_analysis,
)

CONFIRMED, REFUTED, PARTIAL = "CONFIRMED", "REFUTED", "PARTIAL"


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    params: tuple[str, ...]
    grid: tuple[tuple, ...]
    claimed: Callable[..., Any]
    actual: Callable[..., Any]
    tolerance: float | None = None
    eventual: bool = False
    ground_truth: str = "engine"


@dataclass
class ClaimResult:
    claim_id: str
    statement: str
    params: tuple[str, ...]
    grid_size: int
    grid_first: tuple
    grid_last: tuple
    verdict: str
    mismatches: int
    ground_truth: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "statement": self.statement,
            "grid": {"params": list(self.params), "points": self.grid_size,
                     "first": list(self.grid_first), "last": list(self.grid_last)},
            "ground_truth": self.ground_truth,
            "verdict": self.verdict,
            "mismatches": self.mismatches,
            "witness": self.witness,
        }


@dataclass
class DiscrepancyReport:
    results: list[ClaimResult] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {CONFIRMED: 0, PARTIAL: 0, REFUTED: 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    def verdicts(self) -> dict[str, str]:
        return {r.claim_id: r.verdict for r in self.results}

    def to_dict(self) -> dict:
        return {"claims": len(self.results), "summary": self.counts(),
                "results": [r.to_dict() for r in self.results]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_table(self) -> str:
        width = max((len(r.claim_id) for r in self.results), default=10)
        lines = [f"{'claim':<{width}}  verdict    witness"]
        for r in self.results:
            wit = ""
            if r.witness:
                point = ", ".join(f"{k}={v}" for k, v in r.witness["params"].items())
                wit = f"({point}) claimed {r.witness['claimed']}, actual {r.witness['actual']}"
            lines.append(f"{r.claim_id:<{width}}  {r.verdict:<9}  {wit}")
        c = self.counts()
        lines.append(f"{len(self.results)} claims: {c[CONFIRMED]} confirmed, "
                     f"{c[PARTIAL]} partial, {c[REFUTED]} refuted")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# comparison and rendering
# ---------------------------------------------------------------------------

def render_value(value) -> Any:
    """JSON-safe rendering: big integers and fractions become strings."""
    if isinstance(value, Poly):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (tuple, list)):
        return [render_value(v) for v in value]
    return str(value)


def _agree(claimed, actual, tolerance: float | None) -> bool:
    if isinstance(claimed, (tuple, list)) and isinstance(actual, (tuple, list)):
        return len(claimed) == len(actual) and all(_agree(c, a, tolerance) for c, a in zip(claimed, actual))
    if tolerance is not None and isinstance(claimed, (int, float, Fraction)) and not isinstance(claimed, bool):
        return abs(float(claimed) - float(actual)) <= tolerance
    return claimed == actual


def evaluate(claim: Claim) -> ClaimResult:
    grid = sorted(claim.grid)
    agree: dict[tuple, bool] = {}
    witness = None
    for point in grid:
        c, a = claim.claimed(*point), claim.actual(*point)
        ok = _agree(c, a, claim.tolerance)
        agree[point] = ok
        if not ok and witness is None:
            witness = {"params": {name: render_value(v) for name, v in zip(claim.params, point)},
                       "claimed": render_value(c), "actual": render_value(a)}
    mismatches = sum(1 for ok in agree.values() if not ok)
    if mismatches == 0:
        verdict = CONFIRMED
    elif claim.eventual and _upper_half_agrees(grid, agree):
        verdict = PARTIAL
    else:
        verdict = REFUTED
    return ClaimResult(claim.id, claim.statement, claim.params, len(grid), grid[0], grid[-1],
                       verdict, mismatches, claim.ground_truth, witness)


def _upper_half_agrees(grid: Sequence[tuple], agree: dict[tuple, bool]) -> bool:
    groups: dict[tuple, list[tuple]] = {}
    for point in grid:
        groups.setdefault(point[:-1], []).append(point)
    for points in groups.values():
        upper = points[len(points) // 2:]
        if not all(agree[p] for p in upper):
            return False
    return True


def verify(claims: Sequence[Claim] | None = None, ids: Sequence[str] | None = None) -> DiscrepancyReport:
    """Evaluate ``claims`` (default: the full registry), optionally filtered by id."""
    claims = list(registry() if claims is None else claims)
    if ids is not None:
        wanted = set(ids)
        claims = [c for c in claims if c.id in wanted]
    return DiscrepancyReport([evaluate(c) for c in claims])


# ---------------------------------------------------------------------------
# ground truth helpers
# ---------------------------------------------------------------------------

def truth(g: LabeledGraph) -> Poly:
    return cached_cycle_polynomial(g)


def fam(text: str, r: int = 0, hub_last: bool = False) -> Poly:
    return truth(family(text, r, hub_last))


def random_graph(seed: int, n_min: int = 1, n_max: int = 8, p: float | None = None) -> LabeledGraph:
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    density = rng.uniform(0.2, 0.8) if p is None else p
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < density]
    return LabeledGraph.from_edges(n, edges)


def random_tree(seed: int, n_min: int = 2, n_max: int = 10) -> LabeledGraph:
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    if n <= 2:
        return LabeledGraph.from_edges(n, [(1, 2)] if n == 2 else [])
    t = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return LabeledGraph.from_edges(n, [(u + 1, v + 1) for u, v in t.edges])


def on_no_cycle(g: LabeledGraph, v: int) -> bool:
    """True when every edge at ``v`` is a bridge, i.e. v lies on no cycle.

    The shortest cycle through a vertex is chordless, so this is the same as
    lying on no induced cycle of length >= 3.
    """
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    for w in g.neighbors(v):
        h.remove_edge(v, w)
        linked = nx.has_path(h, v, w)
        h.add_edge(v, w)
        if linked:
            return False
    return True


def _reduction_instance(seed: int) -> tuple[LabeledGraph, int]:
    g = random_graph(seed, 2, 8, p=0.3)
    for v in range(1, g.n + 1):
        if g.degree(v) and on_no_cycle(g, v):
            return g, v
    # no qualifying vertex: hang a pendant off vertex 1 and reduce there
    return pendant(g, 1), g.n + 1


def _reduction_seeds(count: int = 100) -> tuple[tuple[int], ...]:
    return tuple((s,) for s in range(count))


def _undirected_ham_cycles(g: LabeledGraph) -> int:
    """Undirected Hamiltonian cycles by brute force over permutations."""
    n = g.n
    if n < 3:
        return 0
    count = 0
    for perm in itertools.permutations(range(2, n + 1)):
        tour = (1,) + perm
        if all(g.has_edge(tour[i], tour[(i + 1) % n]) for i in range(n)):
            count += 1
    return count // 2


def _cycles_through(g: LabeledGraph, v: int) -> list[list[int]]:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return [c for c in nx.simple_cycles(h) if v in c and len(c) >= 3]


def _matchings(g: LabeledGraph, m: int) -> int:
    edges = g.sorted_edges()
    return sum(1 for combo in itertools.combinations(edges, m)
               if len({x for e in combo for x in e}) == 2 * m)


def _coeff_poly(values) -> Poly:
    return Poly(values)


def _moments(p: Poly) -> tuple[Fraction, Fraction]:
    m = moments_from_polynomial(p)
    return m.mean, m.variance


def _direct_moments(p: Poly) -> tuple[Fraction, Fraction]:
    total = sum(p.coeffs)
    mean = Fraction(sum(k * c for k, c in enumerate(p.coeffs)), total)
    var = Fraction(sum((k - mean) ** 2 * c for k, c in enumerate(p.coeffs)), total)
    return mean, var


def _double_star_restricted(k: int, m: int, r: int) -> tuple[int, int]:
    """Restricted counts (r1, r2) in each star of the hub-first double star."""
    first = {1} | set(range(3, k + 2))
    second = {2} | set(range(k + 2, k + m + 1))
    restricted = set(range(1, r + 1))
    return len(first & restricted), len(second & restricted)


def _path_derivatives(m: int) -> tuple[int, int]:
    p = path_fib(m)
    return p.derivative()(1), p.derivative().derivative()(1)


def _cycle_values(variant: str, m: int) -> tuple[int, int, int]:
    p = cycle_full(m) if variant == "full" else cycle_matching(m)
    return p(1), p.derivative()(1), p.derivative().derivative()(1)


@lru_cache(maxsize=None)
def _scan(family_name: str, lo: int, hi: int, r: int):
    return asymptotic_scan(family_name, range(lo, hi + 1), r)


def _class_of(points: dict[int, Fraction], top: int) -> str:
    """Growth class from local increments scaled by n.

    n * (f(n+2) - f(n)) tends to 2c n for linear growth, to 2c for
    logarithmic growth and to 0 for convergent sequences, so its ratio
    between n = top/2 and n = top - 2 separates the three classes.
    """
    lo, hi = top // 2, top - 2
    d_lo, d_hi = points[lo + 2] - points[lo], points[hi + 2] - points[hi]
    if d_lo <= 0 or d_hi <= 0:
        return "bounded"
    ratio = (hi * d_hi) / (lo * d_lo)
    if ratio > Fraction(3, 2):
        return "linear"
    if ratio > Fraction(3, 4):
        return "logarithmic"
    return "bounded"


# every family here has an exact form confirmed elsewhere in the registry,
# so the test runs well past the engine limit
_CLASS_TOP = 64


def _class_polynomial(name: str, n: int) -> Poly:
    if name == "complete":
        return rising_factorial(1, n)
    if name == "path":
        return path_fib(n)
    if name == "cycle":
        return cycle_full(n)
    if name == "star":
        return Poly.monomial(n) + Poly.monomial(n - 1, n - 1)
    if name == "double_star":
        # bridge identity on the centre edge
        k, m = n // 2, n - n // 2
        return _class_polynomial("star", k) * _class_polynomial("star", m) + Poly.monomial(k + m - 1)
    raise KeyError(name)


def _measured_class(name: str, quantity: str) -> str:
    top = _CLASS_TOP
    points = {}
    for n in (top // 2, top // 2 + 2, top - 2, top):
        mean, var = _moments(_class_polynomial(name, n))
        points[n] = mean if quantity == "mean" else var
    return _class_of(points, top)


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

def _grid(*axes) -> tuple[tuple, ...]:
    return tuple(itertools.product(*axes))


def _nrk(n_range, r_range, k_from_r=True) -> tuple[tuple, ...]:
    return tuple((n, r, k) for n in n_range for r in r_range if r <= n for k in range(r, n + 1))


def _nr(n_range, r_range, min_gap: int = 0) -> tuple[tuple, ...]:
    return tuple((n, r) for n in n_range for r in r_range if r + min_gap <= n)


def _build() -> list[Claim]:
    C: list[Claim] = []
    add = C.append
    corpus = {name: g for name, g in default_corpus(7)}
    names = tuple((name,) for name in sorted(corpus))
    seeds = _reduction_seeds(100)

    # ---- definitions and general identities --------------------------------
    add(Claim("w4-example-vector",
              "W_4 has coefficient vector (k=1..5) = (8, 9, 14, 8, 1)",
              (), ((),), lambda: Poly([0, 8, 9, 14, 8, 1]),
              lambda: brute_force_polynomial(family("wheel:4")), ground_truth="oracle"))
    add(Claim("general-order-identity", "[G, n] = 1 for every graph of order n >= 1",
              ("graph",), tuple(p for p in names if corpus[p[0]].n >= 1),
              lambda name: 1, lambda name: truth(corpus[name])[corpus[name].n]))
    add(Claim("general-edges-identity", "[G, n-1] = |E(G)| for n >= 2",
              ("graph",), tuple(p for p in names if corpus[p[0]].n >= 2),
              lambda name: len(corpus[name].edges), lambda name: truth(corpus[name])[corpus[name].n - 1]))
    add(Claim("hamiltonicity-identity", "[G, 1] = 2 x (number of Hamiltonian cycles) for n >= 3",
              ("graph",), tuple(p for p in names if corpus[p[0]].n >= 3),
              lambda name: 2 * _undirected_ham_cycles(corpus[name]), lambda name: truth(corpus[name])[1]))
    add(Claim("empty-graph", "C(E_n, x) = x^n",
              ("n",), _grid(range(0, 11)), lambda n: Poly.monomial(n), lambda n: fam(f"empty:{n}")))
    add(Claim("complete-classical-stirling", "[K_n, k] = unsigned Stirling numbers: C(K_n, x) = x(x+1)...(x+n-1)",
              ("n",), _grid(range(1, 11)), lambda n: rising_factorial(1, n), lambda n: fam(f"complete:{n}")))
    add(Claim("path-table", "[P_n, k] = C(k, n-k)",
              ("n",), _grid(range(1, 13)),
              lambda n: _coeff_poly(path_table_coefficient(n, k) for k in range(n + 1)),
              lambda n: fam(f"path:{n}")))
    add(Claim("cycle-table", "[C_n, k] = C(k, n-k) + C(k-1, n-k-1) for k > 1 and [C_n, 1] = 2",
              ("n",), _grid(range(3, 13)),
              lambda n: _coeff_poly([0] + [cycle_table_coefficient(n, k) for k in range(1, n + 1)]),
              lambda n: fam(f"cycle:{n}")))
    add(Claim("kaplansky-circular", "C_n has n/(n-m) C(n-m, m) matchings of size m",
              ("n", "m"), tuple((n, m) for n in range(3, 11) for m in range(n // 2 + 1)),
              lambda n, m: kaplansky_circular(n, m), lambda n, m: _matchings(family(f"cycle:{n}"), m),
              ground_truth="direct enumeration"))
    add(Claim("path-polynomial", "C(P_n, x) = sum_{k >= n/2} C(k, n-k) x^k",
              ("n",), _grid(range(1, 13)), lambda n: path_fib(n), lambda n: fam(f"path:{n}")))
    add(Claim("cycle-polynomial", "C(C_n, x) = 2x + sum_{k >= 2} (n/k) C(k, n-k) x^k",
              ("n",), _grid(range(3, 13)), lambda n: closed_form_polynomial("cycle", n),
              lambda n: fam(f"cycle:{n}")))
    add(Claim("cycle-total-lucas-plus-one", "C(C_n, 1) = L_n + 1",
              ("n",), _grid(range(3, 13)), lambda n: totals_claim("cycle", n, 1),
              lambda n: fam(f"cycle:{n}")(1)))
    add(Claim("cycle-total-lucas-plus-two", "C(C_n, 1) = L_n + 2 (companion with the Hamiltonian term)",
              ("n",), _grid(range(3, 13)), lambda n: totals_claim("cycle", n, 1, "corrected"),
              lambda n: fam(f"cycle:{n}")(1)))
    add(Claim("path-total-unrestricted", "C(P_n, 1) = F_{n+1}",
              ("n",), _grid(range(1, 13)), lambda n: totals_claim("path", n, 1, "unrestricted"),
              lambda n: fam(f"path:{n}")(1)))

    # ---- structural identities --------------------------------------------
    def iso_pair(seed):
        g = random_graph(seed, 1, 7)
        m = seed % 4
        return g, disjoint_union(g, family(f"empty:{m}")), m

    add(Claim("isolation-shift", "m isolated vertices: [G, k] = [G - I, k - m]",
              ("seed",), seeds,
              lambda s: truth(iso_pair(s)[0]).shift(iso_pair(s)[2]), lambda s: truth(iso_pair(s)[1])))
    add(Claim("union-multiplicativity", "C(G1 u G2, x) = C(G1, x) C(G2, x)",
              ("seed",), seeds,
              lambda s: truth(random_graph(2 * s, 1, 6)) * truth(random_graph(2 * s + 1, 1, 6)),
              lambda s: truth(disjoint_union(random_graph(2 * s, 1, 6), random_graph(2 * s + 1, 1, 6)))))

    def pendant_case(seed):
        g = random_graph(seed, 1, 7)
        return g, 1 + seed % g.n

    add(Claim("pendant-identity", "C(G +_w v, x) = x (C(G, x) + C(G - w, x))",
              ("seed",), seeds,
              lambda s: (truth(pendant_case(s)[0]) + truth(delete_vertices(*_pc(s)))).shift(1),
              lambda s: truth(pendant(*pendant_case(s)))))

    def _pc(seed):
        g, w = pendant_case(seed)
        return g, [w]

    def reduction_claimed(seed):
        g, v = _reduction_instance(seed)
        acc = truth(delete_vertices(g, [v]))
        for w in g.neighbors(v):
            acc = acc + truth(delete_vertices(g, [v, w]))
        return acc.shift(1)

    add(Claim("vertex-reduction",
              "v on no induced cycle of length >= 3: C(G) = x (C(G - v) + sum_{w ~ v} C(G - {v, w}))",
              ("seed",), seeds, reduction_claimed, lambda s: truth(_reduction_instance(s)[0])))

    def simplified(g: LabeledGraph, v: int) -> Poly:
        w = g.neighbors(v)[0]
        return (truth(delete_vertices(g, [v])) + truth(delete_vertices(g, [v, w])) * g.degree(v)).shift(1)

    add(Claim("reduction-simplified-star",
              "vertex-transitive neighbourhood: C(G) = x (C(G - v) + deg(v) C(G - {v, w})), star centre",
              ("n",), _grid(range(2, 11)), lambda n: simplified(family(f"star:{n}"), 1),
              lambda n: fam(f"star:{n}")))
    add(Claim("reduction-simplified-complete",
              "simplified reduction applied to K_n: C(K_n) = x (C(K_{n-1}) + (n-1) C(K_{n-2}))",
              ("n",), _grid(range(2, 10)), lambda n: simplified(family(f"complete:{n}"), 1),
              lambda n: fam(f"complete:{n}")))

    def classical_rec(n, k):
        prev = fam(f"complete:{n - 1}")
        return prev[k - 1] + (n - 1) * prev[k]

    add(Claim("complete-classical-recurrence", "[K_n, k] = [K_{n-1}, k-1] + (n-1) [K_{n-1}, k]",
              ("n", "k"), tuple((n, k) for n in range(2, 10) for k in range(1, n + 1)),
              classical_rec, lambda n, k: fam(f"complete:{n}")[k]))

    def extended(g: LabeledGraph, v: int, oriented: bool) -> Poly:
        acc = truth(delete_vertices(g, [v]))
        for w in g.neighbors(v):
            acc = acc + truth(delete_vertices(g, [v, w]))
        for cyc in _cycles_through(g, v):
            acc = acc + truth(delete_vertices(g, cyc)) * (2 if oriented else 1)
        return acc.shift(1)

    ext_cases = tuple((f"{f}:{n}", 1) for f, lo in (("wheel", 3), ("complete", 3), ("fan", 2))
                      for n in range(lo, 7))
    add(Claim("extended-reduction-undirected",
              "C(G) = x (C(G - v) + sum_w C(G - {v, w}) + sum_{cycles C through v} C(G - V(C)))",
              ("graph", "v"), ext_cases, lambda name, v: extended(family(name), v, False),
              lambda name, v: fam(name)))
    add(Claim("extended-reduction-oriented",
              "extended reduction with each cycle through v counted once per orientation",
              ("graph", "v"), ext_cases, lambda name, v: extended(family(name), v, True),
              lambda name, v: fam(name)))
    add(Claim("star-polynomial", "C(S_{1,n-1}, x) = x^n + (n-1) x^{n-1}",
              ("n",), _grid(range(1, 13)), lambda n: Poly.monomial(n) + Poly.monomial(n - 1, n - 1),
              lambda n: fam(f"star:{n}")))

    def leaf_case(seed):
        t = random_tree(seed)
        leaf = min(v for v in range(1, t.n + 1) if t.degree(v) == 1)
        return t, leaf, t.neighbors(leaf)[0]

    add(Claim("tree-leaf-recurrence", "leaf v with neighbour u: C(T) = x C(T - v) + x C(T - {v, u})",
              ("seed",), seeds,
              lambda s: (truth(delete_vertices(leaf_case(s)[0], [leaf_case(s)[1]]))
                         + truth(delete_vertices(leaf_case(s)[0], leaf_case(s)[1:]))).shift(1),
              lambda s: truth(leaf_case(s)[0])))

    def forest(seed):
        parts = [random_tree(10 * seed + i, 1 if i else 2, 6) for i in range(1 + seed % 3)]
        g = parts[0]
        for p in parts[1:]:
            g = disjoint_union(g, p)
        return parts, g

    def forest_product(seed):
        acc = Poly.one()
        for t in forest(seed)[0]:
            acc = acc * truth(t)
        return acc

    add(Claim("forest-product", "C(T_1 u ... u T_m, x) = prod C(T_i, x)",
              ("seed",), seeds, forest_product, lambda s: truth(forest(s)[1])))

    def broom_case(seed):
        g = random_graph(seed, 1, 7)
        return g, 1 + seed % g.n, 1 + seed % 3

    add(Claim("broom-identity", "C(G +_w B, x) = x^l (C(G, x) + l C(G - w, x)), |B| = l",
              ("seed",), seeds,
              lambda s: (truth(broom_case(s)[0]) + truth(delete_vertices(broom_case(s)[0], [broom_case(s)[1]]))
                         * broom_case(s)[2]).shift(broom_case(s)[2]),
              lambda s: truth(broom(*broom_case(s)))))

    def bridge_case(seed):
        g1, g2 = random_graph(3 * seed, 1, 6), random_graph(3 * seed + 1, 1, 6)
        return g1, g2, 1 + seed % g1.n, 1 + (seed // 2) % g2.n

    def bridge_claimed(seed):
        g1, g2, u, v = bridge_case(seed)
        return truth(g1) * truth(g2) + (truth(delete_vertices(g1, [u])) * truth(delete_vertices(g2, [v]))).shift(1)

    add(Claim("bridge-identity", "C(G1 -uv- G2, x) = C(G1) C(G2) + x C(G1 - u) C(G2 - v)",
              ("seed",), seeds, bridge_claimed, lambda s: truth(bridge(*bridge_case(s)))))

    coal_grid = tuple((n1, n2, f1, f2, 1, 1)
                      for n1 in range(1, 6) for n2 in range(1, 6)
                      for f1 in ("cycle", "path") for f2 in ("cycle", "path")
                      if (f1 == "path" or n1 >= 3) and (f2 == "path" or n2 >= 3))

    def coal_claimed(n1, n2, f1, f2, u, v):
        return (fam(f"{f1}:{n1}") * fam(f"{f2}:{n2}")).div_x()

    add(Claim("coalescence-identity", "C(G1 ._w G2, x) = C(G1, x) C(G2, x) / x",
              ("n1", "n2", "family1", "family2", "u", "v"), coal_grid, coal_claimed,
              lambda n1, n2, f1, f2, u, v: truth(coalesce(family(f"{f1}:{n1}"), family(f"{f2}:{n2}"), u, v))))

    # ---- composite families ------------------------------------------------
    add(Claim("barbell-polynomial", "C(B_n, x) = C(K_n, x)^2 + x C(K_{n-1}, x)^2",
              ("n",), _grid(range(1, 8)), lambda n: composite_identity_polynomial("barbell", n),
              lambda n: fam(f"barbell:{n}")))
    add(Claim("barbell-factorization", "C(B_n, x) = (x^(n-1 rising))^2 (x^2 + (2n-1) x + (n-1)^2)",
              ("n",), _grid(range(1, 8)), lambda n: composite_identity_polynomial("barbell_factored", n),
              lambda n: fam(f"barbell:{n}")))
    add(Claim("barbell-real-rooted", "C(B_n, x) is real-rooted",
              ("n",), _grid(range(1, 8)), lambda n: True,
              lambda n: sturm_real_rooted(fam(f"barbell:{n}")).real_rooted))
    tad = tuple((n, m) for n in range(3, 8) for m in range(1, 8))
    add(Claim("tadpole-full", "C(T_{n,m}, x) = l_n f_m + x f_{n-1} f_{m-1}, l_n with the 2x term",
              ("n", "m"), tad, lambda n, m: composite_identity_polynomial("tadpole", n, m, variant="full"),
              lambda n, m: fam(f"tadpole:{n},{m}")))
    add(Claim("tadpole-matching", "C(T_{n,m}, x) = l_n f_m + x f_{n-1} f_{m-1}, l_n matching-only",
              ("n", "m"), tad, lambda n, m: composite_identity_polynomial("tadpole", n, m, variant="matching"),
              lambda n, m: fam(f"tadpole:{n},{m}")))
    add(Claim("tadpole-coefficient-expansion",
              "[T_{n,m}, k] = sum_i C(i, m-i)[C(k-i-1, n-k+i) + 2 C(k-i-1, n-k+i-1)] "
              "+ sum_j C(j, m-1-j) C(k-j-1, n-k+j)",
              ("n", "m"), tad,
              lambda n, m: _coeff_poly(tadpole_coefficient_expansion(n, m, k) for k in range(n + m + 1)),
              lambda n, m: fam(f"tadpole:{n},{m}")))
    add(Claim("tadpole-real-rooted", "C(T_{n,m}, x) is real-rooted",
              ("n", "m"), tad, lambda n, m: True,
              lambda n, m: sturm_real_rooted(fam(f"tadpole:{n},{m}")).real_rooted))
    lol = tuple((n, m) for n in range(1, 8) for m in range(1, 8))
    add(Claim("lollipop-polynomial", "C(L_{n,m}, x) = x^(n-1 rising) [(x + n - 1) f_m + x f_{m-1}]",
              ("n", "m"), lol, lambda n, m: composite_identity_polynomial("lollipop", n, m),
              lambda n, m: fam(f"lollipop:{n},{m}")))
    add(Claim("lollipop-real-rooted", "C(L_{n,m}, x) is real-rooted",
              ("n", "m"), lol, lambda n, m: True,
              lambda n, m: sturm_real_rooted(fam(f"lollipop:{n},{m}")).real_rooted))

    # ---- r-restricted: complete and path -----------------------------------
    knr = _nr(range(1, 10), range(1, 4))
    add(Claim("complete-r-polynomial", "C_r(K_n, x) = x^r prod_{i=r}^{n-1} (x + i)",
              ("n", "r"), knr, lambda n, r: rising_factorial(r, n), lambda n, r: fam(f"complete:{n}", r)))
    add(Claim("complete-r-recurrence", "[K_n, k]_r = [K_{n-1}, k-1]_r + (n-1) [K_{n-1}, k]_r from [K_r, r]_r = 1",
              ("n", "r"), knr, lambda n, r: Poly(broder_recurrence_table(n, r)[n]),
              lambda n, r: fam(f"complete:{n}", r)))
    add(Claim("complete-r-total", "B_r(K_n) = n!/r!",
              ("n", "r"), knr, lambda n, r: totals_claim("complete", n, r), lambda n, r: fam(f"complete:{n}", r)(1)))
    pnr = _nr(range(1, 13), range(1, 4))
    add(Claim("path-coefficient", "[P_n, k]_r = C(k-r+1, n-k)",
              ("n", "r", "k"), _nrk(range(1, 13), range(1, 4)),
              lambda n, r, k: closed_form_coefficient("path", n, k, r), lambda n, r, k: fam(f"path:{n}", r)[k]))
    add(Claim("path-total-fibonacci", "B_r(P_n) = F_{n-r+1}",
              ("n", "r"), pnr, lambda n, r: totals_claim("path", n, r), lambda n, r: fam(f"path:{n}", r)(1)))
    add(Claim("path-total-shifted", "B_r(P_n) = F_{n-r+2} (index-shifted companion)",
              ("n", "r"), pnr, lambda n, r: totals_claim("path", n, r, "corrected"),
              lambda n, r: fam(f"path:{n}", r)(1)))
    add(Claim("path-r-shift", "C_r(P_n, x) = x^{r-1} C(P_{n-r+1}, x)",
              ("n", "r"), pnr, lambda n, r: closed_form_polynomial("path", n, r), lambda n, r: fam(f"path:{n}", r)))
    add(Claim("path-r-expanded", "C_r(P_n, x) = sum_j C(n-r+1-j, j) x^{n-j}",
              ("n", "r"), pnr, lambda n, r: path_restricted_expanded(n, r), lambda n, r: fam(f"path:{n}", r)))
    add(Claim("path-r-recurrence",
              "C_r(P_n) = x C_r(P_{n-1}) + x C_r(P_{n-2}), C_r(P_r) = x^r, C_r(P_{r+1}) = x^{r+1} + x^r",
              ("n", "r"), pnr, lambda n, r: path_restricted_recurrence(n, r), lambda n, r: fam(f"path:{n}", r)))

    # ---- complement of the path --------------------------------------------
    pc = _nr(range(2, 11), range(1, 4), min_gap=1)

    def pc_truth(n, r):
        return fam(f"complement_path:{n}", r)

    add(Claim("complement-path-recurrence", "[P_n^c, k]_r = [P_{n-1}^c, k-1]_r + (n-2) [P_{n-1}^c, k]_r",
              ("n", "r", "k"), tuple((n, r, k) for n, r in pc for k in range(r, n + 1)),
              lambda n, r, k: pc_truth(n - 1, r)[k - 1] + (n - 2) * pc_truth(n - 1, r)[k],
              lambda n, r, k: pc_truth(n, r)[k]))
    add(Claim("complement-path-functional-equation", "C_r(P_n^c, x) = (x + n - 2) C_r(P_{n-1}^c, x)",
              ("n", "r"), pc, lambda n, r: Poly([n - 2, 1]) * pc_truth(n - 1, r), pc_truth))
    pcp = _nr(range(1, 11), range(1, 4))
    add(Claim("complement-path-product", "C_r(P_n^c, x) = x^r prod_{i=r-1}^{n-3} (x + i)",
              ("n", "r"), pcp, lambda n, r: closed_form_polynomial("complement_path", n, r, "printed"), pc_truth))
    add(Claim("complement-path-product-to-n-2", "C_r(P_n^c, x) = x^r prod_{i=r-1}^{n-2} (x + i)",
              ("n", "r"), pcp, lambda n, r: closed_form_polynomial("complement_path", n, r, "corrected"), pc_truth))

    # ---- r-restricted cycles -----------------------------------------------
    add(Claim("cycle-r-coefficient", "[C_n, k]_r = C(k-r+2, n-k) for r >= 2",
              ("n", "r", "k"), _nrk(range(3, 13), range(2, 4)),
              lambda n, r, k: closed_form_coefficient("cycle", n, k, r), lambda n, r, k: fam(f"cycle:{n}", r)[k]))
    add(Claim("cycle-r-coefficient-at-r1", "[C_n, k]_1 from the unrestricted cycle formula, including [C_n, 1] = 2",
              ("n", "k"), tuple((n, k) for n in range(3, 13) for k in range(1, n + 1)),
              lambda n, k: closed_form_coefficient("cycle", n, k, 1), lambda n, k: fam(f"cycle:{n}", 1)[k]))
    cnr = _nr(range(3, 13), range(2, 4))
    add(Claim("cycle-r-total", "B_r(C_n) = F_{n-r+3} for r >= 2",
              ("n", "r"), cnr, lambda n, r: totals_claim("cycle", n, r), lambda n, r: fam(f"cycle:{n}", r)(1)))
    add(Claim("cycle-consecutive-polynomial", "consecutive restricted vertices: C_r(C_n, x) = x^{r-1} f_{n-r+1}(x)",
              ("n", "r"), cnr, lambda n, r: closed_form_polynomial("cycle_consecutive", n, r),
              lambda n, r: fam(f"cycle:{n}", r)))
    add(Claim("cycle-consecutive-recurrence",
              "C_r(C_n) = x C_r(C_{n-1}) + x C_r(C_{n-2}), C_r(C_r) = x^r, C_r(C_{r+1}) = x^{r+1} + 2x^r",
              ("n", "r"), cnr, lambda n, r: consecutive_cycle_recurrence(n, r),
              lambda n, r: fam(f"cycle:{n}", r)))
    add(Claim("cycle-consecutive-total", "C_r(C_n, 1) = F_{n-r+2}",
              ("n", "r"), cnr, lambda n, r: totals_claim("cycle_consecutive", n, r),
              lambda n, r: fam(f"cycle:{n}", r)(1)))
    cper = _nr(range(3, 13), range(1, 4), min_gap=3)
    add(Claim("cycle-periodic-matching", "C_r(C_n, x) = x^{r-1} l_{n-r}(x), l matching-only",
              ("n", "r"), cper, lambda n, r: closed_form_polynomial("cycle_periodic", n, r, "matching"),
              lambda n, r: fam(f"cycle:{n}", r)))
    add(Claim("cycle-periodic-full", "C_r(C_n, x) = x^{r-1} l_{n-r}(x), l with the 2x term",
              ("n", "r"), cper, lambda n, r: closed_form_polynomial("cycle_periodic", n, r, "full"),
              lambda n, r: fam(f"cycle:{n}", r)))
    add(Claim("cycle-periodic-total", "C_r(C_n, 1) = L_{n-r}",
              ("n", "r"), cper, lambda n, r: totals_claim("cycle_periodic", n, r),
              lambda n, r: fam(f"cycle:{n}", r)(1)))

    # ---- stars, wheels, fans -----------------------------------------------
    add(Claim("star-r-coefficient", "star on N vertices, centre restricted: [S, N]_r = 1, [S, N-1]_r = N - r",
              ("N", "r", "k"), _nrk(range(2, 11), range(1, 4)),
              lambda n, r, k: closed_form_coefficient("star", n, k, r), lambda n, r, k: fam(f"star:{n}", r)[k]))
    add(Claim("star-r-total", "B_r(star on N vertices) = N - r + 1",
              ("N", "r"), _nr(range(2, 11), range(1, 4)), lambda n, r: totals_claim("star", n, r),
              lambda n, r: fam(f"star:{n}", r)(1)))
    for name, lo in (("wheel", 3), ("fan", 1)):
        grid = tuple((n, r) for n in range(lo, 8) for r in range(1, 4) if r <= n)

        def hub_first(n, r, name=name):
            return fam(f"{name}:{n}", r)

        def hub_last(n, r, name=name):
            return fam(f"{name}:{n}", r, hub_last=True)

        def formula(n, r, name=name):
            return closed_form_polynomial(name, n, r)

        def total(n, r, name=name):
            return totals_claim(name, n, r)

        add(Claim(f"{name}-formula-hub-first", f"closed form for C_r({name}_n) vs hub at vertex 1",
                  ("n", "r"), grid, formula, hub_first))
        add(Claim(f"{name}-formula-hub-last", f"closed form for C_r({name}_n) vs hub at vertex n+1",
                  ("n", "r"), grid, formula, hub_last))
        add(Claim(f"{name}-formula-summed", f"closed form for C_r({name}_n) vs sum of both hub placements",
                  ("n", "r"), grid, formula, lambda n, r, a=hub_first, b=hub_last: a(n, r) + b(n, r)))
        add(Claim(f"{name}-total-hub-first", f"Fibonacci total for {name}_n vs hub at vertex 1",
                  ("n", "r"), grid, total, lambda n, r, a=hub_first: a(n, r)(1)))
        add(Claim(f"{name}-total-hub-last", f"Fibonacci total for {name}_n vs hub at vertex n+1",
                  ("n", "r"), grid, total, lambda n, r, b=hub_last: b(n, r)(1)))
        add(Claim(f"{name}-total-summed", f"Fibonacci total for {name}_n vs sum of both hub placements",
                  ("n", "r"), grid, total, lambda n, r, a=hub_first, b=hub_last: a(n, r)(1) + b(n, r)(1)))

    # ---- moments -----------------------------------------------------------
    add(Claim("moment-definition", "E = C'(1)/C(1), Var = C''(1)/C(1) + E - E^2 match the block-count law",
              ("graph",), tuple(p for p in names if corpus[p[0]].n >= 1),
              lambda name: _moments(truth(corpus[name])), lambda name: _direct_moments(truth(corpus[name])),
              ground_truth="direct summation"))
    add(Claim("path-mean", "E_r(P_n) = r + (m L_{m+1} - F_{m+1}) / (5 F_{m+1}), m = n - r",
              ("n", "r"), pnr, lambda n, r: stated_moment_formula("path", n, r)[0],
              lambda n, r: _moments(fam(f"path:{n}", r))[0]))
    add(Claim("path-variance", "Var_r(P_n) = [5m(m+1)F^2 - A^2 - 5AF] / (25 F^2), A = m L_{m+1} - F_{m+1}",
              ("n", "r"), pnr, lambda n, r: stated_moment_formula("path", n, r)[1],
              lambda n, r: _moments(fam(f"path:{n}", r))[1]))
    add(Claim("path-first-derivative", "C'(P_m, 1) = (m L_{m+1} - F_{m+1}) / 5",
              ("m",), _grid(range(0, 16)), lambda m: Fraction(m * lucas(m + 1) - fib(m + 1), 5),
              lambda m: _path_derivatives(m)[0]))
    add(Claim("path-second-derivative", "C''(P_m, 1) = ((5m^2 - 3m - 2) F_{m+1} - m(m-1) L_{m+1}) / 25",
              ("m",), _grid(range(0, 16)),
              lambda m: Fraction((5 * m * m - 3 * m - 2) * fib(m + 1) - m * (m - 1) * lucas(m + 1), 25),
              lambda m: _path_derivatives(m)[1]))
    add(Claim("path-first-derivative-shifted", "C'(P_m, 1) = (m L_{m+2} + F_m) / 5 (index-shifted companion)",
              ("m",), _grid(range(0, 16)), lambda m: Fraction(m * lucas(m + 2) + fib(m), 5),
              lambda m: _path_derivatives(m)[0]))
    cyr = _nr(range(3, 13), range(2, 4))
    add(Claim("cycle-mean", "E_r(C_n) = r + m F_m / L_m, m = n - r, r >= 2",
              ("n", "r"), cyr, lambda n, r: stated_moment_formula("cycle", n, r)[0],
              lambda n, r: _moments(fam(f"cycle:{n}", r))[0]))
    add(Claim("cycle-variance", "Var_r(C_n) = m(m-1)/5 + 6 m F_m / (5 L_m) - (m F_m / L_m)^2",
              ("n", "r"), cyr, lambda n, r: stated_moment_formula("cycle", n, r)[1],
              lambda n, r: _moments(fam(f"cycle:{n}", r))[1]))
    for variant in ("matching", "full"):
        add(Claim(f"cycle-derivatives-{variant}",
                  f"l_m(1) = L_m, l_m'(1) = m F_m, l_m''(1) = (m/5)((m-1) L_m + F_m), l {variant}",
                  ("m",), _grid(range(3, 16)),
                  lambda m: (lucas(m), m * fib(m), Fraction(m * ((m - 1) * lucas(m) + fib(m)), 5)),
                  lambda m, v=variant: _cycle_values(v, m)))
    add(Claim("complete-mean", "E_r(K_n) = H_{n-1} - H_{r-1} + r",
              ("n", "r"), knr, lambda n, r: stated_moment_formula("complete", n, r)[0],
              lambda n, r: _moments(fam(f"complete:{n}", r))[0]))
    add(Claim("complete-variance", "Var_r(K_n) = sum_{i=r}^{n-1} (1/i - 1/i^2)",
              ("n", "r"), knr, lambda n, r: stated_moment_formula("complete", n, r)[1],
              lambda n, r: _moments(fam(f"complete:{n}", r))[1]))
    add(Claim("complete-moments-rising-factorial", "E_r(K_n) = r + H_n - H_r, Var_r(K_n) = sum_{i=r}^{n-1} i/(i+1)^2",
              ("n", "r"), knr, lambda n, r: stated_moment_formula("complete", n, r, "corrected"),
              lambda n, r: _moments(fam(f"complete:{n}", r))))
    add(Claim("complete-mean-asymptotic", "E_r(K_n) - ln(n - r) -> gamma + r",
              ("r",), _grid(range(1, 4)), lambda r: EULER_GAMMA + r,
              lambda r: _scan("complete", 5, 60, r).limit["mean_offset"], tolerance=0.01))
    add(Claim("complete-variance-asymptotic", "Var_r(K_n) - ln(n - r) -> gamma - pi^2/6",
              ("r",), _grid(range(1, 4)), lambda r: EULER_GAMMA - math.pi ** 2 / 6,
              lambda r: _scan("complete", 5, 60, r).limit["variance_offset"], tolerance=0.01))
    add(Claim("complement-path-mean", "E_r(P_n^c) = r + sum_{j=r}^{n-2} 1/j",
              ("n", "r"), pcp, lambda n, r: stated_moment_formula("complement_path", n, r)[0],
              lambda n, r: _moments(pc_truth(n, r))[0]))
    add(Claim("complement-path-variance", "Var_r(P_n^c) = sum_{j=r}^{n-2} (j-1)/j^2",
              ("n", "r"), pcp, lambda n, r: stated_moment_formula("complement_path", n, r)[1],
              lambda n, r: _moments(pc_truth(n, r))[1]))

    star_grid = tuple((n, r) for n in range(1, 11) for r in range(1, 4) if r <= n + 1)

    def star_truth(n, r):
        return _moments(fam(f"star:{n + 1}", r))

    add(Claim("star-mean", "centre restricted, n leaves: E[X] = r + (n-r+1)/(n-r+2)",
              ("n", "r"), star_grid, lambda n, r: stated_moment_formula("star", n, r)[0],
              lambda n, r: star_truth(n, r)[0]))
    add(Claim("star-mean-with-singletons", "E[X] = r + (n-r+1)/(n-r+2) + (n - r) forced singletons",
              ("n", "r"), star_grid, lambda n, r: stated_moment_formula("star", n, r, "with_singletons")[0],
              lambda n, r: star_truth(n, r)[0]))
    add(Claim("star-mean-from-polynomial", "mean of x^{n+1} + (n-r+1) x^n, i.e. n + 1/(n-r+2)",
              ("n", "r"), star_grid, lambda n, r: n + Fraction(1, n - r + 2), lambda n, r: star_truth(n, r)[0]))
    add(Claim("star-variance", "centre restricted: Var(X) = (n-r+1)/(n-r+2)^2",
              ("n", "r"), star_grid, lambda n, r: stated_moment_formula("star", n, r)[1],
              lambda n, r: star_truth(n, r)[1]))
    add(Claim("star-unrestricted-degenerate", "centre not restricted: E[X] = r + 1, Var(X) = 0",
              ("n", "r"), tuple((n, r) for n in range(2, 11) for r in range(0, 4) if r <= n),
              lambda n, r: stated_moment_formula("star", n, r, "unrestricted"),
              lambda n, r: _moments(fam(f"star:{n + 1}", r, hub_last=True))))

    ds_grid = tuple((k, m, r) for k in range(2, 6) for m in range(2, 6) for r in range(2, 5))

    def ds_params(k, m, r):
        return _double_star_restricted(k, m, r)

    add(Claim("double-star-polynomial", "C_r(S_{k,n-k}) = star(k, r1) star(n-k, r2) + x star'(k) star'(n-k)",
              ("k", "m", "r"), ds_grid,
              lambda k, m, r: composite_identity_polynomial("double_star", k, m, *ds_params(k, m, r)),
              lambda k, m, r: fam(f"double_star:{k},{m}", r)))
    add(Claim("double-star-moments", "both centres restricted: E = r + 2 + a/(a+1) + b/(b+1), "
              "Var = a/(a+1)^2 + b/(b+1)^2, a = k - r1, b = n - k - r2",
              ("k", "m", "r"), ds_grid,
              lambda k, m, r: stated_moment_formula("double_star", k + m, r, "center", k=k,
                                                 r1=ds_params(k, m, r)[0], r2=ds_params(k, m, r)[1]),
              lambda k, m, r: _moments(fam(f"double_star:{k},{m}", r))))
    add(Claim("double-star-unrestricted", "centres not restricted: E = r + 2, Var = 0",
              ("k", "m", "r"), tuple((k, m, r) for k in range(2, 6) for m in range(2, 6) for r in range(0, 4)),
              lambda k, m, r: stated_moment_formula("double_star", k + m, r, "unrestricted"),
              lambda k, m, r: _moments(fam(f"double_star:{k},{m}", r, hub_last=True))))
    add(Claim("harper-star-shape", "C(S_{1,n-1}, x) = x^{n-1}(x + n - 1): log-concave, unimodal, real-rooted",
              ("n",), _grid(range(2, 13)), lambda n: (True, True, True),
              lambda n: (lambda v: (v.log_concave, v.unimodal, v.real_rooted))(shape_analysis(fam(f"star:{n}")))))

    # ---- dense graphs and asymptotics --------------------------------------
    dense = tuple((f, n) for f, lo in (("complement_cycle", 5), ("complement_path", 4)) for n in range(lo, 14))
    add(Claim("dense-mean-growth", "min degree >= n - C: E[X] = log n + O(1), read as |E[X] - H_n| <= 3",
              ("family", "n"), dense, lambda f, n: float(harmonic(n)),
              lambda f, n: float(_moments(fam(f"{f}:{n}"))[0]), tolerance=3.0, eventual=True))
    add(Claim("dense-variance-growth", "min degree >= n - C: Var(X) = log n + O(1), read as |Var - H_n| <= 3",
              ("family", "n"), dense, lambda f, n: float(harmonic(n)),
              lambda f, n: float(_moments(fam(f"{f}:{n}"))[1]), tolerance=3.0, eventual=True))
    add(Claim("dense-real-rooted", "min degree >= n - C: C_r(G_n, x) real-rooted for large n",
              ("family", "n"), dense, lambda f, n: True,
              lambda f, n: sturm_real_rooted(fam(f"{f}:{n}")).real_rooted, eventual=True))
    slope_claims = (
        ("path", 1, "mean_slope", "1/(phi+2)", 1 / (PHI + 2)),
        ("path", 1, "mean_slope", "1/sqrt(5)", 1 / math.sqrt(5)),
        ("path", 1, "variance_slope", "1/(5 sqrt(5))", 1 / (5 * math.sqrt(5))),
        ("cycle", 2, "mean_slope", "1/sqrt(5)", 1 / math.sqrt(5)),
        ("cycle", 2, "variance_slope", "1/(5 sqrt(5))", 1 / (5 * math.sqrt(5))),
    )
    for fam_name, r, quantity, label, value in slope_claims:
        cid = f"{fam_name}-{quantity.replace('_', '-')}-{label.replace('/', '-over-').replace(' ', '').replace('(', '').replace(')', '')}"
        add(Claim(cid, f"{fam_name} {quantity.replace('_', ' ')} -> {label}",
                  ("r",), ((r,),), lambda r, v=value: v,
                  lambda r, f=fam_name, q=quantity: _scan(f, 100, 400, r).limit[q], tolerance=0.001))
    table = {"complete": "logarithmic", "path": "linear", "cycle": "linear", "star": "logarithmic",
             "double_star": "logarithmic"}
    for fam_name, cls in table.items():
        add(Claim(f"asymptotic-class-{fam_name.replace('_', '-')}",
                  f"{fam_name}: mean and variance grow {'like n' if cls == 'linear' else 'like ln n'}",
                  ("quantity",), (("mean",), ("variance",)), lambda q, c=cls: c,
                  lambda q, f=fam_name: _measured_class(f, q), ground_truth="exact moments, local growth test"))
    return C


@lru_cache(maxsize=1)
def registry() -> tuple[Claim, ...]:
    claims = tuple(_build())
    ids = [c.id for c in claims]
    dupes = {i for i in ids if ids.count(i) > 1}
    if dupes:
        raise RuntimeError(f"duplicate claim ids {sorted(dupes)}")
    return claims


def claim_listing() -> list[dict]:
    """Registry as JSON-ready records (without verdicts)."""
    return [{"id": c.id, "statement": c.statement, "params": list(c.params), "points": len(c.grid),
             "ground_truth": c.ground_truth, "eventual": c.eventual, "tolerance": c.tolerance}
            for c in registry()]
