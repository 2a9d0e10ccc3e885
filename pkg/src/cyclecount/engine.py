"""Subset-DP engine for r-restricted cycle polynomials.

Two stages:

1. :func:`block_weight_table` counts directed Hamiltonian cycles of every
   induced subgraph.  For each anchor ``a`` (the minimum of the subset) a
   Held-Karp sweep counts directed paths that start at ``a`` and use exactly a
   set of higher vertices; a path ending at ``j`` with ``j ~ a`` closes to one
   directed cycle.  Every directed cycle through ``a`` is produced exactly
   once, so each undirected cycle is counted twice (once per orientation).
   Blocks of size 1 and 2 get weight 1 (for pairs, only when adjacent).

2. :func:`cycle_polynomial` expands on the lowest uncovered vertex ``v``::

       C(U) = x * sum_{B subset U, v in B, |B & R| <= 1} weight(B) * C(U \\ B)

   memoised on ``U`` alone.  The restriction is a per-block condition, so
   nothing else needs to be in the key.  Polynomials travel as a single
   Python integer with each coefficient in its own fixed-width bit field
   (Kronecker packing), which turns multiply-by-x into a shift.
"""
from __future__ import annotations

import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ResourceGuardError
from .graph import LabeledGraph
from .poly import Poly

DEFAULT_ENGINE_LIMIT = 22

# Largest m with m! < 2**63: path counts over <= 21 vertices and closures over
# <= 20 non-anchor vertices stay inside int64.
_INT64_FACTORIAL_LIMIT = 20


def engine_limit(max_n: int | None = None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("CYCLECOUNT_MAX_N")
    return int(env) if env else DEFAULT_ENGINE_LIMIT


def _guard(g: LabeledGraph, max_n: int | None):
    limit = engine_limit(max_n)
    if g.n > limit:
        raise ResourceGuardError(f"engine limited to n <= {limit}, got n = {g.n}")


@dataclass(frozen=True, eq=False)
class BlockWeightTable:
    """Directed-Hamiltonian-cycle weight of every vertex subset.

    ``weights[mask]`` is indexed by bitmask (vertex i is bit i-1); entry 0 is
    unused.  ``by_min[v]`` lists ``(mask, weight)`` for positive-weight masks
    whose lowest vertex is bit ``v``.
    """

    n: int
    weights: np.ndarray
    by_min: tuple[tuple[tuple[int, int], ...], ...]

    def weight_mask(self, mask: int) -> int:
        return int(self.weights[mask])

    def weight(self, subset) -> int:
        mask = 0
        for v in subset:
            mask |= 1 << (v - 1)
        return self.weight_mask(mask)

    def positive_blocks(self) -> int:
        return sum(len(b) for b in self.by_min)


def _anchor_sweep(adj: tuple[int, ...], n: int, a: int, dtype):
    """Weights of all subsets with minimum ``a`` and size >= 3.

    Returns (global masks, weights) arrays.
    """
    h = n - 1 - a
    if h < 2:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=dtype)
    local = np.array([[(adj[a + 1 + i] >> (a + 1 + j)) & 1 for j in range(h)] for i in range(h)], dtype=dtype)
    to_anchor = np.array([(adj[a] >> (a + 1 + j)) & 1 for j in range(h)], dtype=dtype)
    bits = np.int64(1) << np.arange(h, dtype=np.int64)

    start = np.flatnonzero(to_anchor)
    masks = bits[start]
    dp = np.zeros((len(start), h), dtype=dtype)
    dp[np.arange(len(start)), start] = 1

    out_masks, out_weights = [], []
    for size in range(1, h + 1):
        if len(masks) == 0:
            break
        if size >= 2:
            if dtype is not object and size > _INT64_FACTORIAL_LIMIT:
                closed = dp.astype(object) @ to_anchor.astype(object)
            else:
                closed = dp @ to_anchor
            keep = closed != 0
            if keep.any():
                out_masks.append((masks[keep] << (a + 1)) | (1 << a))
                out_weights.append(closed[keep])
        if size == h:
            break
        ext = dp @ local
        new_masks, new_cols, new_vals = [], [], []
        for k in range(h):
            sel = (ext[:, k] != 0) & ((masks & bits[k]) == 0)
            if sel.any():
                new_masks.append(masks[sel] | bits[k])
                new_cols.append(np.full(int(sel.sum()), k, dtype=np.int64))
                new_vals.append(ext[sel, k])
        if not new_masks:
            break
        cat = np.concatenate(new_masks)
        masks, inverse = np.unique(cat, return_inverse=True)
        dp = np.zeros((len(masks), h), dtype=dtype)
        dp[inverse, np.concatenate(new_cols)] = np.concatenate(new_vals)
    if not out_masks:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=dtype)
    if any(w.dtype == object for w in out_weights):
        out_weights = [w.astype(object) for w in out_weights]
    return np.concatenate(out_masks), np.concatenate(out_weights)


def block_weight_table(g: LabeledGraph, max_n: int | None = None, threads: int = 1) -> BlockWeightTable:
    """Weights for all 2^n - 1 nonempty subsets of V(g)."""
    _guard(g, max_n)
    n = g.n
    adj = g.adjacency
    sweep_dtype = np.int64 if n <= _INT64_FACTORIAL_LIMIT + 2 else object
    needs_object = n > _INT64_FACTORIAL_LIMIT + 1
    weights = np.zeros(1 << n, dtype=object if needs_object else np.int64)

    for v in range(n):
        weights[1 << v] = 1
        for u in range(v + 1, n):
            if adj[v] >> u & 1:
                weights[(1 << v) | (1 << u)] = 1

    anchors = range(n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda a: _anchor_sweep(adj, n, a, sweep_dtype), anchors))
    else:
        results = [_anchor_sweep(adj, n, a, sweep_dtype) for a in anchors]
    for masks, ws in results:
        if len(masks):
            weights[masks] = ws.astype(object) if needs_object else ws

    by_min = []
    positive = np.flatnonzero(weights).astype(np.int64)
    lowest = positive & -positive
    for v in range(n):
        sel = positive[lowest == (1 << v)]
        by_min.append(tuple((int(m), int(weights[m])) for m in sel))
    return BlockWeightTable(n, weights, tuple(by_min))


def cycle_polynomial(g: LabeledGraph, max_n: int | None = None, table: BlockWeightTable | None = None) -> Poly:
    """C_r(G, x) by memoised expansion on the lowest uncovered vertex."""
    _guard(g, max_n)
    n = g.n
    if n == 0:
        return Poly.one()
    if table is None:
        table = block_weight_table(g, max_n)
    restricted = g.restricted_mask

    # per-block restriction: a restricted lowest vertex excludes every other
    # restricted vertex from its block
    cands = []
    for v in range(n):
        if restricted >> v & 1:
            other = restricted & ~(1 << v)
            cands.append([(m, w) for m, w in table.by_min[v] if not m & other])
        else:
            cands.append(list(table.by_min[v]))

    field = math.factorial(n).bit_length() + 1
    memo: dict[int, int] = {0: 1}
    dense_weights: list | None = None

    def solve(U: int) -> int:
        nonlocal dense_weights
        got = memo.get(U)
        if got is not None:
            return got
        low = U & -U
        v = low.bit_length() - 1
        free = U ^ low
        if restricted >> v & 1:
            free &= ~restricted
        options = cands[v]
        acc = 0
        if len(options) <= 1 << bin(free).count("1"):
            for m, w in options:
                if m & ~U == 0:
                    acc += w * solve(U ^ m)
        else:
            if dense_weights is None:
                dense_weights = table.weights.tolist()
            sub = free
            while True:
                m = sub | low
                w = dense_weights[m]
                if w:
                    acc += w * solve(U ^ m)
                if not sub:
                    break
                sub = (sub - 1) & free
        acc <<= field
        memo[U] = acc
        return acc

    limit = sys.getrecursionlimit()
    if limit < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    packed = solve(g.full_mask)
    unit = (1 << field) - 1
    coeffs = []
    while packed:
        coeffs.append(packed & unit)
        packed >>= field
    return Poly(coeffs)


@lru_cache(maxsize=4096)
def cached_cycle_polynomial(g: LabeledGraph) -> Poly:
    """Memoised :func:`cycle_polynomial` for repeated queries on small graphs."""
    return cycle_polynomial(g)


def total_partitions(g: LabeledGraph, max_n: int | None = None) -> int:
    """B_r(G) = C_r(G, 1)."""
    return cycle_polynomial(g, max_n)(1)
