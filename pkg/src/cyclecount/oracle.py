"""Brute-force ground truth.

Every set partition of V(G) is generated as a restricted growth string, each
block is weighted by its number of directed Hamiltonian cycles, and the
products are accumulated by block count.  Deliberately shares no code with
:mod:`cyclecount.engine`: Hamiltonian cycles are counted here by depth-first
search from a fixed start vertex, not by subset dynamic programming.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .errors import ParameterError, ResourceGuardError
from .graph import LabeledGraph
from .poly import Poly

DEFAULT_ORACLE_LIMIT = 11


def _dfs_closed_tours(adj: tuple[int, ...], members: list[int], subset_mask: int) -> int:
    start = members[0]
    target = subset_mask
    total = 0
    # iterative DFS: stack of (vertex, visited mask)
    stack = [(start, 1 << start)]
    while stack:
        v, seen = stack.pop()
        if seen == target:
            if adj[v] >> start & 1:
                total += 1
            continue
        nxt = adj[v] & target & ~seen
        while nxt:
            low = nxt & -nxt
            stack.append((low.bit_length() - 1, seen | low))
            nxt ^= low
    return total


def count_directed_ham_cycles(g: LabeledGraph, subset: Iterable[int]) -> int:
    """Block weight of ``subset`` (1-based vertex ids).

    Size 1 has weight 1, size 2 weight 1 if the pair is an edge, and larger
    blocks count directed Hamiltonian cycles of the induced subgraph (each
    undirected cycle twice).
    """
    members = sorted(set(subset))
    if not members:
        raise ParameterError("block weight of an empty subset")
    for v in members:
        if not 1 <= v <= g.n:
            raise ParameterError(f"vertex {v} not in 1..{g.n}")
    return _block_weight(g.adjacency, [v - 1 for v in members])


def _block_weight(adj: tuple[int, ...], members: list[int]) -> int:
    if len(members) == 1:
        return 1
    if len(members) == 2:
        return 1 if adj[members[0]] >> members[1] & 1 else 0
    mask = 0
    for v in members:
        mask |= 1 << v
    return _dfs_closed_tours(adj, members, mask)


def _rgs_accumulate(adj, order: list[int], restricted: int, base_blocks: list[int], weight_cache: dict) -> dict[int, int]:
    """Sum block-weight products over partitions of ``order`` added to ``base_blocks``.

    ``base_blocks`` are already complete and receive no further vertices.
    Returns ``{block_count: total}``.  Pruning: a restricted vertex never
    joins a block that already holds a restricted vertex.
    """
    counts: dict[int, int] = {}
    blocks = list(base_blocks)
    first_open = len(blocks)
    nvert = len(order)

    def weight(mask: int) -> int:
        w = weight_cache.get(mask)
        if w is None:
            members = [i for i in range(mask.bit_length()) if mask >> i & 1]
            w = _block_weight(adj, members)
            weight_cache[mask] = w
        return w

    def rec(i: int):
        if i == nvert:
            prod = 1
            for b in blocks:
                prod *= weight(b)
                if not prod:
                    return
            counts[len(blocks)] = counts.get(len(blocks), 0) + prod
            return
        v = order[i]
        bit = 1 << v
        is_restricted = restricted >> v & 1
        for j in range(first_open, len(blocks)):
            if is_restricted and blocks[j] & restricted:
                continue
            blocks[j] |= bit
            rec(i + 1)
            blocks[j] ^= bit
        blocks.append(bit)
        rec(i + 1)
        blocks.pop()

    rec(0)
    return counts


def _split_worker(args):
    adj, order, restricted, first_block = args
    return _rgs_accumulate(adj, order, restricted, [first_block], {})


def brute_force_polynomial(g: LabeledGraph, max_n: int = DEFAULT_ORACLE_LIMIT, workers: int = 1) -> Poly:
    """Cycle polynomial of ``g`` by exhaustive partition enumeration.

    With ``workers > 1`` the work is split by the block containing vertex 1
    and farmed out to processes; the merge is exact addition, so the result
    does not depend on the worker count.
    """
    if g.n > max_n:
        raise ResourceGuardError(f"oracle limited to n <= {max_n}, got n = {g.n}")
    if g.n == 0:
        return Poly.one()
    adj = g.adjacency
    restricted = g.restricted_mask
    if workers <= 1:
        counts = _rgs_accumulate(adj, list(range(g.n)), restricted, [], {})
    else:
        rest = list(range(1, g.n))
        tasks = []
        for sub in range(1 << len(rest)):
            block = 1
            for j, v in enumerate(rest):
                if sub >> j & 1:
                    block |= 1 << v
            if bin(block & restricted).count("1") > 1:
                continue
            order = [v for v in rest if not block >> v & 1]
            tasks.append((adj, order, restricted, block))
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_split_worker, tasks, chunksize=8):
                for k, c in part.items():
                    counts[k] = counts.get(k, 0) + c
    top = max(counts) if counts else 0
    return Poly(counts.get(k, 0) for k in range(top + 1))
