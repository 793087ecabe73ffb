"""Pure-Python kernels; same signatures as the compiled ``_ckernels`` module.

Window labels are ``int32`` arrays of shape ``(N, W)`` holding compact vertex
ids, ``edge_matrix`` is a square ``uint8`` matrix over those ids.  Adjacency
bitsets are ``uint64`` arrays of shape ``(N, ceil(N / 64))`` with bit ``j`` of
row ``i`` set when vertices ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

import numpy as np


class BudgetExceeded(Exception):
    pass


def distinguishability_matrix(labels: np.ndarray, edge_matrix: np.ndarray) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64)
    n_words, n_windows = labels.shape
    out = np.zeros((n_words, n_words), dtype=bool)
    emat = np.asarray(edge_matrix, dtype=bool)
    for i in range(n_windows):
        col = labels[:, i]
        out |= emat[col[:, None], col[None, :]]
    return out


def first_indistinguishable_pair(labels: np.ndarray, edge_matrix: np.ndarray):
    labels = np.asarray(labels, dtype=np.int64)
    emat = np.asarray(edge_matrix, dtype=bool)
    n_words = labels.shape[0]
    rows = [tuple(r) for r in labels.tolist()]
    for i in range(n_words):
        ri = rows[i]
        for j in range(i + 1, n_words):
            rj = rows[j]
            if not any(emat[a, b] for a, b in zip(ri, rj)):
                return i, j
    return None


def adjacency_bitsets(labels: np.ndarray, edge_matrix: np.ndarray) -> np.ndarray:
    return pack_adjacency(distinguishability_matrix(labels, edge_matrix))


def pack_adjacency(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    n_blocks = max(1, (n + 63) // 64)
    padded = np.zeros((n, n_blocks * 64), dtype=bool)
    padded[:, :n] = adj
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(n, n_blocks)


def _to_ints(bitsets: np.ndarray) -> list[int]:
    out = []
    for row in bitsets:
        out.append(int.from_bytes(row.astype("<u8").tobytes(), "little"))
    return out


def _color_sort(p: int, adj: list[int]):
    order: list[int] = []
    colors: list[int] = []
    uncolored = p
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncolored &= ~low
            q &= ~low
            q &= ~adj[v]
            order.append(v)
            colors.append(color)
    return order, colors


def _expand_factory(adj: list[int], budget: int, state: dict):
    stack: list[int] = []

    def expand(p: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExceeded
        order, colors = _color_sort(p, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(stack) + colors[idx] <= state["best_size"]:
                return
            v = order[idx]
            stack.append(v)
            np_ = p & adj[v]
            if np_:
                expand(np_)
            elif len(stack) > state["best_size"]:
                state["best_size"] = len(stack)
                state["best"] = list(stack)
                if state["best_size"] >= state["stop_at"]:
                    raise _Done
            stack.pop()
            p &= ~(1 << v)

    def run(p: int) -> None:
        stack.clear()
        try:
            expand(p)
        except _Done:
            pass

    return run


class _Done(Exception):
    pass


def max_clique(bitsets: np.ndarray, lower_bound: int = 0, budget: int = 10**8):
    """Exact maximum clique by colour-bounded branch and bound.

    Returns ``(clique, nodes, complete)``.  ``clique`` is the best clique found,
    which is empty if nothing beats ``lower_bound``.  ``complete`` is False when
    the node budget ran out before the search tree was exhausted.
    """
    adj = _to_ints(bitsets)
    n = len(adj)
    state = {"nodes": 0, "best": [], "best_size": lower_bound, "stop_at": n + 1}
    complete = True
    if n:
        try:
            _expand_factory(adj, budget, state)((1 << n) - 1)
        except BudgetExceeded:
            complete = False
    return state["best"], min(state["nodes"], budget), complete


def first_clique(bitsets: np.ndarray, k: int, budget: int = 10**8, visit=None):
    """First clique of size ``k`` in ``visit`` order (default ascending).

    Vertices are fixed greedily in visit order, keeping each one that still
    extends to a ``k``-clique.  Returns ``(clique or None, nodes, complete)``
    with the clique listed in visit order.
    """
    adj = _to_ints(bitsets)
    n = len(adj)
    if k <= 0:
        return [], 0, True
    state = {"nodes": 0, "best": [], "best_size": 0, "stop_at": 0}
    run = _expand_factory(adj, budget, state)
    cand = (1 << n) - 1
    chosen: list[int] = []
    try:
        for v in (range(n) if visit is None else [int(x) for x in visit]):
            need = k - len(chosen)
            if need == 0:
                break
            if not cand >> v & 1:
                continue
            cand &= ~(1 << v)
            sub = cand & adj[v]
            if sub.bit_count() < need - 1:
                continue
            if need > 1:
                state["best_size"] = need - 2
                state["stop_at"] = need - 1
                run(sub)
                if state["best_size"] < need - 1:
                    continue
            chosen.append(v)
            cand = sub
    except BudgetExceeded:
        return None, min(state["nodes"], budget), False
    if len(chosen) < k:
        return None, state["nodes"], True
    return chosen, state["nodes"], True
