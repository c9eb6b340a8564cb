"""Combinatorial ground truth over dependency trees.

A head vector encodes a tree over tokens 1..n as a list of length n:
``heads[i]`` is the head of token ``i + 1``, with 0 denoting ROOT. The
enumeration functions are exact oracles for the decoders and are capped
at n = 7 (262,144 trees), which is a test-scale workload, not a runtime
path.
"""

import functools

import numpy as np

HeadVector = tuple[int, ...]

MAX_ENUM_N = 7


def is_tree(heads) -> bool:
    """True iff every token reaches ROOT through its head chain (acyclic)."""
    n = len(heads)
    if n == 0:
        return False
    for h in heads:
        if not 0 <= h <= n:
            return False
    for d in range(1, n + 1):
        if heads[d - 1] == d:
            return False
    state = [0] * (n + 1)  # 0 unknown, 1 on current path, 2 reaches root
    state[0] = 2
    for start in range(1, n + 1):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = heads[v - 1]
        ok = state[v] == 2
        for u in path:
            state[u] = 2 if ok else 1
        if not ok:
            return False
    return True


def _descendant_masks(heads) -> list[int]:
    """Bitmask of descendants (including self) per node 0..n."""
    n = len(heads)
    children = [[] for _ in range(n + 1)]
    for d in range(1, n + 1):
        children[heads[d - 1]].append(d)
    masks = [0] * (n + 1)
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    for v in reversed(order):
        m = 1 << v
        for c in children[v]:
            m |= masks[c]
        masks[v] = m
    return masks


def is_projective(heads) -> bool:
    """True iff every token strictly between an arc's endpoints descends from its head.

    Raises ValueError when ``heads`` does not form a tree: projectivity is
    only defined on trees.
    """
    if not is_tree(heads):
        raise ValueError(f"not a tree: {list(heads)}")
    n = len(heads)
    masks = _descendant_masks(heads)
    for d in range(1, n + 1):
        h = heads[d - 1]
        lo, hi = (h, d) if h < d else (d, h)
        between = ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
        if between & ~masks[h]:
            return False
    return True


def _check_enum_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")


@functools.lru_cache(maxsize=None)
def _tree_heads_array(n: int) -> np.ndarray:
    """All rooted head vectors for n tokens, lexicographically ordered, as int8."""
    m = (n + 1) ** n
    idx = np.arange(m, dtype=np.int64)
    heads = np.empty((m, n), dtype=np.int8)
    for j in range(n):
        heads[:, j] = (idx // (n + 1) ** (n - 1 - j)) % (n + 1)
    # Parent table with ROOT as a fixed point; pointer doubling finds the
    # ancestor at distance >= n, which is 0 exactly for rooted trees.
    parent = np.concatenate([np.zeros((m, 1), dtype=np.int8), heads], axis=1)
    cur = parent
    hops = 1
    while hops < n:
        cur = np.take_along_axis(cur, cur.astype(np.int64), axis=1)
        hops *= 2
    rooted = (cur[:, 1:] == 0).all(axis=1)
    return heads[rooted]


@functools.lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[HeadVector, ...]:
    """Every head vector rooted at 0 over n tokens, each exactly once.

    The result is lexicographically ordered and has (n+1)^(n-1) entries.
    """
    _check_enum_n(n)
    arr = _tree_heads_array(n)
    return tuple(tuple(int(h) for h in row) for row in arr)


@functools.lru_cache(maxsize=None)
def enumerate_projective_trees(n: int) -> tuple[HeadVector, ...]:
    """The subset of enumerate_trees(n) passing is_projective, same order."""
    _check_enum_n(n)
    return tuple(t for t in enumerate_trees(n) if is_projective(t))
