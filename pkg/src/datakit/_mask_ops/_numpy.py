"""Pure numpy/Python fallback for the compiled mask kernels.

Component labeling works on row runs instead of pixels, so the Python
union-find only touches O(runs) items; dilation is fully vectorized.
Semantics must match _native exactly (the test suite cross-checks).
"""

from __future__ import annotations

import numpy as np


def _row_runs(mask: np.ndarray):
    """Per-row maximal runs of nonzero pixels as (row, start, end) arrays."""
    h, w = mask.shape
    padded = np.zeros((h, w + 2), dtype=np.int8)
    padded[:, 1:-1] = mask != 0
    diff = np.diff(padded, axis=1)
    srow, scol = np.nonzero(diff == 1)
    erow, ecol = np.nonzero(diff == -1)
    # starts and ends pair up within each row by construction
    return srow, scol, ecol


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _link_runs(srow, scol, ecol):
    """Union-find over runs, linking 8-adjacent runs on consecutive rows."""
    n = len(srow)
    uf = _UnionFind(n)
    row_starts = np.searchsorted(srow, np.arange(srow[-1] + 2 if n else 1))
    for r in np.unique(srow):
        if r == 0:
            continue
        prev_lo, prev_hi = row_starts[r - 1], row_starts[r]
        if prev_hi == prev_lo:
            continue
        cur_lo, cur_hi = row_starts[r], row_starts[r + 1]
        p = prev_lo
        for c in range(cur_lo, cur_hi):
            # 8-connectivity: runs [s1,e1) and [s2,e2) touch iff s2<=e1 and s1<=e2
            while p < prev_hi and ecol[p] < scol[c]:
                p += 1
            q = p
            while q < prev_hi and scol[q] <= ecol[c]:
                uf.union(c, q)
                q += 1
    return uf


def filter_small_components(mask: np.ndarray, threshold: int) -> np.ndarray:
    """Zero every 8-connected component of nonzero pixels smaller than threshold."""
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    out = np.zeros_like(mask)
    srow, scol, ecol = _row_runs(mask)
    n = len(srow)
    if n == 0:
        return out
    uf = _link_runs(srow, scol, ecol)
    roots = [uf.find(i) for i in range(n)]
    lengths = (ecol - scol).astype(np.int64)
    sizes = np.zeros(n, dtype=np.int64)
    np.add.at(sizes, roots, lengths)
    for i in range(n):
        if sizes[roots[i]] >= threshold:
            out[srow[i], scol[i]:ecol[i]] = 1
    return out


def passive_dilate(mask: np.ndarray) -> np.ndarray:
    """One simultaneous growth pass: a zero pixel becomes one iff at least
    4 of its 8 neighbors are nonzero in the input. Nonzero pixels persist.
    """
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    h, w = mask.shape
    padded = np.zeros((h + 2, w + 2), dtype=np.uint8)
    padded[1:-1, 1:-1] = mask != 0
    count = np.zeros((h, w), dtype=np.uint8)
    for di in (0, 1, 2):
        for dj in (0, 1, 2):
            if di == 1 and dj == 1:
                continue
            count += padded[di:di + h, dj:dj + w]
    return ((mask != 0) | (count >= 4)).astype(np.uint8)


def label_components(mask: np.ndarray):
    """8-connected labeling; returns (labels int32 array, component count)."""
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    labels = np.zeros(mask.shape, dtype=np.int32)
    srow, scol, ecol = _row_runs(mask)
    n = len(srow)
    if n == 0:
        return labels, 0
    uf = _link_runs(srow, scol, ecol)
    remap: dict[int, int] = {}
    for i in range(n):
        root = uf.find(i)
        lab = remap.setdefault(root, len(remap) + 1)
        labels[srow[i], scol[i]:ecol[i]] = lab
    return labels, len(remap)
