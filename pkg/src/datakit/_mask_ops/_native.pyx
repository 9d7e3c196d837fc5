# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mask kernels: 8-connected component filtering and passive dilation.

Single-pass-per-pixel implementations; the numpy fallback in _numpy.py is
the reference for semantics and must stay in exact agreement.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline cnp.int32_t _find(cnp.int32_t[::1] parent, cnp.int32_t x) noexcept nogil:
    # path halving
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def filter_small_components(cnp.uint8_t[:, ::1] mask, int threshold):
    """Zero every 8-connected component of nonzero pixels smaller than threshold.

    Returns a new uint8 mask; components of size >= threshold are untouched.
    """
    cdef Py_ssize_t h = mask.shape[0]
    cdef Py_ssize_t w = mask.shape[1]
    out_arr = np.zeros((h, w), dtype=np.uint8)
    labels_arr = np.zeros((h, w), dtype=np.int32)
    # worst case for 8-connectivity: one new label per 2 columns per row
    cdef Py_ssize_t max_labels = (h * ((w + 1) // 2)) + 2
    parent_arr = np.zeros(max_labels, dtype=np.int32)
    size_arr = np.zeros(max_labels, dtype=np.int64)

    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef cnp.int32_t[:, ::1] labels = labels_arr
    cdef cnp.int32_t[::1] parent = parent_arr
    cdef cnp.int64_t[::1] size = size_arr

    cdef Py_ssize_t i, j
    cdef cnp.int32_t next_label = 1, lab, best, cand
    cdef cnp.int32_t ra, rb

    with nogil:
        for i in range(h):
            for j in range(w):
                if mask[i, j] == 0:
                    continue
                best = 0
                if j > 0 and mask[i, j - 1]:
                    best = _find(parent, labels[i, j - 1])
                if i > 0:
                    if mask[i - 1, j]:
                        cand = _find(parent, labels[i - 1, j])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                    if j > 0 and mask[i - 1, j - 1]:
                        cand = _find(parent, labels[i - 1, j - 1])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                    if j < w - 1 and mask[i - 1, j + 1]:
                        cand = _find(parent, labels[i - 1, j + 1])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                if best == 0:
                    best = next_label
                    parent[best] = best
                    next_label += 1
                else:
                    best = _find(parent, best)
                labels[i, j] = best

        for i in range(h):
            for j in range(w):
                lab = labels[i, j]
                if lab:
                    size[_find(parent, lab)] += 1

        for i in range(h):
            for j in range(w):
                lab = labels[i, j]
                if lab and size[_find(parent, lab)] >= threshold:
                    out[i, j] = 1

    return out_arr


def passive_dilate(cnp.uint8_t[:, ::1] mask):
    """One simultaneous growth pass: a zero pixel becomes one iff at least
    4 of its 8 neighbors are nonzero in the input. Nonzero pixels persist.
    """
    cdef Py_ssize_t h = mask.shape[0]
    cdef Py_ssize_t w = mask.shape[1]
    out_arr = np.empty((h, w), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, di, dj, i0, i1, j0, j1
    cdef int count

    with nogil:
        for i in range(h):
            i0 = i - 1 if i > 0 else 0
            i1 = i + 2 if i + 2 <= h else h
            for j in range(w):
                if mask[i, j]:
                    out[i, j] = 1
                    continue
                j0 = j - 1 if j > 0 else 0
                j1 = j + 2 if j + 2 <= w else w
                count = 0
                for di in range(i0, i1):
                    for dj in range(j0, j1):
                        if mask[di, dj]:
                            count += 1
                out[i, j] = 1 if count >= 4 else 0

    return out_arr


def label_components(cnp.uint8_t[:, ::1] mask):
    """8-connected labeling; returns (labels int32 array, component count).

    Labels are compacted to 1..n in first-encounter order.
    """
    cdef Py_ssize_t h = mask.shape[0]
    cdef Py_ssize_t w = mask.shape[1]
    labels_arr = np.zeros((h, w), dtype=np.int32)
    cdef Py_ssize_t max_labels = (h * ((w + 1) // 2)) + 2
    parent_arr = np.zeros(max_labels, dtype=np.int32)
    remap_arr = np.zeros(max_labels, dtype=np.int32)

    cdef cnp.int32_t[:, ::1] labels = labels_arr
    cdef cnp.int32_t[::1] parent = parent_arr
    cdef cnp.int32_t[::1] remap = remap_arr

    cdef Py_ssize_t i, j
    cdef cnp.int32_t next_label = 1, best, cand, root, n = 0

    with nogil:
        for i in range(h):
            for j in range(w):
                if mask[i, j] == 0:
                    continue
                best = 0
                if j > 0 and mask[i, j - 1]:
                    best = _find(parent, labels[i, j - 1])
                if i > 0:
                    if mask[i - 1, j]:
                        cand = _find(parent, labels[i - 1, j])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                    if j > 0 and mask[i - 1, j - 1]:
                        cand = _find(parent, labels[i - 1, j - 1])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                    if j < w - 1 and mask[i - 1, j + 1]:
                        cand = _find(parent, labels[i - 1, j + 1])
                        if best == 0:
                            best = cand
                        elif cand != best:
                            parent[cand] = best
                if best == 0:
                    best = next_label
                    parent[best] = best
                    next_label += 1
                else:
                    best = _find(parent, best)
                labels[i, j] = best

        for i in range(h):
            for j in range(w):
                if labels[i, j]:
                    root = _find(parent, labels[i, j])
                    if remap[root] == 0:
                        n += 1
                        remap[root] = n
                    labels[i, j] = remap[root]

    return labels_arr, int(n)
