# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels (C++ for the hash-map accumulator, OpenMP for
the optional parallel trainer). Sequential arithmetic mirrors _kernels_py
operation for operation so both backends agree bitwise."""

import numpy as np

from cython.operator cimport dereference, preincrement
from cython.parallel cimport prange
from libc.math cimport sqrt
from libcpp.algorithm cimport sort
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

BACKEND_NAME = "cython"
SUPPORTS_PARALLEL = True

ctypedef unsigned long long u64


def accumulate_cooccurrence(ids, boundaries, int window, bint unit):
    """Same contract as _kernels_py.accumulate_cooccurrence."""
    cdef const int[::1] id_view = np.ascontiguousarray(ids, dtype=np.int32)
    cdef const long long[::1] bound_view = np.ascontiguousarray(boundaries, dtype=np.int64)
    cdef unordered_map[u64, double] pairs
    cdef long long bi, p, q, end, q_stop
    cdef int wi, wj
    cdef u64 key
    cdef double weight

    for bi in range(bound_view.shape[0] - 1):
        end = bound_view[bi + 1]
        for p in range(bound_view[bi], end):
            wi = id_view[p]
            if wi < 0:
                continue
            q_stop = p + window + 1
            if q_stop > end:
                q_stop = end
            for q in range(p + 1, q_stop):
                wj = id_view[q]
                if wj < 0:
                    continue
                if wi <= wj:
                    key = (<u64> wi << 32) | <u64> wj
                else:
                    key = (<u64> wj << 32) | <u64> wi
                weight = 1.0 if unit else 1.0 / <double> (q - p)
                pairs[key] += weight

    cdef vector[u64] keys
    keys.reserve(pairs.size())
    cdef unordered_map[u64, double].iterator it = pairs.begin()
    while it != pairs.end():
        keys.push_back(dereference(it).first)
        preincrement(it)
    # Canonical (i, j) order regardless of hash iteration order.
    sort(keys.begin(), keys.end())

    cdef long long n = <long long> keys.size()
    out_i = np.empty(n, dtype=np.int32)
    out_j = np.empty(n, dtype=np.int32)
    out_w = np.empty(n, dtype=np.float64)
    cdef int[::1] oi = out_i
    cdef int[::1] oj = out_j
    cdef double[::1] ow = out_w
    cdef long long k
    for k in range(n):
        key = keys[k]
        oi[k] = <int> (key >> 32)
        oj[k] = <int> (key & 0xFFFFFFFFULL)
        ow[k] = pairs[key]
    return out_i, out_j, out_w


def train_epoch(W, Wt, b, bt, gW, gWt, gb, gbt, ei, ej, logx, fx, order, double eta):
    """Same contract and arithmetic order as _kernels_py.train_epoch."""
    cdef double[:, ::1] w_main = W
    cdef double[:, ::1] w_ctx = Wt
    cdef double[::1] b_main = b
    cdef double[::1] b_ctx = bt
    cdef double[:, ::1] g_main = gW
    cdef double[:, ::1] g_ctx = gWt
    cdef double[::1] gb_main = gb
    cdef double[::1] gb_ctx = gbt
    cdef const int[::1] e_i = ei
    cdef const int[::1] e_j = ej
    cdef const double[::1] lx = logx
    cdef const double[::1] f = fx
    cdef const long long[::1] perm = order

    cdef long long d = w_main.shape[1]
    cdef long long kk, k, m
    cdef int i, j
    cdef double dot, diff, fdiff, feta, t1, t2, u1, u2, ub1, ub2
    cdef double cost = 0.0

    for kk in range(perm.shape[0]):
        k = perm[kk]
        i = e_i[k]
        j = e_j[k]
        dot = 0.0
        for m in range(d):
            dot += w_main[i, m] * w_ctx[j, m]
        diff = dot + b_main[i] + b_ctx[j] - lx[k]
        fdiff = f[k] * diff
        cost += fdiff * diff
        feta = fdiff * eta
        for m in range(d):
            t1 = feta * w_ctx[j, m]
            t2 = feta * w_main[i, m]
            u1 = t1 / sqrt(g_main[i, m])
            u2 = t2 / sqrt(g_ctx[j, m])
            g_main[i, m] += t1 * t1
            g_ctx[j, m] += t2 * t2
            w_main[i, m] -= u1
            w_ctx[j, m] -= u2
        ub1 = feta / sqrt(gb_main[i])
        ub2 = feta / sqrt(gb_ctx[j])
        gb_main[i] += feta * feta
        gb_ctx[j] += feta * feta
        b_main[i] -= ub1
        b_ctx[j] -= ub2
    return cost


def train_epoch_parallel(W, Wt, b, bt, gW, gWt, gb, gbt, ei, ej, logx, fx, order,
                         double eta, int threads):
    """Lock-free parallel variant: updates may interleave, loss is approximate."""
    cdef double[:, ::1] w_main = W
    cdef double[:, ::1] w_ctx = Wt
    cdef double[::1] b_main = b
    cdef double[::1] b_ctx = bt
    cdef double[:, ::1] g_main = gW
    cdef double[:, ::1] g_ctx = gWt
    cdef double[::1] gb_main = gb
    cdef double[::1] gb_ctx = gbt
    cdef const int[::1] e_i = ei
    cdef const int[::1] e_j = ej
    cdef const double[::1] lx = logx
    cdef const double[::1] f = fx
    cdef const long long[::1] perm = order

    cdef long long d = w_main.shape[1]
    cdef long long kk, k, m
    cdef int i, j
    cdef double dot, diff, fdiff, feta, t1, t2, u1, u2, ub1, ub2
    cdef double cost = 0.0

    for kk in prange(perm.shape[0], nogil=True, schedule="static", num_threads=threads):
        k = perm[kk]
        i = e_i[k]
        j = e_j[k]
        dot = 0.0
        for m in range(d):
            dot = dot + w_main[i, m] * w_ctx[j, m]
        diff = dot + b_main[i] + b_ctx[j] - lx[k]
        fdiff = f[k] * diff
        cost += fdiff * diff
        feta = fdiff * eta
        for m in range(d):
            t1 = feta * w_ctx[j, m]
            t2 = feta * w_main[i, m]
            u1 = t1 / sqrt(g_main[i, m])
            u2 = t2 / sqrt(g_ctx[j, m])
            g_main[i, m] += t1 * t1
            g_ctx[j, m] += t2 * t2
            w_main[i, m] -= u1
            w_ctx[j, m] -= u2
        ub1 = feta / sqrt(gb_main[i])
        ub2 = feta / sqrt(gb_ctx[j])
        gb_main[i] += feta * feta
        gb_ctx[j] += feta * feta
        b_main[i] -= ub1
        b_ctx[j] -= ub2
    return cost
