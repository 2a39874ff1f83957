"""Compiled inner loops for the partial-edit-distance recurrence.

Sequences are passed as int64 arrays of symbol ids; batches are passed as a
flat concatenation plus an offsets array of length ``count + 1``.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def fill_matrix(x, y, sub, de):
    n = x.shape[0]
    m = y.shape[0]
    ext = n - m
    w = np.empty((ext + 1, m + 1))
    w[0, 0] = 0.0
    for e in range(1, ext + 1):
        w[e, 0] = w[e - 1, 0] + de
    for s in range(1, m + 1):
        w[0, s] = w[0, s - 1] + sub[x[s - 1], y[s - 1]]
    for e in range(1, ext + 1):
        for s in range(1, m + 1):
            a = w[e - 1, s] + de
            b = w[e, s - 1] + sub[x[e + s - 1], y[s - 1]]
            w[e, s] = a if a < b else b
    return w


@njit(cache=True)
def oriented_distance(x, y, sub, de):
    """W[N-M][M] with rolling rows; requires len(x) >= len(y)."""
    n = x.shape[0]
    m = y.shape[0]
    ext = n - m
    row = np.empty(m + 1)
    row[0] = 0.0
    for s in range(1, m + 1):
        row[s] = row[s - 1] + sub[x[s - 1], y[s - 1]]
    for e in range(1, ext + 1):
        row[0] = row[0] + de
        for s in range(1, m + 1):
            a = row[s] + de
            b = row[s - 1] + sub[x[e + s - 1], y[s - 1]]
            row[s] = a if a < b else b
    return row[m]


@njit(cache=True)
def sym_distance(a, b, sub, de):
    if a.shape[0] < b.shape[0]:
        return oriented_distance(b, a, sub, de)
    return oriented_distance(a, b, sub, de)


@njit(cache=True)
def cross_distances(flat, offs, cflat, coffs, sub, de):
    """(m, k) matrix of symmetric-orientation distances."""
    m = offs.shape[0] - 1
    k = coffs.shape[0] - 1
    out = np.empty((m, k))
    for i in range(m):
        a = flat[offs[i]:offs[i + 1]]
        for j in range(k):
            out[i, j] = sym_distance(a, cflat[coffs[j]:coffs[j + 1]], sub, de)
    return out


@njit(cache=True)
def within_sum_squares(flat, offs, labels, k, sub, de, symmetric):
    """Sum over clusters of squared distances over ordered member pairs."""
    m = offs.shape[0] - 1
    per = np.zeros(k)
    for r in range(m):
        a = flat[offs[r]:offs[r + 1]]
        for s in range(r + 1, m):
            if labels[r] != labels[s]:
                continue
            b = flat[offs[s]:offs[s + 1]]
            d_rs = sym_distance(a, b, sub, de)
            if symmetric or a.shape[0] != b.shape[0]:
                d_sr = d_rs
            else:
                d_sr = sym_distance(b, a, sub, de)
            per[labels[r]] += d_rs * d_rs + d_sr * d_sr
    total = 0.0
    for i in range(k):
        total += per[i]
    return total


def pack(seqs):
    """Concatenate sequences into (flat int64 array, offsets)."""
    lengths = np.fromiter((len(s) for s in seqs), dtype=np.int64, count=len(seqs))
    offs = np.zeros(len(seqs) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offs[1:])
    flat = np.empty(int(offs[-1]), dtype=np.int64)
    for i, s in enumerate(seqs):
        flat[offs[i]:offs[i + 1]] = s
    return flat, offs
