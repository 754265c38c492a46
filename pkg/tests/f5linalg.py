"""Brute-force syzygy computation by degree-truncated linear algebra mod p.

Independent of the Groebner engine: syzygies with cofactor (total) degree
<= D form the kernel of an explicit multiplication matrix over F_p, and the
engine's output is complete iff the multiples of its generators span that
kernel.  Dimensions are compared; membership of the generators in the
kernel is a separate exactness check done by the caller.
"""

from itertools import product

import numpy as np


def monomials_upto(nvars, maxdeg):
    out = [m for m in product(range(maxdeg + 1), repeat=nvars) if sum(m) <= maxdeg]
    out.sort()
    return out


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def rank_mod_p(rows, p):
    """Row rank of an integer matrix mod p (Gaussian elimination)."""
    if not len(rows):
        return 0
    a = np.array(rows, dtype=np.int64) % p
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if a[r, col] % p:
                piv = r
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        for r in range(n_rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


def _poly_dict(f):
    return {m: int(c) for m, c in f.terms.items()}


def syzygy_kernel_dim(gens, p, cof_deg):
    """dim of {(c_1..c_k): total deg c_i <= cof_deg, sum c_i f_i = 0} over F_p."""
    nvars = gens[0].ring.nvars
    cof_monos = monomials_upto(nvars, cof_deg)
    col_index = {}
    cols = []
    for i in range(len(gens)):
        for m in cof_monos:
            col_index[(i, m)] = len(cols)
            cols.append((i, m))
    row_index = {}
    entries = []  # (row, col, coeff)
    for (i, m), ci in col_index.items():
        for fm, fc in _poly_dict(gens[i]).items():
            pm = _mono_add(m, fm)
            ri = row_index.setdefault(pm, len(row_index))
            entries.append((ri, ci, fc % p))
    mat = np.zeros((len(row_index), len(cols)), dtype=np.int64)
    for r, c, v in entries:
        mat[r, c] = (mat[r, c] + v) % p
    return len(cols) - rank_mod_p(mat, p)


def syzygy_span_dim(syzygies, p, cof_deg, nvars, k):
    """dim of the degree-<=cof_deg truncation of the span of the syzygies."""
    cof_monos = monomials_upto(nvars, cof_deg)
    col_index = {(i, m): idx for idx, (i, m) in enumerate(
        (i, m) for i in range(k) for m in cof_monos)}
    rows = []
    for s in syzygies:
        coord_deg = 0
        coords = []
        for i, pcoord in enumerate(s):
            d = _poly_dict(pcoord)
            coords.append(d)
            for m in d:
                coord_deg = max(coord_deg, sum(m))
        if coord_deg > cof_deg:
            continue
        for m in monomials_upto(nvars, cof_deg - coord_deg):
            row = np.zeros(len(col_index), dtype=np.int64)
            for i, d in enumerate(coords):
                for sm, sc in d.items():
                    row[col_index[(i, _mono_add(m, sm))]] = sc % p
            rows.append(row)
    return rank_mod_p(rows, p)
