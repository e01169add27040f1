"""Bit-packed census kernel over ranges of the matrix enumeration counter.

A strictly upper triangular n x n matrix over F2 has m = n(n-1)/2 free
bits; the kernel walks a half-open range of the counter [0, 2^m),
decoding bit p of the counter (row-major over the above-diagonal
positions, least significant bit first) into the matrix entries.  Every
column is a row-bitmask in a single integer, degree-2 polynomial
coefficients are bitmasks over the upper-triangle pair layout, and the
ideal-membership step is a pivot-indexed xor basis.

The kernel is compiled with numba by default; set RBOTT_NO_NUMBA=1 to
run the identical pure-Python/numpy path instead.  ``BACKEND`` reports
which one is active.
"""

from __future__ import annotations

import os

import numpy as np

# counts layout produced by census_range
IDX_KAHLER = 0
IDX_SPIN_THEOREM = 1        # Kähler inputs only
IDX_SPIN_ORACLE_ALL = 2     # all inputs
IDX_SPIN_ORACLE_KAHLER = 3  # Kähler inputs only
IDX_ORIENTABLE = 4          # all inputs
IDX_MISMATCH = 5            # Kähler inputs where theorem != oracle
N_COUNTS = 6

# pair bitmasks fit in a signed 64-bit int up to this dimension
MAX_ORACLE_DIM = 10


def _census_range_impl(n, lo, hi, with_oracle, mismatches, mismatch_cap):
    counts = np.zeros(N_COUNTS, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    basis = np.zeros(64, dtype=np.int64)
    n_mis = 0
    for idx in range(lo, hi):
        # decode above-diagonal bits, row-major, LSB first
        p = 0
        for j in range(n):
            cols[j] = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                if (idx >> p) & 1:
                    cols[j] |= 1 << i
                p += 1

        # Kähler: every column value occurs an even number of times
        kahler = True
        for j in range(n):
            mult = 0
            for k in range(n):
                if cols[k] == cols[j]:
                    mult += 1
            if mult & 1:
                kahler = False
                break

        spin_theorem = False
        if kahler:
            counts[IDX_KAHLER] += 1
            # reduced row sums: each value of multiplicity 2m contributes m*v
            s_mask = 0
            for j in range(n):
                first = True
                for k in range(j):
                    if cols[k] == cols[j]:
                        first = False
                        break
                if first:
                    mult = 0
                    for k in range(n):
                        if cols[k] == cols[j]:
                            mult += 1
                    if (mult // 2) & 1:
                        s_mask ^= cols[j]
            spin_theorem = True
            for i in range(n):
                if (s_mask >> i) & 1 and cols[i] != 0:
                    spin_theorem = False
                    break
            if spin_theorem:
                counts[IDX_SPIN_THEOREM] += 1

        # w1 = xor of the linear forms alpha_j + beta_j = column masks
        w1 = 0
        for j in range(n):
            w1 ^= cols[j]
        if w1 == 0:
            counts[IDX_ORIENTABLE] += 1

        if with_oracle:
            # w2 = second elementary symmetric sum of the column masks,
            # expanded over the pair layout
            w2 = 0
            prefix = 0
            for k in range(n):
                c = cols[k]
                for i in range(n):
                    if (prefix >> i) & 1:
                        for l in range(n):
                            if (c >> l) & 1:
                                a = i if i < l else l
                                b = l if i < l else i
                                w2 ^= 1 << (a * n - a * (a - 1) // 2 + (b - a))
                prefix ^= c

            # xor basis of the theta_j pair masks, pivot = highest set bit
            for b in range(64):
                basis[b] = 0
            for j in range(n):
                theta = 1 << (j * n - j * (j - 1) // 2)  # x_j^2
                for i in range(n):
                    if (cols[j] >> i) & 1:
                        a = i if i < j else j
                        b = j if i < j else i
                        theta ^= 1 << (a * n - a * (a - 1) // 2 + (b - a))
                v = theta
                for b in range(62, -1, -1):
                    if (v >> b) & 1:
                        if basis[b]:
                            v ^= basis[b]
                        else:
                            basis[b] = v
                            break

            r = w2
            for b in range(62, -1, -1):
                if (r >> b) & 1 and basis[b]:
                    r ^= basis[b]
            oracle = w1 == 0 and r == 0

            if oracle:
                counts[IDX_SPIN_ORACLE_ALL] += 1
            if kahler:
                if oracle:
                    counts[IDX_SPIN_ORACLE_KAHLER] += 1
                if oracle != spin_theorem:
                    counts[IDX_MISMATCH] += 1
                    if n_mis < mismatch_cap:
                        mismatches[n_mis] = idx
                        n_mis += 1
    return counts, n_mis


def _want_numba() -> bool:
    flag = os.environ.get("RBOTT_NO_NUMBA", "")
    return flag in ("", "0")


if _want_numba():
    try:
        from numba import njit

        census_range = njit(cache=True, nogil=True)(_census_range_impl)
        BACKEND = "numba"
    except ImportError:
        census_range = _census_range_impl
        BACKEND = "numpy"
else:
    census_range = _census_range_impl
    BACKEND = "numpy"
