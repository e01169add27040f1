"""Exhaustive enumeration of Bott matrices and theorem-vs-oracle census runs.

The enumeration order is fixed: the above-diagonal entries, read
row-major, are the bits of a binary counter (position (1,2) is the
least significant bit).  Censuses shard that index space into disjoint
ranges, so worker counts never change the resulting counts.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .bott import BottMatrix

DEFAULT_ORACLE_CEILING = 8
DEFAULT_THEOREM_CEILING = 12
MISMATCH_CAP = 100


class DimensionTooLarge(ValueError):
    pass


def free_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def matrix_from_index(n: int, idx: int) -> BottMatrix:
    """Decode a counter value into a strictly upper triangular matrix."""
    rows = [[0] * n for _ in range(n)]
    p = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            rows[i][j] = (idx >> p) & 1
            p += 1
    return BottMatrix(tuple(tuple(r) for r in rows))


def index_of(A: BottMatrix) -> int:
    """Counter value of a matrix; inverse of matrix_from_index."""
    idx = 0
    p = 0
    n = A.n
    for i in range(n - 1):
        for j in range(i + 1, n):
            idx |= A.rows[i][j] << p
            p += 1
    return idx


def enumerate_bott(
    n: int, ceiling: int = DEFAULT_THEOREM_CEILING
) -> Iterator[BottMatrix]:
    """Yield every strictly upper triangular n x n matrix over F2 once."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n > ceiling:
        raise DimensionTooLarge(f"n={n} exceeds ceiling {ceiling}")
    for idx in range(1 << free_bit_count(n)):
        yield matrix_from_index(n, idx)


def partition_space(n: int, workers: int) -> list[tuple[int, int]]:
    """Split [0, 2^m) into near-equal disjoint covering ranges."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    total = 1 << free_bit_count(n)
    chunks = min(workers, total)
    base, extra = divmod(total, chunks)
    ranges = []
    lo = 0
    for k in range(chunks):
        hi = lo + base + (1 if k < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


@dataclass
class CensusReport:
    """Aggregate counts of one census run; mismatches must stay empty."""

    dimension: int
    total: int
    kahler_count: int
    spin_by_theorem_count: int
    spin_by_oracle_count: int | None
    spin_by_oracle_all_count: int | None
    orientable_count: int
    mismatches: list[str] = field(default_factory=list)
    mismatch_count: int = 0
    mismatch_truncated: bool = False
    oracle: bool = True
    workers: int = 1
    backend: str = _kernels.BACKEND
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "total": self.total,
            "kahler_count": self.kahler_count,
            "spin_by_theorem_count": self.spin_by_theorem_count,
            "spin_by_oracle_count": self.spin_by_oracle_count,
            "spin_by_oracle_all_count": self.spin_by_oracle_all_count,
            "orientable_count": self.orientable_count,
            "mismatch_count": self.mismatch_count,
            "mismatches": self.mismatches,
            "mismatch_truncated": self.mismatch_truncated,
            "oracle": self.oracle,
            "workers": self.workers,
            "backend": self.backend,
            "elapsed": self.elapsed,
        }


def run_census(
    n: int,
    oracle: bool = True,
    workers: int = 1,
    ceiling: int | None = None,
) -> CensusReport:
    """Classify every n x n Bott matrix; cross-validate theorem vs oracle.

    Deterministic: counts and mismatch lists do not depend on the
    worker count.  Mismatch matrices are kept verbatim (capped at
    MISMATCH_CAP with a truncation flag).
    """
    if ceiling is None:
        ceiling = DEFAULT_ORACLE_CEILING if oracle else DEFAULT_THEOREM_CEILING
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n > ceiling:
        raise DimensionTooLarge(f"n={n} exceeds ceiling {ceiling}")
    if oracle and n > _kernels.MAX_ORACLE_DIM:
        raise DimensionTooLarge(
            f"oracle path is limited to n <= {_kernels.MAX_ORACLE_DIM}"
        )

    start = time.perf_counter()
    ranges = partition_space(n, workers)

    def shard(rng: tuple[int, int]):
        mis = np.zeros(MISMATCH_CAP, dtype=np.int64)
        counts, n_mis = _kernels.census_range(
            n, rng[0], rng[1], oracle, mis, MISMATCH_CAP
        )
        return counts, mis[:n_mis].tolist()

    if len(ranges) == 1:
        results = [shard(ranges[0])]
    else:
        # The numba kernel releases the GIL, so threads shard cleanly;
        # shard results are merged in range order regardless.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(shard, ranges))

    counts = np.zeros(_kernels.N_COUNTS, dtype=np.int64)
    mismatch_idx: list[int] = []
    for shard_counts, shard_mis in results:
        counts += shard_counts
        mismatch_idx.extend(shard_mis)
    mismatch_idx = mismatch_idx[:MISMATCH_CAP]

    elapsed = time.perf_counter() - start
    return CensusReport(
        dimension=n,
        total=1 << free_bit_count(n),
        kahler_count=int(counts[_kernels.IDX_KAHLER]),
        spin_by_theorem_count=int(counts[_kernels.IDX_SPIN_THEOREM]),
        spin_by_oracle_count=(
            int(counts[_kernels.IDX_SPIN_ORACLE_KAHLER]) if oracle else None
        ),
        spin_by_oracle_all_count=(
            int(counts[_kernels.IDX_SPIN_ORACLE_ALL]) if oracle else None
        ),
        orientable_count=int(counts[_kernels.IDX_ORIENTABLE]),
        mismatches=[
            matrix_from_index(n, i).to_text() for i in mismatch_idx
        ],
        mismatch_count=int(counts[_kernels.IDX_MISMATCH]),
        mismatch_truncated=int(counts[_kernels.IDX_MISMATCH]) > MISMATCH_CAP,
        oracle=oracle,
        workers=workers,
        backend=_kernels.BACKEND,
        elapsed=elapsed,
    )
