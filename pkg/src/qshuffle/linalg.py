"""Exact rank of a rational matrix by Gaussian elimination over Fraction."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _pivot_size(f: Fraction) -> int:
    # larger |num| relative to den first; only affects runtime, never the rank
    return abs(f.numerator).bit_length() - f.denominator.bit_length()


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of ``rows`` with all arithmetic in :class:`fractions.Fraction`."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        candidates = [i for i in range(rank, len(m)) if m[i][col]]
        if not candidates:
            continue
        piv = max(candidates, key=lambda i: _pivot_size(m[i][col]))
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            if factor:
                factor *= inv
                row = m[i]
                for j in range(col, ncols):
                    if prow[j]:
                        row[j] -= factor * prow[j]
        rank += 1
        if rank == len(m):
            break
    return rank
