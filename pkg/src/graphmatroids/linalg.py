"""Exact linear algebra over a prime field."""

from __future__ import annotations

MERSENNE_31 = 2147483647


def rank_mod_p(rows: list[list[int]], p: int = MERSENNE_31) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``.

    Plain Gaussian elimination with field inverses; the input is not modified.
    """
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        inv = pow(prow[col], p - 2, p)
        for r in range(rank + 1, len(mat)):
            row = mat[r]
            f = row[col]
            if f:
                f = f * inv % p
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == len(mat):
            break
    return rank
