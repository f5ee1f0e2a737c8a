"""Small dense linear algebra over a Field and over the prime subfield.

Matrices over a Field are lists of rows of packed ints.  Everything here is
O(n^3) Gaussian elimination; the matrices in this package never exceed a few
dozen rows.
"""

from __future__ import annotations

from .fields import Field


def mat_rank(field: Field, rows) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def mat_rcef(field: Field, rows):
    """Reduced column echelon form (column operations only).

    Returns (echelon, rank).  The left kernel is preserved, so a vector u
    satisfies u*A = 0 iff u*E = 0.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    piv_col = 0
    for r in range(nrows):
        if piv_col >= ncols:
            break
        pc = next((c for c in range(piv_col, ncols) if A[r][c]), None)
        if pc is None:
            continue
        if pc != piv_col:
            for rr in range(nrows):
                A[rr][piv_col], A[rr][pc] = A[rr][pc], A[rr][piv_col]
        inv = field.inv(A[r][piv_col])
        for rr in range(nrows):
            A[rr][piv_col] = field.mul(A[rr][piv_col], inv)
        for c in range(ncols):
            if c != piv_col and A[r][c]:
                f = A[r][c]
                for rr in range(nrows):
                    A[rr][c] = field.sub(A[rr][c], field.mul(A[rr][piv_col], f))
        piv_col += 1
    return A, piv_col


def mat_solve(field: Field, A, b):
    """Solve the square system A x = b; returns None if A is singular."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [field.sub(x, field.mul(c, y))
                          for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def mat_det_nonzero(field: Field, rows) -> bool:
    n = len(rows)
    return mat_rank(field, rows) == n


# ---------------------------------------------------------------------------
# GF(p) coordinate vectors (elements of a Field flattened over the prime field)
# ---------------------------------------------------------------------------

def gfp_rank(p: int, vecs) -> int:
    rows = [list(v) for v in vecs]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def gfp_combination_kernel(p: int, rows) -> list[list[int]]:
    """Coefficient vectors c (over GF(p)) with sum_i c_i * rows[i] = 0.

    Returned as a reduced, deterministic basis of the left kernel of the
    matrix whose rows are `rows`.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(nrows)]
           for i in range(nrows)]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if aug[i][col] % p), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for i in range(nrows):
            if i != rank and aug[i][col] % p:
                c = aug[i][col]
                aug[i] = [(x - c * y) % p for x, y in zip(aug[i], aug[rank])]
        rank += 1
        if rank == nrows:
            break
    kernel = [row[ncols:] for row in aug[rank:]]
    # normalize to reduced echelon form for reproducibility
    kern_rank = 0
    for col in range(nrows):
        piv = next((i for i in range(kern_rank, len(kernel)) if kernel[i][col] % p), None)
        if piv is None:
            continue
        kernel[kern_rank], kernel[piv] = kernel[piv], kernel[kern_rank]
        inv = pow(kernel[kern_rank][col], p - 2, p)
        kernel[kern_rank] = [(x * inv) % p for x in kernel[kern_rank]]
        for i in range(len(kernel)):
            if i != kern_rank and kernel[i][col] % p:
                c = kernel[i][col]
                kernel[i] = [(x - c * y) % p
                             for x, y in zip(kernel[i], kernel[kern_rank])]
        kern_rank += 1
    return kernel
