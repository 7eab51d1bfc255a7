"""Smith normal form over the integers, with exact arbitrary-precision
arithmetic throughout.

Two entry points: `smith_normal_form` computes D together with unimodular
R, C such that M = R * D * C (diagonal d1 | d2 | ...), pivoting by minimal
absolute value to control coefficient growth; `invariant_factors_sparse`
is a transform-free fast path that eliminates unit pivots on a sparse
representation first and only densifies the small remainder.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


@dataclass
class SNFResult:
    diag: list          # invariant factors, divisibility-chained, > 0
    D: list             # m x n diagonal matrix
    R: list             # m x m unimodular
    C: list             # n x n unimodular

    def __iter__(self):  # (D, row_ops, col_ops) unpacking
        return iter((self.D, self.R, self.C))


def smith_normal_form(M) -> SNFResult:
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(row) for row in M]
    R = _identity(m)
    C = _identity(n)

    # Row ops on D are compensated on R's columns and col ops on C's rows by
    # the inverse elementary operation, keeping M = R * D * C throughout.
    def row_swap(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            for row in R:
                row[i], row[j] = row[j], row[i]

    def row_add(i, j, q):  # row i += q * row j
        Di, Dj = D[i], D[j]
        for t in range(n):
            Di[t] += q * Dj[t]
        for row in R:
            row[j] -= q * row[i]

    def row_negate(i):
        D[i] = [-v for v in D[i]]
        for row in R:
            row[i] = -row[i]

    def col_swap(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            C[i], C[j] = C[j], C[i]

    def col_add(i, j, q):  # col i += q * col j
        for row in D:
            row[i] += q * row[j]
        Cj, Ci = C[j], C[i]
        for t in range(n):
            Cj[t] -= q * Ci[t]

    def eliminate(t, rend, cend):
        """Clear row and column t within the window [t:rend, t:cend]."""
        while True:
            best = None
            for i in range(t, rend):
                Di = D[i]
                for j in range(t, cend):
                    v = Di[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return False
            row_swap(best[1], t)
            col_swap(best[2], t)
            clean = True
            for i in range(t + 1, rend):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_add(i, t, -q)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, cend):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_add(j, t, -q)
                    if D[t][j]:
                        clean = False
            if clean and not any(D[i][t] for i in range(t + 1, rend)):
                if D[t][t] < 0:
                    row_negate(t)
                return True

    limit = min(m, n)
    rank = 0
    for t in range(limit):
        if not eliminate(t, m, n):
            break
        rank += 1

    # enforce the divisibility chain d1 | d2 | ...; each fix works inside a
    # self-contained 2x2 block since the rest of the matrix is diagonal
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if b % a != 0:
                col_add(i, i + 1, 1)
                eliminate(i, i + 2, i + 2)
                if D[i + 1][i + 1] < 0:
                    row_negate(i + 1)
                changed = True

    diag = [D[i][i] for i in range(rank)]
    return SNFResult(diag, D, R, C)


def matmul(A, B):
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    Oi[j] += a * Bt[j]
    return out


def det_exact(A) -> int:
    """Fraction-free Bareiss determinant (exact, for unimodularity checks)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# -- sparse invariant factors --------------------------------------------------


def invariant_factors_sparse(entries, nrows: int, ncols: int):
    """Invariant factors of a sparse integer matrix given as {(i, j): v}.

    Unit pivots are eliminated on the sparse structure with a minimal-fill
    heap; whatever remains (rarely more than a few rows for cell-complex
    boundary matrices) is handed to the dense routine.
    """
    rows = {}
    cols = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    heap = []
    for i, row in rows.items():
        for j, v in row.items():
            if v in (1, -1):
                fill = (len(row) - 1) * (len(cols[j]) - 1)
                heapq.heappush(heap, (fill, i, j))

    ones = 0
    while heap:
        fill, i, j = heapq.heappop(heap)
        row = rows.get(i)
        if row is None:
            continue
        v = row.get(j)
        if v not in (1, -1):
            continue
        cur_fill = (len(row) - 1) * (len(cols[j]) - 1)
        if cur_fill > fill:
            heapq.heappush(heap, (cur_fill, i, j))
            continue
        piv = v
        pivot_row = row
        for i2 in list(cols[j]):
            if i2 == i:
                continue
            row2 = rows[i2]
            factor = row2[j] * piv  # exact quotient, pivot is a unit
            for jj, vv in pivot_row.items():
                new = row2.get(jj, 0) - factor * vv
                if new:
                    row2[jj] = new
                    cols[jj].add(i2)
                    if new in (1, -1):
                        heapq.heappush(
                            heap, ((len(row2) - 1) * (len(cols[jj]) - 1), i2, jj)
                        )
                elif jj in row2:
                    del row2[jj]
                    cols[jj].discard(i2)
            if not row2:
                del rows[i2]
        for jj in pivot_row:
            cols[jj].discard(i)
            if not cols[jj]:
                del cols[jj]
        del rows[i]
        ones += 1

    if not rows:
        return [1] * ones
    row_ids = sorted(rows)
    col_ids = sorted({j for row in rows.values() for j in row})
    col_index = {j: t for t, j in enumerate(col_ids)}
    dense = [[0] * len(col_ids) for _ in row_ids]
    for t, i in enumerate(row_ids):
        for j, v in rows[i].items():
            dense[t][col_index[j]] = v
    rest = smith_normal_form(dense).diag
    return [1] * ones + list(rest)

