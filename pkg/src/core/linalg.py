"""
Dokładna algebra liniowa nad GF(q).

Macierze to tablice numpy z kodami elementów ciała. Dla ciał prostych działamy
modulo p, dla rozszerzeń przez tablice działań z `gfq`.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .gfq import FieldSpec


def _axpy(field: FieldSpec, rows: np.ndarray, factors: np.ndarray, pivot_row: np.ndarray) -> np.ndarray:
    """rows - factors[:, None] * pivot_row (wiersz po wierszu)."""
    if field.e == 1:
        return (rows - factors[:, None] * pivot_row[None, :]) % field.p
    t = field.tables
    return t.sub[rows, t.mul[factors[:, None], pivot_row[None, :]]]


def _scale_row(field: FieldSpec, row: np.ndarray, code: int) -> np.ndarray:
    if field.e == 1:
        return (row * code) % field.p
    return field.tables.mul[code, row]


def row_reduce(field: FieldSpec, m) -> Tuple[np.ndarray, List[int]]:
    """
    Zredukowana postać schodkowa (RREF) i lista kolumn wiodących.

    Zwracane są tylko niezerowe wiersze. Pivot to pierwszy niezerowy wiersz
    w kolumnie, więc wynik jest deterministyczny.
    """
    R = np.array(m, dtype=np.int64, copy=True)
    if R.ndim != 2 or R.size == 0:
        return R.reshape(0, R.shape[-1] if R.ndim == 2 else 0), []
    nrows, ncols = R.shape
    inv = field.tables.inv
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = _scale_row(field, R[r], int(inv[R[r, c]]))
        col = R[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            R[others] = _axpy(field, R[others], col[others], R[r])
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(field: FieldSpec, m) -> int:
    return len(row_reduce(field, m)[1])


def nullspace(field: FieldSpec, m) -> np.ndarray:
    """Baza {v : m v = 0} jako wiersze; wektory w postaci z jedynką na kolumnie wolnej."""
    arr = np.array(m, dtype=np.int64)
    ncols = arr.shape[1]
    R, pivots = row_reduce(field, arr)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    neg = field.tables.neg
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = neg[R[i, f]]
    return basis


def left_nullspace(field: FieldSpec, m) -> np.ndarray:
    """Baza {w : w m = 0}."""
    return nullspace(field, np.array(m, dtype=np.int64).T)


def solve(field: FieldSpec, a, b) -> Optional[np.ndarray]:
    """Jedno rozwiązanie a x = b (zmienne wolne = 0) albo None."""
    A = np.array(a, dtype=np.int64)
    rhs = np.array(b, dtype=np.int64).reshape(-1, 1)
    ncols = A.shape[1]
    R, pivots = row_reduce(field, np.hstack([A, rhs]))
    if pivots and pivots[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, -1]
    return x


def reduce_modulo(field: FieldSpec, vectors: np.ndarray, basis: np.ndarray, pivots: Sequence[int]) -> np.ndarray:
    """Redukcja wierszy `vectors` modulo przestrzeń rozpiętą przez bazę w postaci RREF."""
    V = np.array(vectors, dtype=np.int64, copy=True)
    if V.size == 0:
        return V
    for row, pc in zip(basis, pivots):
        factors = V[:, pc].copy()
        hit = np.flatnonzero(factors)
        if hit.size:
            V[hit] = _axpy(field, V[hit], factors[hit], row)
    return V


class RowSpace:
    """Przyrostowo budowana przestrzeń wierszy (stała liczba kolumn)."""

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: List[int] = []

    def extend(self, rows) -> None:
        block = np.array(rows, dtype=np.int64).reshape(-1, self.ncols)
        if block.size == 0:
            return
        self.basis, self.pivots = row_reduce(self.field, np.vstack([self.basis, block]))

    @property
    def dim(self) -> int:
        return len(self.pivots)


# ==============================================================================
# === Małe macierze (listy kodów) ===


def mat_identity(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(field: FieldSpec, a, b) -> Tuple[Tuple[int, ...], ...]:
    t = field.tables
    n, m, k = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = 0
            for s in range(m):
                acc = t.add_l[acc][t.mul_l[a[i][s]][b[s][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_transpose(a) -> Tuple[Tuple[int, ...], ...]:
    return tuple(zip(*a))


def mat_det(field: FieldSpec, a) -> int:
    """Wyznacznik eliminacją Gaussa (kod elementu)."""
    t = field.tables
    m = [list(row) for row in a]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = t.neg_l[det]
        det = t.mul_l[det][m[c][c]]
        inv = t.inv_l[m[c][c]]
        for r in range(c + 1, n):
            if m[r][c]:
                f = t.mul_l[m[r][c]][inv]
                m[r] = [t.sub_l[x][t.mul_l[f][y]] for x, y in zip(m[r], m[c])]
    return det


def mat_inverse(field: FieldSpec, a) -> Tuple[Tuple[int, ...], ...]:
    n = len(a)
    aug = np.hstack([np.array(a, dtype=np.int64), np.array(mat_identity(n), dtype=np.int64)])
    R, pivots = row_reduce(field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ZeroDivisionError("Macierz osobliwa")
    return tuple(tuple(int(x) for x in row[n:]) for row in R)


def mat_rank(field: FieldSpec, a) -> int:
    return rank(field, np.array(a, dtype=np.int64).reshape(len(a), -1))
