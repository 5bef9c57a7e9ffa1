"""
Grupa GL_n(F_q), jej podgrupa unipotentna U i działanie na F[V + V*].

Macierze trzymane są jako krotki krotek kodów elementów ciała.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..config.settings import FULL_GROUP_SCAN_LIMIT, MAX_GROUP_ORDER
from .errors import BoundExceededError, CrossCheckError, FieldMismatchError, ParameterError, ParseError
from .gfq import FieldSpec, format_element, parse_element, primitive_element
from .linalg import mat_det, mat_identity, mat_inverse, mat_mul, mat_rank, mat_transpose
from .mpoly import LinearSubstitution, Poly

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupElement:
    """Odwracalna macierz n x n nad F_q."""

    field: FieldSpec
    mat: Matrix

    def __post_init__(self):
        n = len(self.mat)
        if n == 0 or any(len(row) != n for row in self.mat):
            raise ParameterError("Element grupy musi być niepustą macierzą kwadratową")
        if mat_det(self.field, self.mat) == 0:
            raise ParameterError(f"Macierz {format_matrix(self.field, self.mat)} jest osobliwa")

    @classmethod
    def _trusted(cls, field: FieldSpec, mat: Matrix) -> "GroupElement":
        """Konstruktor bez sprawdzania wyznacznika (dla enumeracji, która już go policzyła)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "mat", mat)
        return obj

    @property
    def n(self) -> int:
        return len(self.mat)

    @cached_property
    def inverse(self) -> "GroupElement":
        return GroupElement._trusted(self.field, mat_inverse(self.field, self.mat))

    @cached_property
    def substitution(self) -> LinearSubstitution:
        # x -> E^t x, y -> E^{-1} y
        return LinearSubstitution(self.field, self.n, mat_transpose(self.mat), self.inverse.mat)

    def det(self) -> int:
        return mat_det(self.field, self.mat)

    def is_identity(self) -> bool:
        return self.mat == mat_identity(self.n)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if other.field != self.field or other.n != self.n:
            raise FieldMismatchError("Mnożenie elementów różnych grup")
        return GroupElement._trusted(self.field, mat_mul(self.field, self.mat, other.mat))

    def __str__(self) -> str:
        return format_matrix(self.field, self.mat)


@dataclass(frozen=True)
class CosetSystem:
    reps: Tuple[GroupElement, ...]
    index: int


def format_matrix(field: FieldSpec, mat) -> str:
    """Wiersze rozdzielone ';', wpisy ','."""
    return ";".join(",".join(format_element(field, c) for c in row) for row in mat)


def parse_matrix(field: FieldSpec, text: str) -> GroupElement:
    try:
        rows = [tuple(parse_element(field, c).value for c in row.split(",")) for row in text.strip().split(";")]
    except ParseError as e:
        raise ParseError(f"Niepoprawna macierz '{text}': {e}") from e
    return GroupElement(field, tuple(rows))


def identity_element(field: FieldSpec, n: int) -> GroupElement:
    return GroupElement._trusted(field, mat_identity(n))


# ==============================================================================
# === Rzędy i enumeracja ===


def group_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    if n < 1:
        raise ParameterError(f"n musi być >= 1, otrzymano {n}")
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order


def unipotent_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2)


def _check_bound(n: int, field: FieldSpec) -> None:
    order = group_order(n, field.q)
    if order > MAX_GROUP_ORDER:
        raise BoundExceededError(
            f"|GL_{n}({field})| = {order} przekracza limit enumeracji {MAX_GROUP_ORDER}"
        )


@lru_cache(maxsize=None)
def enumerate_GL(field: FieldSpec, n: int) -> Tuple[GroupElement, ...]:
    """Wszystkie macierze odwracalne; kolejność licznika po wpisach wierszami."""
    _check_bound(n, field)
    q = field.q
    out = []
    for entries in itertools.product(range(q), repeat=n * n):
        mat = tuple(tuple(entries[r * n:(r + 1) * n]) for r in range(n))
        if mat_det(field, mat):
            out.append(GroupElement._trusted(field, mat))
    logging.debug(f"Enumeracja GL_{n}({field}): {len(out)} elementów")
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_U(field: FieldSpec, n: int) -> Tuple[GroupElement, ...]:
    """Górne macierze trójkątne z jedynkami na przekątnej."""
    positions = [(r, c) for r in range(n) for c in range(r + 1, n)]
    out = []
    for entries in itertools.product(range(field.q), repeat=len(positions)):
        rows = [list(row) for row in mat_identity(n)]
        for (r, c), v in zip(positions, entries):
            rows[r][c] = v
        out.append(GroupElement._trusted(field, tuple(tuple(row) for row in rows)))
    return tuple(out)


# ==============================================================================
# === Działanie ===


def act(sigma: GroupElement, f: Poly) -> Poly:
    """
    Działanie lewostronne sigma . f.

    Dla macierzy E: x -> E^t x, y -> E^{-1} y. Forma u_0 = sum x_i y_i jest
    stała, a x_1 i y_n są stałe na górnych macierzach unitrójkątnych.
    """
    if sigma.n != f.n or sigma.field != f.field:
        raise FieldMismatchError(f"Macierz {sigma.n}x{sigma.n} nie działa na wielomianie z n = {f.n}")
    return sigma.substitution.apply(f)


def is_invariant(f: Poly, elems: Sequence[GroupElement]) -> bool:
    for sigma in elems:
        if act(sigma, f) != f:
            logging.debug(f"Wielomian nie jest stały na elemencie {sigma}")
            return False
    return True


def coset_reps(field: FieldSpec, n: int) -> CosetSystem:
    """Reprezentanci warstw lewostronnych gU, zachłannie w kolejności enumeracji."""
    G = enumerate_GL(field, n)
    U = enumerate_U(field, n)
    seen = set()
    reps: List[GroupElement] = []
    for g in G:
        if g.mat in seen:
            continue
        reps.append(g)
        for u in U:
            seen.add(mat_mul(field, g.mat, u.mat))
    index = len(G) // len(U)
    if len(reps) != index:
        raise CrossCheckError(f"Otrzymano {len(reps)} warstw zamiast {index}")
    return CosetSystem(tuple(reps), index)


def _block_matrix(field: FieldSpec, sigma: GroupElement) -> Matrix:
    n = sigma.n
    inv_t = mat_transpose(sigma.inverse.mat)
    rows = []
    for r in range(n):
        rows.append(tuple(sigma.mat[r]) + (0,) * n)
    for r in range(n):
        rows.append((0,) * n + tuple(inv_t[r]))
    return tuple(rows)


def _minus_identity(field: FieldSpec, mat: Matrix) -> Matrix:
    sub = field.tables.sub_l
    size = len(mat)
    return tuple(
        tuple(sub[1 if i == j else 0][mat[i][j]] for j in range(size)) for i in range(size)
    )


def pseudo_reflection_scan(field: FieldSpec, n: int, progress: bool = False) -> Dict:
    """
    Dla każdego sigma: B = E + (E^{-1})^t (blokowo), det(B) i rank(I - B).

    Warunek: det(B) = 1 oraz rank(I - B) = 2 rank(I - E), nigdy 1.
    """
    elements = enumerate_GL(field, n)
    failures = []
    histogram: Counter = Counter()
    for sigma in tqdm(elements, desc="Skan pseudoodbić", disable=not progress):
        B = _block_matrix(field, sigma)
        det_b = mat_det(field, B)
        rank_b = mat_rank(field, _minus_identity(field, B))
        rank_e = mat_rank(field, _minus_identity(field, sigma.mat))
        histogram[rank_b] += 1
        if det_b != 1 or rank_b != 2 * rank_e or rank_b == 1:
            failures.append({
                "matrix": str(sigma),
                "det": format_element(field, det_b),
                "rank": rank_b,
                "rankE": rank_e,
            })
    if failures:
        logging.warning(f"Skan pseudoodbić: {len(failures)} elementów nie spełnia warunku")
    return {
        "n": n,
        "q": field.q,
        "elements": len(elements),
        "passed": not failures,
        "failures": failures,
        "rankHistogram": {str(k): v for k, v in sorted(histogram.items())},
    }


# ==============================================================================
# === Generatory i macierze działania ===


def generating_set(field: FieldSpec, n: int) -> Tuple[GroupElement, ...]:
    """
    diag(w, 1, ..., 1), I + E_12 i permutacja cykliczna e_i -> e_{i+1}.

    Dla q = 2 macierz diagonalna jest identycznością i zostaje pominięta.
    """
    omega = primitive_element(field).value
    rows = [list(row) for row in mat_identity(n)]
    rows[0][0] = omega
    diag = tuple(tuple(row) for row in rows)
    rows = [list(row) for row in mat_identity(n)]
    rows[0][1] = 1
    transvection = tuple(tuple(row) for row in rows)
    cycle = tuple(tuple(1 if r == (c + 1) % n else 0 for c in range(n)) for r in range(n))
    gens = []
    for mat in (diag, transvection, cycle):
        if mat != mat_identity(n) and mat not in [g.mat for g in gens]:
            gens.append(GroupElement._trusted(field, mat))
    return tuple(gens)


def closure_order(gens: Sequence[GroupElement], limit: int = MAX_GROUP_ORDER) -> int:
    """Rząd podgrupy generowanej przez `gens` (przeszukiwanie wszerz)."""
    if not gens:
        return 1
    field, n = gens[0].field, gens[0].n
    start = mat_identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        mat = queue.popleft()
        for g in gens:
            nxt = mat_mul(field, g.mat, mat)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise BoundExceededError(f"Domknięcie przekracza {limit} elementów")
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)


def action_matrix(sigma: GroupElement, basis_keys: Sequence[int]) -> np.ndarray:
    """
    Macierz działania sigma na przestrzeni rozpiętej przez jednomiany `basis_keys`.

    Kolumna j to współrzędne sigma . m_j; przestrzeń musi być niezmiennicza.
    """
    index = {k: i for i, k in enumerate(basis_keys)}
    M = np.zeros((len(basis_keys), len(basis_keys)), dtype=np.int64)
    subst = sigma.substitution
    for j, key in enumerate(basis_keys):
        image = subst.monomial_image(key)
        for k, c in image.terms.items():
            if k not in index:
                raise FieldMismatchError("Przestrzeń nie jest niezmiennicza względem sigma")
            M[index[k], j] = c
    return M


def u_generating_set(field: FieldSpec, n: int) -> Tuple[GroupElement, ...]:
    """I + a E_{i,i+1}, gdzie a przebiega bazę F_q nad F_p (a = g^k)."""
    gens = []
    for i in range(n - 1):
        for k in range(field.e):
            rows = [list(row) for row in mat_identity(n)]
            rows[i][i + 1] = field.p**k
            gens.append(GroupElement._trusted(field, tuple(tuple(row) for row in rows)))
    return tuple(gens)


@lru_cache(maxsize=None)
def checking_elements(field: FieldSpec, n: int, group: str = "G") -> Tuple[GroupElement, ...]:
    """
    Elementy, na których sprawdzana jest niezmienniczość.

    Cała grupa, gdy jej rząd nie przekracza FULL_GROUP_SCAN_LIMIT; w przeciwnym
    razie zbiór generatorów, sprawdzony raz przez domknięcie (powyżej
    MAX_GROUP_ORDER bez sprawdzenia, z ostrzeżeniem).
    """
    if group not in ("G", "U"):
        raise ParameterError(f"Nieznana grupa: {group} (dozwolone G, U)")
    order = group_order(n, field.q) if group == "G" else unipotent_order(n, field.q)
    if order <= FULL_GROUP_SCAN_LIMIT:
        return enumerate_GL(field, n) if group == "G" else enumerate_U(field, n)
    gens = generating_set(field, n) if group == "G" else u_generating_set(field, n)
    if order <= MAX_GROUP_ORDER:
        found = closure_order(gens)
        if found != order:
            raise CrossCheckError(f"Generatory {group} dają podgrupę rzędu {found} zamiast {order}")
    else:
        logging.warning(
            f"|{group}| = {order} przekracza MAX_GROUP_ORDER = {MAX_GROUP_ORDER}: "
            f"zbiór generatorów {group} nie został sprawdzony przez domknięcie"
        )
    logging.debug(f"Niezmienniczość względem {len(gens)} generatorów {group} (|{group}| = {order})")
    return gens
