"""
Relacje między niezmiennikami F[V + V*]^G.

Każda funkcja `relation_*` zwraca wielomian, który powinien być zerowy;
niezerowy wynik to błąd weryfikacji, nie wyjątek.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Union

from .errors import BoundExceededError, ParameterError
from .gfq import embed_field, make_field
from .invariants import InvariantCatalog
from .mpoly import FormalPoly, Poly, derivative, det_poly, evaluate, involution_star
from .presentation import PresentationRing


def _signed(f, k: int):
    return -f if k % 2 else f


def _q_power(f, m: int):
    """f^{q^m} przez Frobeniusa."""
    return f.pth_power(f.field.e * m)


def _c_ext(cat: InvariantCatalog, i: int, k: int) -> Poly:
    """c_{k,i} z konwencją c_{k,i} = 0 poza zakresem 0..k."""
    if i < 0 or i > k:
        return Poly.zero(cat.field, cat.n)
    return cat.c(i, k)


def _c_star_ext(cat: InvariantCatalog, i: int, k: int) -> Poly:
    if i < 0 or i > k:
        return Poly.zero(cat.field, cat.n)
    return cat.c_star(i, k)


def _u_term(cat: InvariantCatalog, i: int, j: int) -> Poly:
    """u_{i-j}^{q^{min(i,j)}}."""
    return _q_power(cat.u(i - j), min(i, j))


# ==============================================================================
# === T_j, T*_j, T_00 ===


def relation_T(cat: InvariantCatalog, j: int) -> Poly:
    if j < 0:
        raise ParameterError(f"T_j wymaga j >= 0, otrzymano {j}")
    acc = Poly.zero(cat.field, cat.n)
    for i in range(cat.n + 1):
        acc = acc + _signed(cat.c(i) * _u_term(cat, i, j), i)
    return acc


def relation_T_star(cat: InvariantCatalog, j: int) -> Poly:
    acc = Poly.zero(cat.field, cat.n)
    if j >= 0:
        for i in range(cat.n + 1):
            acc = acc + _signed(cat.c_star(i) * _q_power(cat.u(j - i), min(i, j)), i)
        return acc
    k = -j
    for i in range(cat.n + 1):
        acc = acc + _signed(_q_power(cat.c_star(i), k) * cat.u(-i - k), i)
    return acc


def u_matrix(cat: InvariantCatalog) -> List[List[Poly]]:
    """M[i][j] = u_{i-j}^{q^{min(i,j)}}, i, j = 0..n-1."""
    return [[_u_term(cat, i, j) for j in range(cat.n)] for i in range(cat.n)]


def relation_T00(cat: InvariantCatalog) -> Poly:
    det_m = det_poly(u_matrix(cat))
    return cat.c(0) * cat.c_star(0) - det_m ** (cat.q - 1)


def relation_T00_root(cat: InvariantCatalog) -> Poly:
    """d_{n,n} d*_{n,n} - (-1)^{n(n-1)/2} det(M)."""
    n = cat.n
    d = cat.d(n)
    det_m = det_poly(u_matrix(cat))
    return d * involution_star(d) - _signed(det_m, n * (n - 1) // 2)


# ==============================================================================
# === R_k ===

PAIRINGS = ("mixed", "literal")


def relation_R(cat: InvariantCatalog, k: int, pairing: str = "mixed") -> Poly:
    """
    f_k f*_{n+1-k} - sum_{i<k} sum_{j<=n-k} (-1)^{i+j+n+1} c_{k-1,.} c*_{n-k,.} u_{i-j}^{q^{min(i,j)}}.

    pairing="mixed": c_{k-1,i} c*_{n-k,j}; pairing="literal": c_{k-1,j} c*_{n-k,j}.
    """
    n = cat.n
    if not 1 <= k <= n:
        raise ParameterError(f"R_k wymaga 1 <= k <= {n}, otrzymano {k}")
    if pairing not in PAIRINGS:
        raise ParameterError(f"Nieznane sparowanie indeksów: {pairing}")
    acc = cat.f(k) * cat.f_star(n + 1 - k)
    for i in range(k):
        for j in range(n - k + 1):
            left = _c_ext(cat, i if pairing == "mixed" else j, k - 1)
            if not left:
                continue
            term = left * _c_star_ext(cat, j, n - k) * _u_term(cat, i, j)
            acc = acc - _signed(term, i + j + n + 1)
    return acc


def resolve_r_pairing(cat: InvariantCatalog) -> Dict:
    """Które sparowanie indeksów w R_k daje zero dla każdego k."""
    results = {}
    for pairing in PAIRINGS:
        results[pairing] = [relation_R(cat, k, pairing).is_zero() for k in range(1, cat.n + 1)]
    resolved = [p for p in PAIRINGS if all(results[p])]
    logging.info(f"Sparowanie R_k dla n={cat.n}, q={cat.q}: {results}")
    return {"n": cat.n, "q": cat.q, "results": results, "resolved": resolved[0] if resolved else None}


def relation_R_plus(cat: InvariantCatalog) -> Poly:
    """F(R_n): sum_{i<n} (-1)^{i+n+1} c_{n-1,i}^q u_{i+1} - f_n^q f*_1."""
    n = cat.n
    acc = Poly.zero(cat.field, n)
    for i in range(n):
        acc = acc + _signed(_q_power(cat.c(i, n - 1), 1) * cat.u(i + 1), i + n + 1)
    return acc - _q_power(cat.f(n), 1) * cat.f_star(1)


def wilkerson_check(cat: InvariantCatalog, i: int) -> Poly:
    """c_{n,i} - c_{n-1,i-1}^q - f_n^{q-1} c_{n-1,i}."""
    n = cat.n
    if not 0 <= i <= n:
        raise ParameterError(f"Indeks {i} poza zakresem 0..{n}")
    return (
        cat.c(i)
        - _q_power(_c_ext(cat, i - 1, n - 1), 1)
        - cat.f(n) ** (cat.q - 1) * _c_ext(cat, i, n - 1)
    )


# ==============================================================================
# === Jakobian i nabla ===


def jacobian_matrix(cat: InvariantCatalog) -> List[List[Poly]]:
    """Pochodne (u_{n-1}, ..., u_{-n}) po (y_1..y_n, x_1..x_n)."""
    n = cat.n
    variables = [n + i for i in range(n)] + list(range(n))
    return [[derivative(cat.u(j), v) for v in variables] for j in range(n - 1, -n - 1, -1)]


def jacobian_identity(cat: InvariantCatalog) -> Poly:
    """det(J) - d_{n,n} (d*_{n,n})^q."""
    d = cat.d(cat.n)
    return det_poly(jacobian_matrix(cat)) - d * _q_power(involution_star(d), 1)


def jacobian_nonzero_check(cat: InvariantCatalog) -> Dict:
    """
    Wartość d_{n,n} (d*_{n,n})^q w punkcie x_i = y_i = theta^{i-1} ciała F_{q^n}.

    Współrzędne są liniowo niezależne nad F_q, więc wynik musi być niezerowy.
    """
    n, field = cat.n, cat.field
    try:
        big = make_field(field.p, field.e * n)
    except BoundExceededError:
        logging.warning(f"Pominięto ewaluację jakobianu: F_{{{field.q}^{n}}} przekracza limit ciała")
        return {"skipped": True, "nonzero": None, "value": None}

    d = cat.d(n)
    product = d * _q_power(involution_star(d), 1)
    powers = [big.tables.exp_l[i] for i in range(n)]
    value = evaluate(product, powers + powers, big, embed_field(field, big))
    return {"skipped": False, "nonzero": bool(value), "value": str(value), "field": str(big)}


def nabla_matrix(cat: InvariantCatalog) -> List[List[Poly]]:
    """nabla[j][i] = (-1)^i u_{i-j}^{q^{min(i,j)}}, i, j = 1..n-1."""
    n = cat.n
    if n < 2:
        raise ParameterError("nabla wymaga n >= 2")
    return [[_signed(_u_term(cat, i, j), i) for i in range(1, n)] for j in range(1, n)]


def nabla_identity_check(cat: InvariantCatalog) -> bool:
    """nabla (c_{n,1}..c_{n,n-1})^t = ((-1)^{n+1} u_{n-j}^{q^j} - c_{n,0} u_{-j})_j."""
    n = cat.n
    nabla = nabla_matrix(cat)
    for j in range(1, n):
        lhs = Poly.zero(cat.field, n)
        for i in range(1, n):
            lhs = lhs + nabla[j - 1][i - 1] * cat.c(i)
        rhs = _signed(_q_power(cat.u(n - j), j), n + 1) - cat.c(0) * cat.u(-j)
        if lhs != rhs:
            logging.debug(f"nabla: wiersz j={j} niezgodny")
            return False
    return True


def nabla_determinant(cat: InvariantCatalog) -> Poly:
    return det_poly(nabla_matrix(cat))


# ==============================================================================
# === u_{+-n} i tożsamość gwiazdkowa ===


def u_boundary_from_relations(cat: InvariantCatalog) -> Dict:
    """
    u_n i u_{-n} wyznaczone z T_0 i T*_0, porównane z F^n(u_0) i (F*)^n(u_0).
    """
    n = cat.n
    u_plus = Poly.zero(cat.field, n)
    u_minus = Poly.zero(cat.field, n)
    for i in range(n):
        u_plus = u_plus + _signed(cat.c(i) * cat.u(i), i)
        u_minus = u_minus + _signed(cat.c_star(i) * cat.u(-i), i)
    u_plus = _signed(u_plus, n + 1)
    u_minus = _signed(u_minus, n + 1)
    return {
        "u_n": u_plus,
        "u_-n": u_minus,
        "plusMatches": u_plus == cat.u(n),
        "minusMatches": u_minus == cat.u(-n),
    }


def star_T_identity(cat: InvariantCatalog) -> Poly:
    """
    sum_{j=0}^{n} (-1)^j (c*_{n,j} T_j - c_{n,j} T*_j) w F[V + V*].

    T_j i T*_j budowane są z u_{+-n} wyznaczonych z T_0 i T*_0.
    """
    n = cat.n
    boundary = u_boundary_from_relations(cat)

    def u(k: int) -> Poly:
        if k == n:
            return boundary["u_n"]
        if k == -n:
            return boundary["u_-n"]
        return cat.u(k)

    acc = Poly.zero(cat.field, n)
    for j in range(n + 1):
        t_j = Poly.zero(cat.field, n)
        t_star_j = Poly.zero(cat.field, n)
        for i in range(n + 1):
            t_j = t_j + _signed(cat.c(i) * _q_power(u(i - j), min(i, j)), i)
            t_star_j = t_star_j + _signed(cat.c_star(i) * _q_power(u(j - i), min(i, j)), i)
        acc = acc + _signed(cat.c_star(j) * t_j - cat.c(j) * t_star_j, j)
    return acc


# ==============================================================================
# === Relacje formalne w S ===


def relation_T_formal(pres: PresentationRing, j: int) -> FormalPoly:
    """T_j jako element S: sum_{i<n} (-1)^i C_i U_{i-j}^{q^{min(i,j)}} + (-1)^n U_{n-j}^{q^j}, 1 <= j <= n-1."""
    n = pres.n
    if not 1 <= j <= n - 1:
        raise ParameterError(f"Formalne T_j istnieje w S dla 1 <= j <= {n - 1}")
    acc = pres.zero()
    for i in range(n):
        acc = acc + _signed(pres.C(i) * _q_power(pres.U(i - j), min(i, j)), i)
    return acc + _signed(_q_power(pres.U(n - j), j), n)


def relation_T_star_formal(pres: PresentationRing, j: int) -> FormalPoly:
    n = pres.n
    if not 1 <= j <= n - 1:
        raise ParameterError(f"Formalne T*_j istnieje w S dla 1 <= j <= {n - 1}")
    acc = pres.zero()
    for i in range(n):
        acc = acc + _signed(pres.C_star(i) * _q_power(pres.U(j - i), min(i, j)), i)
    return acc + _signed(_q_power(pres.U(j - n), j), n)


def relation_T00_formal(pres: PresentationRing) -> FormalPoly:
    n = pres.n
    matrix = [[_q_power(pres.U(i - j), min(i, j)) for j in range(n)] for i in range(n)]
    return pres.C(0) * pres.C_star(0) - det_poly(matrix) ** (pres.q - 1)


def star_T_identity_formal(pres: PresentationRing) -> FormalPoly:
    """
    sum_{j=0}^{n} (-1)^j (C*_j T_j - C_j T*_j) w S, C_n = C*_n = 1.

    U_n := (-1)^{n+1} sum_{i<n} (-1)^i C_i U_i, U_{-n} analogicznie z C*_i U_{-i}.
    """
    n = pres.n
    u_plus = pres.zero()
    u_minus = pres.zero()
    for i in range(n):
        u_plus = u_plus + _signed(pres.C(i) * pres.U(i), i)
        u_minus = u_minus + _signed(pres.C_star(i) * pres.U(-i), i)
    u_plus, u_minus = _signed(u_plus, n + 1), _signed(u_minus, n + 1)

    def U(k: int) -> FormalPoly:
        if k == n:
            return u_plus
        if k == -n:
            return u_minus
        return pres.U(k)

    def C(i: int) -> FormalPoly:
        return pres.one() if i == n else pres.C(i)

    def C_star(i: int) -> FormalPoly:
        return pres.one() if i == n else pres.C_star(i)

    acc = pres.zero()
    for j in range(n + 1):
        t_j = pres.zero()
        t_star_j = pres.zero()
        for i in range(n + 1):
            t_j = t_j + _signed(C(i) * _q_power(U(i - j), min(i, j)), i)
            t_star_j = t_star_j + _signed(C_star(i) * _q_power(U(j - i), min(i, j)), i)
        acc = acc + _signed(C_star(j) * t_j - C(j) * t_star_j, j)
    return acc


# ==============================================================================
# === Zestaw kontroli ===


def relation_names(n: int, t_range: Optional[int] = None) -> List[str]:
    """
    Nazwy kontroli w stałej kolejności raportu.

    `t_range` to największe j w T_j (domyślnie n + 2); T*_j dla -2 <= j < t_range.
    """
    t_range = n + 2 if t_range is None else t_range
    names = [f"T_{j}" for j in range(t_range + 1)]
    names += [f"T*_{j}" for j in range(-2, t_range)]
    names += ["T_00", "T_00 (pierwiastek)"]
    names += [f"R_{k}" for k in range(1, n + 1)] + ["R_n+"]
    names += [f"Wilkerson_{i}" for i in range(n + 1)]
    names += ["Jakobian", "Nabla", "Gwiazdka T"]
    names += [f"T_{j} (S)" for j in range(1, n)] + [f"T*_{j} (S)" for j in range(1, n)]
    names += ["T_00 (S)", "Gwiazdka T (S)"]
    return names


def evaluate_relation(cat: InvariantCatalog, name: str) -> Union[Poly, FormalPoly, bool]:
    """Wielomian relacji o danej nazwie (dla kontroli nabla: wynik logiczny)."""
    if name.endswith(" (S)"):
        pres = PresentationRing(cat)
        base = name[: -len(" (S)")]
        if base == "T_00":
            return pres.pi_map(relation_T00_formal(pres))
        if base == "Gwiazdka T":
            return star_T_identity_formal(pres)
        index = int(base.split("_", 1)[1])
        formal = relation_T_star_formal(pres, index) if base.startswith("T*") else relation_T_formal(pres, index)
        return pres.pi_map(formal)
    if name == "T_00":
        return relation_T00(cat)
    if name == "T_00 (pierwiastek)":
        return relation_T00_root(cat)
    if name == "R_n+":
        return relation_R_plus(cat)
    if name == "Jakobian":
        return jacobian_identity(cat)
    if name == "Nabla":
        return nabla_identity_check(cat)
    if name == "Gwiazdka T":
        return star_T_identity(cat)
    kind, _, index = name.partition("_")
    builders = {"T": relation_T, "T*": relation_T_star, "R": relation_R, "Wilkerson": wilkerson_check}
    if kind not in builders or not index:
        raise ParameterError(f"Nieznana relacja: '{name}'")
    return builders[kind](cat, int(index))


def relation_record(cat: InvariantCatalog, name: str) -> Dict:
    value = evaluate_relation(cat, name)
    if isinstance(value, bool):
        return {"relation": name, "zero": value, "terms": 0}
    return {"relation": name, "zero": value.is_zero(), "terms": len(value)}


def relation_suite(cat: InvariantCatalog, t_range: Optional[int] = None) -> List[Dict]:
    """Wszystkie relacje dla ustalonych (n, q) jako rekordy raportu."""
    return [relation_record(cat, name) for name in relation_names(cat.n, t_range)]
