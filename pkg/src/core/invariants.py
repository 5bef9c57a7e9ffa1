"""
Katalog nazwanych niezmienników: d_{k,i}, c_{k,i}, c*_{k,i}, f_i, f*_i, u_j.

Niezmienniki Dicksona c_{k,i} z k < n żyją w podpierścieniu F[x_1..x_k],
ich duale c*_{k,i} w F[y_n..y_{n+1-k}].
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..config.settings import MAX_SPAN_PRODUCTS, MAX_U_INDEX, PRODUCT_FORMULA_LIMIT
from .errors import BoundExceededError, CrossCheckError, ParameterError
from .gfq import FieldSpec
from .mpoly import SLOT_BITS, Poly, det_poly, exact_divide, involution_star

_LABEL_RE = re.compile(r"^(d|c\*|c|f\*|f|u)(-?\d+)(?:,(\d+))?$")

Labeled = List[Tuple[str, Poly]]


class InvariantCatalog:
    """
    Leniwie budowany, zapamiętywany katalog niezmienników dla ustalonych (n, q).

    Etykiety: `d{k},{i}`, `c{k},{i}`, `c*{k},{i}`, `f{i}`, `f*{i}`, `u{j}`;
    skrót `c{i}` oznacza c_{n,i}.
    """

    def __init__(self, field: FieldSpec, n: int):
        if n < 1:
            raise ParameterError(f"n musi być >= 1, otrzymano {n}")
        self.field = field
        self.n = n
        self._entries: Dict[str, Poly] = {}
        self._product_coeffs: Optional[Dict[int, Poly]] = None

    @property
    def q(self) -> int:
        return self.field.q

    def _memo(self, label: str, builder) -> Poly:
        poly = self._entries.get(label)
        if poly is None:
            poly = builder()
            self._entries[label] = poly
        return poly

    def x(self, i: int, power: int = 1) -> Poly:
        return Poly.x(self.field, self.n, i, power)

    def y(self, i: int, power: int = 1) -> Poly:
        return Poly.y(self.field, self.n, i, power)

    def one(self) -> Poly:
        return Poly.constant(self.field, self.n, 1)

    # --- etykiety ---
    def canonical_label(self, label: str) -> str:
        match = _LABEL_RE.match(label.strip())
        if not match:
            raise ParameterError(f"Nieznana etykieta niezmiennika: '{label}'")
        kind, first, second = match.groups()
        if kind in ("d", "c", "c*"):
            if second is None:
                return f"{kind}{self.n},{int(first)}"
            return f"{kind}{int(first)},{int(second)}"
        if second is not None:
            raise ParameterError(f"Etykieta '{label}' nie przyjmuje drugiego indeksu")
        return f"{kind}{int(first)}"

    def get(self, label: str) -> Poly:
        canonical = self.canonical_label(label)
        kind, first, second = _LABEL_RE.match(canonical).groups()
        if kind == "d":
            return self.d(int(second), int(first))
        if kind == "c":
            return self.c(int(second), int(first))
        if kind == "c*":
            return self.c_star(int(second), int(first))
        if kind == "f":
            return self.f(int(first))
        if kind == "f*":
            return self.f_star(int(first))
        return self.u(int(first))

    def entries(self) -> Dict[str, Poly]:
        return dict(sorted(self._entries.items()))

    def preload(self, mapping: Dict[str, Poly]) -> None:
        """Wpisy wczytane z pamięci podręcznej na dysku."""
        for label, poly in mapping.items():
            if poly.field != self.field or poly.n != self.n:
                raise ParameterError(f"Wpis '{label}' pochodzi z innego pierścienia")
            self._entries[self.canonical_label(label)] = poly

    # --- d_{k,i} i Dickson ---
    def _check_k(self, k: Optional[int]) -> int:
        k = self.n if k is None else k
        if not 0 <= k <= self.n:
            raise ParameterError(f"Liczba zmiennych podpierścienia {k} poza zakresem 0..{self.n}")
        return k

    def d(self, i: int, k: Optional[int] = None) -> Poly:
        """Minor k x k macierzy D[r][s] = x_r^{q^s} (s = 0..k) bez kolumny i."""
        k = self._check_k(k)
        if not 0 <= i <= k:
            raise ParameterError(f"Indeks d_{{{k},{i}}} poza zakresem 0..{k}")

        def build() -> Poly:
            if k == 0:
                return self.one()
            columns = [s for s in range(k + 1) if s != i]
            rows = [[self.x(r, self.q**s) for s in columns] for r in range(1, k + 1)]
            return det_poly(rows)

        return self._memo(f"d{k},{i}", build)

    def c(self, i: int, k: Optional[int] = None) -> Poly:
        """c_{k,i} = d_{k,i} / d_{k,k}; c_{k,k} = 1, c_{k,-1} = 0."""
        k = self._check_k(k)
        if i == -1:
            return Poly.zero(self.field, self.n)
        if not 0 <= i <= k:
            raise ParameterError(f"Indeks c_{{{k},{i}}} poza zakresem 0..{k}")
        if i == k:
            return self.one()

        def build() -> Poly:
            value = exact_divide(self.d(i, k), self.d(k, k))
            if k == self.n:
                self._cross_check(i, value)
            return value

        return self._memo(f"c{k},{i}", build)

    def c_star(self, i: int, k: Optional[int] = None) -> Poly:
        k = self._check_k(k)
        if i == -1:
            return Poly.zero(self.field, self.n)
        if i == k:
            return self.one()
        return self._memo(f"c*{k},{i}", lambda: involution_star(self.c(i, k)))

    def _cross_check(self, i: int, value: Poly) -> None:
        if self.q**self.n > PRODUCT_FORMULA_LIMIT:
            logging.debug(f"Pominięto kontrolę wzorem iloczynowym dla c_{self.n},{i} (q^n > {PRODUCT_FORMULA_LIMIT})")
            return
        expected = self.product_coefficients().get(i, Poly.zero(self.field, self.n))
        if expected != value:
            raise CrossCheckError(
                f"c_{{{self.n},{i}}}: iloraz wyznaczników i wzór iloczynowy dają różne wielomiany"
            )

    def product_coefficients(self) -> Dict[int, Poly]:
        """
        Współczynniki prod_{x in V*} (L - x) przy L^{q^i}, ze znakiem (-1)^{n-i}.

        Zmienną L gra tymczasowo y_1 (formy liniowe zależą tylko od x).
        """
        if self._product_coeffs is None:
            n, q = self.n, self.q
            lam = self.y(1)
            product = self.one()
            for coeffs in itertools.product(range(q), repeat=n):
                form = Poly(self.field, n, {})
                for r, a in enumerate(coeffs, start=1):
                    if a:
                        form = form + self.x(r).scale(a)
                product = product * (lam - form)
            lay = product.layout
            out: Dict[int, Dict[int, int]] = {}
            powers = {q**i: i for i in range(n + 1)}
            for key, c in product.terms.items():
                exps = lay.unpack(key)
                i = powers.get(exps[n])
                if i is None:
                    raise CrossCheckError(f"Wyraz z L^{exps[n]} w iloczynie po V* (oczekiwano potęg q)")
                stripped = list(exps)
                stripped[n] = 0
                out.setdefault(i, {})[lay.pack(stripped)] = c
            coeffs = {}
            for i, terms in out.items():
                poly = Poly(self.field, n, terms)
                coeffs[i] = -poly if (n - i) % 2 else poly
            self._product_coeffs = coeffs
        return self._product_coeffs

    # --- Mui ---
    def f(self, i: int) -> Poly:
        """f_i = prod_{v in <x_1..x_{i-1}>} (x_i + v)."""
        if not 1 <= i <= self.n:
            raise ParameterError(f"Indeks f_{i} poza zakresem 1..{self.n}")

        def build() -> Poly:
            result = self.one()
            for coeffs in itertools.product(range(self.q), repeat=i - 1):
                factor = self.x(i)
                for r, a in enumerate(coeffs, start=1):
                    if a:
                        factor = factor + self.x(r).scale(a)
                result = result * factor
            return result

        return self._memo(f"f{i}", build)

    def f_star(self, i: int) -> Poly:
        if not 1 <= i <= self.n:
            raise ParameterError(f"Indeks f*_{i} poza zakresem 1..{self.n}")
        return self._memo(f"f*{i}", lambda: involution_star(self.f(i)))

    # --- u_j ---
    def u(self, j: int) -> Poly:
        """u_j = sum x_i^{q^j} y_i (j >= 0), sum x_i y_i^{q^{-j}} (j < 0)."""
        if abs(j) > MAX_U_INDEX:
            raise BoundExceededError(f"|j| = {abs(j)} przekracza limit {MAX_U_INDEX} dla u_j")
        if self.q ** abs(j) >= 1 << SLOT_BITS:
            raise BoundExceededError(f"Wykładnik q^{abs(j)} nie mieści się w polu jednomianu")

        def build() -> Poly:
            power = self.q ** abs(j)
            acc = Poly.zero(self.field, self.n)
            for i in range(1, self.n + 1):
                if j >= 0:
                    acc = acc + self.x(i, power) * self.y(i)
                else:
                    acc = acc + self.x(i) * self.y(i, power)
            return acc

        return self._memo(f"u{j}", build)

    # --- zbiory generatorów ---
    def lambda_generators(self) -> Labeled:
        """c_{n,0..n-1}, c*_{n,0..n-1}, u_{1-n..n-1}: 4n - 1 generatorów."""
        n = self.n
        gens = [(f"c{n},{i}", self.c(i)) for i in range(n)]
        gens += [(f"c*{n},{i}", self.c_star(i)) for i in range(n)]
        gens += [(f"u{j}", self.u(j)) for j in range(1 - n, n)]
        return gens

    def u_level_generators(self) -> Labeled:
        """f_i, f*_i oraz u_j dla 2-n <= j <= n-2."""
        n = self.n
        gens = [(f"f{i}", self.f(i)) for i in range(1, n + 1)]
        gens += [(f"f*{i}", self.f_star(i)) for i in range(1, n + 1)]
        gens += [(f"u{j}", self.u(j)) for j in range(2 - n, n - 1)]
        return gens


# ==============================================================================
# === Operacje modułowe ===


def d_det(catalog: InvariantCatalog, i: int) -> Poly:
    return catalog.d(i)


def dickson(catalog: InvariantCatalog, i: int) -> Poly:
    return catalog.c(i)


def dickson_dual(catalog: InvariantCatalog, i: int) -> Poly:
    return catalog.c_star(i)


def mui(catalog: InvariantCatalog, i: int) -> Poly:
    return catalog.f(i)


def mui_dual(catalog: InvariantCatalog, i: int) -> Poly:
    return catalog.f_star(i)


def u_inv(catalog: InvariantCatalog, j: int) -> Poly:
    return catalog.u(j)


@dataclass
class GeneratorSets:
    """Lambda i generatory A jako listy etykietowanych wielomianów; Omega i Gamma jako pudełka wykładników."""

    catalog: InvariantCatalog
    Lambda: Labeled
    A_gens: Labeled
    bounds: Tuple[int, ...]

    @property
    def omega_size(self) -> int:
        size = 1
        for b in self.bounds:
            size *= (b + 1) ** 2
        return size

    @property
    def gamma_size(self) -> int:
        size = 1
        for b in self.bounds:
            size *= b + 1
        return size

    def gamma_exponents(self) -> Iterator[Tuple[int, ...]]:
        return itertools.product(*(range(b + 1) for b in self.bounds))

    def omega_exponents(self) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        for a in self.gamma_exponents():
            for b in self.gamma_exponents():
                yield a, b

    def gamma_poly(self, a: Sequence[int]) -> Poly:
        cat = self.catalog
        acc = cat.one()
        for i, e in enumerate(a, start=1):
            if e:
                acc = acc * cat.f(i) ** e
        return acc

    def omega_poly(self, a: Sequence[int], b: Sequence[int]) -> Poly:
        cat = self.catalog
        acc = self.gamma_poly(a)
        for i, e in enumerate(b, start=1):
            if e:
                acc = acc * cat.f_star(i) ** e
        return acc

    @staticmethod
    def omega_label(a: Sequence[int], b: Sequence[int]) -> str:
        return "f^(" + ",".join(map(str, a)) + ")*f*^(" + ",".join(map(str, b)) + ")"


def build_generator_sets(catalog: InvariantCatalog) -> GeneratorSets:
    n, q = catalog.n, catalog.q
    bounds = tuple(q ** (n + 1 - i) - 2 for i in range(1, n + 1))
    gamma_size = 1
    for b in bounds:
        gamma_size *= b + 1
    if gamma_size > MAX_SPAN_PRODUCTS:
        raise BoundExceededError(f"|Gamma| = {gamma_size} przekracza limit {MAX_SPAN_PRODUCTS}")
    lam = catalog.lambda_generators()
    sets = GeneratorSets(catalog, lam, list(lam), bounds)
    logging.info(
        f"Zbiory generatorów dla n={n}, q={q}: |Lambda|={len(sets.Lambda)}, "
        f"|Omega|={sets.omega_size}, |Gamma|={sets.gamma_size}"
    )
    return sets
