"""
Pierścień prezentacji S = F[C_0..C_{n-1}, C*_0..C*_{n-1}, U_{1-n}..U_{n-1}] i epimorfizm pi: S -> A.

pi(C_i) = c_{n,i}, pi(C*_i) = c*_{n,i}, pi(U_j) = u_j.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple

from ..config.settings import MAX_COMPONENT_DIM
from .errors import BoundExceededError, FieldMismatchError
from .invariants import InvariantCatalog
from .mpoly import FormalPoly, Poly, monomial_layout


class PresentationRing:
    """Zmienne S z wagami dwustopnia, odwzorowanie pi z pamięcią obrazów jednomianów."""

    def __init__(self, catalog: InvariantCatalog):
        self.catalog = catalog
        self.field = catalog.field
        self.n = catalog.n
        self.q = catalog.q
        self.names = FormalPoly.variable_names(self.n)
        self.weights: List[Tuple[int, int]] = FormalPoly.variable_weights(self.n, self.q)
        self.layout = monomial_layout(FormalPoly.nvars_for(self.n))
        self._images: List[Poly] = []
        self._powers: Dict[Tuple[int, int], Poly] = {}
        self._monomial_images: Dict[int, Poly] = {}

    # --- zmienne ---
    def gen(self, kind: str, i: int, power: int = 1) -> FormalPoly:
        return FormalPoly.gen(self.field, self.n, kind, i, power)

    def C(self, i: int, power: int = 1) -> FormalPoly:
        return self.gen("C", i, power)

    def C_star(self, i: int, power: int = 1) -> FormalPoly:
        return self.gen("C*", i, power)

    def U(self, j: int, power: int = 1) -> FormalPoly:
        return self.gen("U", j, power)

    def one(self) -> FormalPoly:
        return FormalPoly.constant(self.field, self.n, 1)

    def zero(self) -> FormalPoly:
        return FormalPoly.zero(self.field, self.n)

    # --- pi ---
    def images(self) -> List[Poly]:
        if not self._images:
            cat, n = self.catalog, self.n
            self._images = (
                [cat.c(i) for i in range(n)]
                + [cat.c_star(i) for i in range(n)]
                + [cat.u(j) for j in range(1 - n, n)]
            )
        return self._images

    def _power(self, var: int, e: int) -> Poly:
        key = (var, e)
        if key not in self._powers:
            self._powers[key] = self.images()[var] ** e
        return self._powers[key]

    def monomial_image(self, key: int) -> Poly:
        image = self._monomial_images.get(key)
        if image is None:
            image = Poly.constant(self.field, self.n, 1)
            for var, e in enumerate(self.layout.unpack(key)):
                if e:
                    image = image * self._power(var, e)
            self._monomial_images[key] = image
        return image

    def pi_map(self, fp: FormalPoly) -> Poly:
        if fp.field != self.field or fp.n != self.n:
            raise FieldMismatchError("Element S z innego pierścienia prezentacji")
        acc = Poly.zero(self.field, self.n)
        for key, c in fp.terms.items():
            acc = acc + self.monomial_image(key).scale(c)
        return acc

    # --- jednomiany o zadanym dwustopniu ---
    def monomials_of_bidegree(self, bidegree: Tuple[int, int], limit: int = MAX_COMPONENT_DIM) -> List[int]:
        """
        Klucze wszystkich jednomianów S o ważonym dwustopniu `bidegree`, malejąco.

        Programowanie dynamiczne po zmiennych z resztą dwustopnia jako stanem.
        """
        return enumerate_weighted(self.layout, self.weights, bidegree, limit)


def enumerate_weighted(layout, weights: Sequence[Tuple[int, int]], bidegree: Tuple[int, int],
                       limit: int = MAX_COMPONENT_DIM) -> List[int]:
    """Klucze jednomianów m z sum m_g * w_g = bidegree (każda waga niezerowa)."""
    d1, d2 = bidegree
    if d1 < 0 or d2 < 0:
        return []
    nvars = len(weights)
    memo: Dict[Tuple[int, int, int], List[Tuple[int, ...]]] = {}

    def solve(idx: int, r1: int, r2: int) -> List[Tuple[int, ...]]:
        if idx == nvars:
            return [()] if r1 == 0 and r2 == 0 else []
        state = (idx, r1, r2)
        if state in memo:
            return memo[state]
        w1, w2 = weights[idx]
        out: List[Tuple[int, ...]] = []
        e = 0
        while e * w1 <= r1 and e * w2 <= r2:
            for tail in solve(idx + 1, r1 - e * w1, r2 - e * w2):
                out.append((e,) + tail)
            if len(out) > limit:
                raise BoundExceededError(
                    f"Składowa dwustopnia {bidegree} ma ponad {limit} jednomianów"
                )
            e += 1
        memo[state] = out
        return out

    exps = solve(0, d1, d2)
    logging.debug(f"Dwustopień {bidegree}: {len(exps)} jednomianów")
    return sorted((layout.pack(e) for e in exps), reverse=True)
