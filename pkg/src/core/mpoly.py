"""
Rzadkie wielomiany wielu zmiennych nad F_q.

Jednomian jest upakowany w jedną liczbę całkowitą: każda zmienna ma 32-bitowe
pole, zmienna o najniższym indeksie zajmuje najstarsze pole, a nad wszystkimi
polami leży pole ze stopniem łącznym. Porównanie takich liczb to porządek
stopniowo-leksykograficzny, a mnożenie jednomianów to zwykłe dodawanie.

`Poly` żyje w F[x_1..x_n, y_1..y_n] (x_1 > ... > x_n > y_1 > ... > y_n),
`FormalPoly` w pierścieniu prezentacji S = F[C_i, C*_i, U_j].
"""

from __future__ import annotations

import logging
import re
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..config.settings import COFACTOR_DET_LIMIT
from .errors import FieldMismatchError, NotDivisibleError, ParseError
from .gfq import FieldElem, FieldSpec, format_element, parse_element

SLOT_BITS = 32
_SLOT_MASK = (1 << SLOT_BITS) - 1

Scalar = Union[int, FieldElem]


class MonomialLayout:
    """Rozmieszczenie pól wykładników dla ustalonej liczby zmiennych."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.shifts = [SLOT_BITS * (nvars - 1 - k) for k in range(nvars)]
        self.tot_shift = SLOT_BITS * nvars
        self.var_keys = [(1 << s) | (1 << self.tot_shift) for s in self.shifts]

    def pack(self, exps: Sequence[int]) -> int:
        key = sum(exps) << self.tot_shift
        for e, s in zip(exps, self.shifts):
            if e < 0 or e > _SLOT_MASK:
                raise ValueError(f"Wykładnik {e} poza zakresem pola")
            key |= e << s
        return key

    def unpack(self, key: int) -> Tuple[int, ...]:
        return tuple((key >> s) & _SLOT_MASK for s in self.shifts)

    def total(self, key: int) -> int:
        return key >> self.tot_shift

    def partial_total(self, key: int, indices: Iterable[int]) -> int:
        return sum((key >> self.shifts[i]) & _SLOT_MASK for i in indices)


@lru_cache(maxsize=None)
def monomial_layout(nvars: int) -> MonomialLayout:
    return MonomialLayout(nvars)


class DegreeMarker(Enum):
    ZERO = "zero"
    INHOMOGENEOUS = "inhomogeneous"


class Monomial(NamedTuple):
    xexp: Tuple[int, ...]
    yexp: Tuple[int, ...]

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (sum(self.xexp), sum(self.yexp))


def _reduce_terms(raw: Dict[int, int], p: int) -> Dict[int, int]:
    return {k: v % p for k, v in raw.items() if v % p}


class SparsePoly:
    """Wspólna arytmetyka słownikowej reprezentacji {klucz jednomianu: kod współczynnika}."""

    __slots__ = ("field", "n", "layout", "terms", "_hash")

    def __init__(self, field: FieldSpec, n: int, terms: Optional[Dict[int, int]] = None):
        self.field = field
        self.n = n
        self.layout = monomial_layout(self.nvars_for(n))
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # --- metadane zmiennych (nadpisywane w podklasach) ---
    @classmethod
    def nvars_for(cls, n: int) -> int:
        raise NotImplementedError

    @classmethod
    def variable_names(cls, n: int) -> List[str]:
        raise NotImplementedError

    @property
    def nvars(self) -> int:
        return self.layout.nvars

    def _new(self, terms: Dict[int, int]):
        obj = object.__new__(type(self))
        obj.field = self.field
        obj.n = self.n
        obj.layout = self.layout
        obj.terms = terms
        obj._hash = None
        return obj

    # --- konstruktory ---
    @classmethod
    def zero(cls, field: FieldSpec, n: int):
        return cls(field, n)

    @classmethod
    def constant(cls, field: FieldSpec, n: int, c: Scalar = 1):
        value = field.elem(c).value if isinstance(c, FieldElem) else c % field.p
        return cls(field, n, {0: value})

    @classmethod
    def variable(cls, field: FieldSpec, n: int, index: int, power: int = 1):
        lay = monomial_layout(cls.nvars_for(n))
        exps = [0] * lay.nvars
        exps[index] = power
        return cls(field, n, {lay.pack(exps): 1})

    @classmethod
    def from_exponents(cls, field: FieldSpec, n: int, items: Iterable[Tuple[Sequence[int], Scalar]]):
        lay = monomial_layout(cls.nvars_for(n))
        acc: Dict[int, int] = {}
        add = field.tables.add_l
        for exps, c in items:
            code = field.elem(c).value if isinstance(c, FieldElem) else c % field.p
            key = lay.pack(exps)
            acc[key] = add[acc.get(key, 0)][code]
        return cls(field, n, acc)

    # --- porównania ---
    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (
            type(self) is type(other)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.field, self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # --- arytmetyka ---
    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if type(other) is not type(self) or other.field != self.field or other.n != self.n:
                raise FieldMismatchError(
                    f"Niezgodne pierścienie: {type(self).__name__}({self.field}, n={self.n}) "
                    f"i {type(other).__name__}({other.field}, n={other.n})"
                )
            return other
        if isinstance(other, (int, FieldElem)):
            return type(self).constant(self.field, self.n, other)
        return NotImplemented

    def _add_terms(self, a: Dict[int, int], b: Dict[int, int], negate: bool) -> Dict[int, int]:
        t = self.field.tables
        out = dict(a)
        op = t.sub_l if negate else t.add_l
        for k, c in b.items():
            v = op[out.get(k, 0)][c]
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._add_terms(self.terms, other.terms, False))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._add_terms(self.terms, other.terms, True))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        neg = self.field.tables.neg_l
        return self._new({k: neg[c] for k, c in self.terms.items()})

    def _mul_terms(self, a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
        if len(a) < len(b):
            a, b = b, a
        field = self.field
        if field.e == 1:
            p = field.p
            raw: Dict[int, int] = {}
            get = raw.get
            for kb, cb in b.items():
                for ka, ca in a.items():
                    k = ka + kb
                    raw[k] = get(k, 0) + ca * cb
            return _reduce_terms(raw, p)
        t = field.tables
        mul, add = t.mul_l, t.add_l
        out: Dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            row = mul[cb]
            for ka, ca in a.items():
                k = ka + kb
                out[k] = add[get(k, 0)][row[ca]]
        return {k: v for k, v in out.items() if v}

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self._new({})
        return self._new(self._mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def scale(self, c: Scalar):
        code = self.field.elem(c).value if isinstance(c, FieldElem) else c % self.field.p
        if code == 0:
            return self._new({})
        row = self.field.tables.mul_l[code]
        return self._new({k: row[v] for k, v in self.terms.items()})

    def pth_power(self, s: int = 1):
        """Endomorfizm Frobeniusa f -> f^(p^s): wykładniki razy p^s, współczynniki do potęgi p^s."""
        if s == 0:
            return self
        factor = self.field.p**s
        t = self.field.tables
        return self._new({k * factor: t.power(c, factor) for k, c in self.terms.items()})

    def _pow_plain(self, k: int):
        result = self._new({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Ujemny wykładnik potęgi wielomianu")
        if k == 0:
            return self._new({0: 1})
        if not self.terms:
            return self._new({})
        if len(self.terms) == 1:
            (key, c), = self.terms.items()
            return self._new({key * k: self.field.tables.power(c, k)})
        p = self.field.p
        s = 0
        while k % p == 0:
            k //= p
            s += 1
        return self._pow_plain(k).pth_power(s)

    # --- jednomiany i stopnie ---
    def leading(self) -> Tuple[int, int]:
        key = max(self.terms)
        return key, self.terms[key]

    def total_degree(self) -> int:
        return max((self.layout.total(k) for k in self.terms), default=-1)

    def exponent_items(self) -> Iterator[Tuple[Tuple[int, ...], FieldElem]]:
        for key in sorted(self.terms, reverse=True):
            yield self.layout.unpack(key), FieldElem(self.field, self.terms[key])

    def map_exponents(self, fn):
        """Obraz przez injektywne odwzorowanie wektorów wykładników (współczynniki bez zmian)."""
        lay = self.layout
        return self._new({lay.pack(fn(lay.unpack(k))): c for k, c in self.terms.items()})

    def truncate_total_degree(self, below: int):
        lay = self.layout
        return self._new({k: c for k, c in self.terms.items() if lay.total(k) < below})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.field}, n={self.n}, '{format_poly(self)}')"


class Poly(SparsePoly):
    """Wielomian w x_1..x_n, y_1..y_n z dwustopniowaniem (stopień w x, stopień w y)."""

    __slots__ = ()

    @classmethod
    def nvars_for(cls, n: int) -> int:
        return 2 * n

    @classmethod
    def variable_names(cls, n: int) -> List[str]:
        return [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]

    @classmethod
    def x(cls, field: FieldSpec, n: int, i: int, power: int = 1) -> "Poly":
        return cls.variable(field, n, i - 1, power)

    @classmethod
    def y(cls, field: FieldSpec, n: int, i: int, power: int = 1) -> "Poly":
        return cls.variable(field, n, n + i - 1, power)

    @classmethod
    def from_monomials(cls, field: FieldSpec, n: int, items: Iterable[Tuple[Monomial, Scalar]]) -> "Poly":
        return cls.from_exponents(field, n, ((tuple(m.xexp) + tuple(m.yexp), c) for m, c in items))

    def monomials(self) -> Iterator[Tuple[Monomial, FieldElem]]:
        n = self.n
        for exps, c in self.exponent_items():
            yield Monomial(exps[:n], exps[n:]), c

    def key_bidegree(self, key: int) -> Tuple[int, int]:
        d1 = self.layout.partial_total(key, range(self.n))
        return d1, self.layout.total(key) - d1

    def bidegree(self) -> Union[Tuple[int, int], DegreeMarker]:
        if not self.terms:
            return DegreeMarker.ZERO
        degrees = {self.key_bidegree(k) for k in self.terms}
        if len(degrees) != 1:
            return DegreeMarker.INHOMOGENEOUS
        return degrees.pop()


class FormalPoly(SparsePoly):
    """
    Element pierścienia prezentacji S.

    Zmienne w kolejności: C_0..C_{n-1}, C*_0..C*_{n-1}, U_{1-n}..U_{n-1}.
    """

    __slots__ = ()

    @classmethod
    def nvars_for(cls, n: int) -> int:
        return 4 * n - 1

    @classmethod
    def variable_names(cls, n: int) -> List[str]:
        return (
            [f"C{i}" for i in range(n)]
            + [f"C*{i}" for i in range(n)]
            + [f"U{j}" for j in range(1 - n, n)]
        )

    @staticmethod
    def index_of(n: int, kind: str, i: int) -> int:
        if kind == "C":
            return i
        if kind == "C*":
            return n + i
        if kind == "U":
            return 2 * n + (i + n - 1)
        raise ValueError(f"Nieznany rodzaj zmiennej prezentacji: {kind}")

    @classmethod
    def gen(cls, field: FieldSpec, n: int, kind: str, i: int, power: int = 1) -> "FormalPoly":
        return cls.variable(field, n, cls.index_of(n, kind, i), power)

    @staticmethod
    def variable_weights(n: int, q: int) -> List[Tuple[int, int]]:
        """Dwustopnie obrazów zmiennych przez pi."""
        qn = q**n
        weights = [(qn - q**i, 0) for i in range(n)]
        weights += [(0, qn - q**i) for i in range(n)]
        weights += [(q**j, 1) if j >= 0 else (1, q ** (-j)) for j in range(1 - n, n)]
        return weights

    def key_bidegree(self, key: int) -> Tuple[int, int]:
        weights = self.variable_weights(self.n, self.field.q)
        d1 = d2 = 0
        for e, (w1, w2) in zip(self.layout.unpack(key), weights):
            d1 += e * w1
            d2 += e * w2
        return d1, d2

    def bidegree(self) -> Union[Tuple[int, int], DegreeMarker]:
        if not self.terms:
            return DegreeMarker.ZERO
        degrees = {self.key_bidegree(k) for k in self.terms}
        if len(degrees) != 1:
            return DegreeMarker.INHOMOGENEOUS
        return degrees.pop()


# ==============================================================================
# === Operacje ===


def poly_arith(a: SparsePoly, b: SparsePoly, kind: str) -> SparsePoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"Nieznane działanie: {kind}")


def poly_pow(a: SparsePoly, k: int) -> SparsePoly:
    return a**k


def scalar_mul(c: Scalar, a: SparsePoly) -> SparsePoly:
    return a.scale(c)


def _matrix_codes(field: FieldSpec, m, n: int, label: str) -> List[List[int]]:
    if len(m) != n or any(len(row) != n for row in m):
        raise FieldMismatchError(f"Macierz {label} musi mieć rozmiar {n}x{n}")
    return [[field.elem(c).value if isinstance(c, FieldElem) else c % field.q for c in row] for row in m]


def _linear_forms(field: FieldSpec, n: int, codes: List[List[int]], offset: int) -> List[Poly]:
    lay = monomial_layout(2 * n)
    forms = []
    for row in codes:
        forms.append(Poly(field, n, {lay.var_keys[offset + j]: c for j, c in enumerate(row) if c}))
    return forms


class LinearSubstitution:
    """
    Homomorfizm x_i -> sum_j xmap[i][j] x_j, y_i -> sum_j ymap[i][j] y_j.

    Obrazy części x i części y jednomianu są zapamiętywane osobno; leżą
    w rozłącznych zmiennych, więc ich iloczyn nie ma kolizji kluczy. Ten sam
    obiekt można stosować do wielu wielomianów.
    """

    def __init__(self, field: FieldSpec, n: int, xmap, ymap):
        self.field = field
        self.n = n
        self.layout = monomial_layout(2 * n)
        self._forms = {
            "x": _linear_forms(field, n, _matrix_codes(field, xmap, n, "xmap"), 0),
            "y": _linear_forms(field, n, _matrix_codes(field, ymap, n, "ymap"), n),
        }
        self._one = Poly.constant(field, n, 1)
        self._powers: Dict[Tuple[str, int, int], Poly] = {}
        self._parts: Dict[Tuple[str, Tuple[int, ...]], Dict[int, int]] = {}

    def _power(self, tag: str, i: int, a: int) -> Poly:
        key = (tag, i, a)
        if key not in self._powers:
            self._powers[key] = self._forms[tag][i] ** a
        return self._powers[key]

    def _part_image(self, tag: str, exps: Tuple[int, ...]) -> Dict[int, int]:
        image = self._parts.get((tag, exps))
        if image is None:
            acc = self._one
            for i, a in enumerate(exps):
                if a:
                    acc = acc * self._power(tag, i, a)
            image = acc.terms
            self._parts[(tag, exps)] = image
        return image

    def _accumulate(self, out: Dict[int, int], key: int, c: int) -> None:
        n = self.n
        exps = self.layout.unpack(key)
        ximg = self._part_image("x", exps[:n])
        yimg = self._part_image("y", exps[n:])
        t = self.field.tables
        prime = self.field.e == 1
        mul, add = t.mul_l, t.add_l
        get = out.get
        for kx, cx in ximg.items():
            cxc = (cx * c) if prime else mul[cx][c]
            for ky, cy in yimg.items():
                k = kx + ky
                if prime:
                    out[k] = get(k, 0) + cxc * cy
                else:
                    out[k] = add[get(k, 0)][mul[cxc][cy]]

    def _finish(self, out: Dict[int, int]) -> Poly:
        if self.field.e == 1:
            return Poly(self.field, self.n, _reduce_terms(out, self.field.p))
        return Poly(self.field, self.n, out)

    def monomial_image(self, key: int) -> Poly:
        out: Dict[int, int] = {}
        self._accumulate(out, key, 1)
        return self._finish(out)

    def apply(self, f: Poly) -> Poly:
        if f.n != self.n or f.field != self.field:
            raise FieldMismatchError("Podstawienie i wielomian z różnych pierścieni")
        out: Dict[int, int] = {}
        for key, c in f.terms.items():
            self._accumulate(out, key, c)
        return self._finish(out)


def substitute_linear(f: Poly, xmap, ymap) -> Poly:
    """x_i -> sum_j xmap[i][j] x_j, y_i -> sum_j ymap[i][j] y_j (homomorfizm pierścieni)."""
    return LinearSubstitution(f.field, f.n, xmap, ymap).apply(f)


def frobenius_x(f: Poly) -> Poly:
    """F: x_i -> x_i^q, y_i bez zmian."""
    n, q = f.n, f.field.q
    return f.map_exponents(lambda e: tuple(a * q for a in e[:n]) + e[n:])


def frobenius_y(f: Poly) -> Poly:
    """F*: y_i -> y_i^q, x_i bez zmian."""
    n, q = f.n, f.field.q
    return f.map_exponents(lambda e: e[:n] + tuple(b * q for b in e[n:]))


def involution_star(f: Poly) -> Poly:
    """x_i <-> y_{n+1-i}; w upakowaniu to odwrócenie wektora wykładników."""
    return f.map_exponents(lambda e: e[::-1])


def bidegree(f: Poly) -> Union[Tuple[int, int], DegreeMarker]:
    return f.bidegree()


def exact_divide(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """
    Dzielenie dokładne przez redukcję wyrazów wiodących (porządek grlex).

    Wynik jest weryfikowany przez ponowne mnożenie.
    """
    g = f._coerce(g)
    if not g.terms:
        raise ZeroDivisionError("Dzielenie wielomianu przez zero")
    t = f.field.tables
    mul, sub = t.mul_l, t.sub_l
    lay = f.layout
    lt_key, lt_coeff = g.leading()
    lt_exps = lay.unpack(lt_key)
    lt_inv = t.inv_l[lt_coeff]
    g_items = list(g.terms.items())
    rem = dict(f.terms)
    quot: Dict[int, int] = {}
    while rem:
        k = max(rem)
        exps = lay.unpack(k)
        if any(a < b for a, b in zip(exps, lt_exps)):
            raise NotDivisibleError(f"Wyraz wiodący reszty nie dzieli się przez wyraz wiodący dzielnika")
        diff = k - lt_key
        coeff = mul[rem[k]][lt_inv]
        quot[diff] = coeff
        for kg, cg in g_items:
            kk = kg + diff
            v = sub[rem.get(kk, 0)][mul[coeff][cg]]
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    result = f._new(quot)
    if result * g != f:
        raise NotDivisibleError("Weryfikacja dzielenia przez ponowne mnożenie nie powiodła się")
    return result


def _det_cofactor(rows: List[List[SparsePoly]]) -> SparsePoly:
    size = len(rows)
    memo: Dict[Tuple[int, Tuple[int, ...]], SparsePoly] = {}
    proto = rows[0][0]

    def minor(r: int, cols: Tuple[int, ...]) -> SparsePoly:
        if r == size:
            return proto._new({0: 1})
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = proto._new({})
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if not entry.terms:
                continue
            term = entry * minor(r + 1, cols[:pos] + cols[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(size)))


def _det_bareiss(rows: List[List[SparsePoly]]) -> SparsePoly:
    a = [list(row) for row in rows]
    size = len(a)
    sign = 1
    prev = None
    for k in range(size - 1):
        candidates = [i for i in range(k, size) if a[i][k].terms]
        if not candidates:
            return a[0][0]._new({})
        best = min(candidates, key=lambda i: len(a[i][k].terms))
        if best != k:
            a[k], a[best] = a[best], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = value if prev is None else exact_divide(value, prev)
        prev = pivot
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det


def det_poly(m: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Wyznacznik macierzy wielomianów: Laplace do rozmiaru 4, dalej Bareiss."""
    size = len(m)
    if size == 0 or any(len(row) != size for row in m):
        raise FieldMismatchError("Wyznacznik wymaga niepustej macierzy kwadratowej")
    rows = [list(row) for row in m]
    proto = rows[0][0]
    for row in rows:
        for entry in row:
            proto._coerce(entry)
    if size <= COFACTOR_DET_LIMIT:
        return _det_cofactor(rows)
    logging.debug(f"Wyznacznik {size}x{size} metodą Bareissa")
    return _det_bareiss(rows)


def derivative(f: SparsePoly, index: int) -> SparsePoly:
    """Formalna pochodna cząstkowa względem zmiennej o danym indeksie."""
    lay = f.layout
    shift = lay.shifts[index]
    unit = lay.var_keys[index]
    p = f.field.p
    mul = f.field.tables.mul_l
    out = {}
    for key, c in f.terms.items():
        e = (key >> shift) & _SLOT_MASK
        if e % p == 0:
            continue
        out[key - unit] = mul[c][e % p]
    return f._new(out)


def evaluate(f: SparsePoly, point: Sequence[int], target: Optional[FieldSpec] = None,
             embedding: Optional[Sequence[int]] = None) -> FieldElem:
    """
    Wartość wielomianu w punkcie o współrzędnych (kodach) z ciała `target`.

    `embedding` przenosi współczynniki z ciała wielomianu do `target`.
    """
    target = target or f.field
    if embedding is None:
        if target != f.field:
            raise FieldMismatchError("Ewaluacja w innym ciele wymaga zanurzenia")
        embedding = list(range(f.field.q))
    if len(point) != f.nvars:
        raise FieldMismatchError(f"Punkt musi mieć {f.nvars} współrzędnych")
    t = target.tables
    acc = 0
    for key, c in f.terms.items():
        value = embedding[c]
        for e, x in zip(f.layout.unpack(key), point):
            if e:
                value = t.mul_l[value][t.power(x, e)]
        acc = t.add_l[acc][value]
    return FieldElem(target, acc)


# ==============================================================================
# === Postać tekstowa ===


def format_poly(f: SparsePoly) -> str:
    """
    Wyrazy od wiodącego, `coeff*x1^a*...*yn^b`, złączone ' + '; zero to '0'.

    Współczynnik będący sumą potęg g ujmowany jest w nawiasy: `(g+1)*x1*y2`.
    """
    if not f.terms:
        return "0"
    names = f.variable_names(f.n)
    lay = f.layout
    parts = []
    for key in sorted(f.terms, reverse=True):
        c = f.terms[key]
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, lay.unpack(key))
            if e
        ]
        coeff = format_element(f.field, c)
        if "+" in coeff:
            coeff = f"({coeff})"
        if not factors:
            parts.append(coeff)
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(coeff + "*" + "*".join(factors))
    return " + ".join(parts)


_FACTOR_RE = re.compile(
    r"\((?P<paren>[^()]*)\)"
    r"|(?P<name>(?:C\*|[A-Za-z])-?\d+)(?:\^(?P<exp>\d+))?"
    r"|(?P<coeff>\d*g(?:\^\d+)?|\d+)"
)


def parse_poly(field: FieldSpec, n: int, text: str, cls=Poly) -> SparsePoly:
    """Odwrotność `format_poly`."""
    text = text.strip()
    if text == "0":
        return cls(field, n)
    index = {name: i for i, name in enumerate(cls.variable_names(n))}
    nvars = cls.nvars_for(n)
    items = []
    for term in text.split(" + "):
        exps = [0] * nvars
        coeff = field.one
        pos = 0
        while pos < len(term):
            match = _FACTOR_RE.match(term, pos)
            if not match:
                raise ParseError(f"Niepoprawny wyraz wielomianu: '{term}'")
            if match.group("paren") is not None:
                coeff = coeff * parse_element(field, match.group("paren"))
            elif match.group("name") is not None:
                name = match.group("name")
                if name not in index:
                    raise ParseError(f"Nieznana zmienna '{name}' (n = {n})")
                exps[index[name]] += int(match.group("exp") or 1)
            else:
                coeff = coeff * parse_element(field, match.group("coeff"))
            pos = match.end()
            if pos < len(term):
                if term[pos] != "*":
                    raise ParseError(f"Oczekiwano '*' w wyrazie '{term}'")
                pos += 1
        items.append((exps, coeff))
    return cls.from_exponents(field, n, items)
