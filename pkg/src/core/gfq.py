"""
Arytmetyka w ciele skończonym F_q, q = p^e.

Element jest kodowany liczbą v = c_0 + c_1*p + ... + c_{e-1}*p^(e-1), gdzie c_k
jest współczynnikiem przy g^k, a g jest pierwiastkiem wielomianu modułowego.
Zero ma kod 0, jedynka kod 1, elementy ciała prostego F_p mają kody 0..p-1.
Wszystkie działania idą przez tablice numpy budowane raz dla danego ciała.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_mul, gf_rem

from ..config.settings import MAX_FIELD_ORDER
from .errors import BoundExceededError, FieldMismatchError, ParameterError, ParseError


def _digits(value: int, p: int, e: int) -> List[int]:
    """Cyfry w systemie o podstawie p, od najmłodszej."""
    out = []
    for _ in range(e):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(digits):
        value = value * p + c
    return value


def _to_gf(value: int, p: int, e: int) -> List[int]:
    """Kod elementu -> wielomian galoistools (współczynniki od najwyższego)."""
    high = _digits(value, p, e)[::-1]
    while high and high[0] == 0:
        high.pop(0)
    return high


def _from_gf(poly: Sequence[int], p: int) -> int:
    return _from_digits([int(c) % p for c in reversed(poly)], p)


def _is_irreducible(poly_high: List[int], p: int) -> bool:
    """Dzielenie próbne przez wszystkie moniczne wielomiany stopnia <= e/2."""
    degree = len(poly_high) - 1
    for d in range(1, degree // 2 + 1):
        for m in range(p**d):
            divisor = [1] + _digits(m, p, d)[::-1]
            if not gf_rem(poly_high, divisor, p, ZZ):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Leksykograficznie najmniejszy moniczny nierozkładalny stopnia e (od najniższego)."""
    for m in range(p**e):
        lower = _digits(m, p, e)
        if _is_irreducible([1] + lower[::-1], p):
            return tuple(lower) + (1,)
    raise ParameterError(f"Brak wielomianu nierozkładalnego stopnia {e} nad F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """Opis ciała F_q: charakterystyka, stopień i moduł (współczynniki od najniższego)."""

    p: int
    e: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def tables(self) -> "FieldTables":
        return _tables(self)

    def elem(self, value: Union[int, "FieldElem"]) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatchError(f"Element {value} nie należy do {self}")
            return value
        return FieldElem(self, value)

    def from_int(self, n: int) -> "FieldElem":
        """Obraz liczby całkowitej w podciele prostym."""
        return FieldElem(self, n % self.p)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def __str__(self) -> str:
        return f"F_{self.q}"


class FieldTables:
    """Tablice działań ciała (numpy) oraz ich kopie listowe do gorących pętli."""

    def __init__(self, spec: FieldSpec):
        p, e, q = spec.p, spec.e, spec.q
        self.p, self.e, self.q = p, e, q
        modulus_high = list(spec.modulus[::-1])

        def mulmod(a: int, b: int) -> int:
            prod = gf_mul(_to_gf(a, p, e), _to_gf(b, p, e), p, ZZ)
            return _from_gf(gf_rem(prod, modulus_high, p, ZZ), p)

        # generator grupy multiplikatywnej, najmniejszy w kolejności kodów
        primitive, exp = 1, [1]
        for cand in range(1, q):
            powers = [1]
            x = cand
            while x != 1:
                powers.append(x)
                x = mulmod(x, cand)
            if len(powers) == q - 1:
                primitive, exp = cand, powers
                break
        self.primitive = primitive

        exp_arr = np.array(exp, dtype=np.int64)
        log_arr = np.zeros(q, dtype=np.int64)
        log_arr[exp_arr] = np.arange(q - 1, dtype=np.int64)
        self.exp = exp_arr
        self.log = log_arr

        digits = np.array([_digits(v, p, e) for v in range(q)], dtype=np.int64).reshape(q, e)
        weights = p ** np.arange(e, dtype=np.int64)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.sub = ((digits[:, None, :] - digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights

        nonzero_logs = log_arr[1:]
        self.mul = np.zeros((q, q), dtype=np.int64)
        self.mul[1:, 1:] = exp_arr[(nonzero_logs[:, None] + nonzero_logs[None, :]) % (q - 1)]
        self.inv = np.zeros(q, dtype=np.int64)
        self.inv[1:] = exp_arr[(-nonzero_logs) % (q - 1)]
        self.frob = np.zeros(q, dtype=np.int64)
        self.frob[1:] = exp_arr[(nonzero_logs * p) % (q - 1)]

        self.add_l = self.add.tolist()
        self.sub_l = self.sub.tolist()
        self.mul_l = self.mul.tolist()
        self.neg_l = self.neg.tolist()
        self.inv_l = self.inv.tolist()
        self.frob_l = self.frob.tolist()
        self.exp_l = exp
        self.log_l = log_arr.tolist()

    def power(self, value: int, k: int) -> int:
        if value == 0:
            if k < 0:
                raise ZeroDivisionError("Odwrotność zera w ciele skończonym")
            return 1 if k == 0 else 0
        return self.exp_l[(self.log_l[value] * k) % (self.q - 1)]


@lru_cache(maxsize=None)
def _tables(spec: FieldSpec) -> FieldTables:
    logging.debug(f"Budowa tablic działań dla {spec} (moduł {spec.modulus})")
    return FieldTables(spec)


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """
    Tworzy ciało F_{p^e} z leksykograficznie najmniejszym modułem.

    Nie jest to konwencja wielomianów Conwaya; wybór jest deterministyczny.
    """
    if not isprime(p):
        raise ParameterError(f"Charakterystyka {p} nie jest liczbą pierwszą")
    if e < 1:
        raise ParameterError(f"Stopień rozszerzenia musi być >= 1, otrzymano {e}")
    if p**e > MAX_FIELD_ORDER:
        raise BoundExceededError(f"q = {p}^{e} przekracza limit {MAX_FIELD_ORDER}")
    spec = FieldSpec(p, e, _smallest_irreducible(p, e))
    logging.debug(f"Utworzono ciało {spec} z modułem {format_modulus(spec)}")
    return spec


def field_for_order(q: int) -> FieldSpec:
    """Rozkłada q = p^e i zwraca odpowiednie ciało."""
    if q < 2:
        raise ParameterError(f"q = {q} nie jest potęgą liczby pierwszej")
    factors = factorint(q)
    if len(factors) != 1:
        raise ParameterError(f"q = {q} nie jest potęgą liczby pierwszej")
    (p, e), = factors.items()
    return make_field(int(p), int(e))


def format_modulus(spec: FieldSpec) -> str:
    if spec.e == 1:
        return "x"
    return _format_digits(list(spec.modulus), symbol="x")


@dataclass(frozen=True)
class FieldElem:
    """Element ciała F_q."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"Kod {self.value} spoza ciała {self.field}")

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(_digits(self.value, self.field.p, self.field.e))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"Działanie na elementach {self.field} i {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.tables.add_l[self.value][b])

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.tables.sub_l[self.value][b])

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.tables.sub_l[b][self.value])

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.tables.mul_l[self.value][b])

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        if b == 0:
            raise ZeroDivisionError("Dzielenie przez zero w ciele skończonym")
        t = self.field.tables
        return FieldElem(self.field, t.mul_l[self.value][t.inv_l[b]])

    def __neg__(self):
        return FieldElem(self.field, self.field.tables.neg_l[self.value])

    def __pow__(self, k: int):
        return FieldElem(self.field, self.field.tables.power(self.value, k))

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise ZeroDivisionError("Odwrotność zera w ciele skończonym")
        return FieldElem(self.field, self.field.tables.inv_l[self.value])

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return format_element(self.field, self.value)


_ARITH_KINDS = ("add", "sub", "mul", "div", "pow", "neg", "inv")


def field_arith(a: FieldElem, b: Optional[Union[FieldElem, int]], kind: str) -> FieldElem:
    """Jednolity punkt wejścia dla działań; `b` jest ignorowane dla neg/inv, dla pow to wykładnik."""
    if kind not in _ARITH_KINDS:
        raise ValueError(f"Nieznane działanie: {kind}")
    if kind == "neg":
        return -a
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElem) or b.field != a.field:
        raise FieldMismatchError(f"Działanie {kind} na elementach różnych ciał")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    return a / b


def frobenius(a: FieldElem) -> FieldElem:
    """a -> a^p."""
    return FieldElem(a.field, a.field.tables.frob_l[a.value])


def enumerate_field(spec: FieldSpec) -> List[FieldElem]:
    """Wszystkie elementy ciała, zero na początku."""
    return [FieldElem(spec, v) for v in range(spec.q)]


def primitive_element(spec: FieldSpec) -> FieldElem:
    return FieldElem(spec, spec.tables.primitive)


def embed_field(small: FieldSpec, big: FieldSpec) -> List[int]:
    """
    Zanurzenie F_q -> F_{q^k}: lista kodów obrazów elementów małego ciała.

    Obraz generatora g to najmniejszy (w kolejności kodów) pierwiastek
    modułu małego ciała w dużym ciele.
    """
    if small.p != big.p or big.e % small.e:
        raise FieldMismatchError(f"{small} nie zanurza się w {big}")
    t = big.tables

    def evaluate(coeffs: Sequence[int], point: int) -> int:
        acc, pw = 0, 1
        for c in coeffs:
            acc = t.add_l[acc][t.mul_l[c][pw]]
            pw = t.mul_l[pw][point]
        return acc

    root = next(r for r in range(big.q) if evaluate(small.modulus, r) == 0)
    return [evaluate(_digits(v, small.p, small.e), root) for v in range(small.q)]


def _format_digits(digits: List[int], symbol: str = "g") -> str:
    terms = []
    for k in range(len(digits) - 1, -1, -1):
        c = digits[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = symbol if k == 1 else f"{symbol}^{k}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def format_element(spec: FieldSpec, value: int) -> str:
    """Postać kanoniczna: liczba dziesiętna dla e = 1, wielomian w g dla e > 1."""
    if spec.e == 1:
        return str(value)
    return _format_digits(_digits(value, spec.p, spec.e))


_TERM_RE = re.compile(r"^(\d*)(g(?:\^(\d+))?)?$")


def parse_element(spec: FieldSpec, text: str) -> FieldElem:
    """Odwrotność `format_element`."""
    text = text.strip()
    if spec.e == 1:
        if not text.isdigit() or int(text) >= spec.p:
            raise ParseError(f"Niepoprawny element {spec}: '{text}'")
        return FieldElem(spec, int(text))
    digits = [0] * spec.e
    for term in text.split("+"):
        match = _TERM_RE.match(term)
        if not term or not match:
            raise ParseError(f"Niepoprawny element {spec}: '{text}'")
        coeff_text, power_text, exp_text = match.groups()
        coeff = int(coeff_text) if coeff_text else 1
        degree = 0 if not power_text else int(exp_text) if exp_text else 1
        if degree >= spec.e or coeff >= spec.p or (not coeff_text and not power_text):
            raise ParseError(f"Niepoprawny element {spec}: '{text}'")
        digits[degree] = (digits[degree] + coeff) % spec.p
    return FieldElem(spec, _from_digits(digits, spec.p))
