"""
Algebra liniowa w składowych dwustopniowych.

Wymiary składowych niezmienników, rozpięcia podalgebr, przynależność
z certyfikatem oraz ideał relacji K = ker(pi) z liczeniem minimalnych generatorów.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..config.settings import MAX_COMPONENT_DIM, MAX_SPAN_PRODUCTS
from .errors import BoundExceededError, ConjectureRangeError, CrossCheckError, ParameterError
from .gfq import FieldSpec, format_element
from .invariants import InvariantCatalog, Labeled, build_generator_sets
from .linalg import RowSpace, left_nullspace, nullspace, reduce_modulo, row_reduce, solve
from .matgroup import action_matrix, checking_elements
from .mpoly import DegreeMarker, FormalPoly, Monomial, Poly, format_poly, monomial_layout
from .presentation import PresentationRing, enumerate_weighted

Bidegree = Tuple[int, int]


# ==============================================================================
# === Składowe i wymiary niezmienników ===


@dataclass
class BidegComponent:
    bidegree: Bidegree
    keys: List[int]
    basis: List[Monomial]

    @property
    def dim(self) -> int:
        return len(self.basis)


def component_size(n: int, bidegree: Bidegree) -> int:
    d1, d2 = bidegree
    if d1 < 0 or d2 < 0:
        return 0
    return comb(d1 + n - 1, n - 1) * comb(d2 + n - 1, n - 1)


def bideg_component(n: int, bidegree: Bidegree) -> BidegComponent:
    """Wszystkie jednomiany x^a y^b o dwustopniu (|a|, |b|), malejąco."""
    size = component_size(n, bidegree)
    if size > MAX_COMPONENT_DIM:
        raise BoundExceededError(f"Składowa {bidegree} ma wymiar {size} > {MAX_COMPONENT_DIM}")
    layout = monomial_layout(2 * n)
    weights = [(1, 0)] * n + [(0, 1)] * n
    keys = enumerate_weighted(layout, weights, bidegree, limit=MAX_COMPONENT_DIM)
    basis = []
    for key in keys:
        exps = layout.unpack(key)
        basis.append(Monomial(exps[:n], exps[n:]))
    return BidegComponent(bidegree, keys, basis)


def invariant_dimension(field: FieldSpec, n: int, bidegree: Bidegree, group: str = "G") -> int:
    """
    dim F[V + V*]^H_(d1,d2) dla H = G lub U.

    Jądro złożonych w stos odwzorowań (sigma - id) po elementach kontrolnych.
    """
    component = bideg_component(n, bidegree)
    if component.dim == 0:
        return 0
    sub = field.tables.sub
    identity = np.eye(component.dim, dtype=np.int64)
    basis = np.eye(component.dim, dtype=np.int64)
    for sigma in checking_elements(field, n, group):
        if sigma.is_identity():
            continue
        A = sub[action_matrix(sigma, component.keys), identity]
        # w: (sigma - id)(w . basis) = 0
        kernel = nullspace(field, _mat_mul_codes(field, A, basis.T))
        if kernel.shape[0] == 0:
            return 0
        basis, _ = row_reduce(field, _mat_mul_codes(field, kernel, basis))
        if basis.shape[0] == 0:
            return 0
    logging.debug(f"dim niezmienników {group} w {bidegree}: {basis.shape[0]}")
    return int(basis.shape[0])


def _mat_mul_codes(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Iloczyn macierzy kodów elementów ciała."""
    if field.e == 1:
        return (a @ b) % field.p
    t = field.tables
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        prod = t.mul[a[:, k][:, None], b[k, :][None, :]]
        out = t.add[out, prod]
    return out


# ==============================================================================
# === Rozpięcia podalgebr i przynależność ===


def poly_bidegree(f: Poly) -> Bidegree:
    degree = f.bidegree()
    if degree is DegreeMarker.INHOMOGENEOUS:
        raise ParameterError(f"Wielomian nie jest dwujednorodny: {format_poly(f)}")
    if degree is DegreeMarker.ZERO:
        raise ParameterError("Wielomian zerowy nie ma dwustopnia")
    return degree


@dataclass
class SpanResult:
    """Iloczyny generatorów o danym dwustopniu i baza ich rozpięcia."""

    bidegree: Bidegree
    labels: List[str]
    products: List[Tuple[int, ...]]
    columns: Dict[int, int]
    matrix: np.ndarray
    basis: np.ndarray
    pivots: List[int]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def product_label(self, exps: Sequence[int]) -> str:
        parts = [lab if e == 1 else f"{lab}^{e}" for lab, e in zip(self.labels, exps) if e]
        return "*".join(parts) if parts else "1"


class _ProductCache:
    def __init__(self, gens: Labeled):
        self.polys = [g for _, g in gens]
        self.powers: Dict[Tuple[int, int], Poly] = {}

    def power(self, idx: int, e: int) -> Poly:
        key = (idx, e)
        if key not in self.powers:
            self.powers[key] = self.polys[idx] ** e
        return self.powers[key]

    def product(self, exps: Sequence[int], one: Poly) -> Poly:
        acc = one
        for idx, e in enumerate(exps):
            if e:
                acc = acc * self.power(idx, e)
        return acc


def subalgebra_span(gens: Labeled, bidegree: Bidegree, extra_keys: Sequence[int] = ()) -> SpanResult:
    """
    Rozpięcie wszystkich iloczynów generatorów o dwustopniu `bidegree`.

    Wykładniki wyliczane są programowaniem dynamicznym po dwustopniach generatorów.
    """
    if not gens:
        raise ParameterError("Pusta lista generatorów")
    proto = gens[0][1]
    weights = []
    for label, g in gens:
        w = poly_bidegree(g)
        if w == (0, 0):
            raise ParameterError(f"Generator {label} jest stałą")
        weights.append(w)
    layout = monomial_layout(len(gens))
    keys = enumerate_weighted(layout, weights, bidegree, limit=MAX_SPAN_PRODUCTS)
    products = [layout.unpack(k) for k in keys]
    cache = _ProductCache(gens)
    one = Poly.constant(proto.field, proto.n, 1)
    expanded = [cache.product(exps, one) for exps in products]
    columns: Dict[int, int] = {}
    for key in extra_keys:
        columns.setdefault(key, len(columns))
    for poly in expanded:
        for key in poly.terms:
            columns.setdefault(key, len(columns))
    matrix = np.zeros((len(expanded), len(columns)), dtype=np.int64)
    for r, poly in enumerate(expanded):
        for key, c in poly.terms.items():
            matrix[r, columns[key]] = c
    basis, pivots = row_reduce(proto.field, matrix) if len(expanded) else (matrix, [])
    return SpanResult(bidegree, [lab for lab, _ in gens], products, columns, matrix, basis, pivots)


@dataclass
class MembershipResult:
    member: bool
    bidegree: Optional[Bidegree]
    certificate: Dict[str, str] = dc_field(default_factory=dict)


def membership(f: Poly, gens: Labeled) -> MembershipResult:
    """Czy f leży w rozpięciu iloczynów generatorów swojego dwustopnia; certyfikat to współczynniki."""
    if f.is_zero():
        return MembershipResult(True, None)
    bidegree = poly_bidegree(f)
    if bidegree == (0, 0):
        return MembershipResult(True, bidegree, {"1": format_element(f.field, f.terms[0])})
    span = subalgebra_span(gens, bidegree, extra_keys=list(f.terms))
    if not span.products:
        return MembershipResult(False, bidegree)
    target = np.zeros(len(span.columns), dtype=np.int64)
    for key, c in f.terms.items():
        target[span.columns[key]] = c
    x = solve(f.field, span.matrix.T, target)
    if x is None:
        return MembershipResult(False, bidegree)
    certificate = {
        span.product_label(exps): format_element(f.field, int(c))
        for exps, c in zip(span.products, x)
        if c
    }
    return MembershipResult(True, bidegree, certificate)


# ==============================================================================
# === Ideał relacji K ===


@dataclass
class KernelComponent:
    bidegree: Bidegree
    monomials: List[int]
    kernel: np.ndarray
    pivots: List[int]

    @property
    def dim(self) -> int:
        return len(self.pivots)


def kernel_component(pres: PresentationRing, bidegree: Bidegree) -> KernelComponent:
    """K_d: kombinacje jednomianów S o dwustopniu d, które pi przeprowadza na zero."""
    keys = pres.monomials_of_bidegree(bidegree)
    if not keys:
        return KernelComponent(bidegree, [], np.zeros((0, 0), dtype=np.int64), [])
    images = [pres.monomial_image(k) for k in keys]
    columns: Dict[int, int] = {}
    for image in images:
        for key in image.terms:
            columns.setdefault(key, len(columns))
    M = np.zeros((len(keys), max(len(columns), 1)), dtype=np.int64)
    for r, image in enumerate(images):
        for key, c in image.terms.items():
            M[r, columns[key]] = c
    K = left_nullspace(pres.field, M)
    if K.shape[0] == 0:
        return KernelComponent(bidegree, keys, K, [])
    basis, pivots = row_reduce(pres.field, K)
    return KernelComponent(bidegree, keys, basis, pivots)


def _vector_to_formal(pres: PresentationRing, keys: List[int], row: np.ndarray) -> FormalPoly:
    return FormalPoly(pres.field, pres.n, {keys[c]: int(v) for c, v in enumerate(row) if v})


def residue_mod_cube(fp: FormalPoly) -> FormalPoly:
    """Reszta modulo S_+^3: wyrazy stopnia łącznego < 3."""
    return fp.truncate_total_degree(3)


@dataclass
class KernelRecord:
    bidegree: Bidegree
    dim_k: int
    dim_splus_k: int
    representatives: List[FormalPoly]

    @property
    def new(self) -> int:
        return self.dim_k - self.dim_splus_k

    @property
    def residues(self) -> List[FormalPoly]:
        return [residue_mod_cube(r) for r in self.representatives]

    def to_dict(self) -> Dict:
        return {
            "bidegree": list(self.bidegree),
            "dimK": self.dim_k,
            "dimSplusK": self.dim_splus_k,
            "new": self.new,
            "representatives": [format_poly(r) for r in self.representatives],
            "residues": [format_poly(r) for r in self.residues],
        }


@dataclass
class KernelReport:
    n: int
    q: int
    max_total_degree: int
    records: List[KernelRecord]

    @property
    def total_new(self) -> int:
        return sum(r.new for r in self.records)

    def generators(self) -> List[Tuple[Bidegree, FormalPoly]]:
        return [(r.bidegree, rep) for r in self.records for rep in r.representatives]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "q": self.q,
            "maxTotalDegree": self.max_total_degree,
            "minimalGenerators": self.total_new,
            "records": [r.to_dict() for r in self.records],
        }


def bidegree_sweep(max_total: int) -> List[Bidegree]:
    """Dwustopnie rosnąco po stopniu łącznym, potem po d1."""
    return [(d1, total - d1) for total in range(1, max_total + 1) for d1 in range(total + 1)]


def minimal_generators_K(pres: PresentationRing, max_total_degree: int, progress: bool = False) -> KernelReport:
    """
    Liczba nowych minimalnych generatorów K w każdym dwustopniu d:
    dim K_d - dim (S_+ K)_d, gdzie (S_+ K)_d = sum_g g K_{d - deg g}.
    """
    layout = pres.layout
    components: Dict[Bidegree, KernelComponent] = {}
    records: List[KernelRecord] = []
    for d in tqdm(bidegree_sweep(max_total_degree), desc="Składowe K", disable=not progress):
        comp = kernel_component(pres, d)
        components[d] = comp
        if comp.dim == 0:
            continue
        index = {k: c for c, k in enumerate(comp.monomials)}
        splus = RowSpace(pres.field, len(comp.monomials))
        for var, (w1, w2) in enumerate(pres.weights):
            prev = components.get((d[0] - w1, d[1] - w2))
            if prev is None or prev.dim == 0:
                continue
            shift = layout.var_keys[var]
            rows = np.zeros((prev.dim, len(comp.monomials)), dtype=np.int64)
            for r, row in enumerate(prev.kernel):
                for c in np.flatnonzero(row):
                    rows[r, index[prev.monomials[c] + shift]] = row[c]
            splus.extend(rows)
        reduced = reduce_modulo(pres.field, comp.kernel, splus.basis, splus.pivots)
        reps_matrix, _ = row_reduce(pres.field, reduced)
        new = comp.dim - splus.dim
        if reps_matrix.shape[0] != new:
            raise CrossCheckError(
                f"{d}: {reps_matrix.shape[0]} reprezentantów zamiast {new} nowych generatorów"
            )
        representatives = [_vector_to_formal(pres, comp.monomials, row) for row in reps_matrix]
        for rep in representatives:
            if not pres.pi_map(rep).is_zero():
                raise CrossCheckError(f"Element K w {d} nie przechodzi na zero przez pi")
        if new:
            logging.info(f"K: {new} nowych generatorów w dwustopniu {d}")
        records.append(KernelRecord(d, comp.dim, splus.dim, representatives))
    return KernelReport(pres.n, pres.q, max_total_degree, records)


# ==============================================================================
# === Hipoteza o minimalnych generatorach K ===


def expected_generators(pres: PresentationRing) -> List[Tuple[str, Bidegree, FormalPoly]]:
    """T_j, T*_j (1 <= j <= n-1) i T_{i,j} (i + j <= n-1) z oczekiwanymi resztami."""
    n, q = pres.n, pres.q
    qn = q**n
    expected = []
    for j in range(1, n):
        expected.append((f"T_{j}", (qn, q**j), pres.C(0) * pres.U(-j)))
        expected.append((f"T*_{j}", (q**j, qn), pres.C_star(0) * pres.U(j)))
    for i in range(n):
        for j in range(n - i):
            expected.append((f"T_{i},{j}", (qn - q**i, qn - q**j), pres.C(i) * pres.C_star(j)))
    return expected


def default_conjecture_window(n: int, q: int) -> int:
    return 2 * (q**n - 1)


def check_conjecture(pres: PresentationRing, max_total_degree: Optional[int] = None,
                     progress: bool = False) -> Dict:
    n, q = pres.n, pres.q
    if q < 3:
        raise ConjectureRangeError(
            f"Hipoteza dotyczy q >= 3; dla q = {q} pierścień nie jest nawet pełnym przecięciem, "
            f"a reszty T_j zawierają dodatkowe wyrazy kwadratowe"
        )
    window = max_total_degree or default_conjecture_window(n, q)
    report = minimal_generators_K(pres, window, progress)
    expected = expected_generators(pres)
    expected_count = 2 * (n - 1) + comb(n + 1, 2)
    unmatched = {label: (bideg, monomial) for label, bideg, monomial in expected if sum(bideg) <= window}
    matches = []
    unexpected = []
    for bideg, rep in report.generators():
        residue = residue_mod_cube(rep)
        hit = None
        for label, (exp_bideg, monomial) in unmatched.items():
            (mono_key,) = monomial.terms
            if exp_bideg == bideg and set(residue.terms) == {mono_key}:
                hit = label
                break
        if hit is None:
            unexpected.append({"bidegree": list(bideg), "residue": format_poly(residue)})
            continue
        unmatched.pop(hit)
        matches.append({"generator": hit, "bidegree": list(bideg), "residue": format_poly(residue)})
    passed = report.total_new == expected_count and not unmatched and not unexpected
    return {
        "n": n,
        "q": q,
        "window": window,
        "expectedCount": expected_count,
        "foundCount": report.total_new,
        "matches": matches,
        "unexpected": unexpected,
        "missing": sorted(unmatched),
        "passed": passed,
        "kernel": report.to_dict(),
    }


# ==============================================================================
# === Kontrole wymiarów ===


def generator_bidegree_check(cat: InvariantCatalog, control_bound: int) -> Dict:
    """
    dim = 1 we wszystkich dwustopniach generatorów Lambda oraz dim = 0
    w niskich dwustopniach, do których nie sięga żaden iloczyn generatorów.
    """
    field, n = cat.field, cat.n
    gens = cat.lambda_generators()
    records = []
    for label, g in gens:
        bideg = poly_bidegree(g)
        dim = invariant_dimension(field, n, bideg, "G")
        records.append({"kind": "generator", "label": label, "bidegree": list(bideg), "dim": dim, "ok": dim == 1})
    generator_bidegrees = {poly_bidegree(g) for _, g in gens}
    for bideg in bidegree_sweep(control_bound):
        if bideg in generator_bidegrees or subalgebra_span(gens, bideg).products:
            continue
        dim = invariant_dimension(field, n, bideg, "G")
        records.append({"kind": "control", "label": "-", "bidegree": list(bideg), "dim": dim, "ok": dim == 0})
    return {"n": n, "q": cat.q, "records": records, "passed": all(r["ok"] for r in records)}


def u_level_generation_check(cat: InvariantCatalog, max_total: int) -> Dict:
    """dim F[V + V*]^U_d wobec wymiaru rozpięcia iloczynów f_i, f*_i, u_j (2-n <= j <= n-2)."""
    gens = cat.u_level_generators()
    records = []
    for bideg in bidegree_sweep(max_total):
        inv = invariant_dimension(cat.field, cat.n, bideg, "U")
        span = subalgebra_span(gens, bideg).dim
        records.append({"bidegree": list(bideg), "invariants": inv, "span": span, "ok": inv == span})
    return {"n": cat.n, "q": cat.q, "records": records, "passed": all(r["ok"] for r in records)}


def ch_freeness_dimension_check(cat: InvariantCatalog, max_degree: int, sets=None) -> Dict:
    """dim F[V]^U_d = sum_{gamma in Gamma} dim F[V]^G_{d - deg gamma} (tylko zmienne x)."""
    sets = sets or build_generator_sets(cat)
    q = cat.q
    gamma_degrees = [sum(a * q**i for i, a in enumerate(exps)) for exps in sets.gamma_exponents()]
    g_dims = {d: invariant_dimension(cat.field, cat.n, (d, 0), "G") for d in range(max_degree + 1)}
    records = []
    for d in range(max_degree + 1):
        lhs = invariant_dimension(cat.field, cat.n, (d, 0), "U")
        rhs = sum(g_dims[d - deg] for deg in gamma_degrees if deg <= d)
        records.append({"degree": d, "uDim": lhs, "freeSum": rhs, "ok": lhs == rhs})
    return {"n": cat.n, "q": q, "records": records, "passed": all(r["ok"] for r in records)}
