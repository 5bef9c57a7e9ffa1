"""
Ślad względny Tr_U^G i operator Reynoldsa R_U^G = [G:U]^{-1} Tr_U^G.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import InvarianceError
from .gfq import FieldElem, FieldSpec
from .grlin import membership, poly_bidegree
from .invariants import InvariantCatalog, Labeled
from .matgroup import CosetSystem, act, checking_elements, coset_reps, is_invariant
from .mpoly import Poly


@dataclass(frozen=True)
class TransferContext:
    field: FieldSpec
    n: int
    cosets: CosetSystem
    index_inverse: FieldElem


def make_transfer_context(field: FieldSpec, n: int) -> TransferContext:
    cosets = coset_reps(field, n)
    residue = cosets.index % field.p
    if residue == 0:
        raise InvarianceError(f"[G:U] = {cosets.index} nie jest odwracalny w {field}")
    inverse = field.from_int(pow(residue, -1, field.p))
    logging.debug(f"Kontekst transferu: [G:U] = {cosets.index}, odwrotność {inverse}")
    return TransferContext(field, n, cosets, inverse)


def rel_trace(f: Poly, ctx: TransferContext, verify: bool = False) -> Poly:
    """sum po reprezentantach warstw gU z g . f."""
    if verify and not is_invariant(f, checking_elements(ctx.field, ctx.n, "U")):
        raise InvarianceError("Argument śladu względnego nie jest U-niezmiennikiem")
    acc = Poly.zero(ctx.field, ctx.n)
    for rep in ctx.cosets.reps:
        acc = acc + act(rep, f)
    return acc


def reynolds(f: Poly, ctx: TransferContext, verify: bool = False) -> Poly:
    return rel_trace(f, ctx, verify).scale(ctx.index_inverse)


def u_invariance_failures(polys: Labeled, field: FieldSpec, n: int) -> List[str]:
    """Etykiety wielomianów, które nie są U-niezmiennikami."""
    elements = checking_elements(field, n, "U")
    failures = [label for label, f in polys if not is_invariant(f, elements)]
    for label in failures:
        logging.debug(f"{label} nie jest U-niezmiennikiem")
    return failures


# ==============================================================================
# === Czyszczenie mianowników potęgą c_{n,0} ===


def default_clearing_cap(n: int, q: int) -> int:
    return 2 * (q - 1) * n


def minimal_clearing_exponent(alpha: Poly, gens: Labeled, cat: InvariantCatalog,
                              cap: Optional[int] = None) -> Dict:
    """
    Najmniejsze r >= 0, dla którego c_{n,0}^r alpha leży w rozpięciu iloczynów `gens`.

    Przekroczenie limitu jest raportowane (exponent = None), nie zgłaszane jako wyjątek.
    """
    cap = default_clearing_cap(cat.n, cat.q) if cap is None else cap
    poly_bidegree(alpha)
    c0 = cat.c(0)
    current = alpha
    for r in range(cap + 1):
        result = membership(current, gens)
        if result.member:
            return {"exponent": r, "cap": cap, "certificate": result.certificate}
        current = current * c0
    logging.warning(f"Nie znaleziono wykładnika czyszczącego do limitu {cap}")
    return {"exponent": None, "cap": cap, "certificate": {}}


def clearing_generators(cat: InvariantCatalog) -> Labeled:
    """f_1..f_n, u_{1-n}..u_{n-1}."""
    n = cat.n
    return [(f"f{i}", cat.f(i)) for i in range(1, n + 1)] + [(f"u{j}", cat.u(j)) for j in range(1 - n, n)]


def localization_check(cat: InvariantCatalog, j: int, cap: Optional[int] = None) -> Dict:
    """
    u_{-j} w E[c_{n,0}^{-1}], E = {c_{n,0..n-1}, u_0..u_{n-1}}: najmniejsze r
    z c_{n,0}^r u_{-j} w rozpięciu iloczynów E.
    """
    n = cat.n
    gens = [(f"c{n},{i}", cat.c(i)) for i in range(n)] + [(f"u{k}", cat.u(k)) for k in range(n)]
    result = minimal_clearing_exponent(cat.u(-j), gens, cat, cap)
    result["j"] = j
    return result


def b_k_membership(cat: InvariantCatalog, k: int) -> Dict:
    """u_{-n-k} należy do A = F[Lambda] (zawieranie B_k w A)."""
    index = -cat.n - k
    result = membership(cat.u(index), cat.lambda_generators())
    return {"k": k, "u": f"u{index}", "member": result.member, "certificate": result.certificate}
