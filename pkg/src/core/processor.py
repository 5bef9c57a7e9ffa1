"""
Główny moduł procesora aplikacji modinv: podkomendy CLI i ich raporty
"""

import argparse
import logging
import os
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from ..config.settings import (
    CONTROL_DEGREE_BOUND,
    DEFAULT_CACHE_DIR,
    DEFAULT_JOBS,
    DEFAULT_SAMPLE,
    DEFAULT_SEED,
    DEFAULT_SERIES_DEGREE,
    FULL_OMEGA_SWEEP_LIMIT,
    HILBERT_COMPARE_DEGREE,
    VALUATION_SWEEP_MAX_N,
    VALUATION_SWEEP_QS,
)
from ..utils.config_manager import load_config, save_config_for_command
from ..utils.logging_config import setup_logging
from ..utils.parallel import run_tasks
from ..utils.ui_helpers import display_banner, info, print_error, print_warning, section, verdict_pass, verdict_zero
from .cache import cached_catalog, read_poly_file, save_cache
from .errors import ModinvError, ParameterError
from .export import export_to_csv, finalize_report, write_report
from .gfq import field_for_order, make_field
from .grlin import check_conjecture, generator_bidegree_check, membership, poly_bidegree
from .hilbert import (
    benson_leading_check,
    ch_freeness_series_check,
    ci_candidate_series,
    compare_with_invariants,
    q_valuation_check,
    series_coeffs,
    valuation_sweep,
)
from .invariants import InvariantCatalog, build_generator_sets
from .matgroup import checking_elements, is_invariant, pseudo_reflection_scan
from .mpoly import format_poly, parse_poly
from .presentation import PresentationRing
from .relations import (
    jacobian_nonzero_check,
    nabla_determinant,
    relation_names,
    relation_record,
    resolve_r_pairing,
    u_boundary_from_relations,
)
from .transfer import make_transfer_context, reynolds, u_invariance_failures


# Klucze zapisywane przez --save-config
CONFIG_KEYS = ("n", "q", "max_deg", "sample", "seed", "cache_dir", "format", "jobs")

DEFAULTS = {
    "n": None,
    "q": None,
    "max_deg": None,
    "sample": DEFAULT_SAMPLE,
    "seed": DEFAULT_SEED,
    "cache_dir": DEFAULT_CACHE_DIR,
    "format": "json",
    "jobs": DEFAULT_JOBS,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    q: int
    p: int
    e: int
    max_deg: Optional[int]
    sample: int
    seed: int
    cache_dir: Optional[str]
    format: str
    jobs: int
    output: Optional[str] = None
    csv: Optional[str] = None
    timings: bool = False
    debug: bool = False
    name: Optional[str] = None
    input: Optional[str] = None
    sweep: bool = False
    compare: bool = False

    def settings_to_save(self) -> Dict:
        data = asdict(self)
        return {key: data[key] for key in CONFIG_KEYS if data[key] is not None}


# ==============================================================================
# === Argumenty i konfiguracja ===


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="wymiar V (n >= 2)")
    common.add_argument("--q", type=int, help="rząd ciała, potęga liczby pierwszej")
    common.add_argument("--max-deg", dest="max_deg", type=int, help="ograniczenie stopnia")
    common.add_argument("--sample", type=int, help="liczność próby w przeglądach losowych")
    common.add_argument("--seed", type=int, help="ziarno generatora losowego")
    common.add_argument("--cache-dir", dest="cache_dir", help="katalog pamięci podręcznej wielomianów")
    common.add_argument("--format", choices=("json", "text"), help="format raportu")
    common.add_argument("--jobs", type=int, help="liczba procesów roboczych")
    common.add_argument("--output", help="plik raportu (domyślnie stdout)")
    common.add_argument("--csv", help="eksport tabel raportu do CSV")
    common.add_argument("--timings", action="store_true", help="dołącz czasy wykonania do raportu")
    common.add_argument("--debug", action="store_true", help="zapisuj logi do debug.log")
    common.add_argument("--log-file", dest="log_file", help="plik logu DEBUG (włącza tryb debugowania)")
    common.add_argument("--save-config", dest="save_config", action="store_true",
                        help="zapisz ustawienia podkomendy w pliku konfiguracyjnym")
    common.add_argument("--config", help="ścieżka pliku konfiguracyjnego")

    parser = argparse.ArgumentParser(
        prog="modinv",
        description="Niezmienniki modularne GL(V) działającej na V + V* nad F_q",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("construct", parents=[common], help="buduje i wypisuje niezmienniki katalogu").add_argument(
        "--name", help="etykiety oddzielone przecinkami, np. 'c0,c*1,u-1' (domyślnie Lambda)"
    )
    sub.add_parser("verify-relations", parents=[common], help="sprawdza wszystkie relacje")
    sub.add_parser("transfer", parents=[common], help="operator Reynoldsa dla U-niezmiennika").add_argument(
        "--input", help="plik .poly, etykieta katalogu (np. 'f1') lub wielomian w formacie kanonicznym"
    )
    sub.add_parser("check-generation", parents=[common], help="R_U^G(omega) w A dla omega z Omega")
    sub.add_parser("check-minimal", parents=[common], help="wymiary w dwustopniach generatorów")
    sub.add_parser("check-conjecture", parents=[common], help="minimalne generatory ideału relacji")
    hilbert = sub.add_parser("hilbert", parents=[common], help="szeregi Hilberta i test Bensona")
    hilbert.add_argument("--sweep", action="store_true", help="przegląd waluacji dla siatki (n, q)")
    hilbert.add_argument("--compare", action="store_true", help="porównanie z prawdziwymi wymiarami")
    sub.add_parser("scan-reflections", parents=[common], help="hipotezy Gorensteina (pseudoodbicia)")
    return parser


def resolve_config(args: argparse.Namespace, file_config: Dict) -> RunConfig:
    """settings -> sekcja pliku konfiguracyjnego -> jawne flagi."""
    merged = dict(DEFAULTS)
    section_cfg = file_config.get(args.command, {})
    if not isinstance(section_cfg, dict):
        section_cfg = {}
    merged.update({k: v for k, v in section_cfg.items() if k in DEFAULTS})
    merged.update({k: getattr(args, k) for k in DEFAULTS if getattr(args, k, None) is not None})

    if merged["n"] is None or merged["q"] is None:
        raise ParameterError("Wymagane są parametry --n i --q (flagi lub plik konfiguracyjny)")
    n, q = int(merged["n"]), int(merged["q"])
    if n == 1:
        raise ParameterError(
            "n = 1 nie jest obsługiwane: pierścień jest wtedy znaną hiperpowierzchnią "
            "F[x^(q-1), xy, y^(q-1)]"
        )
    if n < 2:
        raise ParameterError(f"n musi być >= 2, otrzymano {n}")
    field_for_order(q)
    ((p, e),) = factorint(q).items()
    for key in ("max_deg", "sample", "seed"):
        if merged[key] is not None and int(merged[key]) < 0:
            raise ParameterError(f"--{key.replace('_', '-')} musi być nieujemne")
    if int(merged["jobs"]) < 1:
        raise ParameterError("--jobs musi być >= 1")

    return RunConfig(
        command=args.command,
        n=n,
        q=q,
        p=int(p),
        e=int(e),
        max_deg=None if merged["max_deg"] is None else int(merged["max_deg"]),
        sample=int(merged["sample"]),
        seed=int(merged["seed"]),
        cache_dir=merged["cache_dir"],
        format=merged["format"],
        jobs=int(merged["jobs"]),
        output=args.output,
        csv=args.csv,
        timings=args.timings,
        debug=args.debug,
        name=getattr(args, "name", None),
        input=getattr(args, "input", None),
        sweep=getattr(args, "sweep", False),
        compare=getattr(args, "compare", False),
    )


# ==============================================================================
# === Stan procesów roboczych ===


@lru_cache(maxsize=None)
def _worker_catalog(p: int, e: int, n: int, cache_dir: Optional[str]) -> InvariantCatalog:
    return cached_catalog(cache_dir, make_field(p, e), n)


@lru_cache(maxsize=None)
def _worker_generation_state(p: int, e: int, n: int, cache_dir: Optional[str]):
    cat = _worker_catalog(p, e, n, cache_dir)
    return build_generator_sets(cat), make_transfer_context(cat.field, n)


def _relation_worker(task: Tuple) -> Dict:
    p, e, n, cache_dir, name = task
    return relation_record(_worker_catalog(p, e, n, cache_dir), name)


def _generation_worker(task: Tuple) -> Dict:
    p, e, n, cache_dir, a, b = task
    sets, ctx = _worker_generation_state(p, e, n, cache_dir)
    omega = sets.omega_poly(a, b)
    image = reynolds(omega, ctx)
    result = membership(image, sets.A_gens)
    return {
        "omega": sets.omega_label(a, b),
        "bidegree": list(poly_bidegree(omega)),
        "reynoldsTerms": len(image),
        "member": result.member,
        "certificateSize": len(result.certificate),
    }


def _catalog(cfg: RunConfig) -> InvariantCatalog:
    return _worker_catalog(cfg.p, cfg.e, cfg.n, cfg.cache_dir)


# ==============================================================================
# === Podkomendy ===


def _invariance_group(cat: InvariantCatalog, label: str) -> Optional[str]:
    if label.startswith("u"):
        return "G"
    if label.startswith("f"):
        return "U"
    if label.startswith("c"):
        k = int(label.lstrip("c*").split(",")[0])
        return "G" if k == cat.n else None
    return None


def cmd_construct(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    if cfg.name:
        labels = [cat.canonical_label(label) for label in cfg.name.split(",") if label.strip()]
    else:
        labels = [label for label, _ in cat.lambda_generators()]
    records = []
    for label in labels:
        poly = cat.get(label)
        group = _invariance_group(cat, label)
        invariant = None if group is None else is_invariant(poly, checking_elements(cat.field, cat.n, group))
        records.append({
            "label": label,
            "bidegree": list(poly_bidegree(poly)) if poly else None,
            "terms": len(poly),
            "group": group,
            "invariant": invariant,
            "poly": format_poly(poly),
        })
    passed = all(r["invariant"] is not False for r in records)
    return {"command": cfg.command, "n": cfg.n, "q": cfg.q, "records": records, "passed": passed}


def cmd_verify_relations(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    names = relation_names(cfg.n, cfg.max_deg)
    tasks = [(cfg.p, cfg.e, cfg.n, cfg.cache_dir, name) for name in names]
    relations = run_tasks(_relation_worker, tasks, cfg.jobs, desc="Relacje")
    section("Relacje")
    for rec in relations:
        verdict_zero(rec["relation"], rec["zero"])

    pairing = resolve_r_pairing(cat)
    boundary = u_boundary_from_relations(cat)
    jacobian = jacobian_nonzero_check(cat)
    if jacobian["skipped"]:
        print_warning(f"Ewaluacja jakobianu pominięta: ciało F_{cfg.q}^{cfg.n} przekracza limit")
    nabla_nonzero = not nabla_determinant(cat).is_zero()
    extras = {
        "rPairing": pairing["resolved"],
        "uBoundary": {"plusMatches": boundary["plusMatches"], "minusMatches": boundary["minusMatches"]},
        "jacobianNonzero": jacobian,
        "nablaDeterminantNonzero": nabla_nonzero,
    }
    passed = (
        all(r["zero"] for r in relations)
        and pairing["resolved"] == "mixed"
        and boundary["plusMatches"]
        and boundary["minusMatches"]
        and jacobian["nonzero"] is not False
        and nabla_nonzero
    )
    return {"command": cfg.command, "n": cfg.n, "q": cfg.q, "relations": relations,
            "checks": extras, "passed": passed}


def _read_input(cat: InvariantCatalog, text: Optional[str]):
    """Plik w formacie kanonicznym (opcjonalny nagłówek `nazwa n q`), etykieta katalogu albo wielomian."""
    if not text:
        return "f1", cat.f(1)
    if os.path.isfile(text):
        return read_poly_file(text, cat.field, cat.n)
    try:
        label = cat.canonical_label(text)
    except ParameterError:
        return text, parse_poly(cat.field, cat.n, text)
    return label, cat.get(label)


def cmd_transfer(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    name, f = _read_input(cat, cfg.input)
    ctx = make_transfer_context(cat.field, cat.n)
    image = reynolds(f, ctx, verify=True)
    sets = build_generator_sets(cat)
    result = membership(image, sets.A_gens)
    verdict_pass("R_U^G(f) w A", result.member)
    return {
        "command": cfg.command,
        "n": cfg.n,
        "q": cfg.q,
        "input": name,
        "index": ctx.cosets.index,
        "reynolds": format_poly(image),
        "member": result.member,
        "certificate": result.certificate,
        "passed": result.member,
    }


def select_omega(bounds: Sequence[int], omega_size: int, sample: int, seed: int) -> Tuple[List, bool]:
    """Pełny przegląd Omega do FULL_OMEGA_SWEEP_LIMIT, w przeciwnym razie próba bez powtórzeń."""
    if omega_size <= FULL_OMEGA_SWEEP_LIMIT or sample >= omega_size:
        gammas = list(np.ndindex(*[bound + 1 for bound in bounds]))
        return [(a, b) for a in gammas for b in gammas], True
    rng = np.random.default_rng(seed)
    chosen = set()
    while len(chosen) < sample:
        a = tuple(int(rng.integers(0, bound + 1)) for bound in bounds)
        b = tuple(int(rng.integers(0, bound + 1)) for bound in bounds)
        chosen.add((a, b))
    return sorted(chosen), False


def cmd_check_generation(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    sets = build_generator_sets(cat)
    selection, full = select_omega(sets.bounds, sets.omega_size, cfg.sample, cfg.seed)
    mode = "pełny przegląd" if full else f"próba, ziarno {cfg.seed}"
    info(f"|Omega| = {sets.omega_size}, sprawdzanych elementów: {len(selection)} ({mode})")
    report = {
        "command": cfg.command,
        "n": cfg.n,
        "q": cfg.q,
        "omegaSize": sets.omega_size,
        "fullSweep": full,
        "seed": None if full else cfg.seed,
    }

    # Robotnicy liczą R_U^G bez weryfikacji
    gamma = [(f"f{i}", cat.f(i)) for i in range(1, cfg.n + 1)]
    gamma += [(f"f*{i}", cat.f_star(i)) for i in range(1, cfg.n + 1)]
    selected = [(sets.omega_label(a, b), sets.omega_poly(a, b)) for a, b in selection]
    failures = u_invariance_failures(gamma + selected, cat.field, cfg.n)
    verdict_pass("Omega w F[V+V*]^U", not failures)
    if failures:
        print_error(f"Elementy spoza F[V+V*]^U: {', '.join(failures)}")
        report.update({"omegaInvariant": False, "nonInvariant": failures, "elements": [], "passed": False})
        return report

    tasks = [(cfg.p, cfg.e, cfg.n, cfg.cache_dir, tuple(a), tuple(b)) for a, b in selection]
    elements = run_tasks(_generation_worker, tasks, cfg.jobs, desc="Reynolds i przynależność")
    passed = all(r["member"] for r in elements)
    verdict_pass("Generowanie", passed)
    report.update({"omegaInvariant": True, "elements": elements, "passed": passed})
    return report


def cmd_check_minimal(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    bound = CONTROL_DEGREE_BOUND if cfg.max_deg is None else cfg.max_deg
    result = generator_bidegree_check(cat, bound)
    verdict_pass("Minimalne generowanie", result["passed"])
    result["command"] = cfg.command
    result["controlBound"] = bound
    return result


def cmd_check_conjecture(cfg: RunConfig) -> Dict:
    pres = PresentationRing(_catalog(cfg))
    result = check_conjecture(pres, cfg.max_deg, progress=True)
    verdict_pass("Hipoteza o generatorach K", result["passed"])
    result["command"] = cfg.command
    return result


def cmd_hilbert(cfg: RunConfig) -> Dict:
    degree = DEFAULT_SERIES_DEGREE if cfg.max_deg is None else cfg.max_deg
    benson = benson_leading_check(cfg.n, cfg.q)
    ch_series = ch_freeness_series_check(cfg.n, cfg.q, degree)
    if cfg.sweep:
        valuations = valuation_sweep(range(2, VALUATION_SWEEP_MAX_N + 1), VALUATION_SWEEP_QS)
    else:
        valuations = [q_valuation_check(cfg.n, cfg.q)]
    valuations_equal = all(r["equal"] for r in valuations)
    report = {
        "command": cfg.command,
        "n": cfg.n,
        "q": cfg.q,
        "coefficients": series_coeffs(ci_candidate_series(cfg.n, cfg.q), degree),
        "leadingValue": benson["leadingValue"],
        "oneOverGroupOrder": benson["oneOverGroupOrder"],
        "notCompleteIntersection": not benson["equal"],
        "valuations": valuations,
        "chFreenessSeries": {"degree": degree, "passed": ch_series},
    }
    if cfg.compare:
        compare_degree = min(degree, HILBERT_COMPARE_DEGREE)
        report["rows"] = compare_with_invariants(_catalog(cfg), compare_degree)
    verdict_pass("Kandydat pełnego przecięcia sprzeczny z Bensonem", not benson["equal"])
    verdict_pass("Waluacje q-adyczne", valuations_equal)
    verdict_pass("Szeregi Campbella-Hughesa", ch_series)
    report["passed"] = not benson["equal"] and valuations_equal and ch_series
    return report


def cmd_scan_reflections(cfg: RunConfig) -> Dict:
    cat = _catalog(cfg)
    result = pseudo_reflection_scan(cat.field, cfg.n, progress=True)
    verdict_pass("Brak pseudoodbić, det = 1", result["passed"])
    result["command"] = cfg.command
    return result


HANDLERS = {
    "construct": cmd_construct,
    "verify-relations": cmd_verify_relations,
    "transfer": cmd_transfer,
    "check-generation": cmd_check_generation,
    "check-minimal": cmd_check_minimal,
    "check-conjecture": cmd_check_conjecture,
    "hilbert": cmd_hilbert,
    "scan-reflections": cmd_scan_reflections,
}


# ==============================================================================
# === Punkt wejścia ===


def run(cfg: RunConfig) -> int:
    display_banner(cfg.command, cfg.n, cfg.q, cfg.debug)
    logging.info(f"Start: {cfg}")
    start = time.perf_counter()
    report = HANDLERS[cfg.command](cfg)
    elapsed = time.perf_counter() - start
    if cfg.cache_dir:
        save_cache(cfg.cache_dir, _catalog(cfg))
    report = finalize_report(report, {"total": elapsed} if cfg.timings else None)
    write_report(report, cfg.format, cfg.output)
    if cfg.csv:
        export_to_csv(report, cfg.csv)
    logging.info(f"Koniec: passed={report['passed']}, czas {elapsed:.2f} s")
    return 0 if report["passed"] else 1


def main(argv: Optional[Sequence[str]] = None, config_path: Optional[str] = None) -> int:
    """Zwraca kod wyjścia: 0 wszystko przeszło, 1 nieudana weryfikacja, 2 błąd."""
    args = build_parser().parse_args(argv)
    setup_logging(args.debug, args.log_file, args.command)
    config_path = args.config or config_path or os.path.join(os.getcwd(), "config.json")
    try:
        cfg = resolve_config(args, load_config(config_path))
        if args.save_config:
            save_config_for_command(cfg.command, cfg.settings_to_save(), config_path)
        return run(cfg)
    except ModinvError as e:
        print_error(str(e))
        logging.debug(f"Błąd obliczeń: {e}", exc_info=True)
        return 2
