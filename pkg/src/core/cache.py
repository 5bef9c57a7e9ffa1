"""
Dyskowa pamięć podręczna katalogu niezmienników.

Jeden plik `n{n}_q{q}.poly` na parę (n, q); każdy wpis to nagłówek `nazwa n q`
i jedna linia wielomianu w formacie kanonicznym.
"""

import logging
import os
import tempfile
from typing import Dict, Optional, Tuple

from .errors import ParseError
from .gfq import FieldSpec
from .invariants import InvariantCatalog
from .mpoly import Poly, format_poly, parse_poly


def cache_path(cache_dir: str, n: int, q: int) -> str:
    return os.path.join(cache_dir, f"n{n}_q{q}.poly")


def load_cache(cache_dir: Optional[str], field: FieldSpec, n: int) -> Dict[str, Poly]:
    """Wczytuje wpisy dla (n, q); brak katalogu lub pliku daje pusty słownik."""
    if not cache_dir:
        return {}
    path = cache_path(cache_dir, n, field.q)
    if not os.path.exists(path):
        logging.debug(f"Brak pliku pamięci podręcznej {path}")
        return {}
    with open(path, "r", encoding="utf-8") as f:
        lines = [line.rstrip("\n") for line in f if line.strip()]
    if len(lines) % 2:
        raise ParseError(f"Uszkodzony plik pamięci podręcznej (nieparzysta liczba linii): {path}")
    entries: Dict[str, Poly] = {}
    for header, body in zip(lines[::2], lines[1::2]):
        parts = header.split()
        if len(parts) != 3:
            raise ParseError(f"Niepoprawny nagłówek wpisu '{header}' w {path}")
        name, n_text, q_text = parts
        if int(n_text) != n or int(q_text) != field.q:
            raise ParseError(f"Wpis '{name}' dla n={n_text}, q={q_text} w pliku dla n={n}, q={field.q}")
        entries[name] = parse_poly(field, n, body)
    logging.info(f"Wczytano {len(entries)} wpisów z {path}")
    return entries


def read_poly_file(path: str, field: FieldSpec, n: int) -> Tuple[str, Poly]:
    """Jeden wielomian z pliku; nagłówek `nazwa n q` jest opcjonalny i musi zgadzać się z (n, q)."""
    with open(path, "r", encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip()]
    if not lines:
        raise ParseError(f"Pusty plik wielomianu: {path}")
    name = os.path.splitext(os.path.basename(path))[0]
    parts = lines[0].split()
    if len(lines) > 1 and len(parts) == 3 and parts[1].isdigit() and parts[2].isdigit():
        name, n_text, q_text = parts
        if int(n_text) != n or int(q_text) != field.q:
            raise ParseError(f"Plik {path} dotyczy n={n_text}, q={q_text}, a uruchomiono dla n={n}, q={field.q}")
        lines = lines[1:]
    if len(lines) != 1:
        raise ParseError(f"Oczekiwano jednej linii wielomianu w {path}, jest {len(lines)}")
    return name, parse_poly(field, n, lines[0])


def save_cache(cache_dir: Optional[str], catalog: InvariantCatalog) -> Optional[str]:
    """Zapisuje wszystkie wpisy katalogu; plik podmieniany atomowo przez os.replace."""
    if not cache_dir:
        return None
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, catalog.n, catalog.q)
    entries = load_cache(cache_dir, catalog.field, catalog.n)
    entries.update(catalog.entries())
    fd, tmp_path = tempfile.mkstemp(dir=cache_dir, prefix=".tmp_", suffix=".poly")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            for name in sorted(entries):
                f.write(f"{name} {catalog.n} {catalog.q}\n{format_poly(entries[name])}\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logging.info(f"Zapisano {len(entries)} wpisów do {path}")
    return path


def cached_catalog(cache_dir: Optional[str], field: FieldSpec, n: int) -> InvariantCatalog:
    catalog = InvariantCatalog(field, n)
    catalog.preload(load_cache(cache_dir, field, n))
    return catalog
