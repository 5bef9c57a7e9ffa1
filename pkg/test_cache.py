"""
Testy pamięci podręcznej katalogu i eksportu raportów
"""

import os

import pytest

from src.core.cache import cache_path, cached_catalog, load_cache, read_poly_file, save_cache
from src.core.errors import ParseError
from src.core.export import export_to_csv, finalize_report, report_tables, report_to_json, report_to_text
from src.core.invariants import InvariantCatalog
from src.core.mpoly import format_poly


def test_cache_round_trip(tmp_path, f3):
    cache_dir = str(tmp_path)
    cat = InvariantCatalog(f3, 2)
    cat.c(1)
    cat.u(-1)
    path = save_cache(cache_dir, cat)
    assert path == cache_path(cache_dir, 2, 3)

    entries = load_cache(cache_dir, f3, 2)
    assert entries["c2,1"] == cat.c(1)
    assert entries["u-1"] == cat.u(-1)

    restored = cached_catalog(cache_dir, f3, 2)
    assert restored.entries().keys() == cat.entries().keys()
    assert restored.c(1) == cat.c(1)


def test_cache_merges_existing_entries(tmp_path, f2):
    cache_dir = str(tmp_path)
    first = InvariantCatalog(f2, 2)
    first.f(2)
    save_cache(cache_dir, first)
    second = InvariantCatalog(f2, 2)
    second.u(1)
    save_cache(cache_dir, second)
    assert set(load_cache(cache_dir, f2, 2)) == {"f2", "u1"}
    assert not any(name.startswith(".tmp_") for name in os.listdir(cache_dir))


def test_missing_cache_is_empty(tmp_path, f2):
    assert load_cache(str(tmp_path), f2, 3) == {}
    assert load_cache(None, f2, 3) == {}
    assert save_cache(None, InvariantCatalog(f2, 2)) is None


@pytest.mark.parametrize("content", [
    "c2,0 2 3\n",
    "c2,0 2\nx1\n",
    "c2,0 3 3\nx1\n",
])
def test_corrupt_cache_rejected(tmp_path, f3, content):
    with open(cache_path(str(tmp_path), 2, 3), "w", encoding="utf-8") as f:
        f.write(content)
    with pytest.raises(ParseError):
        load_cache(str(tmp_path), f3, 2)


def _sample_report():
    return finalize_report({
        "command": "verify-relations",
        "n": 2,
        "q": 2,
        "relations": [{"relation": "T_0", "zero": True, "terms": 0}],
        "rows": [{"degree": 0, "candidate": 1, "invariants": None}],
        "passed": True,
    })


def test_json_and_text_projections():
    report = _sample_report()
    text = report_to_json(report)
    assert text.index('"command"') < text.index('"schemaVersion"')
    plain = report_to_text(report)
    assert "schemaVersion: 1" in plain and "[relations]" in plain
    assert set(report_tables(report)) == {"relations", "rows"}


def test_csv_export_splits_tables(tmp_path):
    written = export_to_csv(_sample_report(), str(tmp_path / "out.csv"))
    assert sorted(os.path.basename(p) for p in written) == ["out_relations.csv", "out_rows.csv"]
    with open(tmp_path / "out_rows.csv", encoding="utf-8") as f:
        assert f.read().splitlines()[1] == "0;1;brak_danych"


def test_csv_export_without_tables(tmp_path):
    assert export_to_csv(finalize_report({"passed": True}), str(tmp_path / "x.csv")) == []


def test_read_poly_file_with_and_without_header(tmp_path, f3):
    cat = InvariantCatalog(f3, 2)
    body = format_poly(cat.u(0))
    with_header = tmp_path / "a.poly"
    with_header.write_text(f"u0 2 3\n{body}\n", encoding="utf-8")
    assert read_poly_file(str(with_header), f3, 2) == ("u0", cat.u(0))
    bare = tmp_path / "para.poly"
    bare.write_text(f"\n{body}\n", encoding="utf-8")
    assert read_poly_file(str(bare), f3, 2) == ("para", cat.u(0))


@pytest.mark.parametrize("content", ["", "u0 2 9\nx1\n", "x1\nx2\n"])
def test_read_poly_file_rejects_bad_content(tmp_path, f3, content):
    path = tmp_path / "zly.poly"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ParseError):
        read_poly_file(str(path), f3, 2)
