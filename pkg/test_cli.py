"""
Testy podkomend CLI: kody wyjścia, raporty, plik konfiguracyjny
"""

import json
import logging
import os

import pytest

from src.core.errors import ParameterError
from src.core.invariants import GeneratorSets, InvariantCatalog
from src.core.mpoly import format_poly
from src.core.processor import build_parser, main, resolve_config, select_omega
from src.utils.logging_config import setup_logging


@pytest.fixture
def config_path(tmp_path):
    return str(tmp_path / "config.json")


def _run(argv, config_path):
    return main(argv, config_path=config_path)


def _read_json(path):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def test_hilbert_report_to_file(tmp_path, config_path):
    out = str(tmp_path / "hilbert.json")
    assert _run(["hilbert", "--n", "2", "--q", "2", "--output", out], config_path) == 0
    report = _read_json(out)
    assert report["schemaVersion"] == 1
    for key in ("n", "q", "coefficients", "leadingValue", "oneOverGroupOrder", "valuations"):
        assert key in report
    assert report["leadingValue"] == "1/3"
    assert report["oneOverGroupOrder"] == "1/6"
    assert report["coefficients"][0] == 1
    assert len(report["coefficients"]) == report["chFreenessSeries"]["degree"] + 1
    assert [(r["n"], r["q"], r["equal"]) for r in report["valuations"]] == [(2, 2, True)]
    assert report["notCompleteIntersection"] is True
    assert "timings" not in report


def test_hilbert_sweep_replaces_valuations(tmp_path, config_path):
    out = str(tmp_path / "sweep.json")
    assert _run(["hilbert", "--n", "2", "--q", "3", "--sweep", "--output", out], config_path) == 0
    assert len(_read_json(out)["valuations"]) > 1


def test_hilbert_text_lists_coefficients(capsys, config_path):
    assert _run(["hilbert", "--n", "2", "--q", "2", "--max-deg", "4", "--format", "text"], config_path) == 0
    out = capsys.readouterr().out
    assert "coefficients: 1, " in out
    assert "leadingValue: 1/3" in out


def test_report_is_deterministic(tmp_path, config_path):
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    argv = ["verify-relations", "--n", "2", "--q", "2"]
    assert _run(argv + ["--output", first], config_path) == 0
    assert _run(argv + ["--output", second], config_path) == 0
    with open(first, encoding="utf-8") as a, open(second, encoding="utf-8") as b:
        assert a.read() == b.read()
    report = _read_json(first)
    assert report["checks"]["rPairing"] == "mixed"
    assert all(r["zero"] for r in report["relations"])


def test_timings_only_on_request(tmp_path, config_path):
    out = str(tmp_path / "t.json")
    assert _run(["hilbert", "--n", "2", "--q", "3", "--timings", "--output", out], config_path) == 0
    assert "total" in _read_json(out)["timings"]


def test_json_on_stdout(capsys, config_path):
    assert _run(["construct", "--n", "2", "--q", "2"], config_path) == 0
    report = json.loads(capsys.readouterr().out)
    assert [r["label"] for r in report["records"]] == ["c2,0", "c2,1", "c*2,0", "c*2,1", "u-1", "u0", "u1"]
    assert all(r["invariant"] for r in report["records"])


def test_text_format(capsys, config_path):
    assert _run(["scan-reflections", "--n", "2", "--q", "2", "--format", "text"], config_path) == 0
    out = capsys.readouterr().out
    assert "passed: True" in out


def test_construct_selected_labels(capsys, config_path):
    assert _run(["construct", "--n", "2", "--q", "3", "--name", "f2,c*1"], config_path) == 0
    records = json.loads(capsys.readouterr().out)["records"]
    assert [(r["label"], r["group"]) for r in records] == [("f2", "U"), ("c*2,1", "G")]


@pytest.mark.parametrize("argv", [
    ["construct", "--n", "1", "--q", "2"],
    ["construct", "--n", "2", "--q", "6"],
    ["construct", "--n", "2", "--q", "2", "--jobs", "0"],
    ["construct", "--n", "2", "--q", "2", "--name", "z9"],
    ["check-conjecture", "--n", "2", "--q", "2"],
    ["construct", "--q", "2"],
])
def test_errors_return_code_two(argv, config_path):
    assert _run(argv, config_path) == 2


def test_n_equal_one_message():
    args = build_parser().parse_args(["construct", "--n", "1", "--q", "3"])
    with pytest.raises(ParameterError, match="hiperpowierzchni"):
        resolve_config(args, {})


def test_save_config_and_reuse(tmp_path, config_path):
    out = str(tmp_path / "r.json")
    assert _run(["hilbert", "--n", "2", "--q", "3", "--max-deg", "12", "--save-config", "--output", out],
                config_path) == 0
    saved = _read_json(config_path)
    assert saved["hilbert"]["n"] == 2 and saved["hilbert"]["max_deg"] == 12
    assert _run(["hilbert", "--output", out], config_path) == 0
    report = _read_json(out)
    assert report["q"] == 3
    assert report["chFreenessSeries"]["degree"] == 12


def test_flags_override_config_section():
    args = build_parser().parse_args(["transfer", "--q", "3"])
    cfg = resolve_config(args, {"transfer": {"n": 3, "q": 2, "jobs": 2}, "hilbert": {"n": 5}})
    assert (cfg.n, cfg.q, cfg.p, cfg.e, cfg.jobs) == (3, 3, 3, 1, 2)
    cfg = resolve_config(build_parser().parse_args(["transfer", "--n", "2", "--q", "9"]), {"transfer": "zły"})
    assert (cfg.p, cfg.e) == (3, 2)


def test_broken_config_file_ignored(tmp_path, config_path):
    with open(config_path, "w", encoding="utf-8") as f:
        f.write("{nie json")
    out = str(tmp_path / "h.json")
    assert _run(["hilbert", "--n", "2", "--q", "2", "--output", out], config_path) == 0


def test_transfer_default_input(tmp_path, config_path):
    out = str(tmp_path / "tr.json")
    assert _run(["transfer", "--n", "2", "--q", "3", "--output", out], config_path) == 0
    report = _read_json(out)
    assert report["input"] == "f1"
    assert report["index"] == 16
    assert report["member"]


def test_transfer_of_non_u_invariant_fails(config_path):
    assert _run(["transfer", "--n", "2", "--q", "3", "--input", "x2^3"], config_path) == 2


def test_check_generation_sample(tmp_path, config_path):
    out = str(tmp_path / "g.json")
    argv = ["check-generation", "--n", "2", "--q", "3", "--sample", "3", "--seed", "5", "--output", out]
    assert _run(argv, config_path) == 0
    report = _read_json(out)
    assert report["omegaSize"] == 256
    assert report["fullSweep"] is False
    assert report["seed"] == 5
    assert len(report["elements"]) == 3
    assert report["omegaInvariant"] is True


def test_check_generation_full_sweep_small_case(tmp_path, config_path):
    out = str(tmp_path / "g.json")
    assert _run(["check-generation", "--n", "2", "--q", "2", "--output", out], config_path) == 0
    report = _read_json(out)
    assert report["fullSweep"] is True
    assert len(report["elements"]) == 9


def test_select_omega_is_reproducible():
    first, full = select_omega((7, 1), 256, 10, 42)
    second, _ = select_omega((7, 1), 256, 10, 42)
    assert not full
    assert first == second and len(set(first)) == 10
    everything, full = select_omega((2, 0), 9, 30, 1)
    assert full and len(everything) == 9


def test_check_minimal(tmp_path, config_path):
    out = str(tmp_path / "m.json")
    assert _run(["check-minimal", "--n", "2", "--q", "2", "--max-deg", "3", "--output", out], config_path) == 0
    assert _read_json(out)["controlBound"] == 3


def test_csv_export_of_relations(tmp_path, config_path):
    out = str(tmp_path / "rel.json")
    csv_path = str(tmp_path / "rel.csv")
    assert _run(["verify-relations", "--n", "2", "--q", "2", "--output", out, "--csv", csv_path], config_path) == 0
    with open(csv_path, encoding="utf-8") as f:
        header = f.readline().strip()
    assert header.split(";") == ["relation", "zero", "terms"]


def test_cache_directory_written(tmp_path, config_path):
    cache_dir = str(tmp_path / "cache")
    out = str(tmp_path / "c.json")
    assert _run(["construct", "--n", "2", "--q", "2", "--cache-dir", cache_dir, "--output", out], config_path) == 0
    assert os.path.exists(os.path.join(cache_dir, "n2_q2.poly"))


def _write_poly_file(path, lines):
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return str(path)


def test_transfer_reads_poly_file(tmp_path, config_path, f3):
    body = format_poly(InvariantCatalog(f3, 2).f(2))
    source = _write_poly_file(tmp_path / "wejscie.poly", ["f2 2 3", body])
    out = str(tmp_path / "tr.json")
    assert _run(["transfer", "--n", "2", "--q", "3", "--input", source, "--output", out], config_path) == 0
    report = _read_json(out)
    assert report["input"] == "f2"
    assert report["member"]


def test_transfer_poly_file_without_header(tmp_path, config_path, f3):
    body = format_poly(InvariantCatalog(f3, 2).f(1))
    source = _write_poly_file(tmp_path / "moje.poly", [body])
    out = str(tmp_path / "tr.json")
    assert _run(["transfer", "--n", "2", "--q", "3", "--input", source, "--output", out], config_path) == 0
    assert _read_json(out)["input"] == "moje"


def test_transfer_poly_file_header_mismatch(tmp_path, config_path, f3):
    body = format_poly(InvariantCatalog(f3, 2).f(1))
    source = _write_poly_file(tmp_path / "zly.poly", ["f1 3 3", body])
    assert _run(["transfer", "--n", "2", "--q", "3", "--input", source], config_path) == 2


def test_check_generation_stops_on_non_u_invariant_omega(tmp_path, config_path, monkeypatch):
    def broken_omega(self, a, b):
        return self.catalog.x(2)

    monkeypatch.setattr(GeneratorSets, "omega_poly", broken_omega)
    out = str(tmp_path / "g.json")
    argv = ["check-generation", "--n", "2", "--q", "3", "--sample", "2", "--seed", "1", "--output", out]
    assert _run(argv, config_path) == 1
    report = _read_json(out)
    assert report["omegaInvariant"] is False
    assert report["elements"] == []
    assert len(report["nonInvariant"]) == 2


@pytest.mark.slow
def test_check_generation_sample_n3_q2(tmp_path, config_path):
    out = str(tmp_path / "g32.json")
    argv = ["check-generation", "--n", "3", "--q", "2", "--sample", "10", "--seed", "7", "--output", out]
    assert _run(argv, config_path) == 0
    report = _read_json(out)
    assert report["omegaSize"] == 441
    assert report["fullSweep"] is False
    assert len(report["elements"]) == 10
    assert all(r["member"] for r in report["elements"])


def test_log_file_written_in_debug_mode(tmp_path):
    log_path = str(tmp_path / "run.log")
    try:
        assert setup_logging(debug=True, log_file=log_path, command="hilbert") == os.path.abspath(log_path)
        logging.getLogger("src.core.hilbert").info("wiadomość kontrolna")
    finally:
        assert setup_logging() is None
    with open(log_path, encoding="utf-8") as f:
        text = f.read()
    assert "Tryb debugowania aktywny (hilbert)" in text
    assert "INFO - src.core.hilbert - wiadomość kontrolna" in text


def test_log_file_flag(tmp_path, config_path):
    log_path = str(tmp_path / "cli.log")
    out = str(tmp_path / "h.json")
    try:
        assert _run(["hilbert", "--n", "2", "--q", "2", "--log-file", log_path, "--output", out], config_path) == 0
    finally:
        setup_logging()
    with open(log_path, encoding="utf-8") as f:
        assert "Koniec: passed=True" in f.read()


def test_warnings_reach_stderr_without_debug(capsys):
    setup_logging()
    logging.getLogger("src.core.matgroup").warning("ostrzeżenie kontrolne")
    assert "WARNING: ostrzeżenie kontrolne" in capsys.readouterr().err
