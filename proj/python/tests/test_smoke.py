import json
import os

import pytest

import quintics


def test_version_and_suites():
    assert quintics.__version__ == "0.1.0"
    assert quintics.all_suites()[0] == "hesse"
    assert "lattice" in quintics.all_suites()
    assert 31 in quintics.supported_primes()


def test_lattice_run_passes():
    report = quintics.run(suites=["lattice"])
    assert report["schema"] == "quintics-report/1"
    assert report["summary"]["fail"] == 0
    ids = {c["id"] for c in report["claims"]}
    assert "lattice.alpha-vanishes" in ids
    assert quintics.exit_code(report) == 0
    markdown = quintics.render_markdown(report)
    assert "FAIL" not in markdown.split()
    assert "d^2 = 10d" in markdown


def test_empty_run():
    report = quintics.run(suites=[])
    assert report["claims"] == []
    assert quintics.exit_code(report) == 0


def test_lattice_products():
    assert quintics.lattice_product("secant_bundle", ["H1", "H1", "H1"]) == 5
    assert quintics.lattice_product("secant_bundle", ["X", "H1", "H1"]) == 15
    assert quintics.lattice_product("symmetric_square", ["4C0 - 2F", "C0 + 2F"]) == 10
    with pytest.raises(ValueError):
        quintics.lattice_product("resolved_secant", ["Sigma1", "H2", "H2"])


def test_scan_and_cache(tmp_path):
    assert quintics.admissible_moduli(31) == [2, 4]
    points = quintics.scan_curve(31, 2, cache_dir=tmp_path)
    assert len(points) == 25
    assert (0, 1, 15, 16, 30) in points
    assert all(next(c for c in x if c) == 1 for x in points)
    assert any(tmp_path.iterdir())
    assert quintics.scan_curve(31, 2, cache_dir=tmp_path) == points
    with pytest.raises(ValueError):
        quintics.scan_curve(31, 3)


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("QUINTICS_CACHE_DIR", os.fspath(tmp_path))
    quintics.scan_curve(31, 4)
    assert [p.name for p in tmp_path.iterdir()] == ["curve-p31-a4.pts"]


def test_hesse_group():
    g = quintics.hesse_group(31, 1)
    assert g["order"] == 36
    assert g["in_hasse_interval"]
    n1, n2 = g["structure"]
    assert n1 * n2 == 36 and n2 % n1 == 0


def test_finite_field_suites_deterministic():
    kwargs = dict(suites=["scan", "cremona"], primes=[31], a_values={31: [2, 4]}, seed=5)
    a, b = quintics.run(**kwargs), quintics.run(**kwargs)
    strip = lambda r: [(c["id"], c["status"], json.dumps(c["witness"], sort_keys=True)) for c in r["claims"]]
    assert strip(a) == strip(b)
    assert all(c["status"] == "pass" for c in a["claims"])
