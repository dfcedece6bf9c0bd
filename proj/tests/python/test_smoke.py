# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings and the gauss-factor CLI."""

import json
import math
import os
import subprocess

import pytest

gf = pytest.importorskip("gaussfactor")

CLI = os.environ.get("GAUSS_FACTOR_CLI")

needs_cli = pytest.mark.skipif(
    not CLI or not os.path.exists(CLI), reason="gauss-factor binary not available"
)


def run_cli(*args):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120
    )


# --- library ----------------------------------------------------------------


def test_numtheory():
    nt = gf.numtheory
    assert nt.gcd(21, 14) == 7
    assert nt.jacobi(2, 7) == 1
    assert nt.jacobi(2, 3) == -1
    assert nt.jacobi(6, 9) == 0
    assert nt.strip_twos(40) == (3, 5)
    assert nt.brute_factor(55).factors == [(5, 1), (11, 1)]
    rc = nt.residue_class(21)
    assert rc.variant == nt.OddClass.M1 and rc.witness_s == 5
    with pytest.raises(ValueError):
        nt.jacobi(1, 4)
    with pytest.raises(ValueError):
        nt.gcd(0, 0)


def test_gauss():
    gs = gf.gauss
    closed = gs.gauss_closed(1, 7)
    direct = gs.gauss_direct(1, 7)
    assert closed.denominator_b == 7
    assert closed.coefficient == gs.UnitRoot.MinusI
    assert abs(closed.to_complex() - direct) < 1e-9
    assert gs.classify(closed) == gs.Classification.PurelyImaginary
    assert gs.reduce(3, 21) == (1, 7)
    assert gs.gauss_closed(0, 9).degenerate_unity
    with pytest.raises(ValueError):
        gs.gauss_closed(1, 4)


def test_rotor():
    rt = gf.rotor
    assert abs(rt.autocorrelation(15, 3) - 1 / math.sqrt(5)) < 1e-9
    rows = rt.scan(21)
    imag_rows = [r.n for r in rows if abs(r.im) > 1e-12]
    assert imag_rows == [3, 6, 7, 9, 12, 14, 15, 18]
    assert rows[-1].classification == gf.gauss.Classification.Unity

    report = rt.extract_factors(15)
    assert report.odd_factors == [(3, 1), (5, 1)]
    parts = [(e.n, e.signal_part) for e in report.evidence]
    assert parts == [
        (3, rt.SignalPart.RealPart),
        (5, rt.SignalPart.ImaginaryPart),
    ]
    assert rt.extract_factors(40).two_exponent == 3


def test_wavepacket():
    wp = gf.wavepacket
    spec = wp.WavePacketSpec.make(55)
    assert spec.delta_m == 10.0 and spec.m_max == 50
    assert abs(wp.autocorrelation(spec, 0.0) - 1.0) < 1e-12
    verdicts = wp.detect_factor_candidates(spec, [2, 3, 5, 7, 11, 13])
    assert sorted(v.ell for v in verdicts if v.flagged) == [5, 11]
    trace = wp.riddle_trace(spec, 5)
    mid = len(trace.values) // 2
    assert trace.values[mid] == max(trace.values)


# --- CLI --------------------------------------------------------------------


@needs_cli
def test_cli_scan_json():
    res = run_cli("scan", "--n", "21", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["schema_version"] == "1"
    assert doc["command"] == "scan"
    assert len(doc["rows"]) == 21
    row3 = doc["rows"][2]
    assert row3["class"] == "imag"
    assert abs(row3["mod2"] - 1 / 7) < 1e-9


def _parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


@needs_cli
def test_cli_csv_json_parity():
    res_csv = run_cli("scan", "--n", "15", "--format", "csv")
    res_json = run_cli("scan", "--n", "15", "--format", "json")
    assert res_csv.returncode == 0 and res_json.returncode == 0
    csv_rows = _parse_csv(res_csv.stdout)
    json_rows = json.loads(res_json.stdout)["rows"]
    assert len(csv_rows) == len(json_rows) == 15
    for crow, jrow in zip(csv_rows, json_rows):
        for key, jval in jrow.items():
            assert crow[key] == (
                str(jval) if not isinstance(jval, float) else crow[key]
            )
            if isinstance(jval, float):
                assert float(crow[key]) == pytest.approx(jval, abs=1e-12)


@needs_cli
def test_cli_factor_exit_codes():
    ok = run_cli("factor", "--n", "55", "--mode", "wavepacket", "--format", "json")
    assert ok.returncode == 0
    doc = json.loads(ok.stdout)
    flagged = [r["ell"] for r in doc["rows"] if r["flagged"]]
    assert flagged == [5, 11]

    nothing = run_cli(
        "factor", "--n", "55", "--mode", "wavepacket", "--candidates", "2,3"
    )
    assert nothing.returncode == 1  # composite, nothing flagged

    prime = run_cli("factor", "--n", "17", "--mode", "rotor")
    assert prime.returncode == 0
    assert "17 is prime" in prime.stdout


@needs_cli
def test_cli_domain_errors_exit_2():
    bad_scan = run_cli("scan", "--n", "1")
    assert bad_scan.returncode == 2
    assert bad_scan.stderr.strip() != ""

    bad_closed = run_cli("gauss", "--a", "2", "--b", "4", "--method", "closed")
    assert bad_closed.returncode == 2
    assert "closed form requires odd b" in bad_closed.stderr

    bad_flag = run_cli("scan", "--n", "21", "--no-such-flag")
    assert bad_flag.returncode == 2

    bad_negative = run_cli("factor", "--n", "-3")
    assert bad_negative.returncode == 2

    bad_samples = run_cli("riddle", "--n", "55", "--samples", "10")
    assert bad_samples.returncode == 2


@needs_cli
def test_cli_help_and_riddle():
    assert run_cli("--help").returncode == 0
    assert run_cli("riddle", "--help").returncode == 0

    res = run_cli(
        "riddle", "--n", "55", "--candidates", "5", "--samples", "1",
        "--format", "csv",
    )
    assert res.returncode == 0
    rows = _parse_csv(res.stdout)
    assert len(rows) == 1
    assert rows[0]["dtau"] == "0"


@needs_cli
def test_cli_out_file(tmp_path):
    out = tmp_path / "scan.json"
    res = run_cli("scan", "--n", "9", "--out", str(out))
    assert res.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["command"] == "scan"
    assert len(doc["rows"]) == 9
