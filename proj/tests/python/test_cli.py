import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("ICX_CLI")
DATA = pathlib.Path(os.environ.get("ICX_DATA_DIR", "data"))

pytestmark = pytest.mark.skipif(CLI is None, reason="ICX_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_gen_is_byte_deterministic(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        r = run("gen", "--n", "6", "--density", "0.4", "--split", "overlap",
                "--common", "2", "--seed", "42", "-o", str(out))
        assert r.returncode == 0, r.stderr
    assert out1.read_bytes() == out2.read_bytes()


def test_analyze_fig3(tmp_path):
    r = run("analyze", str(DATA / "fig3.json"))
    assert r.returncode == 0, r.stderr
    report = json.loads(r.stdout)
    assert report["alpha"] == 6
    assert report["partitioned"] == 5


def test_encode_verify_pipeline(tmp_path):
    code = tmp_path / "code.json"
    r = run("encode", str(DATA / "fig3.json"), "--scheme", "plocal", "-o", str(code))
    assert r.returncode == 0, r.stderr
    v = run("verify", str(DATA / "fig3.json"), str(code))
    assert v.returncode == 0, v.stderr
    report = json.loads(v.stdout)
    assert report["pass"] and report["length"] == 5


def test_verify_rejects_invalid_codeword():
    v = run("verify", str(DATA / "fig1.json"), str(DATA / "fig1_invalid_code.json"))
    assert v.returncode == 1
    report = json.loads(v.stdout)
    assert not report["pass"]
    assert not report["rows"][0]["pass"]


def test_exit_codes_usage_and_cap():
    assert run("bogus").returncode == 2
    assert run("gen").returncode == 2  # missing required --n
    r = run("oracle", str(DATA / "fig3.json"))  # n = 7 over the oracle cap
    assert r.returncode == 3
    assert "cap" in r.stderr


def test_analyze_reports_decomposition(tmp_path):
    inst = tmp_path / "disjoint.json"
    r = run("gen", "--n", "5", "--density", "0.3", "--split", "disjoint",
            "--seed", "9", "-o", str(inst))
    assert r.returncode == 0, r.stderr
    a = run("analyze", str(inst), "--oracle")
    assert a.returncode == 0, a.stderr
    report = json.loads(a.stdout)
    assert report["reduction"] in ("decomposable", "single-sender-equivalent")
    assert report["oracle_linear"] is not None


def test_analyze_schemes_embeds_codes():
    r = run("analyze", str(DATA / "fig2.json"), "--schemes")
    assert r.returncode == 0, r.stderr
    report = json.loads(r.stdout)
    assert report["schemes"]["clique"]["length"] == 5
    assert report["local_chromatic"] == 4


def test_reduce_single_sender():
    r = run("reduce", str(DATA / "fig1.json"))
    assert r.returncode == 0
    assert json.loads(r.stdout)["kind"] == "irreducible"


def test_analyze_and_encode_are_byte_deterministic(tmp_path):
    a = run("analyze", str(DATA / "fig3.json"), "--schemes", "--oracle")
    b = run("analyze", str(DATA / "fig3.json"), "--schemes", "--oracle")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    outs = []
    for name in ("x.json", "y.json"):
        out = tmp_path / name
        r = run("encode", str(DATA / "fig3.json"), "--scheme", "plocal",
                "-o", str(out))
        assert r.returncode == 0, r.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
