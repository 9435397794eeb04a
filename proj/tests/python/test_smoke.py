import json
import os
import pathlib

import pytest

import icx

DATA = pathlib.Path(os.environ.get("ICX_DATA_DIR", "data"))


def load(name):
    return icx.Instance.from_json((DATA / name).read_text())


def test_instance_roundtrip_and_accessors():
    inst = load("fig3.json")
    assert inst.n == 7
    assert inst.sender1 == [1, 2, 7]
    assert inst.private1() == [1, 2]
    assert inst.private2() == [3, 4, 5, 6]
    assert inst.common() == [7]
    again = icx.Instance.from_json(inst.to_json())
    assert again == inst


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        icx.Instance.from_json('{"n": 1, "side_info": [[1]], "sender1": [1], "sender2": []}')


def test_fig3_headline_numbers():
    report = icx.analyze(load("fig3.json"))
    assert report["alpha"] == 6
    assert report["partitioned"] == 5
    assert report["mais"] == 5
    assert not report["ordering_violation"]


def test_encode_then_verify_roundtrip():
    inst = load("fig3.json")
    result = icx.encode(inst, "plocal")
    assert result["length"] == 5
    report = icx.verify(inst, result["code"])
    assert report["pass"]
    assert report["length"] == 5


def test_reference_code_passes_verify():
    inst = load("fig3.json")
    code = json.loads((DATA / "fig3_code.json").read_text())
    report = icx.verify(inst, code)
    assert report["pass"]


def test_invalid_row_fails_verify():
    inst = load("fig1.json")
    code = json.loads((DATA / "fig1_invalid_code.json").read_text())
    report = icx.verify(inst, code)
    assert not report["pass"]
    assert not report["rows"][0]["pass"]


def test_generate_is_deterministic():
    a = icx.generate(6, 0.4, "overlap", seed=42, common=2)
    b = icx.generate(6, 0.4, "overlap", seed=42, common=2)
    assert a.to_json() == b.to_json()


def test_oracle_and_caps():
    inst = icx.Instance.from_json(
        '{"n": 2, "side_info": [[2], [1]], "sender1": [1], "sender2": [2]}'
    )
    assert icx.oracle(inst) == 2
    big = icx.generate(7, 0.5, "disjoint", seed=1)
    with pytest.raises(RuntimeError):
        icx.oracle(big)
    assert icx.oracle(inst, max_length=1) is None


def test_reduce_kinds():
    inst = icx.Instance.from_json(
        '{"n": 2, "side_info": [[2], [1]], "sender1": [1], "sender2": [2]}'
    )
    report = icx.reduce(inst)
    assert report["kind"] == "decomposable"
    assert [p["vertices"] for p in report["parts"]] == [[1], [2]]


def test_local_chromatic_number_fig2():
    assert icx.local_chromatic_number(load("fig2.json")) == 4


def test_mais_fig3():
    assert icx.mais(load("fig3.json")) == 5
