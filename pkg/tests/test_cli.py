"""File format and command-line behavior: parsing, exit codes, determinism."""

import json

import pytest

from quivergrass.cli import run
from quivergrass.errors import DomainError
from quivergrass.repfile import (document_for, format_intervals,
                                 parse_intervals, parse_rep_document)
from quivergrass import QQ, Representation, linear_quiver

EX4 = json.dumps({"vertices": 2, "arrows": [[1, 2]], "field": "Q",
                  "dims": [2, 2], "matrices": {"0": [[1, 0], [0, 0]]}})


@pytest.fixture
def ex4_file(tmp_path):
    path = tmp_path / "ex4.rep"
    path.write_text(EX4)
    return str(path)


@pytest.fixture
def mf3_file(tmp_path):
    doc = {"vertices": 3, "arrows": [[1, 2], [2, 3]], "field": "Q",
           "intervals": "U[1,3] + U[2,3] + U[3,3]^2 + U[1,1]^2 + U[1,2] + U[2,2]"}
    path = tmp_path / "m2_n3.rep"
    path.write_text(json.dumps(doc))
    return str(path)


def test_parse_round_trip_is_identity():
    doc = parse_rep_document(EX4)
    once = doc.canonical_json()
    again = parse_rep_document(once).canonical_json()
    assert once == again


def test_parse_rejects_malformed_json_with_position():
    with pytest.raises(DomainError) as err:
        parse_rep_document("{\"vertices\": 2,\n  broken")
    assert "line 2" in str(err.value)


def test_parse_requires_exactly_one_payload():
    base = {"vertices": 1, "arrows": [], "field": "Q"}
    with pytest.raises(DomainError):
        parse_rep_document(json.dumps(base))
    both = dict(base, dims=[1], matrices={}, intervals="U[1,1]")
    with pytest.raises(DomainError):
        parse_rep_document(json.dumps(both))


def test_parse_validates_shapes_and_entries():
    bad = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "dims": [2, 2],
           "matrices": {"0": [[1, 0]]}}
    with pytest.raises(DomainError):
        parse_rep_document(json.dumps(bad))
    bad["matrices"] = {"0": [[1, 0.5], [0, 0]]}
    with pytest.raises(DomainError):
        parse_rep_document(json.dumps(bad))
    good = {"vertices": 2, "arrows": [[1, 2]], "field": "Fp:3", "dims": [1, 1],
            "matrices": {"0": [["1/2"]]}}
    m = parse_rep_document(json.dumps(good)).to_representation()
    assert m.matrix(0) == ((2,),)  # 1/2 = 2 mod 3


def test_interval_syntax():
    dec = parse_intervals("U[1,2]^2 + U[2,2]", 2)
    assert dec.m == {(1, 2): 2, (2, 2): 1}
    assert format_intervals(dec) == "U[1,2]^2 + U[2,2]"
    with pytest.raises(DomainError):
        parse_intervals("U[1,2)^2", 2)
    with pytest.raises(DomainError):
        parse_intervals("U[1,3]", 2)


def test_document_for_round_trip():
    m = Representation(linear_quiver(2), QQ, (2, 2), [[["1/3", 0], [0, 1]]])
    doc = parse_rep_document(document_for(m).canonical_json())
    assert doc.to_representation() == m


def test_unknown_subcommand_exit_1():
    code, text = run(["frobnicate"])
    assert code == 1 and "unknown subcommand" in text


def test_malformed_file_exit_2(tmp_path):
    path = tmp_path / "bad.rep"
    path.write_text("{nope")
    code, text = run(["count", "--rep", str(path), "--e", "1,1", "--p", "2"])
    assert code == 2 and "line 1" in text


def test_budget_exit_3(tmp_path):
    eye = [[int(i == j) for j in range(12)] for i in range(12)]
    doc = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "dims": [12, 12],
           "matrices": {"0": eye}}
    path = tmp_path / "big.rep"
    path.write_text(json.dumps(doc))
    code, text = run(["count", "--rep", str(path), "--e", "6,6", "--p", "5",
                      "--budget", "100"])
    assert code == 3 and "budget" in text


def test_count_subcommand(ex4_file):
    code, text = run(["count", "--rep", ex4_file, "--e", "1,1", "--p", "2"])
    assert code == 0 and "count: 5" in text


def test_flat_locus_subcommand(mf3_file):
    code, text = run(["flat-locus", "--rep", mf3_file])
    assert code == 0 and "flat-only" in text


def test_catenoid_subcommand():
    code, text = run(["catenoid", "--intervals",
                      "U[3,3]+U[2,3]^2+U[2,2]+U[1,2]+U[1,1]", "--n", "3"])
    assert code == 0 and "true" in text


def test_machine_output_deterministic(ex4_file):
    argv = ["poly", "--rep", ex4_file, "--e", "1,1", "--format", "machine"]
    out1 = run(argv)
    out2 = run(argv)
    assert out1 == out2 and out1[0] == 0
    doc = json.loads(out1[1])
    assert doc["outputs"]["counting_polynomial"]["coefficients"] == [1, 2]
    assert doc["provenance"]["primes"] == [2, 3, 5]
    assert set(doc) == {"subcommand", "inputs", "outputs", "provenance"}


def test_machine_output_reparse_rerun_byte_identical(ex4_file, tmp_path):
    """Feeding the echoed input document back in reproduces the bytes."""
    argv = ["count", "--rep", ex4_file, "--e", "1,1", "--p", "2",
            "--format", "machine"]
    code, text = run(argv)
    assert code == 0
    echoed = json.loads(text)["inputs"]["document"]
    path = tmp_path / "echo.rep"
    path.write_text(json.dumps(echoed))
    code2, text2 = run(["count", "--rep", str(path), "--e", "1,1", "--p", "2",
                        "--format", "machine"])
    assert code2 == 0 and text2 == text


def test_decompose_reserialize_fixed_point(ex4_file, tmp_path):
    code, text = run(["decompose", "--rep", ex4_file, "--format", "machine"])
    assert code == 0
    intervals = json.loads(text)["outputs"]["intervals"]
    doc = {"vertices": 2, "arrows": [[1, 2]], "field": "Q",
           "intervals": intervals}
    path = tmp_path / "intervals.rep"
    path.write_text(json.dumps(doc))
    code2, text2 = run(["decompose", "--rep", str(path), "--format", "machine"])
    assert code2 == 0
    assert json.loads(text2)["outputs"]["intervals"] == intervals


def test_hom_ext_subcommands(tmp_path, ex4_file):
    s1 = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "dims": [1, 0],
          "matrices": {}}
    p = tmp_path / "s1.rep"
    p.write_text(json.dumps(s1))
    code, text = run(["hom", "--rep", str(p), "--rep2", ex4_file])
    assert code == 0 and "hom_dim: 1" in text
    code, text = run(["ext", "--rep", str(p), "--rep2", str(p)])
    assert code == 0 and "ext1_dim: 0" in text


def test_tangent_subcommand(ex4_file, tmp_path):
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"bases": [[[0, 1]], [[1, 0]]]}))
    code, text = run(["tangent", "--rep", ex4_file, "--witness", str(w)])
    assert code == 0 and "tangent_dim: 2" in text


def test_verify_mult_subcommand(tmp_path):
    s = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "intervals": "U[1,1]"}
    x = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "intervals": "U[2,2]"}
    sp = tmp_path / "s.rep"
    xp = tmp_path / "x.rep"
    sp.write_text(json.dumps(s))
    xp.write_text(json.dumps(x))
    code, text = run(["verify-mult", "--x", str(xp), "--s", str(sp),
                      "--format", "machine"])
    assert code == 0
    out = json.loads(text)["outputs"]
    assert out["holds"] is True and out["residual"] == []
    assert out["middle_term"] == "U[1,2]"
    code, text = run(["psi-check", "--x", str(xp), "--s", str(sp),
                      "--e", "1,1", "--primes", "2,3", "--format", "machine"])
    assert code == 0 and json.loads(text)["outputs"]["holds"] is True


def test_deg_compare_subcommand(tmp_path):
    a = {"vertices": 2, "arrows": [[1, 2]], "field": "Q", "intervals": "U[1,2]^3"}
    b = {"vertices": 2, "arrows": [[1, 2]], "field": "Q",
         "intervals": "U[1,2]^2 + U[1,1] + U[2,2]"}
    pa, pb = tmp_path / "a.rep", tmp_path / "b.rep"
    pa.write_text(json.dumps(a))
    pb.write_text(json.dumps(b))
    code, text = run(["deg-compare", "--rep", str(pa), "--rep2", str(pb),
                      "--format", "machine"])
    assert code == 0
    out = json.loads(text)["outputs"]
    assert out["ranks_m_deg_n"] is True and out["ranks_n_deg_m"] is False
    assert out["hom_m_deg_n"] is True and out["hom_n_deg_m"] is False


def test_remaining_subcommands(ex4_file):
    code, text = run(["euler", "--rep", ex4_file, "--e", "1,1"])
    assert code == 0 and "euler_e_dim: 2" in text and "euler_e_complement: 1" in text
    code, text = run(["cells", "--intervals", "U[1,1]^4", "--n", "1",
                      "--e", "2", "--format", "machine"])
    assert code == 0
    cells = json.loads(text)["outputs"]["cells"]
    assert sorted(c["dim"] for c in cells) == [0, 1, 2, 2, 3, 4]
    code, text = run(["poincare", "--rep", ex4_file, "--e", "1,1",
                      "--format", "machine"])
    assert code == 0
    out = json.loads(text)["outputs"]
    assert out["coefficients"] == [1, 2] and out["euler_characteristic"] == 3
    code, text = run(["strata", "--rep", ex4_file, "--e", "1,1",
                      "--format", "machine"])
    assert code == 0
    assert len(json.loads(text)["outputs"]["strata"]) == 2
    code, text = run(["gvector", "--rep", ex4_file, "--format", "machine"])
    assert code == 0 and json.loads(text)["outputs"]["g_vector"] == [0, -2]
    code, text = run(["fpoly", "--rep", ex4_file, "--format", "machine"])
    assert code == 0
    fterms = json.loads(text)["outputs"]["f_polynomial"]
    assert [[0, 0], 1] in fterms
    code, text = run(["cc", "--rep", ex4_file, "--format", "machine"])
    assert code == 0
    doc = json.loads(text)
    assert doc["provenance"]["engine"] == "cells"
    assert doc["outputs"]["cluster_character"]


def test_ar_quiver_subcommand():
    code, text = run(["ar-quiver", "--n", "4", "--format", "machine"])
    assert code == 0
    out = json.loads(text)["outputs"]
    assert len(out["vertices"]) == 10


def test_demo_elliptic_subcommand():
    code, text = run(["demo-elliptic", "--p", "2", "--format", "machine"])
    assert code == 0
    out = json.loads(text)["outputs"]
    assert out["difference"] == 0 and out["curve_points"] == 3
