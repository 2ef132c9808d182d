"""Exit-code contract, report rendering, and the JSON round trip."""

import json

import pytest

from maxitive.cli import main, run_command
from maxitive.specdoc import parse_spec


@pytest.fixture
def doc_path(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps({
        "space": {"atoms": ["a", "b", "c"]},
        "pseudo_mul": "times",
        "measures": {
            "nu": {"a": "3", "b": "1/2", "c": "0"},
            "tau": {"a": "2", "b": "3", "c": "1"},
            "sharp": {"a": "1", "b": "1", "c": "1"},
            "inf_sharp": {"a": "inf", "b": "inf", "c": "inf"},
        },
        "functions": {"f": {"a": "1", "b": "2", "c": "0"}},
        "ideals": {"I": [["a"], ["b"]]},
    }))
    return str(path)


def test_integrate_command(doc_path, capsys):
    rc = main(["integrate", "--space-file", doc_path,
               "--measure", "nu", "--function", "f"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "value: 3" in out
    assert "atomwise: 3" in out
    assert "threshold_sweep: 3" in out


def test_integrate_with_subset_and_op(doc_path, capsys):
    rc = main(["integrate", "--space-file", doc_path, "--measure", "nu",
               "--function", "f", "--subset", "b,c", "--op", "min"])
    assert rc == 0
    assert "value: 1/2" in capsys.readouterr().out  # min(2, 1/2) ⊕ min(0, 0)


def test_density_negative_verdict_is_not_an_error(doc_path, capsys):
    rc = main(["density", "--space-file", doc_path,
               "--nu", "sharp", "--tau", "inf_sharp"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "found: no" in out
    assert "achievable" in out


def test_density_fatal_verdict_flag(doc_path):
    rc = main(["density", "--space-file", doc_path,
               "--nu", "sharp", "--tau", "inf_sharp", "--fatal-verdicts"])
    assert rc == 4


def test_density_positive_with_finitize(doc_path, capsys):
    rc = main(["density", "--space-file", doc_path,
               "--nu", "nu", "--tau", "tau", "--finitize"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "found: yes" in out
    assert "verified_on_all_subsets: yes" in out
    assert "finitized_density" in out


def test_diagnose_exit_codes(doc_path):
    assert main(["diagnose", "--space-file", doc_path, "--tau", "tau"]) == 0
    assert main(["diagnose", "--space-file", doc_path, "--tau", "inf_sharp",
                 "--fatal-verdicts"]) == 4


def test_quotient_variation_ideal_measures(doc_path, capsys):
    assert main(["quotient", "--space-file", doc_path, "--tau", "nu"]) == 0
    assert "class_count: 4" in capsys.readouterr().out  # one null atom
    assert main(["variation", "--space-file", doc_path, "--tau", "tau"]) == 0
    assert "total: 6" in capsys.readouterr().out
    assert main(["ideal-measures", "--space-file", doc_path,
                 "--tau", "tau", "--ideal", "I"]) == 0
    out = capsys.readouterr().out
    assert "restricted_to_ideal" in out and "nguyen_threshold" in out


def test_ideal_inline_atoms(doc_path, capsys):
    assert main(["ideal-measures", "--space-file", doc_path,
                 "--tau", "tau", "--ideal", "a,c"]) == 0
    assert "nguyen_below_tau: yes" in capsys.readouterr().out


def test_validate_op_command(capsys):
    assert main(["validate-op", "--op", "times"]) == 0
    assert "passed: yes" in capsys.readouterr().out


def test_invalid_spec_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"space": {"atoms": ["a"]}, "measures": {"m": {"a": "-1"}}}')
    rc = main(["diagnose", "--space-file", str(path), "--tau", "m"])
    assert rc == 2
    assert "measures.m.a" in capsys.readouterr().err


def test_unknown_name_exit_2(doc_path, capsys):
    rc = main(["diagnose", "--space-file", doc_path, "--tau", "nope"])
    assert rc == 2
    assert "unknown measure" in capsys.readouterr().err


def test_missing_space_file_exit_2(capsys):
    rc = main(["diagnose", "--tau", "tau"])
    assert rc == 2


def test_ambiguous_measure_needs_explicit_name(doc_path, capsys):
    rc = main(["integrate", "--space-file", doc_path, "--function", "f"])
    assert rc == 2
    assert "--measure is required" in capsys.readouterr().err


def test_size_cap_exit_3(tmp_path, capsys):
    atoms = [f"x{i}" for i in range(21)]
    path = tmp_path / "big.json"
    path.write_text(json.dumps({
        "space": {"atoms": atoms},
        "measures": {"tau": {a: "1" for a in atoms}},
    }))
    rc = main(["diagnose", "--space-file", str(path), "--tau", "tau"])
    assert rc == 3


def test_unknown_gallery_scenario_exit_2(capsys):
    rc = main(["gallery", "mystery"])
    assert rc == 2
    assert "unknown gallery scenario" in capsys.readouterr().err


def test_gallery_command(capsys):
    rc = main(["gallery", "shilkret-counterexample"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "passed: yes" in out


def test_json_out_roundtrip(doc_path, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    rc = main(["density", "--space-file", doc_path, "--nu", "nu", "--tau", "tau",
               "--json-out", str(out_path)])
    assert rc == 0
    payload = json.loads(out_path.read_text())
    assert payload["command"] == "density"
    assert payload["body"]["found"] is True
    # machine rendering round-trips losslessly
    assert json.loads(json.dumps(payload)) == payload


def test_json_to_stdout(doc_path, capsys):
    rc = main(["diagnose", "--space-file", doc_path, "--tau", "tau",
               "--json-out", "-"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["body"]["diagnosis"]["rn_property"] is True


def test_run_command_programmatic(doc_path):
    doc = parse_spec(doc_path)
    report = run_command("diagnose", doc, tau="tau")
    assert report.body["diagnosis"]["rn_property"] is True
    report = run_command("integrate", doc, measure="nu", function="f", subset=None)
    assert report.body["value"] == "3"


def test_op_chain_requires_chain_document(doc_path, capsys):
    rc = main(["integrate", "--space-file", doc_path, "--measure", "nu",
               "--function", "f", "--op", "chain"])
    assert rc == 2


@pytest.fixture
def chain_doc_path(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({
        "space": {"atoms": ["a"]},
        "pseudo_mul": {"chain": {
            "carrier": ["0", "1", "2", "inf"],
            "table": [["0", "0", "0", "0"],
                      ["0", "1", "2", "inf"],
                      ["0", "2", "2", "inf"],
                      ["0", "inf", "inf", "inf"]],
            "identity": "1"}},
        "measures": {"at_phi": {"a": "2"}, "below": {"a": "1"}},
    }))
    return str(path)


def test_chain_document_diagnose(chain_doc_path, capsys):
    rc = main(["diagnose", "--space-file", chain_doc_path, "--tau", "at_phi"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "rn_property: no" in out
    assert "at_boundary: yes" in out
    rc = main(["diagnose", "--space-file", chain_doc_path, "--tau", "below"])
    assert rc == 0
    assert "rn_property: yes" in capsys.readouterr().out


def test_chain_document_validate_op(chain_doc_path, capsys):
    rc = main(["validate-op", "--space-file", chain_doc_path, "--op", "chain"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "passed: yes" in out
    assert "phi: 2" in out


def test_carrier_domain_error_exit_2(chain_doc_path, tmp_path, capsys):
    bad = tmp_path / "bad_chain.json"
    bad.write_text(json.dumps({
        "space": {"atoms": ["a"]},
        "pseudo_mul": {"chain": {
            "carrier": ["0", "1", "2", "inf"],
            "table": [["0", "0", "0", "0"],
                      ["0", "1", "2", "inf"],
                      ["0", "2", "2", "inf"],
                      ["0", "inf", "inf", "inf"]],
            "identity": "1"}},
        "measures": {"off": {"a": "7"}},  # 7 is not a carrier element
    }))
    rc = main(["diagnose", "--space-file", str(bad), "--tau", "off"])
    assert rc == 2
    assert "carrier" in capsys.readouterr().err
