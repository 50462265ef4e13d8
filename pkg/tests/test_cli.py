import json

import pytest

from hilbcomp.cli import run_subcommand

TYPE_I = "ring n=3 param=0\nx0*x2\nx0*x3\nx1*x2\nx1*x3\n"
TYPE_IV = "ring n=3 param=0\nx0^2\nx0*x1\nx1^2\nx0*x2 - x1*x2\n"
PLANE = "ring n=3 param=0\nx0\nx1\n"
OTHER_PLANE = "ring n=3 param=0\nx2\nx3\n"
FAMILY = "ring n=3 param=1\nx0^2\nx0*x1\nx1^2\nt*x0*x3 - x1*x2\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (
        ("type_i", TYPE_I),
        ("type_iv", TYPE_IV),
        ("plane", PLANE),
        ("other", OTHER_PLANE),
        ("family", FAMILY),
    ):
        p = tmp_path / f"{name}.ideal"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_hilbert_text_output(files, capsys):
    assert run_subcommand(["hilbert", files["type_i"]]) == 0
    assert capsys.readouterr().out.strip() == "2*m + 2"


def test_hilbert_json_output(files, capsys):
    assert run_subcommand(["--format", "json", "hilbert", files["type_i"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hilbert_polynomial"] == "2*m + 2"
    assert payload["dimension"] == 1 and payload["degree"] == 2


def test_gb_and_nf(files, capsys):
    assert run_subcommand(["gb", files["type_iv"]]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert run_subcommand(["nf", files["type_iv"], "x0*x1*x2"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert run_subcommand(["nf", files["type_iv"], "x3^2"]) == 0
    assert capsys.readouterr().out.strip() == "x3^2"


def test_nf_with_lex_order(files, capsys):
    assert run_subcommand(["--order", "lex", "nf", files["type_iv"], "x0*x1*x2"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_hf(files, capsys):
    assert run_subcommand(["hf", files["type_iv"], "-d", "2"]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_intersect_emits_ideal_file_format(files, capsys, tmp_path):
    assert run_subcommand(["intersect", files["plane"], files["other"]]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "ring n=3 param=0"
    # the emitted file is consumable by other subcommands
    f = tmp_path / "pair.ideal"
    f.write_text(out)
    assert run_subcommand(["hilbert", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "2*m + 2"


def test_quotient_and_saturate(files, capsys, tmp_path):
    assert run_subcommand(["intersect", files["plane"], files["other"]]) == 0
    pair = tmp_path / "pair.ideal"
    pair.write_text(capsys.readouterr().out)
    assert run_subcommand(["quotient", str(pair), files["plane"]]) == 0
    got = capsys.readouterr().out.strip().splitlines()[1:]
    assert sorted(got) == ["x2", "x3"]
    assert run_subcommand(["saturate", str(pair), files["plane"]]) == 0
    got = capsys.readouterr().out.strip().splitlines()[1:]
    assert sorted(got) == ["x2", "x3"]


def test_limit_subcommand(files, capsys):
    assert run_subcommand(["limit", files["family"], "--probe"]) == 0
    out = capsys.readouterr().out
    assert "x1*x2" in out
    assert "# probe: flat" in out


def test_limit_rejects_plain_ideal_file(files, capsys):
    assert run_subcommand(["limit", files["type_i"]]) == 2


def test_tangent_json(files, capsys):
    assert run_subcommand(["tangent", files["type_iv"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dimension"] == 12
    assert payload["system"]["rows"] >= payload["constraint_rank"]


def test_classify_json(files, capsys):
    assert run_subcommand(["--seed", "3", "classify", files["type_iv"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["label"] == "IV"
    assert payload["evidence"] == {"has_embedded": True, "generically_reduced": False}


def test_classify_rejects_wrong_polynomial(files, capsys):
    assert run_subcommand(["classify", files["plane"]]) == 1


def test_cone_text_and_json(capsys):
    assert run_subcommand(["cone", "--space", "hn", "--n", "5", "--divisor", "0,6"]) == 0
    text = capsys.readouterr().out
    assert "Fano=False" in text and "Theta_n" in text
    assert run_subcommand(
        ["--format", "json", "cone", "--space", "hn", "--n", "3", "--divisor", "1,1"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ample"] is True and payload["fano"] is True
    assert run_subcommand(
        ["--format", "json", "cone", "--space", "wn", "--n", "4", "--divisor", "1,1,1"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["model"] == "W_n"


def test_cone_non_effective_is_math_failure(capsys):
    # negative leading coordinates need the --divisor=... spelling
    assert run_subcommand(["cone", "--space", "hn", "--n", "4", "--divisor=-1,0"]) == 1
    assert run_subcommand(["cone", "--space", "hn", "--n", "4", "--divisor=-1,2"]) == 0


def test_cone_bad_divisor_is_usage_error(capsys):
    assert run_subcommand(["cone", "--space", "hn", "--n", "4", "--divisor", "a,b"]) == 2


def test_seed_flag_accepted_in_both_positions(files, capsys):
    assert run_subcommand(["--seed", "2", "classify", files["type_i"]]) == 0
    capsys.readouterr()
    assert run_subcommand(["classify", files["type_i"], "--seed", "2"]) == 0


def test_usage_errors(files, capsys):
    assert run_subcommand(["hilbert", "/nonexistent/file.ideal"]) == 2
    assert run_subcommand(["bogus"]) == 2
    assert run_subcommand([]) == 2
    assert run_subcommand(["nf", files["type_i"], "x0 + ?"]) == 2


def test_verify_small_run(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run_subcommand(
        ["--format", "json", "verify", "--n-min", "3", "--n-max", "3",
         "--seed", "1", "--out", str(out)]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["total"] >= 25
    ids = [c["id"] for c in payload["checks"]]
    assert len(ids) == len(set(ids))
    assert all("runtime_ms" not in c for c in payload["checks"])


def test_verify_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run_subcommand(
            ["--format", "json", "verify", "--n-min", "3", "--n-max", "3",
             "--seed", "4", "--out", str(path)]
        )
    assert a.read_bytes() == b.read_bytes()


def test_verify_fault_injection_fails(tmp_path, capsys):
    code = run_subcommand(
        ["verify", "--n-min", "3", "--n-max", "3",
         "--inject-fault", "lattice.pairing_hn"]
    )
    assert code == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "lattice.relations.hn" in out


def test_verify_timings_flag(tmp_path):
    out = tmp_path / "t.json"
    run_subcommand(
        ["--format", "json", "verify", "--n-min", "3", "--n-max", "3",
         "--timings", "--out", str(out)]
    )
    payload = json.loads(out.read_text())
    assert all("runtime_ms" in c for c in payload["checks"])
