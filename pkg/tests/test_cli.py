import io
import json
from pathlib import Path

import pytest

from genusfield.cli import main
from genusfield.genus import genus_field
from genusfield.serialize import dumps, load_spec, report_from_dict

FIX = Path(__file__).parent / "fixtures"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.mark.parametrize("name", ["c2", "c3", "c7", "nk"])
def test_compute_matches_frozen_report(name):
    code, out, _ = run("compute", "--input", str(FIX / f"{name}_spec.json"), "--format", "json")
    assert code == 0
    assert out == (FIX / f"{name}_report.json").read_text(encoding="utf-8")


def test_compute_text():
    code, out, _ = run("compute", "--inline", '{"p":7,"l":3,"generators":[{"gamma":"6","D":"T^3+3*T^2+2*T"}]}')
    assert code == 0
    assert "case: C3" in out
    assert "K_ge = k( ³√(T(T+2)²), ³√((T+1)(T+2)²) )" in out
    assert "[K_ge : K] = 3" in out


def test_dependent_generators_exit_code():
    spec = '{"p":7,"l":3,"generators":[{"gamma":"6","D":"T"},{"gamma":"1","D":"T"}]}'
    code, _, err = run("compute", "--inline", spec)
    assert code == 2
    assert "DependentGenerators" in err and "witness: [1, 2]" in err
    code, out, _ = run("compute", "--inline", spec, "--reduce", "--format", "json")
    assert code == 0 and json.loads(out)["case"] == "C2"


def test_bad_input_exit_codes():
    assert run("compute", "--inline", "{not json")[0] == 2
    assert run("compute", "--inline", '{"p":7,"l":3}')[0] == 2
    assert run("compute", "--inline", '{"p":7,"l":3,"generators":[{"D":"T^2+*T"}]}')[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("sweep", "--q", "6")[0] == 2
    assert run("sweep", "--q", "7", "--l", "4")[0] == 2
    assert run("sweep", "--max-deg", "-1")[0] == 2


def test_verify_exit_codes():
    code, out, _ = run("verify", "--input", str(FIX / "c3_spec.json"))
    assert code == 0
    checks = {c["check"]: c for c in json_lines(out)}
    assert checks["maximality"]["passed"] and checks["genus_property"]["passed"]
    code, out, _ = run("verify", "--input", str(FIX / "c3_spec.json"), "--report", str(FIX / "tampered_c3_report.json"))
    assert code == 3
    checks = {c["check"]: c for c in json_lines(out)}
    assert checks["genus_property"] == {
        "check": "genus_property",
        "passed": False,
        "witness": "p_inf",
        "detail": "(e, f) at infinity changes from (1, 1) to (3, 1)",
    }


def test_verify_large_support_skips_maximality():
    spec = '{"p":7,"l":3,"generators":[{"gamma":"1","D":"T*(T+1)*(T+2)*(T+3)*(T+4)"}]}'
    code, out, _ = run("verify", "--inline", spec)
    assert code == 0
    checks = {c["check"]: c for c in json_lines(out)}
    assert checks["maximality"]["skipped"] is True


def test_verify_nonkummer():
    code, out, _ = run("verify", "--input", str(FIX / "nk_spec.json"))
    assert code == 0 and all(c["passed"] for c in json_lines(out))


def test_empty_sweep():
    code, out, _ = run("sweep", "--q", "7", "--l", "3", "--max-deg", "0")
    assert code == 0
    lines = json_lines(out)
    assert lines == [{"summary": True, "total": 0, "failed": 0, "cases": {}}]


def test_sweep_skips_wild_pairs():
    code, out, _ = run("sweep", "--q", "7", "--l", "7", "--max-deg", "1", "--max-m", "1")
    assert code == 0
    assert json_lines(out)[-1]["skipped"] == [{"q": 7, "l": 7, "reason": "wild (l = p)"}]


def test_sweep_is_deterministic():
    argv = ("sweep", "--q", "5", "--l", "2", "--max-deg", "1", "--max-m", "2", "--max-total-deg", "3")
    first = run(*argv)
    assert first[0] == 0
    assert run(*argv) == first
    assert run(*argv, "--jobs", "2") == first
    lines = json_lines(first[1])
    summary = lines[-1]
    assert summary["failed"] == 0 and summary["total"] == len(lines) - 1
    assert [d["index"] for d in lines[:-1]] == list(range(len(lines) - 1))


def test_report_round_trip_through_json():
    spec = load_spec((FIX / "c7_spec.json").read_text())
    rep = genus_field(spec)
    text = dumps(rep.to_dict())
    assert report_from_dict(json.loads(text)) == rep
    assert text + "\n" == (FIX / "c7_report.json").read_text(encoding="utf-8")


def test_help_exits_zero():
    assert run("--help")[0] == 0
