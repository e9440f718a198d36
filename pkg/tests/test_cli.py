import json
from fractions import Fraction

import pytest

from jortwist import cli, twists
from jortwist.cli import element_from_dict, element_to_dict, element_to_text
from jortwist.report import VerificationReport


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


class TestExpand:
    def test_text_first_order(self, capsys):
        code, out = run(["expand", "--family", "L", "--form", "closed",
                         "--order", "1", "--u", "symbolic",
                         "--format", "text"], capsys)
        assert code == 0
        assert out.splitlines() == [
            "1 · 1⊗1",
            "(-u)/κ · D⊗P",
            "(-u+1)/κ · P⊗D",
        ]

    def test_trivial_expansion(self, capsys):
        code, out = run(["expand", "--family", "0", "--order", "0"], capsys)
        assert code == 0
        assert out.strip() == "1 · 1⊗1"

    def test_ascii_mode(self, capsys):
        code, out = run(["expand", "--family", "L", "--order", "1",
                         "--ascii"], capsys)
        assert code == 0
        assert "κ" not in out and "⊗" not in out
        assert "kappa" in out and "(x)" in out

    def test_json_rational_u(self, capsys):
        code, out = run(["expand", "--family", "R", "--inverse",
                         "--form", "closed", "--order", "1",
                         "--u", "1/2", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        grade1 = [t for t in data["terms"] if t["kappa_power"] == 1]
        coeffs = {c for t in grade1 for m in t["dpoly"]
                  for _, c in m["upoly"]}
        assert coeffs == {"1/2", "-1/2"}

    def test_json_round_trip(self, capsys):
        code, out = run(["expand", "--family", "L", "--order", "3",
                         "--format", "json"], capsys)
        data = json.loads(out)
        assert element_from_dict(data) == twists.twist("L", "twist", 3)

    def test_output_deterministic(self, capsys):
        argv = ["expand", "--family", "R", "--order", "2", "--format", "json"]
        _, first = run(argv, capsys)
        _, second = run(argv, capsys)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "twist.json"
        code, out = run(["expand", "--family", "1", "--order", "2",
                         "--format", "json", "--out", str(path)], capsys)
        assert code == 0 and out == ""
        data = json.loads(path.read_text())
        assert element_from_dict(data) == twists.twist("1", "twist", 2)

    def test_bad_form_for_family(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expand", "--family", "0", "--order", "1",
                      "--form", "product"])
        assert exc.value.code == 2

    def test_bad_rational(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expand", "--family", "L", "--order", "1",
                      "--u", "1/0"])
        assert exc.value.code == 2


class TestVerify:
    def test_single_check_passes(self, capsys):
        code, out = run(["verify", "--check", "cocycle", "--family", "L",
                         "--order", "0"], capsys)
        assert code == 0
        assert "cocycle" in out and "pass" in out

    def test_endpoints_report_cites_both_limits(self, capsys):
        code, out = run(["verify", "--check", "endpoints", "--family", "L",
                         "--order", "4"], capsys)
        assert code == 0
        assert "u=0: twist equals F0" in out
        assert "u=1: twist equals F1" in out

    def test_json_report(self, capsys):
        code, out = run(["verify", "--check", "normalization",
                         "--order", "2", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert all(r["status"] == "pass" for r in data["reports"])

    def test_requires_selection(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify"])
        assert exc.value.code == 2

    def test_failure_flips_exit_code(self, capsys, monkeypatch):
        failing = VerificationReport("cocycle", {}, False, {2: False},
                                     {"grade": 2})
        monkeypatch.setattr(cli.twists, "run_suite",
                            lambda **kw: [failing])
        code, out = run(["verify", "--all"], capsys)
        assert code == 1
        assert "FAIL" in out


class TestIdentities:
    def test_bigident(self, capsys):
        code, out = run(["identities", "--bigident", "--bound", "2"], capsys)
        assert code == 0

    def test_det_zero(self, capsys):
        code, out = run(["identities", "--det", "0"], capsys)
        assert code == 0 and out.strip() == "1"

    def test_det_one(self, capsys):
        code, out = run(["identities", "--det", "1"], capsys)
        assert code == 0 and out.strip() == "-1"

    def test_chain(self, capsys):
        code, out = run(["identities", "--chain", "L", "--bound", "2"],
                        capsys)
        assert code == 0

    def test_requires_selection(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["identities"])
        assert exc.value.code == 2


class TestSerialization:
    def test_round_trip_random_forms(self):
        for fam, direction in (("L", "twist"), ("R", "inverse"),
                               ("0", "inverse"), ("1", "twist")):
            e = twists.twist(fam, direction, 3)
            assert element_from_dict(element_to_dict(e)) == e
            eu = e.specialize_u(Fraction(2, 5))
            assert element_from_dict(element_to_dict(eu)) == eu

    def test_schema_version_checked(self):
        data = element_to_dict(twists.twist("0", "twist", 1))
        data["schema"] = 99
        with pytest.raises(ValueError):
            element_from_dict(data)

    def test_text_of_zero(self):
        from jortwist.borel import TensorElement
        assert element_to_text(TensorElement.zero(1, 2)) == "0"
