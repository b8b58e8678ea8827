import io
import json
import pathlib
import subprocess
import sys

import pytest

from shilov.cli import infer_variables, run

HERE = pathlib.Path(__file__).resolve().parent
GOLDEN = HERE / "golden"
FIXTURES = HERE / "fixtures"
CASES = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([a.replace("{fixtures}", str(FIXTURES)) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    return code, json.loads(out)


class TestExamples:
    def test_rees_json(self):
        code, rep = call_json("rees", "--ideal", "(x^2,y^3)", "--vars", "x,y")
        assert code == 0
        assert rep["results"] == {"rees_valuations": [{"weight": [3, 2], "normalizer": 6}]}
        assert set(rep) == {"subcommand", "inputs", "results", "provenance"}

    def test_samuel_text(self):
        assert call("samuel", "--ideal", "(x^2,y^3)", "--f", "x*y^2")[:2] == (0, "7/6\n")

    def test_closure(self):
        code, rep = call_json("closure", "--ideal", "(x^2,y^3)", "--f", "x*y^2")
        assert rep["results"]["closure"] == "(x^2, x*y^2, y^3)"
        assert rep["results"]["member"] is True

    def test_seminorm(self):
        code, rep = call_json("seminorm", "--omega", "x*y^2", "--f", "x*y", "--bound", "2")
        assert rep["results"]["spectral"] == {"log2_exponent": "1/2"}
        assert rep["results"]["bracket"]["m_star"] == 2

    def test_gauge(self):
        code, rep = call_json("gauge", "--omega", "x*y^2", "--f", "x*y")
        assert rep["results"]["gauge"] == {"log2_exponent": "1/2"}
        assert rep["results"]["certificate"] == {"n": 1, "m": 2}

    def test_star(self):
        code, rep = call_json("star", "--omega", "x*y", "--ideal", "w^-2 * (x^3, x*y)")
        assert rep["results"]["inverse"] == "w^1 * (y)"
        assert rep["results"]["v_closure"] == "w^-2 * (x)"

    def test_classify(self):
        code, rep = call_json("classify", "--omega", "x*y^2")
        assert code == 0 and rep["results"]["classification"] == "strongly"
        assert rep["results"]["cross_route_equal"] is True

    def test_valuative(self):
        assert call("valuative", "--oracle", "dvr")[0] == 0
        code, rep = call_json("valuative", "--oracle", "semigroup", "--generators", "2,3")
        assert code == 1 and rep["results"]["witness"] == {"f": "t^3", "n": 1}
        code, rep = call_json("valuative", "--oracle", "bivariate")
        assert code == 1 and rep["results"]["witness"] == {"f": "y", "n": 1}

    def test_boundary_check(self, tmp_path):
        assert call("boundary-check", "--omega", "x*y")[0] == 0
        spec = {"valuations": [{"weight": [1, 0], "normalizer": 1}], "corpus": ["y", "x"]}
        path = tmp_path / "s.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        code, rep = call_json("boundary-check", "--omega", "x*y", "--vars", "x,y", "--file", str(path))
        assert code == 1 and rep["results"]["witness"] == {"f": "x", "n": 1}

    def test_ext(self):
        code, rep = call_json("ext", "--relation", "y^2 - x", "--f", "y")
        assert code == 0 and rep["results"]["elements"][0]["spectral"] == {"log2_exponent": "1/2"}

    def test_ext_cusp_flagged(self, tmp_path):
        data = {"relation": "y^2 - x^3", "integrally_closed": False, "elements": ["y/x"]}
        path = tmp_path / "cusp.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        code, rep = call_json("ext", "--file", str(path))
        assert code == 1 and rep["results"]["elements"][0]["closedness_witness"] is True


class TestErrors:
    def test_parse_error_position(self):
        code, out, err = call("samuel", "--ideal", "(x^2, y^)", "--f", "x")
        assert code == 2 and out == "" and "position 8" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["rees"],
            ["nosuch"],
            ["verify", "--suite", "nosuch"],
            ["seminorm", "--omega", "x", "--f", "y^-1", "--vars", "x,y"],
            ["samuel", "--ideal", "(x)", "--f", "x", "--bound", "0"],
            ["valuative", "--oracle", "nosuch"],
        ],
    )
    def test_exit_two(self, argv):
        assert call(*argv)[0] == 2

    def test_infer_variables(self):
        assert infer_variables(["(y^2, x)", "z*x"]) == ["x", "y", "z"]
        assert infer_variables(["w^-1 * (x)"], reserved=["w"]) == ["x"]


class TestGolden:
    @pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
    def test_byte_identical(self, case):
        expected = (GOLDEN / f"{case['name']}.json").read_text(encoding="utf-8")
        for jobs in case.get("jobs", [None]):
            argv = list(case["argv"]) + ([] if jobs is None else ["--jobs", str(jobs)])
            for _ in range(2):
                code, out, _ = call(*argv)
                assert code == 0
                assert out == expected

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "shilov", "samuel", "--ideal", "(x^2,y^3)", "--f", "x*y^2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and proc.stdout == "7/6\n"
