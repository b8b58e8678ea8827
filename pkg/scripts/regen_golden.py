"""Rewrite the golden CLI reports in tests/golden from tests/golden/cases.json."""
import io
import json
import pathlib

from shilov.cli import run

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
FIXTURES = ROOT / "tests" / "fixtures"


def render(argv):
    argv = [a.replace("{fixtures}", str(FIXTURES)) for a in argv]
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def main():
    cases = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))
    for case in cases:
        code, text = render(case["argv"])
        if code != 0:
            raise SystemExit(f"{case['name']}: exit code {code}")
        (GOLDEN / f"{case['name']}.json").write_text(text, encoding="utf-8")
        print(f"wrote {case['name']}.json ({len(text)} bytes)")


if __name__ == "__main__":
    main()
