"""Golden-file, schema, determinism and exit-code checks for the koszulcheck CLI."""
import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"
SCHEMAS = ROOT / "docs" / "schemas"
SEED = 20260101

CASES = [
    ("check-presentation", "symmetric3", ["check-presentation", "{f}/symmetric3.json", "--cutoff", "5"]),
    ("check-presentation", "genus5_seed17", ["check-presentation", "{f}/genus5_seed17.json"]),
    ("check-presentation", "cubic", ["check-presentation", "{f}/cubic.json"]),
    ("check-presentation", "non_koszul_seed11", ["check-presentation", "{f}/non_koszul_seed11.json"]),
    ("check-presentation", "exterior3", ["check-presentation", "{f}/exterior3.json"]),
    ("points", "four_general_points", ["points", "{f}/four_general_points.json"]),
    ("points", "collinear", ["points", "{f}/collinear.json"]),
    ("points", "five_points_p2", ["points", "{f}/five_points_p2.json"]),
    ("points", "three_points_p1", ["points", "{f}/three_points_p1.json"]),
    ("theorem4", "d3_e2", ["theorem4", "--d", "3", "--e", "2"]),
    ("theorem4", "d2_e1", ["theorem4", "--d", "2", "--e", "1"]),
    ("theorem4", "degenerate_pencil", ["theorem4", "--pencil", "{f}/degenerate_pencil.json"]),
    ("regularity", "d2_m3", ["regularity", "--d", "2", "--m", "3"]),
    ("regularity", "d2_m0", ["regularity", "--d", "2", "--m", "0"]),
    ("regularity", "d3_m2", ["regularity", "--d", "3", "--m", "2"]),
    ("strata", "gh2-3_i4", ["strata", "--gh-min", "2", "--gh-max", "3", "--i-max", "4"]),
]

# (description, arguments, expected exit code, substring expected on stderr)
ERROR_CASES = [
    ("missing file", ["points", "{tmp}/absent.json"], 2, "absent.json"),
    ("malformed JSON", ["check-presentation", "{tmp}/broken.json"], 2, "broken.json:3:"),
    ("characteristic two", ["check-presentation", "{f}/symmetric3.json", "--field", "prime:2"], 2, "2"),
    ("unknown generator", ["check-presentation", "{tmp}/unknown_generator.json"], 2, "unknown generator"),
    ("duplicate point", ["points", "{tmp}/duplicate_point.json"], 2, ""),
    ("invalid (d, e)", ["theorem4", "--d", "3", "--e", "3"], 2, ""),
    ("unknown flag", ["strata", "--no-such-flag"], 2, ""),
    ("cutoff below two", ["strata", "--cutoff", "1"], 2, "cutoff"),
]


def run(binary, args, tmp):
    argv = [binary] + [a.format(f=FIXTURES, tmp=tmp) for a in args] + ["--seed", str(SEED)]
    return subprocess.run(argv, capture_output=True, text=True)


def strip_wall_time(text):
    report = json.loads(text)
    report.pop("wall_time_seconds", None)
    return report


def canonical(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_error_inputs(tmp):
    (tmp / "broken.json").write_text('{\n  "generators": ["x"],\n  "commutative": true,,\n}\n')
    (tmp / "unknown_generator.json").write_text(json.dumps({
        "generators": ["x", "y"], "commutative": True,
        "relations": [[{"monomial": ["x", "q"], "coefficient": 1}]]}))
    (tmp / "duplicate_point.json").write_text(json.dumps({
        "ambient_dim": 1, "points": [[1, 2], [2, 4]]}))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("--update", action="store_true", help="rewrite the golden files")
    opts = parser.parse_args()

    report_schema = json.loads((SCHEMAS / "report.schema.json").read_text())
    failures = []

    input_schemas = {
        "presentation": json.loads((SCHEMAS / "presentation.schema.json").read_text()),
        "points": json.loads((SCHEMAS / "points.schema.json").read_text()),
        "pencil": json.loads((SCHEMAS / "pencil.schema.json").read_text()),
    }
    for path in sorted(FIXTURES.glob("*.json")):
        doc = json.loads(path.read_text())
        kind = "pencil" if "second_form" in doc else "points" if "points" in doc else "presentation"
        try:
            jsonschema.validate(doc, input_schemas[kind])
        except jsonschema.ValidationError as e:
            failures.append(f"fixture {path.name} violates the {kind} schema: {e.message}")

    with tempfile.TemporaryDirectory() as tmpdir:
        tmp = pathlib.Path(tmpdir)
        write_error_inputs(tmp)

        for command, fixture, args in CASES:
            label = f"{command}_{fixture}_seed{SEED}"
            first = run(opts.binary, args, tmp)
            if first.returncode != 0:
                failures.append(f"{label}: exit {first.returncode}: {first.stderr.strip()}")
                continue
            report = strip_wall_time(first.stdout)
            second = strip_wall_time(run(opts.binary, args, tmp).stdout)
            if canonical(report) != canonical(second):
                failures.append(f"{label}: reports differ between identical runs")
            try:
                jsonschema.validate(report, report_schema)
            except jsonschema.ValidationError as e:
                failures.append(f"{label}: report violates schema: {e.message}")
            if report["config"]["seed"] != SEED:
                failures.append(f"{label}: seed not echoed verbatim")
            golden = GOLDEN / f"{label}.json"
            if opts.update:
                golden.write_text(canonical(report))
            elif not golden.exists():
                failures.append(f"{label}: missing golden {golden.name}")
            elif golden.read_text() != canonical(report):
                failures.append(f"{label}: differs from {golden.name}")

            text = run(opts.binary, args + ["--format", "text"], tmp)
            if text.returncode != 0 or report["command"] not in text.stdout:
                failures.append(f"{label}: text rendering failed")

        for description, args, code, needle in ERROR_CASES:
            r = run(opts.binary, args, tmp)
            if r.returncode != code:
                failures.append(f"{description}: exit {r.returncode}, expected {code}")
            elif needle and needle not in r.stderr:
                failures.append(f"{description}: stderr lacks '{needle}': {r.stderr.strip()}")

        out_file = tmp / "report.json"
        r = run(opts.binary, ["regularity", "--output", str(out_file)], tmp)
        if r.returncode != 0 or r.stdout or not out_file.exists():
            failures.append("--output did not write the report file")

    for f in failures:
        print("FAIL", f)
    print(f"{len(CASES)} golden cases, {len(ERROR_CASES)} error cases, {len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
