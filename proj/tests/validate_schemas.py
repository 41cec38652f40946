"""Runs the CLI in every JSON mode and validates the output against docs/schemas."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    ("pascal_matrix", ["gen", "9", "--format", "json"]),
    ("pascal_matrix", ["gen", "1", "--format", "json"]),
    ("property_reports", ["props", "--range", "3..20", "--format", "json"]),
    ("dnp_reports", ["dnp", "--range", "3..70", "--format", "json"]),
    ("dnp_reports", ["table1", "--format", "json"]),
    ("resilience_reports", ["resilience", "--range", "9..12", "--failures", "2",
                            "--trials", "5", "--seed", "1", "--format", "json"]),
    ("resilience_reports", ["resilience", "10", "--fail-set", "1,9", "--format", "json"]),
    ("resilience_reports", ["resilience", "4", "--failures", "3", "--format", "json"]),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schemas", required=True, type=pathlib.Path)
    args = parser.parse_args()

    def schema(name):
        return json.loads((args.schemas / f"{name}.schema.json").read_text())

    failures = 0
    for name, argv in CASES:
        proc = subprocess.run([args.cli, *argv], capture_output=True, text=True)
        try:
            if proc.returncode != 0:
                raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schema(name))
            print(f"ok    {name:20} {' '.join(argv)}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL  {name:20} {' '.join(argv)}: {exc}")

    scenario = {"n": 17, "failures": 2, "trials": 3, "seed": 4, "forced_failed": [1]}
    jsonschema.validate(scenario, schema("failure_scenario"))
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(scenario, f)
    proc = subprocess.run([args.cli, "resilience", "--config", f.name, "--format", "json"],
                          capture_output=True, text=True)
    pathlib.Path(f.name).unlink()
    try:
        jsonschema.validate(json.loads(proc.stdout), schema("resilience_reports"))
        print("ok    failure_scenario     --config round trip")
    except Exception as exc:  # noqa: BLE001
        failures += 1
        print(f"FAIL  failure_scenario     --config round trip: {exc}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
