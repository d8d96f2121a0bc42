"""Runs dpcalc subcommands with --format json and validates every document."""
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["normalize", "D*x - x*D"],
    ["--c", "2", "normalize", "1/2*D^2*e+"],
    ["act", "D", "--from", "-2", "--to", "6"],
    ["--c", "0", "--prime", "3", "act", "1/2*D*e+", "--to", "8"],
    ["divisor", "D*e+"],
    ["member", "1/2*x*D*e+"],
    ["member", "1/2*D*e-"],
    ["--max-degree", "3", "basis"],
    ["decompose", "x*D*e+ + 3*D*e- - c*x^2"],
    ["--max-degree", "5", "hilbert"],
    ["sl2", "--sigma-degree", "3"],
    ["--c", "1/2", "sl2", "--sigma-degree", "2"],
    ["abstract", "--c-values", "0,1/2", "--degree", "3", "--samples", "3"],
    ["verify", "--list"],
    ["verify", "--only", "op.hilbert", "--only", "sl2.casimir"],
    ["--c", "1", "--max-degree", "5", "lattice", "--sign", "-", "--degree", "-2"],
    ["--max-degree", "4", "lattice", "--degree", "1"],
]


def main() -> int:
    dpcalc, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    # The schema must reject a rational encoded as a JSON number.
    bad = {"command": "divisor", "config": {"mode": "symbolic", "max_degree": 12}, "result": 2}
    if validator.is_valid(bad):
        print("FAIL schema accepts a numeric divisor")
        failures += 1
    for args in INVOCATIONS:
        proc = subprocess.run([dpcalc, "--format", "json", *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {args}: {errors[0].message} at {list(errors[0].absolute_path)}")
            failures += 1
        else:
            print(f"ok   {args}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
