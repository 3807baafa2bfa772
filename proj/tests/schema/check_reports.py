"""Runs a set of CLI invocations with --json and validates each report."""

import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["ns", "6,9,20", "--element", "60", "--factorizations"],
    ["affine", "(4,0,0);(7,0,0);(0,3,0);(0,1,1);(0,0,3)", "--element", "(28,3,3)"],
    ["block", "Z5", "--restrict", "(1);(4)", "--element", "(1)^5(4)^5"],
    ["mabc", "1,3,1/2,3", "--i", "3", "--t", "2"],
    ["chain", "4"],
    ["infdelta", "3"],
    ["puiseux", "4/3,8/5,800/1201", "--element", "8"],
    ["puiseux", "--noasym", "1", "--n", "99,100"],
    ["asym", "ns", "6,9,20", "--element", "60", "--n", "4", "--tame"],
    ["search", "ns", "6,9,20", "--bound", "100", "--timing"],
    ["betti", "ns", "20,28,42,73", "--bound", "300"],
    ["catenary", "ns", "6,9,20", "--element", "60", "--tame-wrt", "(0,0,1)"],
    ["search", "sum", "ns:4,7|ns:6,9,20", "--bound", "60"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in INVOCATIONS:
        proc = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print("exit", proc.returncode, args, proc.stderr)
            failures += 1
            continue
        report = json.loads(proc.stdout)
        errors = list(validator.iter_errors(report))
        for e in errors:
            print(args, e.message)
        failures += bool(errors)
        if report["argv"] != [*args, "--json"]:
            print("argv mismatch", args)
            failures += 1
    print(f"{len(INVOCATIONS) - failures}/{len(INVOCATIONS)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
