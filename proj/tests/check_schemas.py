#!/usr/bin/env python3
"""Run the tool with --json and validate every document against schemas/."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

INVOCATIONS = [
    "gcd 136 6 --trace",
    "gcd 136 6 --literal",
    "coprime 17 3",
    "cf 17/3",
    "cf sqrt:7",
    "cf-reconstruct 5 1 2",
    "surd 2",
    "surd 13",
    "convergents sqrt:2 --max 5",
    "convergents 17/3",
    "triples --max 50",
    "descent 5 7",
    "descent --max 100",
    "pebble odd-square 5",
    "pebble even-square 6",
    "pebble sum-of-odds 4 11",
    "pi --doublings 4 --digits 6",
    "area 1 --doublings 4",
    "ratio-areas 3 5",
    "halving-check --doublings 10 --bits 128",
    "zeno --max 8",
    "ruler-product 3/2 4/3",
    "theodorus --max 8",
    "real add sqrt:2 1/3",
    "real mul pi 2",
    "real compare pi 22/7",
    "real compare 1/2 1/2",
    "real between sqrt:2 3/2",
    "real archimedean 2 7",
    "real sup 1/2 7/8 3/4",
    "laws all --max 50",
    "help",
]

ERRORS = ["surd 4", "cf 1/0", "frobnicate", "gcd 1"]


def main() -> int:
    tool, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.stem: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)
    failures = 0

    def check(line: str, schema_name: str, want_ok: bool) -> None:
        nonlocal failures
        proc = subprocess.run([tool, *line.split(), "--json"], capture_output=True, text=True)
        try:
            doc = json.loads(proc.stdout)
            if (proc.returncode == 0) != want_ok:
                raise ValueError(f"exit code {proc.returncode}")
            jsonschema.validate(doc, schemas[schema_name], cls=jsonschema.Draft202012Validator)
        except (ValueError, KeyError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {line}: {e}")
            return
        print(f"ok   {line}")

    seen = set()
    for line in INVOCATIONS:
        name = line.split()[0]
        seen.add(name)
        check(line, name, True)
    for line in ERRORS:
        check(line, "error", False)
    missing = set(schemas) - seen - {"error"}
    if missing:
        failures += 1
        print(f"FAIL schemas never exercised: {sorted(missing)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
