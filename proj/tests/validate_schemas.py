#!/usr/bin/env python3
"""Runs every CLI command with --json, validates the output against schemas/, and
checks that a second run is byte-identical.

usage: validate_schemas.py SKODA_BINARY SOURCE_DIR
"""
import json
import pathlib
import subprocess
import sys

import jsonschema

skoda, src = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in (src / "schemas").glob("*.schema.json")}
for s in schemas.values():
    jsonschema.Draft202012Validator.check_schema(s)

fx = src / "fixtures"
xy = ["--ring", str(fx / "rings/qxy.json")]
cone = ["--ring", str(fx / "rings/cone_xy_z2.json")]
runs = [
    ("gb", xy + ["gb", "x^2 - 1", "x*y - 1"], 0),
    ("gb", cone + ["gb", "x", "z"], 0),
    ("member", xy + ["member", "x*y", "x"], 0),
    ("icl", xy + ["icl", "--m", "2", "x^3*y", "x^2", "y^2"], 0),
    ("icl", xy + ["icl", "--m", "2", "x^3", "x^2", "y^2"], 0),
    ("icl", xy + ["icl", "--via", "x,y", "x*y", "x", "y"], 0),
    ("icl", xy + ["icl", "x*y + x^2", "x^2", "y^2"], 0),
    ("lcomplex", xy + ["lcomplex", "--k", "2", "x", "y"], 0),
    ("blowup", xy + ["blowup", "--center", "x^2,x*y,y^2", "--charts", "x,y", "--power", "2"], 0),
    ("bs-check", ["bs-check", str(fx / "instances/elliptic_cross_p1.json")], 0),
    ("verify-main", ["verify-main", str(fx / "instances/max_xy_k1.json")], 0),
    ("verify-main", ["verify-main", str(fx / "instances/cone_k1.json")], 0),
    ("bir-member", ["bir-member", str(fx / "instances/squares_xy_k1.json")], 0),
    ("bir-member", ["bir-member", "--elem", "x", str(fx / "instances/max_xy_k1.json")], 0),
    ("corpus", ["corpus", str(fx / "manifest.json")], 0),
    ("error", xy + ["gb", "x +* y"], 1),
    ("error", xy + ["--cap-degree", "1", "gb", "x^3 - y", "x*y^2 - 1"], 3),
]

failures = 0


def validate(name, doc, label):
    global failures
    try:
        jsonschema.validate(doc, schemas[name], cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
        return
    if name == "corpus":
        for r in doc["results"]:
            if "result" in r:
                validate(r["command"], r["result"], f"{label} / {r['file']} {r['command']}")


for name, args, code in runs:
    label = " ".join(args[-4:])
    first = subprocess.run([skoda, "--json", *args], capture_output=True)
    second = subprocess.run([skoda, "--json", *args], capture_output=True)
    if first.returncode != code:
        failures += 1
        print(f"FAIL {label}: exit {first.returncode}, expected {code}: {first.stderr.decode()}")
        continue
    if first.stdout != second.stdout:
        failures += 1
        print(f"FAIL {label}: output differs between runs")
    validate(name, json.loads(first.stdout), label)
    print(f"ok   {name}: {label}")

print(f"{len(runs) - failures}/{len(runs)} schema checks passed" if not failures else f"{failures} failures")
sys.exit(1 if failures else 0)
