"""Runs the CLI and checks every JSON document against the schemas."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

binary, schema_dir = sys.argv[1], Path(sys.argv[2])

schemas = {}
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    schemas[path.name.split(".")[0]] = jsonschema.Draft202012Validator(doc)

# (schema, expected exit code, args)
runs = [
    ("count", 0, ["count", "--piece", "queen", "--q", "2", "--n", "1:6"]),
    ("count", 0, ["count", "--moves", "1,2;3,1", "--board", "rect:2,1", "--q", "3",
                  "--n", "1:3", "--method", "reconstruction"]),
    ("quasipolynomial", 0, ["fit", "--piece", "nightrider", "--q", "2", "--n", "1:14"]),
    ("quasipolynomial", 0, ["fit", "--piece", "bishop", "--q", "3", "--n", "1:20",
                            "--labelled", "--period", "2"]),
    ("types", 0, ["types", "--piece", "queen", "--q", "2", "--n", "1:12"]),
    ("semilattice", 0, ["mobius", "--piece", "semiqueen", "--q", "3"]),
    ("bounds", 0, ["bounds", "--piece", "bishop", "--q", "3", "--observe-period",
                   "--n", "1:20"]),
    ("bounds", 0, ["bounds", "--piece", "queen", "--q", "4", "--denominator-budget", "100"]),
    ("bounds", 0, ["bounds", "--piece", "rook", "--board", "poly:-1,0,0;0,-1,0;2,1,1",
                   "--q", "2"]),
    ("verify", 0, ["verify", "--only", "1,3", "--format", "json"]),
    ("error", 2, ["--json-errors", "count", "--moves", "2,2"]),
    ("error", 3, ["--json-errors", "count", "--q", "3", "--n", "1:40", "--budget", "1000"]),
    ("error", 1, ["--json-errors", "fit", "--piece", "nightrider", "--q", "2", "--n", "1:14",
                  "--period", "1"]),
]

failures = 0
seen = set()
for name, code, args in runs:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != code:
        print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
        failures += 1
        continue
    errors = list(schemas[name].iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
    failures += bool(errors)
    seen.add(name)
    if not errors:
        print(f"ok   {name}: {label}")

missing = set(schemas) - seen
if missing:
    print("FAIL schemas never exercised:", sorted(missing))
    failures += 1

# the schemas must reject obviously wrong documents
bad = {
    "count": {"piece": "queen", "board": "square", "q": 2, "method": "brute_force",
              "rows": [{"n": 1, "labelled": 3, "unlabelled": "1"}]},
    "error": {"error": {"exit_code": 0, "kind": "usage", "message": "", "n": None}},
    "bounds": {"piece": "rook"},
}
for name, doc in bad.items():
    if schemas[name].is_valid(doc):
        print(f"FAIL {name} schema accepts a malformed document")
        failures += 1

sys.exit(1 if failures else 0)
