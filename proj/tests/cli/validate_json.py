"""Validates --json reports from the permcover tool against the schema."""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed")
    sys.exit(77)

COMMANDS = [
    (["radius", "--family", "gn", "--n", "7"], 0),
    (["radius", "--family", "gn", "--n", "12", "--h", "(1,2)"], 0),
    (["radius", "--family", "dn", "--n", "6", "--oracle"], 0),
    (["radius", "--family", "composed", "--n", "7", "--m", "5", "--substitute-tail"], 0),
    (["cover", "--family", "gn", "--f", "[3,1,2,5,4,7,6]"], 0),
    (["cover", "--family", "gn", "--n", "500", "--random-trials", "50", "--seed", "3"], 0),
    (["scan", "--n", "5"], 0),
    (["table", "--which", "radii", "--n-range", "3:8"], 0),
    (["table", "--which", "bounds", "--n-range", "4:9"], 0),
    (["table", "--which", "balls", "--n-range", "1:6"], 0),
    (["table", "--which", "table1"], 0),
]


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in COMMANDS:
        proc = subprocess.run([tool, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {label}: {e.message} at {list(e.path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
