"""Run the CLI with --json over a spread of commands and validate every report."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ("domain --type I --r 2 --s 3", 0),
    ("domain --type VI", 0),
    ("domain --a 2 --b 1 --r 2", 0),
    ("domain --type II --n 3", 2),
    ("classify --type I --r 1 --s 1 --alpha 1 --gamma 0", 0),
    ("classify --type I --r 2 --s 2 --alpha 1", 0),
    ("classify --type III --r 3 --alpha -2", 0),
    ("classify --type V --alpha 0.25 --szego", 0),
    ("classify --type I --r 1 --s 1 --alpha 1 --gamma -1", 2),
    ("classify --alpha 1", 1),
    ("spectrum --type I --r 2 --s 2 --alpha 1/2 --max-weight 3", 0),
    ("spectrum --type I --r 1 --s 1 --alpha 0 --max-weight 3", 0),
    ("schatten --type I --r 1 --s 1 --alpha 1 --p 2", 0),
    ("schatten --type IV --s 4 --alpha 1/2 --p 3/2", 0),
    ("trace --type I --r 2 --s 2 --alpha 1/2 --gamma 0 --method all", 0),
    ("trace --type I --r 1 --s 1 --alpha 1/2 --method closed", 0),
    ("trace --type I --r 1 --s 1 --alpha -1 --szego --method all", 0),
    ("trace --type I --r 1 --s 1 --alpha 3/2", 2),
    ("hs --type I --r 1 --s 1 --alpha 1", 0),
    ("hs --type I --r 1 --s 1 --alpha 3/2", 0),
    ("berezin --type I --r 1 --s 1 --alpha 1 --p 1", 0),
    ("berezin --type V --alpha 0.25 --szego --p 3", 0),
    ("jintegral --type I --r 1 --s 1 --beta 1.1 --gamma 0", 0),
    ("jintegral --type I --r 1 --s 1 --beta 0", 0),
    ("quad --type I --r 2 --s 2 --t 1", 0),
    ("quad --type III --r 2 --alpha 1/2", 0),
    ("quad --type I --r 1 --s 1 --t -1", 2),
    ("mc --type I --r 1 --s 1 --alpha 1/2 --samples 20000 --seed 5", 0),
    ("mc --type I --r 2 --s 2 --alpha 2", 2),
    ("table --gamma 0", 0),
    ("table --gamma 1/2", 0),
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for line, code in CASES:
        proc = subprocess.run([binary, *line.split(), "--json"], capture_output=True, text=True)
        problems = []
        if proc.returncode != code:
            problems.append(f"exit {proc.returncode}, expected {code}")
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            problems.append(f"invalid JSON: {e}")
        else:
            problems += [err.message for err in validator.iter_errors(report)]
            if code != 0 and "error" not in report:
                problems.append("missing error object")
        status = "ok  " if not problems else "FAIL"
        print(f"{status} {line}")
        for p in problems:
            print(f"     {p}")
        failures += bool(problems)
    print(f"{len(CASES) - failures} of {len(CASES)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
