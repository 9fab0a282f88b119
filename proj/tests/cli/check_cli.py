"""Runs the CLI example suite.

  check_cli.py schema <orbicalc> <repo-root>       exit codes and schema validation
  check_cli.py determinism <orbicalc> <repo-root>  two runs per example, byte comparison
"""

import json
import pathlib
import shlex
import subprocess
import sys

import jsonschema
import referencing


def examples(root):
    for line in (root / "tests/cli/examples.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code, *args = shlex.split(line)
        yield int(code), args


def run(binary, root, args):
    p = subprocess.run([binary, *args], cwd=root, capture_output=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def registry(root):
    resources = []
    for path in sorted((root / "schemas").glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    return referencing.Registry().with_resources(resources)


def check_schema(binary, root):
    reg = registry(root)
    error_schema = reg.contents("orbicalc/error/v1")
    failures = 0
    for code, args in examples(root):
        got, out, err = run(binary, root, args)
        label = " ".join(args)
        if got != code:
            print(f"FAIL exit {got} != {code}: {label}\n{err.decode()}")
            failures += 1
            continue
        try:
            if code == 1:
                jsonschema.validate(json.loads(err), error_schema)
            elif code == 0 and "--help" not in args and "--text" not in args:
                doc = json.loads(out)
                schema = reg.contents(doc["schema"])
                jsonschema.Draft202012Validator(schema, registry=reg).validate(doc)
        except (jsonschema.ValidationError, json.JSONDecodeError, KeyError, referencing.exceptions.Unresolvable) as e:
            print(f"FAIL schema: {label}\n{e}")
            failures += 1
            continue
        print(f"ok   {label}")
    return failures


def check_determinism(binary, root):
    failures = 0
    for _, args in examples(root):
        first, second = run(binary, root, args), run(binary, root, args)
        label = " ".join(args)
        if first != second:
            print(f"FAIL differs between runs: {label}")
            failures += 1
        else:
            print(f"ok   {label}")
    return failures


def main():
    mode, binary, root = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3])
    failures = {"schema": check_schema, "determinism": check_determinism}[mode](binary, root)
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
