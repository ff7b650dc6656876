# Copyright 2026 The convpde Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the convpde binary over a command corpus.

Checks exit codes, byte-identical reruns, and validates every JSON document
against docs/schema.
"""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing

# (argv, expected exit code); paths are relative to the source root.
CORPUS = [
    (["convolve", "x^3", "x^2*y^3", "--axis", "x"], 0),
    (["convolve", "x^5*t^2", "x^4*t^3", "x^2*t^7", "--axis", "xy", "--vars", "x t"], 0),
    (["convolve", "y^7", "x^3*y^4", "--axis", "y"], 0),
    (["convolve", "x^", "y", "--axis", "x"], 1),
    (["convolve", "x", "--axis", "x"], 1),
    (["classify", "--pde", "examples_pde/elliptic.pde", "--kernel", "x^3", "--axis", "x"], 0),
    (["classify", "--pde", "examples_pde/elliptic.pde", "--kernel", "y^7", "--axis", "y"], 0),
    (["classify", "--pde", "examples_pde/wave1.pde", "--kernel", "x^5*t^2",
      "--kernel", "x^4*t^3"], 0),
    (["classify", "--pde", "examples_pde/wave2.pde", "--kernel", "x*t^9",
      "--kernel", "x^5*t^3"], 0),
    (["classify", "--pde", "examples_pde/lower_order.pde", "--kernel", "x + y"], 0),
    (["classify", "--pde", "examples_pde/lower_order.pde"], 0),
    (["classify", "--pde", "examples_pde/elliptic.pde", "--kernel", "0"], 2),
    (["classify", "--pde", "examples_pde/no_principal.pde"], 1),
    (["classify", "--pde", "examples_pde/missing.pde"], 1),
    (["repro"], 0),
    (["fuzz", "--family", "wave", "--trials", "50"], 0),
    (["fuzz", "--family", "general", "--trials", "40", "--seed", "7"], 0),
    (["fuzz", "--family", "general", "--trials", "20", "--axis", "x", "--max-degree", "3"], 0),
    (["fuzz", "--trials", "0"], 1),
    (["fuzz", "--max-degree", "13"], 1),
]


def run(binary, argv, root):
    return subprocess.run([binary, *argv], cwd=root, capture_output=True, check=False)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("root")
    args = parser.parse_args()
    root = pathlib.Path(args.root)
    schema_dir = root / "docs" / "schema"

    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    registry = referencing.Registry().with_resources(resources)

    failures = 0
    for argv, want in CORPUS:
        status = []
        for fmt in ("text", "json"):
            full = [*argv, "--format", fmt]
            first = run(args.binary, full, root)
            second = run(args.binary, full, root)
            if first.returncode != want:
                status.append(f"{fmt}: exit {first.returncode}, want {want}")
            if first.stdout != second.stdout or first.returncode != second.returncode:
                status.append(f"{fmt}: rerun differs")
            if fmt == "json" and want in (0, 2):
                try:
                    doc = json.loads(first.stdout)
                    schema = registry.contents(f"{argv[0]}.schema.json")
                    jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)
                except (json.JSONDecodeError, jsonschema.ValidationError) as e:
                    status.append(f"json: {str(e).splitlines()[0]}")
        failures += bool(status)
        print(("FAIL " if status else "ok   ") + " ".join(argv), *status, sep="\n  " if status else "")
    print(f"{len(CORPUS) - failures}/{len(CORPUS)} commands ok")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
