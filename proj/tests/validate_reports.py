# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the hlab tool on the sample data and validates every JSON report
against its schema in docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

# (schema, arguments, expected exit code)
CASES = [
    ("matroid", ["matroid", "--input", "data/p3.fam"], 1),
    ("matroid", ["matroid", "--input", "data/u24.fam"], 0),
    ("greedy", ["greedy", "--input", "data/p3.fam", "--weights", "2,3,2"], 1),
    ("greedy", ["greedy", "--input", "data/ab_c.fam", "--weights", "2,2,3"], 1),
    ("greedy", ["greedy", "--input", "data/u24.fam", "--weights", "4,1,3,2"], 0),
    ("figure1", ["figure1"], 0),
    ("mvdccp", ["mvdccp", "--input", "data/figure1.gr"], 0),
    ("mvdccp", ["mvdccp", "--input", "data/two_triangles.gr"], 0),
    ("mvdccp", ["mvdccp", "--input", "data/p3.gr"], 1),
    ("classify", ["classify", "--problem", "misp", "--sizes", "4..12"], 0),
    ("classify", ["classify", "--problem", "hcp", "--sizes", "5..8", "--instances", "3"], 0),
    ("classify", ["classify", "--problem", "sat", "--sizes", "4..8", "--instances", "3"], 0),
    ("trace", ["trace", "--problem", "hcp", "--input", "data/figure1.gr", "--format", "json"], 0),
    ("trace", ["trace", "--problem", "sat", "--input", "data/small.cnf", "--format", "json"], 0),
    ("trace", ["trace", "--problem", "family", "--input", "data/p3.fam", "--format", "json",
               "--policy", "given", "--order", "2"], 0),
    ("verdicts", ["verdicts"], 0),
    ("verdicts", ["verdicts", "--misp", "data/two_triangles.gr", "--hcp", "data/p3.gr",
                  "--sat", "data/small.cnf"], 0),
]


def main() -> int:
    binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    failures = 0
    for name, args, expected in CASES:
        if name not in schemas:
            schemas[name] = json.loads((root / "docs" / "schemas" / f"{name}.schema.json").read_text())
        proc = subprocess.run([binary, *args], cwd=root, capture_output=True, text=True, check=False)
        label = " ".join(args)
        try:
            if proc.returncode != expected:
                raise AssertionError(f"exit {proc.returncode}, expected {expected}: {proc.stderr.strip()}")
            jsonschema.validate(json.loads(proc.stdout), schemas[name])
            print(f"ok   {label}")
        except (AssertionError, json.JSONDecodeError, jsonschema.ValidationError) as err:
            failures += 1
            print(f"FAIL {label}: {str(err).splitlines()[0]}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
