#!/usr/bin/env python3
"""Validate every JSON document the CLI can emit against its schema.

Usage: validate_schemas.py <path-to-cli> <schemas-dir>
"""

import json
import os
import subprocess
import sys

try:
    from jsonschema import Draft7Validator
except ImportError:
    print("jsonschema package not available; skipping schema validation")
    sys.exit(0)


def run(cli, args, stdin_text=None):
    proc = subprocess.run(
        [cli] + args, input=stdin_text, capture_output=True, text=True
    )
    if proc.returncode != 0:
        print(f"command exited {proc.returncode}: {' '.join(args)}")
        print(proc.stderr, end="")
        sys.exit(1)
    return proc.stdout


def main():
    if len(sys.argv) != 3:
        print("usage: validate_schemas.py <cli> <schemas-dir>")
        return 2
    cli, schemas_dir = sys.argv[1], sys.argv[2]

    tree_hgr = "3 5 2\n1 2 3\n3 4 5\n"
    path3_hgr = "3 7 3\n1 2 3\n3 4 5\n5 6 7\n"
    move_doc = '{"moves":[{"edge":2,"from":5,"to":3}]}'

    cases = [
        ("hypergraph.schema.json",
         run(cli, ["gen", "--family", "HYPERSTAR", "--k", "3", "--m", "3",
                   "--format", "json"])),
        ("hypergraph.schema.json",
         run(cli, ["gen", "--family", "CHEM_TSTAR", "--k", "3", "--m", "5",
                   "--format", "json"])),
        ("entropy_report.schema.json",
         run(cli, ["info", "-"], stdin_text=tree_hgr)),
        ("bounds.schema.json",
         run(cli, ["bounds", "--class", "HYPERTREE", "--k", "3", "--m", "3"])),
        ("bounds.schema.json",
         run(cli, ["bounds", "--class", "BICYCLIC", "--k", "3", "--m", "4"])),
        ("bounds.schema.json",
         run(cli, ["bounds", "--class", "CHEMICAL", "--k", "3", "--m", "5"])),
        ("enumeration.schema.json",
         run(cli, ["enum", "--k", "3", "--m", "3", "--format", "json"])),
        ("enumeration.schema.json",
         run(cli, ["enum", "--k", "3", "--m", "2", "--format", "json",
                   "--convention", "multiplicity"])),
        ("enumeration.schema.json",
         run(cli, ["enum", "--k", "3", "--m", "3", "--class", "1",
                   "--format", "json", "--convention", "binary"])),
        ("verification.schema.json",
         run(cli, ["verify", "--theorem", "T3.1", "--k", "3", "--m", "3"])),
        ("verification.schema.json",
         run(cli, ["verify", "--theorem", "T3.2", "--k", "3", "--m", "3"])),
        ("verification.schema.json",
         run(cli, ["verify", "--theorem", "T3.4", "--k", "3", "--m", "4"])),
        ("verification.schema.json",
         run(cli, ["verify", "--theorem", "T3.6", "--k", "3", "--m", "5"])),
        ("move_result.schema.json",
         run(cli, ["move", "-", "--moves", move_doc, "--format", "json"],
             stdin_text=path3_hgr)),
        ("edge_move.schema.json", move_doc),
    ]

    validators = {}
    failures = 0
    for schema_name, text in cases:
        if schema_name not in validators:
            with open(os.path.join(schemas_dir, schema_name)) as fh:
                validators[schema_name] = Draft7Validator(json.load(fh))
        doc = json.loads(text)
        errors = sorted(validators[schema_name].iter_errors(doc), key=str)
        if errors:
            failures += 1
            print(f"FAIL {schema_name}: {errors[0].message}")
        else:
            print(f"ok   {schema_name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
