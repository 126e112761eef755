#!/usr/bin/env python3
"""Validate CLI JSON output against the schemas in docs/.

Usage: validate_json.py <minorkit-binary> <docs-dir>
Exit 0 if every sampled document validates.
"""
import json
import pathlib
import subprocess
import sys

try:
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def load(docs, name):
    return json.loads((docs / name).read_text())


def main():
    binary, docs = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {
        name: load(docs, name)
        for name in (
            "growth-report.schema.json",
            "claim-result.schema.json",
            "embedding.schema.json",
        )
    }
    registry = Registry().with_resources(
        (schema["$id"].rsplit("/", 1)[-1], Resource.from_contents(schema))
        for schema in schemas.values()
    )

    def check(schema_name, doc, label):
        validator = Draft202012Validator(schemas[schema_name], registry=registry)
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"{label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        return not errors

    def run(*args, expect=(0,)):
        p = subprocess.run([binary, *args], capture_output=True, text=True)
        if p.returncode not in expect:
            print(f"{' '.join(args)}: exit {p.returncode}\n{p.stderr}")
            sys.exit(1)
        return json.loads(p.stdout)

    ok = True
    grow = run("grow", "--seed", "wagner", "--filter", "v8e-minor-free",
               "--max-vertices", "9", "--max-edges", "14", "--stages", "1")
    ok &= check("growth-report.schema.json", grow, "grow report")

    multi = run("grow", "--seed", "c2:6", "--filter", "always",
                "--max-vertices", "7", "--max-edges", "15", "--stages", "1")
    ok &= check("growth-report.schema.json", multi, "unfiltered grow report")

    for target, codes in (("gamma", (0,)), ("forbidden", (0,)), ("thm1.1", (0,)),
                          ("lemma2.1", (0, 1)), ("lemma4.2", (0, 1))):
        claims = run("verify", target, expect=codes)
        ok &= check("claim-result.schema.json", claims, f"verify {target}")

    p = subprocess.run([binary, "minor", "--host", "petersen", "--pattern", "k33",
                        "--witness"], capture_output=True, text=True)
    emb = json.loads(p.stdout[p.stdout.index("{"):])
    ok &= check("embedding.schema.json", emb, "minor witness")

    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
