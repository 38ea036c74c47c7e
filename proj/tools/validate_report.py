#!/usr/bin/env python3
"""Validate pseudolin JSON reports against the shipped schema.

    validate_report.py SCHEMA REPORT...
    validate_report.py --same A B      (equal apart from wall_ms)
"""
import json
import sys

import jsonschema


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def strip_timing(doc):
    doc.pop("wall_ms", None)
    return doc


def consistent(report):
    """Order and degree fields agree with the coefficient payload."""
    op = report.get("operator")
    if op is None:
        return True
    coeffs = op["coeffs"]
    if op["order"] != len(coeffs) - 1:
        return False
    degree = max((len(c) - 1 for c in coeffs if c), default=None)
    return op["degree"] == degree


def main(argv):
    if len(argv) == 3 and argv[0] == "--same":
        same = strip_timing(load(argv[1])) == strip_timing(load(argv[2]))
        print("identical" if same else "reports differ")
        return 0 if same else 1
    if len(argv) < 2:
        print(__doc__, file=sys.stderr)
        return 2
    schema = load(argv[0])
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for path in argv[1:]:
        report = load(path)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        for e in errors:
            print(f"{path}: {'/'.join(map(str, e.path))}: {e.message}")
        if not consistent(report):
            print(f"{path}: operator order/degree disagree with coeffs")
            bad += 1
        bad += len(errors)
        if not errors:
            print(f"{path}: ok")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
