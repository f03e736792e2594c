"""Runs every nkt command with --format json and validates the output against the schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

COMMANDS = [
    ["presets-list"],
    ["presets-list", "--as-printed"],
    ["model-audit", "{models}/nk_half.model"],
    ["model-audit", "{models}/broken_phi.model"],
    ["model-audit", "{models}/heisenberg5.model"],
    ["model-build", "--lambda", "1/2"],
    ["model-build", "--lambda", "0", "--audit"],
    ["classify", "--preset", "W7", "--condition", "flat"],
    ["classify", "--preset", "C", "--condition", "flat"],
    ["classify", "--preset", "C_star", "--condition", "quasi-flat", "--substitute-r"],
    ["classify", "--preset", "V", "--condition", "xi-flat"],
    ["classify", "--preset", "W1", "--condition", "t-dot-s", "--substitute-r"],
    ["residual", "--lambda", "1/2", "--preset", "W7", "--condition", "xi-flat"],
    ["residual", "--model", "{models}/nk_half.model", "--preset", "W1", "--condition", "t-dot-r",
     "--variant", "standard"],
    ["residual", "--lambda", "0", "--preset", "P_star", "--condition", "t-dot-s", "--a0", "1", "--a1", "2"],
    ["example1", "--n", "4", "--sign", "-"],
    ["example1", "--n", "2", "--sign", "+"],
    ["deform", "--kappa", "0", "--mu", "0", "--a", "2", "--c", "1"],
    ["deform", "--kappa", "3/4", "--mu", "0", "--a", "2", "--standard"],
] + [["table", str(n)] for n in range(2, 8)]


def main() -> int:
    nkt, schema_path, models = sys.argv[1], Path(sys.argv[2]), sys.argv[3]
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        argv = [nkt] + [a.format(models=models) for a in args] + ["--format", "json"]
        proc = subprocess.run(argv, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
