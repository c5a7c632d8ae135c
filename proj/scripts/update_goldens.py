#!/usr/bin/env python3
"""Regenerate the golden CLI outputs under tests/golden/ from cases.tsv.

Run after any deliberate CLI output change, then review the diff before
committing:

    python3 scripts/update_goldens.py build/tools/propq
"""

import pathlib
import subprocess
import sys


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 2
    cli = pathlib.Path(sys.argv[1]).resolve()
    golden = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

    for line in (golden / "cases.tsv").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        case_id, expected_exit, args = fields[0], int(fields[1]), fields[2:]
        args = [a.replace("{DIR}", str(golden)) for a in args]
        proc = subprocess.run([str(cli), *args], capture_output=True, text=True)
        if proc.returncode != expected_exit:
            print(f"{case_id}: exit {proc.returncode}, manifest says {expected_exit}",
                  file=sys.stderr)
            return 1
        (golden / f"{case_id}.out").write_text(proc.stdout)
        print(f"{case_id}: {len(proc.stdout)} bytes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
