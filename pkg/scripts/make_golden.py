"""Regenerate golden/reports from golden/manifest.json.

Run from the repository root: python3 scripts/make_golden.py
"""

import json
import sys
from pathlib import Path

from valdelta.cli import build_parser, dumps, run

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "golden"


def argv_for(job: dict) -> list[str]:
    return [job["command"], "--input", str(GOLDEN / "inputs" / job["input"]), *job.get("args", [])]


def render(job: dict) -> tuple[int, str]:
    code, report = run(build_parser().parse_args(argv_for(job)))
    return code, dumps(report)


def main() -> int:
    jobs = json.loads((GOLDEN / "manifest.json").read_text())
    out = GOLDEN / "reports"
    out.mkdir(exist_ok=True)
    bad = 0
    for job in jobs:
        code, text = render(job)
        (out / f"{job['name']}.json").write_text(text)
        flag = "" if code == job["exit"] else f"  (expected exit {job['exit']})"
        bad += bool(flag)
        print(f"{job['name']}: exit {code}{flag}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
