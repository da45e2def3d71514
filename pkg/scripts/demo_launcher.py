#!/usr/bin/env python
"""
Demo launcher for ideallab.

This script reproduces the worked examples and runs the verification suite,
writing every report into an output directory.
"""

import argparse
from contextlib import redirect_stdout
from pathlib import Path

from app.config import validate_config
from app.main import main as ideallab

# Define project root
PROJECT_ROOT = Path(__file__).parent.parent

EXAMPLES = {
    "classify_z12.json": ["classify", "--ring", "Z", "--ideal", "(12)"],
    "classify_kxy.json": ["classify", "--ring", "kxy", "--ideal", "x^2,x*y"],
    "classify_z12_zero.json": ["classify", "--ring", "Z/12", "--ideal", "(0)"],
    "construct_xm.json": ["construct", "--kind", "xm", "--ring", "kxy", "--elem", "x"],
    "construct_pm.json": ["construct", "--kind", "pm", "--ring", "kxy", "--prime", "x,y"],
    "scan_int.csv": ["scan", "--family", "int", "--n-range", "2..30"],
    "scan_prod.csv": ["scan", "--family", "prod", "--left", "4", "--right", "9"],
}


def run(argv, target: Path) -> int:
    """Run one CLI command with stdout captured into ``target``."""
    with target.open("w", encoding="utf-8", newline="\n") as handle, redirect_stdout(handle):
        status = ideallab(argv)
    print(f"  {' '.join(argv)} -> {target.name} (exit {status})")
    return status


def run_examples(output: Path) -> int:
    print("\n🚀 Reproducing the worked examples...")
    return max(run(argv, output / name) for name, argv in EXAMPLES.items())


def run_verification(output: Path, max_n: int, threads: int) -> int:
    print("\n🚀 Running the theorem verifiers...")
    argv = ["verify", "--theorem", "all", "--threads", str(threads)]
    if max_n:
        argv += ["--max-n", str(max_n)]
    status = run(argv, output / "verify_all.json")
    if status == 1:
        print("\n❌ Violations found, see verify_all.json")
    return status


def main():
    """Parse arguments and run the selected tasks."""
    parser = argparse.ArgumentParser(description="Reproduce ideallab's examples and verification reports.")
    parser.add_argument(
        "--task",
        choices=["examples", "verify", "all"],
        default="all",
        help="What to run (default: all)",
    )
    parser.add_argument(
        "--output-dir",
        default=str(PROJECT_ROOT / "reports"),
        help="Directory receiving the reports (default: reports/)",
    )
    parser.add_argument("--max-n", type=int, default=0, help="Bound for Z/n and Z (default: settings)")
    parser.add_argument("--threads", type=int, default=1, help="Worker threads for the verifiers")

    args = parser.parse_args()
    if not validate_config():
        raise SystemExit(2)

    output = Path(args.output_dir)
    output.mkdir(parents=True, exist_ok=True)

    status = 0
    if args.task in ("examples", "all"):
        status = max(status, run_examples(output))
    if args.task in ("verify", "all"):
        status = max(status, run_verification(output, args.max_n, args.threads))
    raise SystemExit(status)


if __name__ == "__main__":
    main()
