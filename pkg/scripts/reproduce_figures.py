#!/usr/bin/env python3
"""Run the three shipped Kohn-kink sweep configs and write out/fig*.{csv,svg}.

Usage: python scripts/reproduce_figures.py [output-dir]
"""

import sys
from pathlib import Path

from qplasma.cli import main

ROOT = Path(__file__).resolve().parent.parent


def run(out_dir: str | None = None) -> int:
    for cfg in sorted((ROOT / "configs").glob("fig*.cfg")):
        argv = ["sweep", "--config", str(cfg)]
        if out_dir:
            argv += ["--output", str(Path(out_dir) / cfg.stem)]
        rc = main(argv)
        if rc != 0:
            print(f"{cfg.name} failed with exit code {rc}", file=sys.stderr)
            return rc
    return 0


if __name__ == "__main__":
    raise SystemExit(run(sys.argv[1] if len(sys.argv) > 1 else None))
