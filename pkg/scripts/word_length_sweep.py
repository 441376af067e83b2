"""Run the mapping-class and realization checks at increasing word lengths and
record timings.

    python scripts/word_length_sweep.py --max-len 5 --out sweep.json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from skeincoulomb.coulomb import check_main_theorem
from skeincoulomb.mcg import check_duality_diagram, check_involutions
from skeincoulomb.skein import all_words, check_symmetric_preservation


@dataclass
class SweepConfig:
    min_len: int = 2
    max_len: int = 4
    degree_bound: int = 6


@dataclass
class SweepRow:
    word_len: int
    n_words: int
    suite: str
    passed: bool
    n_checks: int
    seconds: float


def sweep(cfg: SweepConfig) -> list[SweepRow]:
    rows = []
    suites = {
        "symmetric": lambda n: check_symmetric_preservation(n, cfg.degree_bound),
        "involutions": check_involutions,
        "duality": check_duality_diagram,
        "realizations": check_main_theorem,
    }
    for n in range(cfg.min_len, cfg.max_len + 1):
        for name, fn in suites.items():
            t0 = time.perf_counter()
            report = fn(n)
            dt = time.perf_counter() - t0
            rows.append(SweepRow(n, len(all_words(n)), name, report.passed, len(report.checks), round(dt, 3)))
            print(f"len<={n:2d} {name:13s} {'PASS' if report.passed else 'FAIL'} {dt:8.3f}s")
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-len", type=int, default=2)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--out")
    args = p.parse_args()
    cfg = SweepConfig(args.min_len, args.max_len, args.degree_bound)
    rows = sweep(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, fh, indent=2)


if __name__ == "__main__":
    main()
