"""Tabulate the q = 1 symbols of a, b, c and the Fricke cubic residual.

    python scripts/classical_limit_table.py --t 4 --x 2 3 -1/2
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from skeincoulomb.scalars import PoleError, U, X, rational_sqrt
from skeincoulomb.skein import classical_symbols


@dataclass
class TableConfig:
    t: Fraction = Fraction(4)
    xs: list[Fraction] = field(default_factory=lambda: [Fraction(n, 2) for n in range(-6, 7) if n not in (0, 2, -2)])


def table(cfg: TableConfig) -> list[tuple]:
    u_val = rational_sqrt(cfg.t)
    sym = classical_symbols()
    target = 2 + cfg.t + 1 / cfg.t
    rows = []
    for x in cfg.xs:
        try:
            a, b, c = (sym[g].evaluate({U: u_val, X: x}) for g in "abc")
        except PoleError:
            rows.append((x, None, None, None, None))
            continue
        rows.append((x, a, b, c, a * a + b * b + c * c - a * b * c - target))
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--t", type=Fraction, default=Fraction(4), help="a rational square")
    p.add_argument("--x", type=Fraction, nargs="*")
    args = p.parse_args()
    cfg = TableConfig(args.t) if not args.x else TableConfig(args.t, args.x)
    print(f"t = {cfg.t}, target 2 + t + 1/t = {2 + cfg.t + 1 / cfg.t}")
    print(f"{'X':>8} {'a':>12} {'b':>12} {'c':>14} {'residual':>9}")
    for x, a, b, c, r in table(cfg):
        if a is None:
            print(f"{str(x):>8}  pole")
        else:
            print(f"{str(x):>8} {str(a):>12} {str(b):>12} {str(c):>14} {str(r):>9}")


if __name__ == "__main__":
    main()
