"""Command-line harness.

    skeincoulomb verify --suite all --max-word-len 3 --report json
    skeincoulomb eval --target torus1 "a*b"
"""
from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .coulomb import check_coulombrep, check_main_theorem, iso_image
from .mcg import check_mcg
from .parse import ParseError, parse_expr
from .render import render
from .report import CheckReport
from .skein import (
    PHI,
    Representation,
    SkeinExpr,
    check_curve_family,
    check_presentation,
    check_symmetric_preservation,
    classical_check,
    skein_eval,
)

SUITES = ("skein", "mcg", "coulomb", "classical")
TARGETS = ("operator", "torus1", "torus2")


@dataclass
class VerifyConfig:
    suites: tuple[str, ...] = ("all",)
    max_word_len: int = 3
    degree_bound: int = 6
    k_max: int = 4
    seed: int = 0
    report_format: str = "text"
    # debug: scale the image of c by 2, which must make the harness fail
    corrupt: bool = False
    property_samples: int = 25
    classical_points: int = 12

    def __post_init__(self):
        self.suites = tuple(self.suites)
        unknown = set(self.suites) - set(SUITES) - {"all"}
        if unknown:
            raise ValueError(f"unknown suites {sorted(unknown)}; expected a subset of {SUITES + ('all',)}")
        if self.max_word_len < 1:
            raise ValueError("max_word_len must be >= 1")
        if self.degree_bound < 1:
            raise ValueError("degree_bound must be >= 1")
        if self.k_max < 0:
            raise ValueError("k_max must be >= 0")
        if self.report_format not in ("text", "json"):
            raise ValueError("report_format must be 'text' or 'json'")

    def selected(self) -> tuple[str, ...]:
        if "all" in self.suites:
            return SUITES
        return tuple(s for s in SUITES if s in self.suites)


def representation(cfg: VerifyConfig) -> Representation:
    if not cfg.corrupt:
        return PHI
    images = dict(PHI.images)
    images["c"] = images["c"].scale(2)
    return Representation(images)


def _random_word(rng: random.Random, max_len: int) -> tuple:
    return tuple(rng.choice("abc") for _ in range(rng.randint(1, max_len)))


def _multiplicativity(cfg: VerifyConfig, rep: Representation) -> CheckReport:
    report = CheckReport("multiplicativity")
    rng = random.Random(cfg.seed)
    with report.timed():
        bad = []
        for _ in range(cfg.property_samples):
            w1, w2 = _random_word(rng, cfg.max_word_len), _random_word(rng, cfg.max_word_len)
            if rep(SkeinExpr.word(w1 + w2)) != rep(SkeinExpr.word(w1)) * rep(SkeinExpr.word(w2)):
                bad.append("".join(w1) + "|" + "".join(w2))
        report.add(f"eval(w1 w2) = eval(w1) eval(w2) on {cfg.property_samples} seeded pairs", not bad,
                   f"failing: {bad}" if bad else f"seed {cfg.seed}")
    return report


def classical_samples(seed: int, n_points: int) -> list[tuple[Fraction, list[Fraction]]]:
    """Seeded (t, [X...]) samples; t is a rational square so t^{1/2} is rational."""
    rng = random.Random(seed)
    out = []
    per_t = 4
    while sum(len(xs) for _, xs in out) < n_points:
        r = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        t = r * r
        xs = []
        while len(xs) < per_t:
            x = Fraction(rng.choice((-1, 1)) * rng.randint(1, 12), rng.randint(1, 7))
            if x not in (1, -1) and x not in xs:
                xs.append(x)
        out.append((t, xs))
    return out


def _classical(cfg: VerifyConfig, rep: Representation) -> CheckReport:
    report = CheckReport("classical")
    with report.timed():
        for t, xs in classical_samples(cfg.seed, cfg.classical_points):
            report.extend(classical_check(t, xs, rep), f"t={t}")
    return report


def run_suite(name: str, cfg: VerifyConfig, rep: Representation) -> CheckReport:
    report = CheckReport(name)
    with report.timed():
        if name == "skein":
            report.extend(check_presentation(rep), "presentation")
            report.extend(check_curve_family(rep=rep), "curve_family")
            report.extend(check_symmetric_preservation(cfg.max_word_len, cfg.degree_bound, rep), "symmetric")
            report.extend(_multiplicativity(cfg, rep), "properties")
        elif name == "mcg":
            report.extend(check_mcg(cfg.max_word_len, rep))
        elif name == "coulomb":
            report.extend(check_coulombrep(max(cfg.k_max, 2), max(cfg.degree_bound, 2)), "coulombrep")
            report.extend(check_main_theorem(max(cfg.max_word_len, 2), rep), "realizations")
        elif name == "classical":
            report.extend(_classical(cfg, rep))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return report


def run_verify(cfg: VerifyConfig) -> CheckReport:
    rep = representation(cfg)
    selected = cfg.selected()
    report = CheckReport("+".join(selected) if len(selected) > 1 else selected[0])
    with report.timed():
        for name in selected:
            report.extend(run_suite(name, cfg, rep), name)
    return report


def eval_command(text: str, target: str = "operator") -> str:
    e = parse_expr(text)
    if target == "operator":
        return render(skein_eval(e))
    if target == "torus1":
        return render(iso_image(1, e))
    if target == "torus2":
        return render(iso_image(2, e))
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skeincoulomb", description="Exact verification harness.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", choices=SUITES + ("all",),
                   help="suite to run (repeatable; default all)")
    v.add_argument("--max-word-len", type=int, default=3)
    v.add_argument("--degree-bound", type=int, default=6)
    v.add_argument("--k-max", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", choices=("text", "json"), default="text")
    v.add_argument("--out", help="also write the report to this file")
    v.add_argument("--debug-corrupt", action="store_true", help=argparse.SUPPRESS)

    e = sub.add_parser("eval", help="print the normal form of an expression")
    e.add_argument("--target", choices=TARGETS, default="operator")
    e.add_argument("expr")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "eval":
        try:
            print(eval_command(args.expr, args.target))
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0

    try:
        cfg = VerifyConfig(
            suites=tuple(args.suite or ("all",)),
            max_word_len=args.max_word_len,
            degree_bound=args.degree_bound,
            k_max=args.k_max,
            seed=args.seed,
            report_format=args.report,
            corrupt=args.debug_corrupt,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_verify(cfg)
    text = report.to_json() if cfg.report_format == "json" else report.to_text()
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    counts = report.counts()
    print(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skip']} skip in {report.elapsed_ms} ms",
          file=sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
