"""Command-line interface.

Exit status: 0 on success, 1 when a verification or cross-source check fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np

from . import _kernels, moments, montecarlo, oracle
from .enumerator import POLYNOMIAL_BOUND, J_polynomial, factorial_moment_sweep
from .verify import VerifyConfig, run_checks

COMMANDS = ("polys", "moments", "alphas", "verify", "sample", "hist")
MAX_MOMENT_ORDER = 12


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    max_order: int = 4
    samples: int = 100_000
    seed: int = 0
    workers: int = 1
    format: str = "text"
    output_path: Optional[str] = None
    bins: int = 100
    allow_large_oracle: bool = False


@dataclass
class Output:
    results: dict
    header: list
    rows: list
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    failed: bool = False


def exact(x) -> str:
    return str(Fraction(x))


def real(x: Optional[float]) -> Optional[float]:
    if x is None:
        return None
    return float(f"{x:.12g}")


def _cell(x) -> str:
    if x is None:
        return "undefined"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _require_n(cfg: RunConfig, minimum: int = 1) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    if cfg.n < minimum:
        raise UsageError(f"{cfg.command} needs --n >= {minimum}")
    return cfg.n


# -- commands -----------------------------------------------------------------------


def cmd_polys(cfg: RunConfig) -> Output:
    n = _require_n(cfg)
    if n > POLYNOMIAL_BOUND:
        raise UsageError(
            f"--n {n} exceeds the polynomial bound {POLYNOMIAL_BOUND}; "
            "use the 'moments' command, which works from jets"
        )
    p = J_polynomial(n)
    lo, hi = p.valuation, p.degree
    pairs = [(e, p.coefficient(e)) for e in range(lo, hi + 1)]
    results = {
        "n": n,
        "coefficients": [[e, exact(c)] for e, c in pairs],
        "J_at_1": exact(p(1)),
        "min_exponent": lo,
        "max_exponent": hi,
    }
    return Output(
        results,
        ["exponent", "coefficient"],
        [[e, exact(c)] for e, c in pairs],
        summary={"n": n, "J_n(1)": exact(p(1)), "exponent span": f"[{lo}, {hi}]"},
    )


def _compare(name: str, a: moments.MomentReport, b: moments.MomentReport) -> dict:
    orders = sorted(set(a.central) & set(b.central))
    mismatched = [k for k in orders if a.central[k] != b.central[k]]
    if a.mean != b.mean:
        mismatched.insert(0, 1)
    return {
        "name": name,
        "passed": not mismatched,
        "detail": f"orders {orders[0]}..{orders[-1]}" if orders else "mean only",
        "mismatched_orders": mismatched,
    }


def cmd_moments(cfg: RunConfig) -> Output:
    n = _require_n(cfg)
    r = cfg.max_order
    if not 0 <= r <= MAX_MOMENT_ORDER:
        raise UsageError(f"--max-order must lie in 0..{MAX_MOMENT_ORDER}")
    fm = factorial_moment_sweep([n], r)[n].factorial_moments
    report = moments.factorial_to_central(fm, n ** (n - 1), r, n)
    checks = []
    closed = moments.closed_form_report(n)
    if r >= 1:
        checks.append(_compare("closed_form_vs_enumerator", closed, report))
    bound = oracle.LARGE_ENUMERATION_BOUND if cfg.allow_large_oracle else oracle.ENUMERATION_BOUND
    if n <= bound:
        dist = oracle.exact_distribution(n, allow_large=cfg.allow_large_oracle)
        checks.append(
            _compare("oracle_vs_enumerator", moments.central_from_distribution(dist.counts, r, n), report)
        )
    std = report.standardized or {}
    results = {
        "n": n,
        "source": report.source.value,
        "factorial_moments": [exact(f) for f in fm],
        "mean": exact(report.mean),
        "central": {str(k): exact(v) for k, v in report.central.items()},
        "standardized": {str(k): real(std.get(k)) for k in range(3, r + 1)},
        "sources_agree": all(c["passed"] for c in checks),
    }
    rows = [["mean", 1, exact(report.mean), real(float(report.mean))]]
    rows += [["central", k, exact(v), real(float(v))] for k, v in report.central.items()]
    rows += [["standardized", k, "", real(std.get(k))] for k in range(3, r + 1)]
    return Output(
        results,
        ["quantity", "order", "exact", "float"],
        rows,
        checks=checks,
        summary={"n": n, "source": report.source.value,
                 "sources agree": results["sources_agree"]},
        failed=not results["sources_agree"],
    )


def sweep_sizes(n: int, points: int = 10) -> list[int]:
    sizes = {int(round(x)) for x in np.geomspace(3, n, num=min(points, n - 2))}
    return sorted(sizes | {n})


def cmd_alphas(cfg: RunConfig) -> Output:
    n = _require_n(cfg, minimum=3)
    r = cfg.max_order
    if not 3 <= r <= MAX_MOMENT_ORDER:
        raise UsageError(f"alphas needs --max-order in 3..{MAX_MOMENT_ORDER}")
    sizes = sweep_sizes(n)
    table = factorial_moment_sweep(sizes, r)
    sweep = []
    for m in sizes:
        rep = moments.factorial_to_central(table[m].factorial_moments, m ** (m - 1), r, m)
        sweep.append({"n": m, "alpha": {str(k): real(v) for k, v in rep.standardized.items()}})
    lc = moments.limit_constants()
    limit = {str(k): real(lc.alpha[k]) for k in range(3, r + 1)}
    reference = {str(k): real(float(moments.REFERENCE_DECIMALS[f"alpha{k}"])) for k in range(3, r + 1)}
    kind = {str(k): ("reference" if f"alpha{k}" in moments.REFERENCE_ONLY else "recomputed")
            for k in range(3, r + 1)}
    results = {"sweep": sweep, "limit": limit, "reference": reference, "limit_kind": kind}
    header = ["n"] + [f"alpha{k}" for k in range(3, r + 1)]
    rows = [[s["n"]] + [s["alpha"][str(k)] for k in range(3, r + 1)] for s in sweep]
    rows.append(["limit"] + [limit[str(k)] for k in range(3, r + 1)])
    rows.append(["reference"] + [reference[str(k)] for k in range(3, r + 1)])
    return Output(results, header, rows, summary={"max n": n, "orders": f"3..{r}"})


def cmd_verify(cfg: RunConfig) -> Output:
    vcfg = VerifyConfig()
    if cfg.n is not None:
        if cfg.n < vcfg.oracle_max + 1:
            raise UsageError(f"verify needs --n >= {vcfg.oracle_max + 1}")
        vcfg.closed_vs_enumerator_max = cfg.n
    results = run_checks(vcfg)
    checks = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in results]
    failed = [c.name for c in results if not c.passed]
    return Output(
        {"passed": not failed, "failed": failed, "count": len(results)},
        ["check", "status", "detail"],
        [[c.name, "pass" if c.passed else "FAIL", c.detail] for c in results],
        checks=checks,
        summary={"checks": len(results), "failed": len(failed)},
        failed=bool(failed),
    )


def _draw(cfg: RunConfig) -> tuple[int, np.ndarray]:
    n = _require_n(cfg)
    if cfg.workers < 1:
        raise UsageError("--workers must be >= 1")
    return n, montecarlo.draw_total_heights(n, cfg.samples, cfg.seed, cfg.workers)


def cmd_sample(cfg: RunConfig) -> Output:
    if cfg.samples < 1:
        raise UsageError("--samples must be >= 1")
    n, heights = _draw(cfg)
    stats = montecarlo.sample_statistics(heights, n)
    ps = montecarlo.PowerSums.of(heights)
    results = {k: (real(v) if isinstance(v, float) else v) for k, v in stats.items()}
    results["power_sums"] = [str(ps.count), str(ps.s1), str(ps.s2), str(ps.s3), str(ps.s4)]
    rows = [
        [name, results[name], results.get(f"{name}_se")]
        for name in ("mean", "scaled_mean", "variance", "skewness", "kurtosis")
    ]
    return Output(
        results,
        ["statistic", "value", "stderr"],
        rows,
        summary={"n": n, "samples": cfg.samples, "seed": cfg.seed, "workers": cfg.workers},
    )


def cmd_hist(cfg: RunConfig) -> Output:
    if cfg.samples < 1000:
        raise UsageError("hist needs --samples >= 1000")
    if cfg.bins < 1:
        raise UsageError("--bins must be >= 1")
    n, heights = _draw(cfg)
    h = montecarlo.scaled_histogram(heights, n, cfg.bins)
    edges = [real(e) for e in h.edges.tolist()]
    density = [real(d) for d in h.density.tolist()]
    counts = h.counts.tolist()
    results = {
        "n": n,
        "samples": cfg.samples,
        "scaling": "X/n^(3/2)",
        "bins": cfg.bins,
        "edges": edges,
        "counts": counts,
        "density": density,
        "mass": real(h.mass),
        "mode": real(h.mode),
    }
    rows = [[edges[i], edges[i + 1], counts[i], density[i]] for i in range(cfg.bins)]
    return Output(
        results,
        ["left", "right", "count", "density"],
        rows,
        summary={"n": n, "samples": cfg.samples, "mass": real(h.mass), "mode": real(h.mode)},
    )


HANDLERS = {
    "polys": cmd_polys,
    "moments": cmd_moments,
    "alphas": cmd_alphas,
    "verify": cmd_verify,
    "sample": cmd_sample,
    "hist": cmd_hist,
}


# -- rendering ----------------------------------------------------------------------


def render_json(cfg: RunConfig, out: Output) -> str:
    doc = {
        "command": cfg.command,
        "config": asdict(cfg),
        "results": out.results,
        "checks": out.checks,
    }
    return json.dumps(doc, indent=2) + "\n"


def render_csv(cfg: RunConfig, out: Output) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(out.header)
    for row in out.rows:
        w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def render_text(cfg: RunConfig, out: Output) -> str:
    lines = [f"# {cfg.command} (backend: {_kernels.BACKEND})"]
    lines += [f"{k}: {_cell(v)}" for k, v in out.summary.items()]
    table = [out.header] + [[_cell(x) for x in row] for row in out.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(out.header))]
    lines.append("")
    for row in table:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
    for c in out.checks if cfg.command != "verify" else []:
        lines.append(f"[{'pass' if c['passed'] else 'FAIL'}] {c['name']}: {c.get('detail', '')}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def run(cfg: RunConfig) -> tuple[str, int]:
    out = HANDLERS[cfg.command](cfg)
    return RENDERERS[cfg.format](cfg, out), (1 if out.failed else 0)


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of vertices")
    common.add_argument("--max-order", type=int, default=4, help="highest moment order")
    common.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count")
    common.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")
    common.add_argument("--workers", type=int, default=1, help="sampling processes")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", dest="output_path", metavar="PATH", help="write output here")
    common.add_argument("--bins", type=int, default=100, help="histogram bins")
    common.add_argument(
        "--allow-large-oracle", action="store_true", help="permit n=9 exhaustive enumeration"
    )
    parser = argparse.ArgumentParser(
        prog="treeheight",
        description="Total height statistics of rooted labeled trees.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "polys": "coefficient table of J_n(y)",
        "moments": "exact mean and central moments, cross-checked across sources",
        "alphas": "standardized moments over a sweep of n, with limits",
        "verify": "run the named identity checks",
        "sample": "Monte Carlo statistics of the total height",
        "hist": "histogram of X/n^(3/2) from Monte Carlo samples",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name],
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    if not 0 <= cfg.seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
        text, status = run(cfg)
    except UsageError as exc:
        print(f"treeheight: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse
        return int(exc.code or 0)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status:
        print("treeheight: check failure (see checks)", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
