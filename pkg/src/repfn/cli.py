"""Command-line front end.

Subcommands: construct, repfn, verify, scan, density, ratios.  Every
report path emits deterministic LF-terminated CSV (to --out or stdout)
and can additionally render a matplotlib figure next to the CSV via
--plot.  Exit codes: 0 all checks passed, 1 a checked claim failed
(witness in the output), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import os
import random
import sys
from fractions import Fraction
from typing import IO, Optional, Sequence

import numpy as np

from . import plots
from .constructions import cor3_set, thm1_set, thm2_set, thm3_set
from .profiles import Method, r2_profile, symmetric_cross
from .search import default_scan_n_max, iter_scan
from .sets import (
    A0_SET,
    B0_SET,
    Likeness,
    SarkozySet,
    SetSpec,
    make_set,
    format_spec,
    parse_spec,
)
from .verify import (
    BoundReport,
    TheoremId,
    check_dombi,
    check_lemma1,
    check_lower_bounds,
    check_theorem_a,
    check_thm1_upper,
    check_thm2_zero,
    check_thm3_zero,
    empirical_density,
    qualifying_heights,
    ratio_sequence,
)

REPORT_HEADER = [
    "theorem_id",
    "set_spec",
    "n_lo",
    "n_hi",
    "passed",
    "worst_n",
    "worst_margin_num",
    "worst_margin_den",
]

SCAN_HEADER = ["spec", "tm_like", "last_zero", "min_F_margin", "min_E_slack_num"]

RANDOM_SET_MAX_N = 8


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# set sources


def random_balanced_set(seed: int, max_n: int = RANDOM_SET_MAX_N) -> SarkozySet:
    """Seeded balanced set with N <= max_n (for reproducible property runs)."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    elements = sorted(rng.sample(range(2 * n), n))
    return make_set(SetSpec(n, tuple(elements)))


def resolve_set(args: argparse.Namespace) -> SarkozySet:
    """Build the input set from --set text or --construct name + parameter."""
    text: Optional[str] = getattr(args, "set", None)
    cname: Optional[str] = getattr(args, "construct", None)
    if (text is None) == (cname is None):
        raise UsageError("exactly one of --set and --construct is required")
    if text is not None:
        return set_from_text(text, getattr(args, "seed", 0))
    return build_construction(cname, args)


def set_from_text(text: str, seed: int = 0) -> SarkozySet:
    stripped = text.strip()
    alias = stripped.upper()
    if alias == "A0":
        return A0_SET
    if alias == "B0":
        return B0_SET
    if alias == "RANDOM":
        return random_balanced_set(seed)
    unchecked = False
    if stripped.endswith("(unchecked)"):
        unchecked = True
        stripped = stripped[: -len("(unchecked)")].strip()
    try:
        spec = parse_spec(stripped)
        return make_set(spec, unchecked=unchecked)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_construction(name: str, args: argparse.Namespace) -> SarkozySet:
    try:
        if name in ("thm1", "thm3"):
            if getattr(args, "n", None) is None:
                raise UsageError(f"construct {name} requires --n")
            return thm1_set(args.n) if name == "thm1" else thm3_set(args.n)
        if name in ("thm2", "cor3"):
            if getattr(args, "k", None) is None:
                raise UsageError(f"construct {name} requires --k")
            return thm2_set(args.k) if name == "thm2" else cor3_set(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown construction {name!r}")


# ---------------------------------------------------------------------------
# output plumbing


def _open_out(path: Optional[str]) -> tuple[IO[str], bool]:
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _writer(stream: IO[str]):
    return csv.writer(stream, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)


def _figure_path(args: argparse.Namespace) -> Optional[str]:
    """Where --plot should render; defaults to the CSV path with .png."""
    plot = getattr(args, "plot", None)
    if plot is None:
        return None
    if plot is not True:
        return plot
    out = getattr(args, "out", None)
    if out is None or out == "-":
        raise UsageError("--plot without a path requires --out")
    stem, _ = os.path.splitext(out)
    return stem + ".png"


def _add_plot_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--plot",
        nargs="?",
        const=True,
        default=None,
        metavar="PNG",
        help="render a figure alongside the CSV (default: --out path with .png)",
    )


def report_row(report: BoundReport) -> list:
    margin = report.worst_margin
    return [
        report.theorem_id.value,
        format_spec(report.set_spec),
        report.n_range[0],
        report.n_range[1],
        "true" if report.passed else "false",
        "" if report.worst_n is None else report.worst_n,
        "" if margin is None else margin.numerator,
        "" if margin is None else margin.denominator,
    ]


def emit_reports(reports: Sequence[BoundReport], out: Optional[str]) -> None:
    stream, owned = _open_out(out)
    try:
        w = _writer(stream)
        w.writerow(REPORT_HEADER)
        for rep in reports:
            w.writerow(report_row(rep))
    finally:
        if owned:
            stream.close()


def describe(report: BoundReport) -> str:
    rng = f"[n {report.n_range[0]}..{report.n_range[1]}]"
    if report.passed:
        margin = (
            f", worst margin {report.worst_margin}"
            if report.worst_margin is not None and report.worst_n is not None
            else ""
        )
        at = f" at n={report.worst_n}" if report.worst_n is not None else ""
        return f"{report.theorem_id.value}: PASS {rng}{margin}{at}"
    return (
        f"{report.theorem_id.value}: FAIL {rng} witness n={report.worst_n} "
        f"margin {report.worst_margin}"
    )


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args: argparse.Namespace) -> int:
    s = build_construction(args.name, args)
    print(format_spec(s.spec()))
    return 0


def cmd_repfn(args: argparse.Namespace) -> int:
    s = resolve_set(args)
    n_max = args.n_max
    method = Method(args.method)
    r2_a = r2_profile(s, n_max, method).r2
    r2_c = r2_profile(s.complement(), n_max, method).r2
    cross = symmetric_cross(s, n_max)
    stream, owned = _open_out(args.out)
    try:
        stream.write(
            f"# repfn profile set={format_spec(s.spec())} method={method.value} n_max={n_max}\n"
        )
        w = _writer(stream)
        w.writerow(["n", "r2_A", "r2_comp", "r_cross"])
        for n in range(n_max + 1):
            w.writerow([n, int(r2_a[n]), int(r2_c[n]), int(cross[n])])
    finally:
        if owned:
            stream.close()
    fig_path = _figure_path(args)
    if fig_path:
        ns = np.arange(n_max + 1)
        fig = plots.plot_profile(
            ns, r2_a, r2_c, cross, f"profile of {format_spec(s.spec())}"
        )
        plots.save_figure(fig, fig_path)
    return 0


_VERIFY_TARGETS = ("thm-a", "dombi", "lemma1", "thm1", "thm2", "thm3", "cor3", "lower-bounds")


def cmd_verify(args: argparse.Namespace) -> int:
    target = args.theorem
    n_max = args.n_max
    reports: list[BoundReport]
    if target == "dombi":
        reports = [check_dombi(n_max if n_max is not None else 1000)]
    elif target == "thm-a":
        s = resolve_set(args)
        reports = [check_theorem_a(s, n_max if n_max is not None else 10_000)]
    elif target == "lemma1":
        s = resolve_set(args)
        k_max = args.k_max if args.k_max is not None else 4 * s.N
        l_max = args.l_max if args.l_max is not None else 10
        reports = [check_lemma1(s, k_max, l_max)]
    elif target in ("thm1", "cor3"):
        if target == "thm1":
            if args.n is None:
                raise UsageError("verify thm1 requires --n")
            s = thm1_set(args.n)
        else:
            if args.k is None:
                raise UsageError("verify cor3 requires --k")
            s = cor3_set(args.k)
        m_max = args.m_max
        if m_max is None:
            cap = n_max if n_max is not None else 1 << 21
            heights = qualifying_heights(s.N, cap)
            if not heights:
                raise UsageError(f"no qualifying sparse targets below {cap}")
            m_max = heights[-1]
        report = check_thm1_upper(s, m_max)
        if target == "cor3":
            report = dataclasses.replace(report, theorem_id=TheoremId.COR3)
        reports = [report]
    elif target == "thm2":
        if args.k is None:
            raise UsageError("verify thm2 requires --k")
        reports = [check_thm2_zero(args.k)]
    elif target == "thm3":
        if args.n is None:
            raise UsageError("verify thm3 requires --n")
        reports = [check_thm3_zero(args.n)]
    elif target == "lower-bounds":
        s = resolve_set(args)
        try:
            reports = check_lower_bounds(s, n_max if n_max is not None else 10_000)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError(f"unknown verify target {target!r}")

    for rep in reports:
        print(describe(rep))
    if args.out:
        emit_reports(reports, args.out)
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_scan(args: argparse.Namespace) -> int:
    n = args.n
    if n is None:
        raise UsageError("scan requires --n")
    n_max = args.n_max if args.n_max is not None else default_scan_n_max(n)
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    fig_path = _figure_path(args)
    stream, owned = _open_out(args.out)
    total = 0
    neither_max_zero = -1
    attained_3n = False
    kept = [] if fig_path else None
    try:
        stream.write(f"# scan N={n} n_max={n_max}\n")
        w = _writer(stream)
        w.writerow(SCAN_HEADER)
        for rec in iter_scan(n, n_max, workers=workers):
            w.writerow(
                [
                    format_spec(rec.spec),
                    rec.tm_like.value,
                    rec.last_zero,
                    rec.min_F_margin,
                    rec.min_E_slack,
                ]
            )
            total += 1
            if rec.tm_like is Likeness.NEITHER:
                neither_max_zero = max(neither_max_zero, rec.last_zero)
                if rec.last_zero >= 3 * n - 1:
                    attained_3n = True
            if kept is not None:
                kept.append(rec)
    finally:
        if owned:
            stream.close()
    print(
        f"scanned {total} prefixes at N={n}, n_max={n_max}: "
        f"max last-zero among non-A0/B0 prefixes {neither_max_zero} "
        f"(threshold 3N-1={3 * n - 1} attained: {'yes' if attained_3n else 'no'}; "
        f"forbidden from 14(N-1)={14 * (n - 1)})",
        file=sys.stderr,
    )
    if fig_path and kept is not None:
        fig = plots.plot_scan(kept, n, f"balanced-prefix scan at N={n}")
        plots.save_figure(fig, fig_path)
    return 0


def cmd_density(args: argparse.Namespace) -> int:
    s = resolve_set(args)
    try:
        result = empirical_density(s, args.n_max, args.theta, args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(
        f"density {float(result.density):.6f} "
        f"({result.density.numerator}/{result.density.denominator}) "
        f"of n in [1, {args.n_max}] within {args.c}*n^(1-{args.theta}) of n/8"
    )
    if args.out:
        stream, owned = _open_out(args.out)
        try:
            stream.write(
                f"# density set={format_spec(s.spec())} n_max={args.n_max} "
                f"theta={args.theta} c={args.c} "
                f"density={result.density.numerator}/{result.density.denominator}\n"
            )
            w = _writer(stream)
            w.writerow(["bucket_index", "ratio_lo_num", "ratio_lo_den", "count"])
            for idx, count in enumerate(result.histogram):
                lo = idx * result.bucket_width
                w.writerow([idx, lo.numerator, lo.denominator, int(count)])
        finally:
            if owned:
                stream.close()
    fig_path = _figure_path(args)
    if fig_path:
        fig = plots.plot_density_histogram(
            result.histogram,
            result.bucket_width,
            result.density,
            f"ratio distribution for {format_spec(s.spec())}",
        )
        plots.save_figure(fig, fig_path)
    return 0


def cmd_ratios(args: argparse.Namespace) -> int:
    s = resolve_set(args)
    rows = ratio_sequence(s, args.seq, args.count, args.step)
    stream, owned = _open_out(args.out)
    try:
        stream.write(
            f"# ratios set={format_spec(s.spec())} seq={args.seq} "
            f"count={args.count} step={args.step}\n"
        )
        w = _writer(stream)
        w.writerow(["n", "r2", "ratio_num", "ratio_den"])
        for n, r2, ratio in rows:
            w.writerow([n, r2, ratio.numerator, ratio.denominator])
    finally:
        if owned:
            stream.close()
    fig_path = _figure_path(args)
    if fig_path and rows:
        fig = plots.plot_ratios(rows, f"sparse ratios for {format_spec(s.spec())}")
        plots.save_figure(fig, fig_path)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_set_source(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--set",
        help=(
            'set spec "N=<int>;P=<e1>,<e2>,..." (append "(unchecked)" to skip the '
            "balance check), or A0, B0, random"
        ),
    )
    p.add_argument(
        "--construct",
        choices=("thm1", "thm2", "thm3", "cor3"),
        help="build the input set from a named construction (with --n or --k)",
    )
    p.add_argument("--n", type=int, help="construction size parameter N")
    p.add_argument("--k", type=int, help="construction index parameter k")
    p.add_argument("--seed", type=int, default=0, help="seed for --set random")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repfn",
        description=(
            "Exact representation-function computation and bound checking for "
            "doubling-closed partitions of the nonnegative integers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print a named construction as a set spec")
    p.add_argument("name", choices=("thm1", "thm2", "thm3", "cor3"))
    p.add_argument("--n", type=int, help="size parameter N (thm1, thm3)")
    p.add_argument("--k", type=int, help="index parameter k (thm2, cor3)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("repfn", help="profile CSV: n, r2_A, r2_comp, r_cross")
    _add_set_source(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--method", choices=[m.value for m in Method], default=Method.BITPARALLEL.value
    )
    p.add_argument("--out", help="CSV path (default stdout)")
    _add_plot_flag(p)
    p.set_defaults(func=cmd_repfn)

    p = sub.add_parser("verify", help="run a named check; exit 1 on failure")
    p.add_argument("theorem", choices=_VERIFY_TARGETS)
    _add_set_source(p)
    p.add_argument("--n-max", type=int, help="horizon for profile-based checks")
    p.add_argument("--k-max", type=int, help="lemma1: largest block index k")
    p.add_argument("--l-max", type=int, help="lemma1: largest shift l")
    p.add_argument("--m-max", type=int, help="thm1/cor3: largest sparse exponent m")
    p.add_argument("--out", help="write the report rows as CSV")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exhaustive balanced-prefix scan at small N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int, help="profile horizon (default max(200, 20N))")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--workers", type=int, help="parallel workers (default: all cores)")
    _add_plot_flag(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("density", help="fraction of n with r2 close to n/8")
    _add_set_source(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--out", help="histogram CSV path")
    _add_plot_flag(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("ratios", help="r2[n]/n along a sparse or arithmetic sequence")
    _add_set_source(p)
    p.add_argument("--seq", choices=("pow", "arith"), default="pow")
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--step", type=int, default=1, help="spacing for --seq arith")
    p.add_argument("--out", help="CSV path (default stdout)")
    _add_plot_flag(p)
    p.set_defaults(func=cmd_ratios)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MemoryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
