"""Command-line front end.

Subcommands: ``poly`` (exact coefficients), ``roots`` (isolating intervals),
``verify`` (certification suites, JSON report stream), ``scan`` (smallest-root
decay tables) and ``plot`` (zero-locus data and figures).  Exit status is 0
when everything passed or was skipped, 1 when any check failed, 2 on usage
errors.

Scan and verify fan work items out to a process pool when ``--jobs`` (or the
``FZEROS_JOBS`` environment variable) asks for more than one worker; results
are merged in canonical order so output is deterministic either way.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import verify as verify_mod
from .catalog import (
    A,
    B,
    D,
    FIXED_TYPES,
    I2,
    InvalidRank,
    RootSystemType,
    UnsupportedType,
    f_poly,
    fplus_poly,
)
from .polycore import parse_rational, rat_str
from .sturm import (
    Interval,
    RootBox,
    compare_roots,
    count_real_roots,
    count_roots,
    first_root_box,
    isolate_roots,
    refine,
)
from .verify import Report

DEFAULT_EPS = Fraction(1, 2**53)

_SERIES_MAKERS = {"A": A, "B": B, "D": D}
_FIXED_BY_NAME = {T.label: T for T in FIXED_TYPES}


def parse_type(name: str, rank: int | None, p: int | None) -> RootSystemType:
    name = name.strip()
    if name in _SERIES_MAKERS:
        if rank is None:
            raise UsageError(f"type {name} needs --rank")
        return _SERIES_MAKERS[name](rank)
    if name == "I2":
        if p is None:
            raise UsageError("type I2 needs --p")
        return I2(p)
    if name in _FIXED_BY_NAME:
        if rank is not None or p is not None:
            raise UsageError(f"type {name} takes no --rank/--p")
        return _FIXED_BY_NAME[name]
    raise UsageError(f"unknown type {name!r}")


class UsageError(Exception):
    pass


def _write_text(out: str | None, text: str) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def _jobs_from(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("FZEROS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"FZEROS_JOBS must be an integer, got {env!r}")
    return 1


def _run_tasks(tasks: list[tuple], jobs: int) -> list[tuple]:
    """Run (key, func_name, args) tasks, returning (key, payload) sorted by key."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_execute_task, tasks))
    else:
        results = [_execute_task(t) for t in tasks]
    return sorted(results, key=lambda kv: kv[0])


def _execute_task(task: tuple) -> tuple:
    key, func_name, args = task
    func = _TASK_FUNCS[func_name]
    return key, func(*args)


# -- verify ---------------------------------------------------------------------


def _type_from_label(label: str) -> RootSystemType:
    if label.startswith("I2(") and label.endswith(")"):
        return I2(int(label[3:-1]))
    if label in _FIXED_BY_NAME:
        return _FIXED_BY_NAME[label]
    return _SERIES_MAKERS[label[0]](int(label[1:]))


def _task_identities(l_max: int) -> list[dict]:
    return [verify_mod.verify_identities(l_max).to_dict()]


def _task_conj2(label: str) -> list[dict]:
    return [verify_mod.verify_simple_roots(_type_from_label(label)).to_dict()]


def _task_conj3(series: str, l_max: int) -> list[dict]:
    return [verify_mod.verify_smallest_root_decay(series, l_max).to_dict()]


def _task_conj4(label: str) -> list[dict]:
    return [verify_mod.verify_plus_interlacing(_type_from_label(label)).to_dict()]


def _task_cor54(l: int) -> list[dict]:
    return [verify_mod.verify_d_between_b(l).to_dict()]


def _task_interlacing(l: int) -> list[dict]:
    return [
        verify_mod.verify_series_interlacing_b(l).to_dict(),
        verify_mod.verify_series_interlacing_aplus(l).to_dict(),
    ]


def _task_fact73(label: str) -> list[dict]:
    return [r.to_dict() for r in verify_mod.verify_variation_fixtures(_type_from_label(label))]


def _task_section8(l: int) -> list[dict]:
    return [verify_mod.verify_symmetrized_apparatus(l).to_dict()]


def _task_divisibility(l_max: int) -> list[dict]:
    return [verify_mod.verify_half_root_parity(l_max).to_dict()]


def _task_addendum(series: str, l_max: int) -> list[dict]:
    return [verify_mod.verify_derivative_at_one(series, l_max).to_dict()]


def _task_scan_row(series: str, l: int, eps_str: str, bracket: bool) -> dict:
    maker = _SERIES_MAKERS[series]
    box = first_root_box(f_poly(maker(l)), Fraction(0), Fraction(1))
    box = refine(box, parse_rational(eps_str))
    row = {
        "series": series,
        "rank": l,
        "lo": rat_str(box.lo),
        "hi": rat_str(box.hi),
        "approx": repr(box.approx),
    }
    if bracket and series == "B":
        lower_hi, upper_lo = verify_mod._bracket_for_smallest_b_root(l, 24)
        row["bracket_lo"] = rat_str(lower_hi)
        row["bracket_hi"] = rat_str(upper_lo)
        row["in_bracket"] = str(box.lo >= lower_hi and box.hi <= upper_lo).lower()
    return row


_TASK_FUNCS = {
    "identities": _task_identities,
    "conj2": _task_conj2,
    "conj3": _task_conj3,
    "conj4": _task_conj4,
    "cor54": _task_cor54,
    "interlacing": _task_interlacing,
    "fact73": _task_fact73,
    "section8": _task_section8,
    "divisibility": _task_divisibility,
    "addendum": _task_addendum,
    "scan_row": _task_scan_row,
}

SUITES = (
    "identities",
    "conj2",
    "conj3",
    "conj4",
    "cor54",
    "interlacing",
    "fact73",
    "section8",
    "divisibility",
    "addendum",
    "all",
)


def _default_conj2_labels(l_max: int) -> list[str]:
    labels = [f"A{l}" for l in range(1, l_max + 1)]
    labels += [f"B{l}" for l in range(1, l_max + 1)]
    labels += [f"D{l}" for l in range(4, l_max + 1)]
    labels += [T.label for T in FIXED_TYPES]
    labels += [f"I2({p})" for p in range(3, 13)]
    return labels


def _default_conj4_labels(l_max: int) -> list[str]:
    labels = [f"A{l}" for l in range(1, l_max + 1)]
    labels += [f"B{l}" for l in range(1, l_max + 1)]
    labels += [f"D{l}" for l in range(4, l_max + 1)]
    return labels


def _fact73_labels() -> list[str]:
    return [T.label for T in FIXED_TYPES] + [f"I2({p})" for p in range(3, 13)]


def _label_sort_key(label: str) -> tuple:
    T = _type_from_label(label)
    return (T.family.value, T.param or 0)


def _verify_tasks(args) -> list[tuple]:
    suite = args.suite
    l_max = args.lmax
    explicit_type = args.type is not None
    label = parse_type(args.type, args.rank, args.p).label if explicit_type else None
    tasks: list[tuple] = []

    def add(suite_name: str, key2, func_args: tuple):
        tasks.append(((suite_name, key2), suite_name, func_args))

    wanted = SUITES[:-1] if suite == "all" else (suite,)
    for name in wanted:
        if name == "identities":
            add(name, 0, (l_max,))
        elif name == "conj2":
            labels = [label] if explicit_type else _default_conj2_labels(l_max)
            for lb in labels:
                add(name, _label_sort_key(lb), (lb,))
        elif name == "conj3":
            series = [args.series] if args.series else ["A", "B", "D"]
            for s in series:
                add(name, s, (s, l_max))
        elif name == "conj4":
            labels = [label] if explicit_type else _default_conj4_labels(l_max)
            for lb in labels:
                add(name, _label_sort_key(lb), (lb,))
        elif name == "cor54":
            for l in range(4, l_max + 1):
                add(name, l, (l,))
        elif name == "interlacing":
            for l in range(2, l_max + 1):
                add(name, l, (l,))
        elif name == "fact73":
            labels = [label] if explicit_type else _fact73_labels()
            for lb in labels:
                add(name, _label_sort_key(lb), (lb,))
        elif name == "section8":
            for l in range(5, l_max + 1):
                add(name, l, (l,))
        elif name == "divisibility":
            add(name, 0, (l_max,))
        elif name == "addendum":
            series = [args.series] if args.series else ["A", "B", "D"]
            for s in series:
                add(name, s, (s, l_max))
    return tasks


def cmd_verify(args) -> int:
    jobs = _jobs_from(args)
    tasks = _verify_tasks(args)
    results = _run_tasks(tasks, jobs)
    reports = [Report.from_dict(d) for _, dicts in results for d in dicts]
    n_pass = sum(1 for r in reports if r.status == "pass")
    n_fail = sum(1 for r in reports if r.status == "fail")
    n_skip = sum(1 for r in reports if r.status == "skipped")
    payload = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    if args.format == "json" and not args.out:
        sys.stdout.write(payload)
    else:
        for r in reports:
            params = ", ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            print(f"[{r.status.upper():7}] {r.check} ({params})")
            if r.status == "fail":
                for w in r.witnesses:
                    print(f"          {w['label']}: {w['value']}")
        print(f"overall: {'FAIL' if n_fail else 'PASS'} "
              f"({n_pass} pass, {n_fail} fail, {n_skip} skipped)")
    if args.out:
        Path(args.out).write_text(payload)
    return 1 if n_fail else 0


# -- poly -----------------------------------------------------------------------


def _poly_payload(P: RootSystemType) -> dict:
    f = f_poly(P)
    payload = {
        "type": P.label,
        "rank": P.rank,
        "f": [rat_str(c) for c in f.coeffs],
    }
    try:
        payload["fplus"] = [rat_str(c) for c in fplus_poly(P).coeffs]
    except UnsupportedType:
        payload["fplus"] = None
    return payload


def cmd_poly(args) -> int:
    P = parse_type(args.type, args.rank, args.p)
    payload = _poly_payload(P)
    if args.format == "json":
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["type", "rank", "poly", "k", "coefficient"])
        for kind in ("f", "fplus"):
            if payload[kind] is None:
                continue
            for k, c in enumerate(payload[kind]):
                w.writerow([payload["type"], payload["rank"], kind, k, c])
        _write_text(args.out, buf.getvalue())
    else:
        lines = [f"f_{P.label}(t) coefficients (ascending): {' '.join(payload['f'])}"]
        if payload["fplus"] is not None:
            lines.append(f"fplus_{P.label}(t) coefficients (ascending): {' '.join(payload['fplus'])}")
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


# -- roots ----------------------------------------------------------------------


def _root_rows(P: RootSystemType, eps: Fraction) -> list[dict]:
    boxes = list(reversed(isolate_roots(f_poly(P), Fraction(0), Fraction(1))))
    rows = []
    for nu, box in enumerate(boxes, start=1):
        box = refine(box, eps)
        rows.append(
            {
                "type": P.label,
                "rank": P.rank,
                "nu": nu,
                "lo": rat_str(box.lo),
                "hi": rat_str(box.hi),
                "approx": repr(box.approx),
            }
        )
    return rows


def _rows_to_csv(rows: list[dict], columns: list[str], comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    w = csv.DictWriter(buf, fieldnames=columns)
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def cmd_roots(args) -> int:
    P = parse_type(args.type, args.rank, args.p)
    eps = parse_rational(args.eps) if args.eps else DEFAULT_EPS
    if eps <= 0:
        raise UsageError("--eps must be positive")
    rows = _root_rows(P, eps)
    if args.format == "json":
        _write_text(args.out, json.dumps(rows, indent=2) + "\n")
    else:
        _write_text(args.out, _rows_to_csv(rows, ["type", "rank", "nu", "lo", "hi", "approx"]))
    return 0


# -- scan -----------------------------------------------------------------------


def cmd_scan(args) -> int:
    series = args.series
    if series not in _SERIES_MAKERS:
        raise UsageError("--series must be A, B or D")
    l_min = {"A": 1, "B": 1, "D": 4}[series]
    if args.lmax < l_min + 1:
        raise UsageError(f"--lmax must be at least {l_min + 1} for series {series}")
    eps = args.eps or f"1/{2**53}"
    jobs = _jobs_from(args)
    tasks = [
        ((l,), "scan_row", (series, l, eps, args.bracket))
        for l in range(l_min, args.lmax + 1)
    ]
    rows = [row for _, row in _run_tasks(tasks, jobs)]
    # exact strict-decrease verdicts, recomputed from the returned enclosures
    maker = _SERIES_MAKERS[series]
    boxes = {
        row["rank"]: RootBox(
            f_poly(maker(row["rank"])),
            Interval(parse_rational(row["lo"]), parse_rational(row["hi"])),
        )
        for row in rows
    }
    for row in rows:
        l = row["rank"]
        if l == l_min:
            row["decreasing"] = ""
        else:
            row["decreasing"] = str(compare_roots(boxes[l], boxes[l - 1]) < 0).lower()
    columns = ["series", "rank", "lo", "hi", "approx", "decreasing"]
    if args.bracket and series == "B":
        columns += ["bracket_lo", "bracket_hi", "in_bracket"]
    if args.format == "json":
        _write_text(args.out, json.dumps(rows, indent=2) + "\n")
    else:
        _write_text(args.out, _rows_to_csv(rows, columns))
    return 0


# -- plot -----------------------------------------------------------------------


def cmd_plot(args) -> int:
    P = parse_type(args.type, args.rank, args.p)
    eps = parse_rational(args.eps) if args.eps else DEFAULT_EPS
    f = f_poly(P)
    degree = int(f.degree)
    total_real = count_real_roots(f)
    in_unit = count_roots(f, Fraction(0), Fraction(1))
    certificate = (
        f"real_roots = degree: {total_real} = {degree}; {in_unit} in (0,1); no off-axis zeros"
    )
    if not (total_real == degree == in_unit):
        print(f"warning: certificate failed for {P.label}: {certificate}", file=sys.stderr)
    rows = _root_rows(P, eps)
    xs = [float(r["approx"]) for r in rows][::-1]  # ascending
    from .plotting import render_zero_locus_png, render_zero_locus_svg

    if args.format == "svg":
        _write_text(args.out, render_zero_locus_svg(P.label, xs, certificate))
    elif args.format == "png":
        if not args.out:
            raise UsageError("--format png requires --out")
        render_zero_locus_png(P.label, xs, args.out, certificate)
    elif args.format == "json":
        payload = {"type": P.label, "certificate": certificate,
                   "points": [{"x": x, "y": 0.0} for x in xs]}
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        scatter = [{"x": repr(x), "y": "0.0"} for x in xs]
        _write_text(args.out, _rows_to_csv(scatter, ["x", "y"], comment=certificate))
    # render the companion figure when writing data to a file
    figure_path = args.figure
    if figure_path is None and args.out and args.format not in ("png",) and not args.no_figure:
        figure_path = str(Path(args.out).with_suffix(".png"))
    if figure_path and args.format != "png":
        render_zero_locus_png(P.label, xs, figure_path, certificate)
    return 0


# -- argument parsing -------------------------------------------------------------


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="A, B, D (with --rank), I2 (with --p), or E6..H4")
    p.add_argument("--rank", type=int, help="rank for the A/B/D series")
    p.add_argument("--p", type=int, help="dihedral parameter for I2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fzeros",
        description="Exact face polynomials of finite root systems and certified root location.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="print exact coefficients")
    _add_type_args(p_poly)
    p_poly.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_poly.add_argument("--out")
    p_poly.set_defaults(func=cmd_poly)

    p_roots = sub.add_parser("roots", help="isolating intervals for the zeros")
    _add_type_args(p_roots)
    p_roots.add_argument("--eps", help="interval width bound, e.g. 1/1099511627776")
    p_roots.add_argument("--format", choices=["csv", "json"], default="csv")
    p_roots.add_argument("--out")
    p_roots.set_defaults(func=cmd_roots)

    p_verify = sub.add_parser("verify", help="run certification suites")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    _add_type_args(p_verify)
    p_verify.add_argument("--series", choices=["A", "B", "D"])
    p_verify.add_argument("--lmax", type=int, default=10)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--out", help="write the JSON report array here")
    p_verify.add_argument("--jobs", type=int, help="worker processes (default FZEROS_JOBS or 1)")
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="smallest-root decay table for a series")
    p_scan.add_argument("--series", required=True, choices=["A", "B", "D"])
    p_scan.add_argument("--lmax", type=int, required=True)
    p_scan.add_argument("--eps", help="enclosure width bound")
    p_scan.add_argument("--bracket", action="store_true", help="add cosine bracket columns (B only)")
    p_scan.add_argument("--format", choices=["csv", "json"], default="csv")
    p_scan.add_argument("--out")
    p_scan.add_argument("--jobs", type=int)
    p_scan.set_defaults(func=cmd_scan)

    p_plot = sub.add_parser("plot", help="zero-locus scatter data and figures")
    _add_type_args(p_plot)
    p_plot.add_argument("--eps", help="refinement width for marker positions")
    p_plot.add_argument("--format", choices=["csv", "svg", "png", "json"], default="csv")
    p_plot.add_argument("--out")
    p_plot.add_argument("--figure", help="explicit path for the companion PNG figure")
    p_plot.add_argument("--no-figure", action="store_true", help="skip the companion figure")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidRank, UnsupportedType, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
