"""Command-line front end: single queries, sweeps, verification, conjecture reports.

Output is deterministic by construction: rows are collected, ordered by
(n, s) and emitted with LF endings and a fixed field order, so identical
invocations are byte-identical. Exit codes: 0 ok, 1 usage or parameter
error, 2 verification mismatch (a finding, reported loudly, not a crash).
"""

from __future__ import annotations

import argparse
import json
import sys
import textwrap
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bfs_oracle import (
    bfs_distances,
    circulant_diameter_by_bfs,
    gpg_diameter_by_bfs,
)
from .circulant_distance import circulant_diameter, d_c_all
from .core_graphs import CirculantParams, GpgParams, build_circulant, normalize_s
from .epsilon_classifier import classify_epsilon, conjecture_scan
from .gpg_closed_form import (
    CaseKind,
    classify_case,
    gpg_diameter,
    upper_bound_circulant,
    upper_bound_gpg,
)

SWEEP_CSV_HEADER = "n,s,lambda,gamma,d_circulant,d_gpg,epsilon,method,upper_bound,verified"
CONJECTURE_CSV_HEADER = "n,s,epsilon_observed,epsilon_predicted,classification"

_CLOSED_FORM_KINDS = frozenset(
    {
        CaseKind.GAMMA_ZERO,
        CaseKind.EVEN_ODD,
        CaseKind.EVEN_EVEN,
        CaseKind.ODD_ODD,
        CaseKind.ODD_EVEN,
        CaseKind.SPECIAL_4P,
    }
)


@dataclass(frozen=True)
class SweepRow:
    n: int
    s: int
    lam: int
    gamma: int
    d_circulant: int
    d_gpg: int
    epsilon: int
    method: str
    upper_bound: int
    verified: bool

    def csv_line(self) -> str:
        flag = "true" if self.verified else "false"
        return (
            f"{self.n},{self.s},{self.lam},{self.gamma},{self.d_circulant},"
            f"{self.d_gpg},{self.epsilon},{self.method},{self.upper_bound},{flag}"
        )

    def json_line(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "s": self.s,
                "lambda": self.lam,
                "gamma": self.gamma,
                "d_circulant": self.d_circulant,
                "d_gpg": self.d_gpg,
                "epsilon": self.epsilon,
                "method": self.method,
                "upper_bound": self.upper_bound,
                "verified": self.verified,
            }
        )


def _valid_skips(n: int) -> range:
    return range(2, (n - 1) // 2 + 1)


def compute_sweep_row(n: int, s: int, verify: bool) -> SweepRow:
    result = gpg_diameter(n, s)
    derived = result.method.derived
    verified = False
    if verify:
        verified = (
            circulant_diameter_by_bfs(CirculantParams(n, derived.s)) == result.d_circulant
            and gpg_diameter_by_bfs(GpgParams(n, derived.s)) == result.d_gpg
        )
    return SweepRow(
        n=n,
        s=s,
        lam=derived.lam,
        gamma=derived.gamma,
        d_circulant=result.d_circulant,
        d_gpg=result.d_gpg,
        epsilon=result.epsilon,
        method=result.method.kind.value,
        upper_bound=upper_bound_gpg(n, s),
        verified=verified,
    )


def _sweep_worker(task: tuple[int, int, bool]) -> SweepRow:
    return compute_sweep_row(*task)


def _emit(lines: list[str], output: str | None) -> None:
    if output is None:
        out = sys.stdout
        for line in lines:
            out.write(line + "\n")
        return
    with open(output, "w", encoding="utf-8", newline="") as fh:
        for line in lines:
            fh.write(line + "\n")
    print(f"wrote {len(lines)} lines to {output}", file=sys.stderr)


def cmd_diameter(n: int, s: int, verify: bool = False) -> int:
    """One instance: formula diameters, gap, method, and optional BFS check."""
    result = gpg_diameter(n, s)
    line = (
        f"d_circulant={result.d_circulant} d_gpg={result.d_gpg} "
        f"ε={result.epsilon} method={result.method.kind.value}"
    )
    code = 0
    if verify:
        s_norm = result.method.derived.s
        bfs_circ = circulant_diameter_by_bfs(CirculantParams(n, s_norm))
        bfs_gpg = gpg_diameter_by_bfs(GpgParams(n, s_norm))
        ok = bfs_circ == result.d_circulant and bfs_gpg == result.d_gpg
        line += f" verified={'true' if ok else 'false'}"
        if not ok:
            print(
                f"MISMATCH at (n={n}, s={s_norm}): formula "
                f"(d_circulant={result.d_circulant}, d_gpg={result.d_gpg}) vs "
                f"BFS (d_circulant={bfs_circ}, d_gpg={bfs_gpg})",
                file=sys.stderr,
            )
            code = 2
    print(line)
    u, v = result.witnesses[0]
    print(f"witness_circulant=({u},{v})")
    return code


def cmd_sweep(
    n_min: int,
    n_max: int,
    verify: bool = False,
    fmt: str = "csv",
    jobs: int = 1,
    output: str | None = None,
) -> int:
    """One row per valid (n, s), n ascending then s ascending; collect-then-emit."""
    if n_min < 5 or n_min > n_max:
        print(f"error: need 5 <= n_min <= n_max, got {n_min}..{n_max}", file=sys.stderr)
        return 1
    if fmt not in ("csv", "jsonl"):
        print(f"error: unknown format {fmt!r}", file=sys.stderr)
        return 1
    tasks = [(n, s, verify) for n in range(n_min, n_max + 1) for s in _valid_skips(n)]
    if jobs > 1:
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_worker, tasks, chunksize=chunk))
    else:
        rows = [_sweep_worker(task) for task in tasks]
    if fmt == "csv":
        lines = [SWEEP_CSV_HEADER] + [row.csv_line() for row in rows]
    else:
        lines = [row.json_line() for row in rows]
    _emit(lines, output)
    mismatches = [row for row in rows if verify and not row.verified]
    for row in mismatches:
        print(f"MISMATCH at (n={row.n}, s={row.s})", file=sys.stderr)
    return 2 if mismatches else 0


def cmd_verify(n_max: int) -> int:
    """Formula-vs-oracle suites over every (n, s) up to n_max; exit 2 on any failure."""
    if n_max < 8:
        print(f"error: need n_max >= 8, got {n_max}", file=sys.stderr)
        return 1
    suite_names = (
        "formula distance vs BFS",
        "chord-ride diameter vs BFS",
        "closed form vs BFS",
        "gap classifier vs BFS",
        "sandwich and upper bounds",
    )
    checked = dict.fromkeys(suite_names, 0)
    failures: list[str] = []

    def check(suite: str, ok: bool, detail: str) -> None:
        checked[suite] += 1
        if not ok:
            failures.append(f"FAIL [{suite}] {detail}")

    for n in range(5, n_max + 1):
        for s in _valid_skips(n):
            circ = build_circulant(CirculantParams(n, s))
            dist0 = bfs_distances(circ, 0).dist
            arr = d_c_all(n, s)
            for i in range(1, n):
                check(
                    suite_names[0],
                    int(arr[i]) == dist0[i],
                    f"(n={n}, s={s}, i={i}): formula {int(arr[i])}, BFS {dist0[i]}",
                )
            d_circ_bfs = max(dist0)
            d_alg = circulant_diameter(n, s).value
            check(
                suite_names[1],
                d_alg == d_circ_bfs,
                f"(n={n}, s={s}): formula diameter {d_alg}, BFS {d_circ_bfs}",
            )
            d_gpg_bfs = gpg_diameter_by_bfs(GpgParams(n, s))
            eps_bfs = d_gpg_bfs - d_circ_bfs
            result = gpg_diameter(n, s)
            if result.method.kind in _CLOSED_FORM_KINDS:
                check(
                    suite_names[2],
                    result.d_gpg == d_gpg_bfs,
                    f"(n={n}, s={s}, {result.method.kind.value}): "
                    f"closed form {result.d_gpg}, BFS {d_gpg_bfs}",
                )
            if n >= 8:
                eps = classify_epsilon(n, s).epsilon
                check(
                    suite_names[3],
                    eps == eps_bfs,
                    f"(n={n}, s={s}): classifier {eps}, BFS {eps_bfs}",
                )
            check(
                suite_names[4],
                eps_bfs in (1, 2)
                and upper_bound_gpg(n, s) >= d_gpg_bfs
                and upper_bound_circulant(n, s) >= d_circ_bfs,
                f"(n={n}, s={s}): gap {eps_bfs}, bounds "
                f"{upper_bound_gpg(n, s)}/{upper_bound_circulant(n, s)} vs "
                f"BFS {d_gpg_bfs}/{d_circ_bfs}",
            )

    print("=" * 70)
    print(f"verification sweep: n in 5..{n_max}")
    print("=" * 70)
    for line in failures[:50]:
        print(line)
    if len(failures) > 50:
        print(f"... and {len(failures) - 50} more failures")
    per_suite_failed = {name: 0 for name in suite_names}
    for line in failures:
        for name in suite_names:
            if f"[{name}]" in line:
                per_suite_failed[name] += 1
    for name in suite_names:
        print(f"{name}: {checked[name]} checked, {per_suite_failed[name]} failures")
    print("=" * 70)
    if failures:
        print(f"RESULT: {len(failures)} failure(s)")
        return 2
    print("RESULT: all suites passed")
    return 0


def cmd_conjecture(n_max: int, fmt: str = "text", output: str | None = None) -> int:
    """Render the oracle sweep vs the predicted gap-1 family; always exits 0."""
    report = conjecture_scan(n_max)
    if fmt in ("csv", "jsonl"):
        rows: dict[tuple[int, int], tuple[int, int, str]] = {}
        predicted = set(report.predicted)
        for pair in report.epsilon_one:
            expected = 1 if pair in predicted else 2
            if pair in report.small_n_exceptions:
                kind = "small_ring_exception"
            elif expected == 1:
                kind = "predicted"
            else:
                kind = "discrepancy"
            rows[pair] = (1, expected, kind)
        for n, s, observed, expected in report.discrepancies:
            rows[(n, s)] = (observed, expected, "discrepancy")
        lines = [] if fmt == "jsonl" else [CONJECTURE_CSV_HEADER]
        for (n, s), (observed, expected, kind) in sorted(rows.items()):
            if fmt == "csv":
                lines.append(f"{n},{s},{observed},{expected},{kind}")
            else:
                lines.append(
                    json.dumps(
                        {
                            "n": n,
                            "s": s,
                            "epsilon_observed": observed,
                            "epsilon_predicted": expected,
                            "classification": kind,
                        }
                    )
                )
        _emit(lines, output)
        return 0

    def pair_block(pairs: tuple[tuple[int, int], ...]) -> str:
        if not pairs:
            return "  (none)"
        text = " ".join(f"({n},{s})" for n, s in pairs)
        return textwrap.fill(text, width=78, initial_indent="  ", subsequent_indent="  ")

    lines = [
        f"conjecture scan: n in {report.n_min}..{report.n_max}",
        f"observed epsilon=1 instances: {len(report.epsilon_one)}",
        pair_block(report.epsilon_one),
        f"predicted gap-1 family (4p, 2p-1), p > 2: {len(report.predicted)}",
        pair_block(report.predicted),
        f"known small-ring exceptions: {len(report.small_n_exceptions)}",
        pair_block(report.small_n_exceptions),
        f"discrepancies: {len(report.discrepancies)}",
    ]
    for n, s, observed, expected in report.discrepancies:
        lines.append(f"  (n={n}, s={s}): observed epsilon={observed}, predicted {expected}")
    _emit(lines, output)
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; 2 is reserved here
    # for verification mismatches, so usage errors are remapped to 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        config = json.load(fh)
    if not isinstance(config, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    return config


def _resolve_output(output: str | None, config: dict) -> str | None:
    if output is None:
        output = config.get("output")
    out_dir = config.get("output_dir")
    if output is not None and out_dir and not output.startswith("/"):
        return f"{out_dir.rstrip('/')}/{output}"
    return output


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        metavar="PATH",
        help="JSON config supplying defaults (n_min, n_max, format, jobs, output, "
        "output_dir); explicit flags win",
    )
    parser = _Parser(
        prog="gpgdiam",
        description="Exact diameters of generalized Petersen graphs and their "
        "circulant contractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_diam = sub.add_parser(
        "diameter", parents=[common], help="diameters and gap for one (n, s)"
    )
    p_diam.add_argument("n", type=int)
    p_diam.add_argument("s", type=int)
    p_diam.add_argument("--verify", action="store_true", help="check against BFS")

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="one row per (n, s) over a ring-size range"
    )
    p_sweep.add_argument("n_min", type=int, nargs="?", default=None)
    p_sweep.add_argument("n_max", type=int, nargs="?", default=None)
    p_sweep.add_argument("--verify", action="store_true", help="check rows against BFS")
    p_sweep.add_argument("--format", choices=("csv", "jsonl"), default=None)
    p_sweep.add_argument("--jobs", type=int, default=None, metavar="N")
    p_sweep.add_argument("--output", metavar="PATH", default=None)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="formula-vs-oracle suites up to n_max"
    )
    p_verify.add_argument("n_max", type=int)

    p_conj = sub.add_parser(
        "conjecture", parents=[common], help="oracle gap sweep vs the predicted family"
    )
    p_conj.add_argument("n_max", type=int)
    p_conj.add_argument("--format", choices=("text", "csv", "jsonl"), default=None)
    p_conj.add_argument("--output", metavar="PATH", default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        if args.command == "diameter":
            return cmd_diameter(args.n, args.s, verify=args.verify)
        if args.command == "sweep":
            n_min = args.n_min if args.n_min is not None else config.get("n_min")
            n_max = args.n_max if args.n_max is not None else config.get("n_max")
            if n_min is None or n_max is None:
                parser.error("sweep needs n_min and n_max (directly or via --config)")
            return cmd_sweep(
                int(n_min),
                int(n_max),
                verify=args.verify,
                fmt=args.format or config.get("format", "csv"),
                jobs=int(args.jobs if args.jobs is not None else config.get("jobs", 1)),
                output=_resolve_output(args.output, config),
            )
        if args.command == "verify":
            return cmd_verify(args.n_max)
        return cmd_conjecture(
            args.n_max,
            fmt=args.format or config.get("format", "text"),
            output=_resolve_output(args.output, config),
        )
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
