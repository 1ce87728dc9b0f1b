"""Command-line front end: exact verification sweeps, seeded sampling runs,
and the symmetric-pair impossibility demonstration.

Conventions shared by all subcommands: CSV goes to stdout (or --output),
human-oriented notes go to stderr, every run echoes its configuration into
comment lines at the top of the output, and --no-timestamp makes re-runs
byte-identical.  Exit codes: 0 success, 1 verification mismatch, 2 budget or
usage error.  Node numbering in CLI input and output is 1-based.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path

from .coloring import ColoringError, ColorState
from .graph import GraphError, build_path, parse_graph_text
from .montecarlo import MonteCarloError, defects_vs_colors_dataset
from .oracle import BudgetExceeded, EnumerationBudget
from .protocols import ProtocolError, ProtocolSpec, enumerate_protocols
from .symmetry import SymmetryError, find_symmetric_pair, impossibility_check
from .verify import run_verification

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_TRIALS = 100_000
DEFAULT_PROTOCOLS = "random,C|phi,phi|C,Cbar|CbarX"


def _header(command: str, config: list, no_timestamp: bool) -> list:
    parts = " ".join(f"{k}={v}" for k, v in config)
    lines = [f"# pathcolor {command}", f"# config: {parts}"]
    if not no_timestamp:
        lines.append(f"# generated: {datetime.now(timezone.utc).isoformat()}")
    return lines


def _emit(lines: list, output: str | None):
    text = "\n".join(lines) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
        print(f"wrote {output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _parse_c_spec(raw: str) -> list:
    """Color counts: '8', '2..40', or a comma list mixing both."""
    values = []
    for part in raw.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"empty color range {part!r}")
            values.extend(range(lo, hi + 1))
        elif part:
            values.append(int(part))
    if not values:
        raise ValueError(f"no color counts in {raw!r}")
    return values


def _parse_protocols(raw: str) -> list:
    if raw.strip() == "all32":
        return list(enumerate_protocols())
    specs = [ProtocolSpec.parse(tok.strip()) for tok in raw.split(",") if tok.strip()]
    if not specs:
        raise ProtocolError(f"no protocols in {raw!r}")
    return specs


def cmd_verify(args) -> int:
    theorems = (args.theorem,) if args.theorem else (2, 3, 4, 5)
    budget = EnumerationBudget(args.budget or 0)
    result = run_verification(
        theorems=theorems,
        n_max=args.n_max,
        c_max=args.c_max,
        only_n=args.n,
        only_c=args.c,
        budget=budget,
        workers=args.workers,
    )
    config = [
        ("theorems", "+".join(str(t) for t in theorems)),
        ("n_max", args.n_max if args.n_max is not None else "-"),
        ("c_max", args.c_max if args.c_max is not None else "-"),
        ("n", args.n if args.n is not None else "-"),
        ("c", args.c if args.c is not None else "-"),
        ("budget", budget.max_work),
        ("workers", args.workers),
    ]
    lines = _header("verify", config, args.no_timestamp)
    lines.append("theorem,n,c,d,closed_form,oracle,match")
    for r in result.rows:
        lines.append(
            f"{r.theorem},{r.n},{r.c},{r.d},{r.closed_form},{r.oracle},"
            f"{'true' if r.match else 'false'}"
        )
    _emit(lines, args.output)
    adj = result.adjudication
    if adj is not None:
        if adj.named_variant:
            print(
                f"center-correcting adjudication: variant "
                f"'{adj.named_variant}' matches the enumeration exactly",
                file=sys.stderr,
            )
        else:
            print("center-correcting adjudication:", file=sys.stderr)
            print(adj.diagnostic(), file=sys.stderr)
    if not result.ok:
        fail = result.first_failure
        if fail is not None:
            print(
                f"verification FAILED at theorem={fail.theorem} n={fail.n} "
                f"c={fail.c} d={fail.d}: {fail.closed_form} != {fail.oracle}",
                file=sys.stderr,
            )
        return EXIT_MISMATCH
    print(f"verification OK: {len(result.rows)} comparisons", file=sys.stderr)
    return EXIT_OK


def _all_cells_enumerable(n: int, c_values, budget: EnumerationBudget) -> bool:
    return all(c**n * (c - 1) ** n <= budget.max_work for c in c_values)


def cmd_simulate(args) -> int:
    c_values = _parse_c_spec(args.c)
    protocols = _parse_protocols(args.protocols)
    budget = EnumerationBudget(args.budget or 0)
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS
    if trials < 1:
        raise MonteCarloError("need at least one trial")
    mode = args.mode
    if mode == "auto":
        # exact results when every cell enumerates within budget and the
        # caller did not ask for a specific trial count
        exact_ok = args.trials is None and _all_cells_enumerable(
            args.n, c_values, budget
        )
        mode = "exact" if exact_ok else "sample"
    rows = defects_vs_colors_dataset(
        args.n,
        c_values,
        protocols,
        trials=trials,
        seed=args.seed,
        workers=args.workers,
        normalization=args.normalization,
        mode=mode,
        budget=budget,
    )
    config = [
        ("n", args.n),
        ("c", args.c),
        ("protocols", args.protocols),
        ("trials", trials),
        ("seed", args.seed),
        ("mode", mode),
        ("normalization", args.normalization),
        ("workers", args.workers),
    ]
    lines = _header("simulate", config, args.no_timestamp)
    lines.append("protocol,n,c,c_over_chi,trials,mean,stderr,normalized_mean,seed")
    for r in rows:
        lines.append(
            f"{r.protocol},{r.n},{r.c},{r.c_over_chi!r},{r.trials},"
            f"{r.mean!r},{r.stderr!r},{r.normalized_mean!r},{r.seed}"
        )
    _emit(lines, args.output)
    print(f"simulate: {len(rows)} rows (mode={mode})", file=sys.stderr)
    if args.plot:
        from .figures import render_defects_vs_colors

        render_defects_vs_colors(rows, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def _fraction_str(f) -> str:
    return str(f)  # Fraction renders as 'p/q' or 'p'


def cmd_symmetry(args) -> int:
    if args.path is not None:
        if args.path < 2:
            raise SymmetryError("need a path with at least 2 nodes")
        g = build_path(args.path)
        label = f"{args.path}-node path"
    else:
        g = parse_graph_text(Path(args.graph).read_text(encoding="utf-8"))
        label = args.graph
    pair = find_symmetric_pair(g, args.r)
    config = [
        ("graph", label),
        ("r", args.r),
        ("c", args.c),
        ("state", args.state if args.state else "-"),
        ("format", args.format),
    ]
    lines = _header("symmetry", config, args.no_timestamp)
    if pair is None:
        lines.append(
            f"no {args.r}-hop symmetric adjacent pair in this graph; "
            "the impossibility argument does not apply here"
        )
        _emit(lines, args.output)
        return EXIT_OK
    state = None
    if args.state:
        colors = tuple(int(tok) for tok in args.state.split(","))
        if len(colors) != g.node_count:
            raise SymmetryError(
                f"state has {len(colors)} colors for a {g.node_count}-node graph"
            )
        state = ColorState(colors=colors, palette_size=args.c)
    report = impossibility_check(g, pair, args.c, state=state)
    i1, j1 = pair.i + 1, pair.j + 1
    lines.append(f"pair: ({i1},{j1}) radius {pair.radius}")
    lines.append("state: (" + ",".join(str(x) for x in report.state.colors) + ")")
    if args.format == "csv":
        lines.append(
            "protocol,mask,views_equal,decisions_equal,final_defects,"
            "edge_defect_probability"
        )
        for row in report.rows:
            fd = "" if row.final_defects is None else str(row.final_defects)
            lines.append(
                f"{row.protocol.ascii_name},{row.protocol.mask},"
                f"{'true' if row.views_equal else 'false'},"
                f"{'true' if row.decisions_equal else 'false'},"
                f"{fd},{_fraction_str(row.edge_defect_probability)}"
            )
    else:
        lines.append(
            f"{'protocol':<14}{'mask':>5}  {'views=':>7}{'decides=':>9}"
            f"{'defects':>9}  P(edge defect)"
        )
        for row in report.rows:
            fd = "-" if row.final_defects is None else str(row.final_defects)
            lines.append(
                f"{row.protocol.ascii_name:<14}{row.protocol.mask:>5}"
                f"{'yes' if row.views_equal else 'no':>8}"
                f"{'yes' if row.decisions_equal else 'no':>9}"
                f"{fd:>9}  {_fraction_str(row.edge_defect_probability)}"
            )
    defective = sum(1 for r in report.rows if r.edge_defect_probability > 0)
    lines.append(
        f"summary: {defective}/{len(report.rows)} protocols leave edge "
        f"({i1},{j1}) defective with positive probability"
    )
    lines.append(f"note: {report.note}")
    _emit(lines, args.output)
    return EXIT_OK


def _common_flags(p, budget=True):
    if budget:
        p.add_argument("--budget", type=int, default=None,
                       help="max exact-enumeration work (default: "
                            "PATHCOLOR_BUDGET env var or 10^8)")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel worker processes")
    p.add_argument("--output", metavar="FILE", default=None,
                   help="write CSV/report here instead of stdout")
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the generated-at header line")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pathcolor",
        description="one-round distributed path-coloring toolkit: exact "
                    "verification, seeded sampling, impossibility checks",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify",
                       help="compare closed-form counts against enumeration")
    v.add_argument("--theorem", type=int, choices=(2, 3, 4, 5),
                   help="restrict to one sweep (default: all)")
    v.add_argument("--n-max", type=int, dest="n_max", help="cap path length")
    v.add_argument("--c-max", type=int, dest="c_max", help="cap color count")
    v.add_argument("--n", type=int, help="single path length")
    v.add_argument("--c", type=int, help="single color count")
    _common_flags(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("simulate",
                       help="normalized mean-defect dataset over color counts")
    s.add_argument("--n", type=int, default=50, help="path length")
    s.add_argument("--c", default="2..40",
                   help="color counts: '8', '2..40', or comma list")
    s.add_argument("--protocols", default=DEFAULT_PROTOCOLS,
                   help="comma list of protocol names/masks, or 'all32'")
    s.add_argument("--trials", type=int, default=None,
                   help=f"samples per cell (default {DEFAULT_TRIALS})")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", choices=("auto", "exact", "sample"),
                   default="auto",
                   help="exact enumeration, sampling, or pick by budget")
    s.add_argument("--normalization", choices=("exact", "sampled"),
                   default="exact",
                   help="divide by (n-1)/c or by a same-seed random run")
    s.add_argument("--plot", metavar="FILE", default=None,
                   help="also render the curves to this image file")
    _common_flags(s)
    s.set_defaults(func=cmd_simulate)

    y = sub.add_parser("symmetry",
                       help="find a symmetric adjacent pair and run all 32 "
                            "protocols against the mirrored state")
    grp = y.add_mutually_exclusive_group(required=True)
    grp.add_argument("--path", type=int, help="use an n-node path")
    grp.add_argument("--graph", metavar="FILE",
                     help="graph file: 'n <count>' then 'e <i> <j>' lines, "
                          "1-based")
    y.add_argument("--r", type=int, default=1, help="symmetry radius")
    y.add_argument("--c", type=int, default=2, help="palette size")
    y.add_argument("--state", default=None,
                   help="override start state, comma-separated colors")
    y.add_argument("--format", choices=("human", "csv"), default="human")
    _common_flags(y, budget=False)
    y.set_defaults(func=cmd_symmetry)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ProtocolError, GraphError, SymmetryError, ColoringError,
            MonteCarloError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
