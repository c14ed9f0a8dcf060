"""Command-line harness: solve, emit, verify, generate, and suite runs.

Exit codes: 0 on success, 1 on runtime errors (unreadable files, bad
labels, verification failures, and infeasible results under --strict),
2 on bad command lines (argparse).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import cp as cp_mod
from . import ilp
from .domination import (
    ProblemKind,
    format_assignment,
    is_feasible,
    neighborhood_sum,
    parse_assignment,
    weight,
)
from .exact import SolveResult, SolveStatus, branch_and_bound, brute_force
from .graphs import (
    Graph,
    InstanceLabel,
    build_from_label,
    format_edge_list,
    load_edge_list,
)
from .vns import VnsParams, run_vns

EXACT_METHODS = ("brute", "exact-bb")
SOLVE_METHODS = ("brute", "exact-bb", "vns")
SUITE_METHODS = SOLVE_METHODS + ("emit-rr", "emit-bvv", "emit-cp")
CSV_COLUMNS = ("instance", "problem", "method", "seed", "status", "value", "time_ms", "counter")


class CliError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        return load_edge_list(path)
    except OSError as exc:
        raise CliError(f"cannot read graph file {path!r}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"bad graph file {path!r}: {exc}") from exc


def _vns_params(args, kind: ProblemKind, seed: int) -> VnsParams:
    return VnsParams(
        kind=kind,
        k_min=args.kmin,
        k_max=args.kmax,
        it_max=args.itmax,
        prob=args.prob,
        seed=seed,
        time_limit=args.time_limit,
    )


def _dispatch_solve(method: str, g: Graph, kind: ProblemKind, args, seed: int) -> SolveResult:
    if method == "brute":
        return brute_force(g, kind, max_n=args.max_n)
    if method == "exact-bb":
        return branch_and_bound(g, kind, time_limit=args.time_limit)
    if method == "vns":
        return run_vns(g, _vns_params(args, kind, seed))
    raise CliError(f"unknown method {method!r}")


def _result_payload(result: SolveResult, instance, kind, method, seed) -> dict:
    payload = {
        "instance": instance,
        "problem": kind.value,
        "method": method,
        "seed": seed,
        "status": result.status.value,
        "value": result.best_value,
        "assignment": (
            format_assignment(result.best_assignment)
            if result.best_assignment is not None
            else None
        ),
        "time_ms": round(result.elapsed_ms, 3),
        "counter": result.counter,
    }
    return payload


def _print_payload(payload: dict, as_json: bool, out=sys.stdout) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True), file=out)
        return
    for key in ("instance", "problem", "method", "seed", "status", "value",
                "assignment", "time_ms", "counter", "detail"):
        if key in payload and payload[key] is not None:
            print(f"{key}: {payload[key]}", file=out)


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    kind = ProblemKind(args.problem)
    result = _dispatch_solve(args.method, g, kind, args, args.seed)
    if result.best_assignment is not None:
        # every solution printed or written is re-verified first
        if not is_feasible(g, result.best_assignment, kind):
            raise CliError("internal error: solver returned an infeasible assignment")
        if weight(result.best_assignment) != result.best_value:
            raise CliError("internal error: reported value differs from the weight")
    if args.method == "vns" and args.certify and result.status is SolveStatus.FEASIBLE:
        reference = branch_and_bound(g, kind, time_limit=args.time_limit)
        if (
            reference.status is SolveStatus.OPTIMAL
            and reference.best_value == result.best_value
        ):
            result.status = SolveStatus.OPTIMAL
    payload = _result_payload(result, args.graph, kind, args.method, args.seed)
    _print_payload(payload, args.json)
    if args.out and result.best_assignment is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_assignment(result.best_assignment) + "\n")
    if args.strict and result.status in (SolveStatus.INFEASIBLE, SolveStatus.TIMEOUT):
        return 1
    return 0


def _emit_text(g: Graph, kind: ProblemKind, formulation: str, fmt: str) -> str:
    if formulation == "cp":
        if fmt != "cp":
            raise CliError("formulation cp only emits --format cp")
        return cp_mod.emit_cp(cp_mod.build_cp(g, kind))
    if fmt == "cp":
        raise CliError("--format cp requires --formulation cp")
    model = ilp.build_model(g, kind, formulation)
    return ilp.emit_lp(model) if fmt == "lp" else ilp.emit_mps(model)


def cmd_emit(args) -> int:
    g = _load_graph(args.graph)
    kind = ProblemKind(args.problem)
    text = _emit_text(g, kind, args.formulation, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    kind = ProblemKind(args.problem)
    try:
        with open(args.solution, "r", encoding="utf-8") as fh:
            z = parse_assignment(fh.read(), g.n)
    except OSError as exc:
        raise CliError(f"cannot read solution file {args.solution!r}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"bad solution file {args.solution!r}: {exc}") from exc
    feasible = is_feasible(g, z, kind)
    if feasible:
        message = f"feasible, weight {weight(z)}"
    else:
        problems = []
        for i in range(g.n):
            if z[i] == -1 and not any(z[j] == 2 for j in g.adjacency[i]):
                problems.append(f"vertex {i} has value -1 and no neighbor valued 2")
            s = neighborhood_sum(g, z, i, kind)
            if s < 1:
                problems.append(f"neighborhood sum at vertex {i} is {s} < 1")
        message = "infeasible: " + "; ".join(problems[:5])
    if args.json:
        print(json.dumps({"feasible": feasible, "weight": weight(z), "detail": message},
                         sort_keys=True))
    else:
        print(message)
    return 0 if feasible else 1


def cmd_generate(args) -> int:
    try:
        label = InstanceLabel.from_text(args.label)
        g = build_from_label(label, fallback_seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    text = format_edge_list(g, comment=f"instance: {label}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# Suite runner


def _read_manifest(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise CliError(f"cannot read manifest {path!r}: {exc}") from exc
    entries = []
    for raw in lines:
        line = raw.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


def _resolve_instance(entry: str, fallback_seed: int) -> tuple[str, Graph]:
    """A manifest entry is a path to an edge-list file or a generator label."""
    if os.path.exists(entry):
        name = os.path.splitext(os.path.basename(entry))[0]
        return name, load_edge_list(entry)
    label = InstanceLabel.from_text(entry)
    return str(label), build_from_label(label, fallback_seed)


def _instance_class(name: str) -> str:
    return name.split("-")[0] if "-" in name else name


def run_suite(
    entries: list[str],
    methods: list[str],
    kinds: list[ProblemKind],
    seeds: list[int],
    args,
    emit_dir: str | None = None,
) -> list[dict]:
    """One record per (instance, problem, method[, seed]) cell, followed by
    per-class summary records mirroring the usual benchmark-table layout
    (#opt, #best, average value, average time)."""
    rows: list[dict] = []
    resolved: list[tuple[str, Graph | None, str | None]] = []
    for entry in entries:
        try:
            name, g = _resolve_instance(entry, args.seed)
            resolved.append((name, g, None))
        except (ValueError, OSError) as exc:
            resolved.append((entry, None, str(exc)))
    for name, g, error in resolved:
        for kind in kinds:
            for method in methods:
                method_seeds = seeds if method == "vns" else [args.seed]
                for seed in method_seeds:
                    row = {
                        "instance": name,
                        "problem": kind.value,
                        "method": method,
                        "seed": seed if method == "vns" else "",
                        "status": "",
                        "value": "",
                        "time_ms": "",
                        "counter": "",
                    }
                    if error is not None:
                        row["status"] = "error"
                        row["counter"] = error
                        rows.append(row)
                        continue
                    try:
                        if method.startswith("emit-"):
                            formulation = method.split("-", 1)[1]
                            fmt = "cp" if formulation == "cp" else "lp"
                            t0 = time.perf_counter()
                            text = _emit_text(g, kind, formulation, fmt)
                            elapsed = (time.perf_counter() - t0) * 1e3
                            if emit_dir:
                                os.makedirs(emit_dir, exist_ok=True)
                                filename = f"{name}.{kind.value}.{formulation}.{fmt}"
                                with open(os.path.join(emit_dir, filename), "w",
                                          encoding="utf-8") as fh:
                                    fh.write(text)
                            row["status"] = "emitted"
                            row["time_ms"] = f"{elapsed:.3f}"
                            row["counter"] = len(text.splitlines())
                        else:
                            result = _dispatch_solve(method, g, kind, args, seed)
                            if result.best_assignment is not None and not is_feasible(
                                g, result.best_assignment, kind
                            ):
                                raise CliError("solver returned an infeasible assignment")
                            row["status"] = result.status.value
                            row["value"] = "" if result.best_value is None else result.best_value
                            row["time_ms"] = f"{result.elapsed_ms:.3f}"
                            row["counter"] = result.counter
                    except (CliError, ValueError) as exc:
                        row["status"] = "error"
                        row["counter"] = str(exc)
                    rows.append(row)

    _upgrade_vns_rows(rows)
    rows.extend(_summary_rows(rows))
    return rows


def _upgrade_vns_rows(rows: list[dict]) -> None:
    """Mark vns rows optimal when an exact method proved the same value."""
    reference: dict[tuple[str, str], int] = {}
    for row in rows:
        if row["method"] in EXACT_METHODS and row["status"] == "optimal":
            key = (row["instance"], row["problem"])
            value = int(row["value"])
            if key not in reference or value < reference[key]:
                reference[key] = value
    for row in rows:
        if row["method"] == "vns" and row["status"] == "feasible" and row["value"] != "":
            key = (row["instance"], row["problem"])
            if key in reference and int(row["value"]) == reference[key]:
                row["status"] = "optimal"


def _summary_rows(rows: list[dict]) -> list[dict]:
    solved = [r for r in rows if r["status"] in ("optimal", "feasible") and r["value"] != ""]
    if not solved:
        return []
    # per-instance best value achieved by each method (best over seeds)
    per_cell: dict[tuple[str, str, str], int] = {}
    per_cell_times: dict[tuple[str, str, str], list[float]] = {}
    references: dict[tuple[str, str], int] = {}
    for r in solved:
        cell = (r["instance"], r["problem"], r["method"])
        value = int(r["value"])
        per_cell[cell] = min(value, per_cell.get(cell, value))
        per_cell_times.setdefault(cell, []).append(float(r["time_ms"]))
        if r["method"] in EXACT_METHODS and r["status"] == "optimal":
            key = (r["instance"], r["problem"])
            references[key] = min(value, references.get(key, value))
    best_by_instance: dict[tuple[str, str], int] = {}
    for (instance, problem, _method), value in per_cell.items():
        key = (instance, problem)
        best_by_instance[key] = min(value, best_by_instance.get(key, value))
    groups: dict[tuple[str, str, str], list[tuple[str, int]]] = {}
    for (instance, problem, method), value in per_cell.items():
        groups.setdefault((_instance_class(instance), problem, method), []).append(
            (instance, value)
        )
    summaries = []
    for (cls, problem, method) in sorted(groups):
        cells = groups[(cls, problem, method)]
        n_best = sum(
            1 for instance, value in cells if value == best_by_instance[(instance, problem)]
        )
        n_opt = sum(
            1
            for instance, value in cells
            if (instance, problem) in references and value == references[(instance, problem)]
        )
        values = [value for _, value in cells]
        times: list[float] = []
        for instance, _ in cells:
            times.extend(per_cell_times[(instance, problem, method)])
        summaries.append(
            {
                "instance": cls,
                "problem": problem,
                "method": method,
                "seed": "",
                "status": "summary",
                "value": f"{sum(values) / len(values):.2f}",
                "time_ms": f"{sum(times) / len(times):.3f}",
                "counter": f"opt={n_opt};best={n_best};n={len(cells)}",
            }
        )
    return summaries


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: row.get(key, "") for key in CSV_COLUMNS})
    return buf.getvalue()


def cmd_suite(args) -> int:
    entries = _read_manifest(args.manifest)
    kinds = [ProblemKind(p) for p in args.problems]
    for method in args.methods:
        if method not in SUITE_METHODS:
            raise CliError(f"unknown suite method {method!r}")
    rows = run_suite(entries, list(args.methods), kinds, list(args.seeds), args,
                     emit_dir=args.emit_dir)
    text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedroman",
        description="Signed (total) Roman domination: exact solvers, model emission, VNS",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_problem(p):
        p.add_argument("--problem", choices=("srdp", "strdp"), required=True)

    def add_vns_flags(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--itmax", type=int, default=50_000)
        p.add_argument("--kmin", type=int, default=2)
        p.add_argument("--kmax", type=int, default=30)
        p.add_argument("--prob", type=float, default=0.5)

    p_solve = sub.add_parser("solve", help="solve one instance with one method")
    add_problem(p_solve)
    p_solve.add_argument("--method", choices=SOLVE_METHODS, required=True)
    p_solve.add_argument("--graph", required=True)
    add_vns_flags(p_solve)
    p_solve.add_argument("--time-limit", type=float, default=None, metavar="SEC")
    p_solve.add_argument("--max-n", type=int, default=15, help="brute-force size cap")
    p_solve.add_argument("--out", default=None, help="write the assignment here")
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--strict", action="store_true",
                         help="exit nonzero on infeasible or timed-out results")
    p_solve.add_argument("--certify", action="store_true",
                         help="after vns, prove optimality with branch and bound")
    p_solve.set_defaults(func=cmd_solve)

    p_emit = sub.add_parser("emit", help="emit an ILP or CP model as text")
    add_problem(p_emit)
    p_emit.add_argument("--formulation", choices=("rr", "bvv", "cp"), required=True)
    p_emit.add_argument("--format", choices=("lp", "mps", "cp"), required=True)
    p_emit.add_argument("--graph", required=True)
    p_emit.add_argument("--out", default=None)
    p_emit.set_defaults(func=cmd_emit)

    p_verify = sub.add_parser("verify", help="check a solution file")
    add_problem(p_verify)
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--solution", required=True)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("generate", help="generate a synthetic instance")
    p_gen.add_argument("--label", required=True,
                       help="grid-RxC | net-RxC | bipartite-A-B-PCT | random-N-PCT, "
                            "optionally suffixed -s<seed>")
    p_gen.add_argument("--seed", type=int, default=0,
                       help="seed used when the label does not carry one")
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_generate)

    p_suite = sub.add_parser("suite", help="run a manifest of instances and methods")
    p_suite.add_argument("--manifest", required=True,
                         help="text file: one edge-list path or label per line")
    p_suite.add_argument("--problems", nargs="+", default=["srdp", "strdp"],
                         choices=("srdp", "strdp"))
    p_suite.add_argument("--methods", nargs="+", default=["brute", "exact-bb", "vns"])
    p_suite.add_argument("--seeds", nargs="+", type=int, default=[0],
                         help="vns seeds; exact methods run once")
    add_vns_flags(p_suite)
    p_suite.add_argument("--time-limit", type=float, default=60.0, metavar="SEC")
    p_suite.add_argument("--max-n", type=int, default=15)
    p_suite.add_argument("--emit-dir", default=None,
                         help="directory for models written by emit-* methods")
    p_suite.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p_suite.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
