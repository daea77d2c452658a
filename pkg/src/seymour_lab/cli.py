"""Command-line surface: analyze, verify, ci, generate.

Exit codes are stable across commands: 0 success/verified, 1 property
violation found (a counterexample edge list is emitted), 2 input or
parameter error, 3 search budget exhausted before a definitive answer.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .ci_graph import (
    build_ci,
    ci_to_dot,
    find_simple_decomposition,
    is_simple,
    theorem1_check,
)
from .cycle_decomposition import greedy_decomposition, validate_decomposition
from .digraph_core import (
    Digraph,
    conjecture_sums,
    is_balanced,
    is_dag,
    is_digon_free,
    is_eulerian,
    neighborhood_report,
    seymour_vertices,
)
from .edgelist import EdgeListFile, load_edge_list, serialize_edge_list
from .errors import (
    BudgetExhausted,
    HasDigon,
    NotApplicable,
    NotEulerian,
    SeymourLabError,
    TheoremViolation,
)
from .generators import (
    flower,
    nearly_regular_tournament,
    random_dag,
    random_eulerian_digraph,
    rotational_tournament,
)
from .skeleton import greedy_skeleton, skeleton_seymour_witnesses
from .verify import DEFAULT_DECOMPOSITION_BUDGET, SweepOptions, run_property

REPORT_SCHEMA = "seymour-lab/analysis/1"
DEFAULT_TIME_LIMIT = 60.0


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _na(reason: str) -> dict:
    return {"status": "not-applicable", "reason": reason}


def build_analysis_report(parsed: EdgeListFile, budget: int, time_limit: float) -> dict:
    digraph = parsed.digraph
    balanced = is_balanced(digraph)
    eulerian = is_eulerian(digraph)
    digon_free = is_digon_free(digraph)
    dag = is_dag(digraph)

    vertices = []
    for v in range(digraph.n):
        rec = neighborhood_report(digraph, v)
        vertices.append(
            {
                "vertex": v,
                "first": sorted(rec.first),
                "second": sorted(rec.second),
                "closed_first": sorted(rec.closed_first),
                "is_seymour": rec.is_seymour,
            }
        )

    if eulerian and digon_free:
        sums = conjecture_sums(digraph)
        conjecture = {
            "status": "ok",
            "sum_second": sums.sum_second,
            "sum_first": sums.sum_first,
            "holds": sums.holds,
        }
    else:
        conjecture = _na("requires an Eulerian digon-free digraph")

    decomposition = None
    if balanced and digon_free and digraph.arcs:
        decomposition = greedy_decomposition(digraph)
        decomposition_section = {
            "status": "ok",
            "cycles": [list(c.vertices) for c in decomposition],
            "valid": bool(validate_decomposition(digraph, decomposition)),
        }
    else:
        decomposition_section = _na("requires a nonempty balanced digon-free digraph")

    if decomposition is not None:
        ci = build_ci(digraph, decomposition)
        ci_section = {
            "status": "ok",
            "cycle_count": ci.cycle_count,
            "simple": is_simple(ci),
            "edges": [list(e) for e in ci.edges],
        }
    else:
        ci_section = _na("no decomposition available")

    skeleton = greedy_skeleton(digraph)
    skeleton_section = {
        "status": "ok",
        "arc_count": skeleton.arc_count,
        "arcs": [list(a) for a in sorted(skeleton.arcs)],
        "support": sorted(skeleton.support),
        "provenance": skeleton.provenance,
        "maximal_confirmed": skeleton.maximal,
        "invertebrate": not skeleton.arcs,
    }

    if decomposition is not None and eulerian:
        verdict = theorem1_check(digraph, decomposition)
        if verdict.applicable:
            theorem1_section = {
                "status": "pass" if verdict.passed else "fail",
                "violations": list(verdict.violations),
            }
        else:
            theorem1_section = _na("intersection graph of the greedy decomposition is not simple")
    else:
        theorem1_section = _na("requires an Eulerian digon-free digraph")

    try:
        witnesses, wreport = skeleton_seymour_witnesses(digraph, skeleton, budget=budget)
        t22_section = {
            "status": "ok",
            "witnesses": sorted(witnesses),
            "corollary_holds": wreport.corollary_holds,
            "min_out_degree_matches": wreport.min_out_degree_matches,
            "max_out_degree_matches": wreport.max_out_degree_matches,
        }
    except NotApplicable as exc:
        t22_section = _na(str(exc))

    return {
        "schema": REPORT_SCHEMA,
        "summary": {
            "n": digraph.n,
            "arc_count": digraph.arc_count,
            "min_out_degree": digraph.min_out_degree(),
            "max_out_degree": digraph.max_out_degree(),
            "balanced": balanced,
            "eulerian": eulerian,
            "digon_free": digon_free,
            "dag": dag,
        },
        "labels": {str(v): parsed.label(v) for v in range(digraph.n)},
        "vertices": vertices,
        "seymour_vertices": sorted(seymour_vertices(digraph)),
        "conjecture": conjecture,
        "decomposition": decomposition_section,
        "ci": ci_section,
        "skeleton": skeleton_section,
        "theorems": {"theorem1": theorem1_section, "t22": t22_section},
    }


def _render_text(report: dict) -> str:
    lines = []
    summary = report["summary"]
    lines.append(
        "digraph: n={n} arcs={arc_count} out-degree range {min_out_degree}..{max_out_degree}".format(
            **summary
        )
    )
    lines.append(
        "flags: balanced={balanced} eulerian={eulerian} digon_free={digon_free} dag={dag}".format(
            **summary
        )
    )
    lines.append(f"seymour vertices: {report['seymour_vertices']}")
    for name in ("conjecture", "decomposition", "ci", "skeleton"):
        section = report[name]
        if section.get("status") == "not-applicable":
            lines.append(f"{name}: not-applicable ({section['reason']})")
        else:
            body = {k: v for k, v in section.items() if k != "status"}
            lines.append(f"{name}: {body}")
    for name, section in report["theorems"].items():
        if section.get("status") == "not-applicable":
            lines.append(f"{name}: not-applicable ({section['reason']})")
        else:
            lines.append(f"{name}: {section}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    parsed = load_edge_list(args.path)
    report = build_analysis_report(parsed, args.budget, args.time_limit)
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = _render_text(report)
    _write_output(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    options = SweepOptions(
        n=args.n, trials=args.trials, seed=args.seed, budget=args.budget
    )
    outcome = run_property(args.property, options)
    print(
        f"{outcome.property_name}: checked {outcome.checked} instances, "
        f"{len(outcome.violations)} violations"
    )
    for note in outcome.notes:
        print(f"  note: {note}")
    if outcome.violations:
        first = min(outcome.violations, key=lambda v: v.instance_id)
        print(f"counterexample {first.instance_id}: {first.detail}", file=sys.stderr)
        _write_output(serialize_edge_list(first.digraph), args.out)
        return 1
    return 0


def cmd_ci(args: argparse.Namespace) -> int:
    parsed = load_edge_list(args.path)
    digraph = parsed.digraph
    if args.find_simple:
        try:
            decomposition = find_simple_decomposition(
                digraph, budget=args.budget, time_limit=args.time_limit
            )
        except BudgetExhausted as exc:
            report = {"status": "budget-exhausted", "detail": str(exc)}
            _write_output(json.dumps(report, indent=2) + "\n", args.out)
            return 3
        if decomposition is None:
            report = {
                "status": "none-exists",
                "detail": "no cycle decomposition of this digraph has a simple intersection graph",
            }
            _write_output(json.dumps(report, indent=2) + "\n", args.out)
            return 1
    else:
        if not is_eulerian(digraph):
            raise NotEulerian("input digraph is not Eulerian")
        if not is_digon_free(digraph):
            raise HasDigon("input digraph has a digon")
        decomposition = greedy_decomposition(digraph)
    ci = build_ci(digraph, decomposition)
    report = {
        "status": "ok",
        "cycles": [list(c.vertices) for c in decomposition],
        "ci": {
            "cycle_count": ci.cycle_count,
            "simple": is_simple(ci),
            "edges": [list(e) for e in ci.edges],
        },
    }
    if args.dot:
        Path(args.dot).write_text(ci_to_dot(ci, decomposition))
    _write_output(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "rotational-tournament":
        digraph = rotational_tournament(args.n)
    elif kind == "nearly-regular":
        digraph = nearly_regular_tournament(args.n)
    elif kind == "flower":
        digraph = flower(args.k, args.len)
    elif kind == "random-eulerian":
        digraph = random_eulerian_digraph(
            args.n, args.k, (args.min_len, args.max_len), args.seed
        )
    else:  # random-dag; argparse restricts the choices
        digraph = random_dag(args.n, args.p, args.seed)
    _write_output(serialize_edge_list(digraph), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seymour-lab",
        description="Cycle decompositions, intersection graphs, skeletons, "
        "and second-neighborhood checks for Eulerian digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one edge-list file")
    p.add_argument("path")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--budget", type=int, default=DEFAULT_DECOMPOSITION_BUDGET)
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("verify", help="run a theorem/conjecture sweep")
    p.add_argument("property", help="theorem1..theorem5, prop2, t22, conjecture1")
    p.add_argument("--n", type=int, default=None, help="order / size knob of the sweep")
    p.add_argument("--trials", type=int, default=None, help="random instances to draw")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_DECOMPOSITION_BUDGET)
    p.add_argument("--out", help="write a counterexample edge list here")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("ci", help="intersection graph of a decomposition")
    p.add_argument("path")
    p.add_argument("--find-simple", action="store_true",
                   help="search for a decomposition with a simple intersection graph")
    p.add_argument("--dot", help="write a DOT rendering of the intersection graph")
    p.add_argument("--budget", type=int, default=DEFAULT_DECOMPOSITION_BUDGET)
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(handler=cmd_ci)

    p = sub.add_parser("generate", help="write a generated digraph as an edge list")
    p.add_argument(
        "kind",
        choices=(
            "rotational-tournament",
            "nearly-regular",
            "flower",
            "random-eulerian",
            "random-dag",
        ),
    )
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--len", type=int, default=3)
    p.add_argument("--min-len", type=int, default=3)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.set_defaults(handler=cmd_generate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        if exc.digraph is not None:
            sys.stdout.write(serialize_edge_list(exc.digraph))
        return 1
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except SeymourLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
