"""Command-line interface.

Exit codes: 0 on success (and on verify runs with every check passing),
1 when a verify suite reports a failing check, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bnd
from .compression import normalize_with_stats
from .constructions import (
    family_identity_perturbed,
    family_independent_swaps,
    family_single_swap,
    graph_to_system,
    incidence_graph,
    lambda_construction,
    turan_graph,
    vc_remark_system,
)
from .figures import save_profile_figure, save_suite_figure, save_table1_figure
from .graphs import Graph, format_graph, parse_graph
from .permsearch import perm_extremal_exact
from .perms import build_reduction, format_family, parse_family, phi_witness
from .search import SearchResult, ex_exact, extremal_ideal_exact
from .setsystem import (
    SetSystem,
    elements_of,
    format_set_system,
    parse_set_system,
    shatter_profile,
    shatter_witness,
    vc_dimension,
)
from .suites import SUITES, DEFAULT_SEED

FORMATS = ("human", "tsv", "json")


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _emit_kv(pairs: list[tuple[str, object]], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(dict(pairs), sort_keys=True))
    elif fmt == "tsv":
        for key, value in pairs:
            if isinstance(value, (list, dict)):
                value = json.dumps(value, sort_keys=True)
            print(f"{key}\t{value}")
    else:
        for key, value in pairs:
            print(f"{key}: {value}")


def _witness_payload(witness: object) -> tuple[str, object]:
    if isinstance(witness, Graph):
        return "witness_edges", [[u, v] for u, v in witness.edges]
    if isinstance(witness, SetSystem):
        return "witness_ranges", [list(elements_of(m)) for m in witness.ranges]
    members = getattr(witness, "members", None)
    if members is not None:
        return "witness_members", [list(p.image) for p in members]
    return "witness", str(witness)


def _emit_search_result(result: SearchResult, fmt: str) -> None:
    key, payload = _witness_payload(result.witness)
    _emit_kv(
        [
            ("optimum", result.optimum),
            ("exhaustive", result.exhaustive),
            ("nodes", result.nodes_explored),
            (key, payload),
        ],
        fmt,
    )


def _figdir(args) -> Path | None:
    if getattr(args, "figdir", None) is None:
        return None
    path = Path(args.figdir)
    path.mkdir(parents=True, exist_ok=True)
    return path


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_bounds(args) -> int:
    if args.zeta:
        try:
            low, high = (int(part) for part in args.zeta.split(".."))
        except ValueError:
            raise ValueError(f"--zeta expects A..B, got {args.zeta!r}") from None
        values = [(b, bnd.zeta(b)) for b in range(low, high + 1)]
        if args.format == "json":
            print(json.dumps({"zeta": [{"b": b, "value": v} for b, v in values]}))
        else:
            sep = "\t" if args.format == "tsv" else "  "
            print(sep.join(("b", "zeta")))
            for b, v in values:
                print(sep.join((str(b), str(v))))
        return 0
    rows = bnd.table1(args.b_max)
    figdir = _figdir(args)
    if figdir is not None:
        save_table1_figure(rows, figdir / "table1.png")
    if args.format == "json":
        payload = [
            {"b": r.b, "entries": list(r.entries), "gap_flags": list(r.gap_flags)}
            for r in rows
        ]
        print(json.dumps({"rows": payload}))
        return 0
    width = max(len(r.entries) for r in rows)
    header = ["b"]
    for i in range(width // 2):
        header.extend((f"u{i}-1", f"l{i + 1}"))
    if args.format == "tsv":
        print("\t".join(header))
        for r in rows:
            print("\t".join([str(r.b)] + [str(e) for e in r.entries]))
    else:
        print("  ".join(f"{h:>6}" for h in header))
        for r in rows:
            cells = [f"{r.b:>6}"]
            for idx, entry in enumerate(r.entries):
                mark = "*" if r.gap_flags[idx // 2] else ""
                cells.append(f"{str(entry) + mark:>6}")
            print("  ".join(cells))
        print("(* marks pairs where the lower family exceeds the upper one)")
    return 0


def _cmd_shatter(args) -> int:
    system = parse_set_system(_read_text(args.input))
    figdir = _figdir(args)
    if args.b is not None:
        value, witness = shatter_witness(system, args.b)
        _emit_kv(
            [
                ("n", system.n),
                ("ranges", len(system)),
                ("b", args.b),
                ("value", value),
                ("witness", list(witness)),
            ],
            args.format,
        )
        return 0
    profile = shatter_profile(system)
    if figdir is not None:
        stem = Path(args.input).stem or "system"
        save_profile_figure({stem: profile}, figdir / f"{stem}-profile.png")
    _emit_kv(
        [
            ("n", system.n),
            ("ranges", len(system)),
            ("profile", list(profile)),
            ("vc_dimension", vc_dimension(system)),
        ],
        args.format,
    )
    return 0


def _cmd_compress(args) -> int:
    system = parse_set_system(_read_text(args.input))
    compressed, stats = normalize_with_stats(system)
    if args.trace_passes:
        for index, changed in enumerate(stats, start=1):
            print(f"pass {index}: {changed} push-downs changed the system", file=sys.stderr)
    _write_output(format_set_system(compressed), args.output)
    return 0


def _cmd_make(args) -> int:
    kind = args.kind

    def need(name: str):
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"make {kind} requires --{name}")
        return value

    if kind == "lambda":
        text = format_set_system(lambda_construction(need("n"), need("i")))
    elif kind == "vc-remark":
        text = format_set_system(vc_remark_system(need("n"), need("i")))
    elif kind == "turan":
        text = format_graph(turan_graph(need("n"), need("i")))
    elif kind == "levi":
        text = format_graph(incidence_graph(need("q")))
    elif kind == "f1":
        text = format_family(family_single_swap(need("n")))
    elif kind == "f2":
        text = format_family(family_independent_swaps(need("n")))
    elif kind == "id-perturbed":
        text = format_family(family_identity_perturbed(need("n")))
    elif kind == "graph2sys":
        graph = parse_graph(_read_text(need("input")))
        text = format_set_system(graph_to_system(graph))
    else:  # pragma: no cover - argparse already restricts choices
        raise ValueError(f"unknown construction {kind!r}")
    _write_output(text, args.output)
    return 0


def _cmd_search(args) -> int:
    if args.target == "graph-ex":
        result = ex_exact(args.n, args.m, args.k, jobs=args.jobs, node_budget=args.node_budget)
    elif args.target == "set-extremal":
        result = extremal_ideal_exact(
            args.n, [(args.b, args.k)], jobs=args.jobs, node_budget=args.node_budget
        )
    else:
        result = perm_extremal_exact(
            args.n, args.m, args.k, jobs=args.jobs, node_budget=args.node_budget
        )
    _emit_search_result(result, args.format)
    return 0


def _cmd_perm(args) -> int:
    family = parse_family(_read_text(args.input))
    if args.action == "phi":
        if args.m is None:
            raise ValueError("perm phi requires --m")
        value, witness = phi_witness(family, args.m)
        _emit_kv(
            [
                ("n", family.n),
                ("members", len(family)),
                ("m", args.m),
                ("value", value),
                ("witness", list(witness)),
            ],
            args.format,
        )
        return 0
    reduction = build_reduction(family)
    out_system = args.out_system or "reduction.ss"
    out_pairs = args.out_pairs or "pairs.tsv"
    Path(out_system).write_text(format_set_system(reduction.system), encoding="utf-8")
    pair_lines = ["index\ti\tj"]
    pair_lines.extend(
        f"{index}\t{i}\t{j}" for index, (i, j) in enumerate(reduction.ground_pairs, start=1)
    )
    Path(out_pairs).write_text("\n".join(pair_lines) + "\n", encoding="utf-8")
    _emit_kv(
        [
            ("members", len(family)),
            ("ground_pairs", len(reduction.ground_pairs)),
            ("system", out_system),
            ("pairs", out_pairs),
        ],
        args.format,
    )
    return 0


def _suite_kwargs(args) -> dict:
    name = args.suite
    kwargs: dict = {}
    if name in ("lemma2", "frankl"):
        kwargs["stretch"] = args.stretch
        kwargs["jobs"] = args.jobs
        kwargs["node_budget"] = args.node_budget
        if name == "lemma2" and args.n is not None and args.b is not None:
            kwargs["pairs"] = [(args.b, args.n)]
    elif name in ("bollobas-radcliffe", "table3", "transitions"):
        kwargs["jobs"] = args.jobs
        kwargs["node_budget"] = args.node_budget
    elif name == "lemma3":
        kwargs["seed"] = args.seed
        kwargs["cases"] = args.cases
    elif name == "compression":
        kwargs["seed"] = args.seed
        kwargs["random_cases"] = args.cases
    return kwargs


def _cmd_verify(args) -> int:
    report = SUITES[args.suite](**_suite_kwargs(args))
    figdir = _figdir(args)
    if figdir is not None:
        save_suite_figure(report, figdir / f"verify-{report.suite}.png")
    if args.format == "json":
        payload = {
            "suite": report.suite,
            "passed": report.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail, "values": c.values}
                for c in report.checks
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "tsv":
        for c in report.checks:
            values = json.dumps(c.values, sort_keys=True)
            print(f"{'PASS' if c.passed else 'FAIL'}\t{c.name}\t{values}")
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
        print(f"suite {report.suite}: {'all checks pass' if report.passed else 'FAILURES PRESENT'}")
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shatterlab",
        description="Search and verify trace bounds for set systems and permutation families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="emit the bound table or threshold values")
    p.add_argument("--b-max", type=int, default=6)
    p.add_argument("--zeta", metavar="A..B", help="emit threshold values for b in A..B instead")
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--figdir", help="also render figures into this directory")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("shatter", help="shatter statistics of a .ss file")
    p.add_argument("--input", required=True)
    p.add_argument("--b", type=int, help="single subset size instead of the full profile")
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--figdir")
    p.set_defaults(func=_cmd_shatter)

    p = sub.add_parser("compress", help="push a .ss file down to an ideal system")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--trace-passes", action="store_true", help="log per-pass change counts to stderr")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("make", help="generate a named construction")
    p.add_argument(
        "kind",
        choices=["lambda", "vc-remark", "turan", "levi", "f1", "f2", "id-perturbed", "graph2sys"],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--input", help="input .g file for graph2sys")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("search", help="exact extremal searches")
    search_sub = p.add_subparsers(dest="target", required=True)
    g = search_sub.add_parser("graph-ex", help="max edges with a cap on every m-subset")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    s = search_sub.add_parser("set-extremal", help="max ideal system size under a trace cap")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    q = search_sub.add_parser("perm-extremal", help="max family size under a restriction cap")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    for sp in (g, s, q):
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--node-budget", type=int, default=None)
        sp.add_argument("--format", choices=FORMATS, default="human")
        sp.set_defaults(func=_cmd_search)

    p = sub.add_parser("perm", help="permutation-family utilities")
    perm_sub = p.add_subparsers(dest="action", required=True)
    f = perm_sub.add_parser("phi", help="restriction count of a .pf file at one subset size")
    f.add_argument("--input", required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--format", choices=FORMATS, default="human")
    f.set_defaults(func=_cmd_perm)
    r = perm_sub.add_parser("reduce", help="write the inversion-pair system of a .pf file")
    r.add_argument("--input", required=True)
    r.add_argument("--out-system")
    r.add_argument("--out-pairs")
    r.add_argument("--format", choices=FORMATS, default="human")
    r.set_defaults(func=_cmd_perm)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, help="narrow lemma2 to one ground-set size (with --b)")
    p.add_argument("--b", type=int, help="narrow lemma2 to one subset size (with --n)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--stretch", action="store_true", help="include the larger stretch instances")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--figdir")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
