"""Command line interface: ``colorcomplex <subcommand> ...``.

Exit status of ``scan``: 0 when no Tutte witness was found, 3 when at least
one was.  Input errors exit with 1.
"""

import argparse
import json
import logging
import sys
from collections import defaultdict
from pathlib import Path

from . import __version__
from .coloring import enumerate_colorings, homology_degree, parity
from .complex import (
    ColoringComplex,
    build_complex,
    components,
    export_complex,
    kempe_classes,
)
from .constructions import builtin, q_k, q_k_prime, stack_vertex, triangle_sum
from .enumeration import enumerate_triangulations
from .errors import ColorComplexError, NoColorings
from .planarcode import read_planar_code, write_planar_code
from .scan import analyze_graph, read_report, scan, validate_records, write_report
from .surface import Triangulation

log = logging.getLogger("colorcomplex")

EXIT_WITNESSES = 3


def resolve_graphs(spec: str) -> list[Triangulation]:
    """A planar_code file path, ``qk:K``, ``qkprime:K``, or a builtin name."""
    path = Path(spec)
    if path.is_file():
        with open(path, "rb") as fh:
            return read_planar_code(fh)
    family, _, arg = spec.partition(":")
    if family in ("qk", "qkprime") and arg:
        k = int(arg)
        return [(q_k if family == "qk" else q_k_prime)(k)[0]]
    return [builtin(spec)]


def _one_graph(spec: str) -> Triangulation:
    graphs = resolve_graphs(spec)
    if len(graphs) != 1:
        raise SystemExit(f"{spec}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def parse_n_range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    return range(int(lo), int(hi if sep else lo) + 1)


def describe_components(rows) -> str:
    if not rows:
        return "no 4-colorings"
    if len(rows) == 1:
        c = rows[0][0]
        return f"connected (1 component, {c} coloring{'s' * (c != 1)}, {rows[0][2]})"
    groups = defaultdict(list)
    for count, _, par in rows:
        groups[par].append(count)
    parts = []
    for par in ("odd", "even"):
        counts = groups.get(par)
        if not counts:
            continue
        if len(counts) == 1:
            detail = f"{counts[0]} coloring{'s' * (counts[0] != 1)}"
        elif len(set(counts)) == 1:
            detail = f"{counts[0]} each"
        else:
            detail = ", ".join(map(str, counts)) + " colorings"
        parts.append(f"{len(counts)} {par} ({detail})")
    return f"{len(rows)} components: " + ", ".join(parts)


def analysis_document(T: Triangulation, graph_id: int) -> dict:
    rec = analyze_graph(T, graph_id)
    doc = {"record": json.loads(rec.to_json())}
    cols = enumerate_colorings(T)
    if cols:
        B = build_complex(T, cols)
        comps = components(B)
        doc["num_classes"] = len(B.classes)
        doc["colorings"] = [
            {
                "classes": [list(c) for c in f.classes],
                "parity": parity(T, f).value,
                "homology_degree": homology_degree(T, f),
                "component": next(i for i, c in enumerate(comps) if k in c.colorings),
            }
            for k, f in enumerate(cols)
        ]
        doc["kempe_classes"] = kempe_classes(T, cols)
    else:
        doc["num_classes"] = 0
        doc["colorings"] = []
        doc["kempe_classes"] = []
    return doc


def format_analysis(doc: dict) -> str:
    rec = doc["record"]
    lines = [
        f"graph {rec['graph_id']}: n={rec['n']}, Euler genus {rec['euler_genus']}, "
        f"connectivity {rec['connectivity']}",
        f"  colorings: {rec['num_colorings']}",
        f"  complex: {doc['num_classes']} classes; {describe_components(rec['components'])}",
    ]
    for i, (count, nclasses, par) in enumerate(rec["components"]):
        lines.append(f"    component {i}: {par}, {count} colorings, {nclasses} classes")
    if doc["colorings"]:
        degs = sorted({c["homology_degree"] for c in doc["colorings"]})
        lines.append(f"  kempe classes: {len(doc['kempe_classes'])}")
        lines.append(f"  homology degrees: {degs}")
    lines.append(f"  tutte witness: {'yes' if rec['tutte_witness'] else 'no'}; "
                 f"same-parity violation: {'yes' if rec['conjecture_violation'] else 'no'}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    docs = []
    for gid, T in enumerate(resolve_graphs(args.input)):
        doc = analysis_document(T, gid)
        docs.append(doc)
        print(format_analysis(doc))
        if args.figures and doc["record"]["num_components"]:
            from .plotting import plot_components
            from .scan import ScanRecord

            rec = ScanRecord.from_dict(doc["record"])
            path = plot_components(rec, Path(args.figures) / f"components_{gid}.png")
            log.info("wrote %s", path)
    if args.json:
        Path(args.json).write_text(json.dumps(docs, indent=1) + "\n")
    return 0


def _parse_face(text):
    return tuple(int(x) for x in text.split(",")) if text else None


def cmd_generate(args) -> int:
    fam = args.family
    if fam in ("qk", "qkprime"):
        if args.k is None or args.k < 0:
            raise SystemExit("generate qk/qkprime needs --k >= 0")
        graphs = [(q_k if fam == "qk" else q_k_prime)(args.k)[0]]
    elif fam == "builtin":
        if not args.param:
            raise SystemExit("generate builtin needs a graph name")
        graphs = [builtin(args.param)]
    elif fam == "stack":
        T = _one_graph(args.base or args.param or "example1")
        face = _parse_face(args.face)
        for _ in range(args.times):
            T = stack_vertex(T, face or T.faces[0])
        graphs = [T]
    elif fam == "trisum":
        if not (args.lhs and args.rhs):
            raise SystemExit("generate trisum needs --lhs and --rhs")
        G, H = _one_graph(args.lhs), _one_graph(args.rhs)
        fg = _parse_face(args.lhs_face) or G.faces[0]
        fh = _parse_face(args.rhs_face) or H.faces[0]
        corr = _parse_face(args.corr) or fh
        graphs = [triangle_sum(G, fg, H, fh, corr)]
    else:
        raise SystemExit(f"unknown family {fam!r}")
    _emit(graphs, args.output)
    for T in graphs:
        print(f"n={T.n} g={T.genus}", file=sys.stderr)
    return 0


def _emit(graphs, output):
    data = write_planar_code(graphs)
    if output and output != "-":
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def cmd_enumerate(args) -> int:
    graphs = [T for n in parse_n_range(args.n) for T in enumerate_triangulations(n)]
    _emit(graphs, args.output)
    print(f"{len(graphs)} triangulations", file=sys.stderr)
    return 0


def _scan_source(args):
    if args.input:
        yield from resolve_graphs(args.input)
    else:
        for n in parse_n_range(args.n):
            yield from enumerate_triangulations(n)


def cmd_scan(args) -> int:
    if not (args.n or args.input):
        raise SystemExit("scan needs --n or --input")
    records = scan(_scan_source(args), min_connectivity=args.min_connectivity,
                   max_graphs=args.max_graphs, skip=args.skip)
    if args.report and args.report != "-":
        with open(args.report, "w") as out:
            kept, summary = write_report(records, out)
    else:
        kept, summary = write_report(records, sys.stdout)
    if args.figures:
        from .plotting import plot_scan

        plot_scan(kept, Path(args.figures) / "scan_summary.png")
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_WITNESSES if summary["tutte_witnesses"] else 0


def cmd_export(args) -> int:
    graphs = resolve_graphs(args.input)
    outputs = []
    for gid, T in enumerate(graphs):
        try:
            B = build_complex(T)
        except NoColorings:
            B = ColoringComplex.empty(T.n)
        outputs.append(export_complex(B, args.format))
    if not args.output or args.output == "-":
        for data in outputs:
            sys.stdout.buffer.write(data)
        return 0
    out = Path(args.output)
    if len(outputs) == 1:
        out.write_bytes(outputs[0])
    else:
        for gid, data in enumerate(outputs):
            out.with_name(f"{out.stem}_{gid}{out.suffix}").write_bytes(data)
    return 0


def cmd_validate(args) -> int:
    with open(args.report) as fh:
        records, summary = read_report(fh)
    problems = validate_records(records, summary)
    for p in problems:
        print(p, file=sys.stderr)
    print(f"{len(records)} records, {len(problems)} problems")
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorcomplex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="colorings, components, parities of one or more graphs")
    a.add_argument("input", help="planar_code file, builtin name, qk:K or qkprime:K")
    a.add_argument("--json", help="also write the analysis as JSON")
    a.add_argument("--figures", help="directory for component bar charts")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="write a constructed graph as planar_code")
    g.add_argument("family", choices=["qk", "qkprime", "stack", "trisum", "builtin"])
    g.add_argument("param", nargs="?", help="builtin name, or base graph for stack")
    g.add_argument("--k", type=int)
    g.add_argument("--base")
    g.add_argument("--face", help="face as comma-separated vertex ids")
    g.add_argument("--times", type=int, default=1)
    g.add_argument("--lhs")
    g.add_argument("--rhs")
    g.add_argument("--lhs-face")
    g.add_argument("--rhs-face")
    g.add_argument("--corr", help="rhs partners of the lhs face vertices, comma-separated")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("enumerate", help="all planar triangulations on N (or A-B) vertices")
    e.add_argument("--n", required=True)
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("scan", help="JSONL scan for Tutte witnesses and same-parity violations")
    s.add_argument("--n", help="enumerate N or A-B vertices")
    s.add_argument("--input", help="planar_code corpus or graph spec")
    s.add_argument("--min-connectivity", type=int, default=0)
    s.add_argument("--max-graphs", type=int)
    s.add_argument("--skip", type=int, default=0, help="resume after this many source graphs")
    s.add_argument("--report", help="JSONL output path (default stdout)")
    s.add_argument("--figures", help="directory for the scan summary figure")
    s.set_defaults(func=cmd_scan)

    x = sub.add_parser("export", help="coloring complex as DOT or JSON")
    x.add_argument("input")
    x.add_argument("--format", choices=["dot", "json"], default="json")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)

    v = sub.add_parser("validate-report", help="check flag invariants of a scan report")
    v.add_argument("report")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ColorComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
