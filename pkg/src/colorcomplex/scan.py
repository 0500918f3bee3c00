"""Per-graph analysis records and corpus scans."""

import json
import logging
import os
from collections import Counter
from dataclasses import asdict, dataclass, field
from multiprocessing import get_context
from typing import Iterable, Iterator, TextIO

from .coloring import enumerate_colorings
from .complex import build_complex, components
from .surface import Triangulation, vertex_connectivity

log = logging.getLogger(__name__)

WORKERS_ENV = "COLORCOMPLEX_WORKERS"


@dataclass
class ScanRecord:
    graph_id: int
    n: int
    euler_genus: int
    connectivity: int
    num_colorings: int
    num_components: int
    components: list = field(default_factory=list)  # [coloring_count, class_count, parity]
    tutte_witness: bool = False
    conjecture_violation: bool = False
    canonical_code: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRecord":
        return cls(**d)

    @property
    def even_components(self) -> int:
        return sum(1 for c in self.components if c[2] == "even")

    @property
    def odd_components(self) -> int:
        return sum(1 for c in self.components if c[2] == "odd")


def flags(parities: list[str]) -> tuple[bool, bool]:
    """(tutte_witness, conjecture_violation) for a list of component parities."""
    counts = Counter(parities)
    witness = any(c >= 2 for c in counts.values())
    violation = len(parities) >= 2 and len(counts) == 1
    return witness, violation


def analyze_graph(T: Triangulation, graph_id: int = 0, cap: int = 6) -> ScanRecord:
    colorings = enumerate_colorings(T)
    comps = components(build_complex(T, colorings)) if colorings else []
    rows = sorted(([c.coloring_count, c.class_count, c.parity.value] for c in comps), reverse=True)
    witness, violation = flags([r[2] for r in rows])
    return ScanRecord(
        graph_id=graph_id,
        n=T.n,
        euler_genus=T.genus,
        connectivity=vertex_connectivity(T, cap),
        num_colorings=len(colorings),
        num_components=len(comps),
        components=rows,
        tutte_witness=witness,
        conjecture_violation=violation,
        canonical_code=T.canonical_code().hex(),
    )


def _analyze_job(args):
    graph_id, rot = args
    return analyze_graph(Triangulation(rot), graph_id)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def scan(graphs: Iterable[Triangulation], min_connectivity: int = 0,
         max_graphs: int | None = None, skip: int = 0,
         workers: int | None = None) -> Iterator[ScanRecord]:
    """Analyze graphs in input order, yielding one record per retained graph.

    ``graph_id`` is the ordinal of the graph in the source, so a scan resumed
    with ``skip`` continues the numbering of the interrupted one.
    """
    workers = worker_count() if workers is None else workers

    def jobs():
        emitted = 0
        for gid, T in enumerate(graphs):
            if gid < skip:
                continue
            if max_graphs is not None and emitted >= max_graphs:
                return
            emitted += 1
            yield gid, T

    def keep(rec):
        return rec.connectivity >= min_connectivity

    if workers <= 1:
        for gid, T in jobs():
            rec = analyze_graph(T, gid)
            if keep(rec):
                yield rec
        return
    ctx = get_context("fork" if os.name == "posix" else "spawn")
    with ctx.Pool(workers) as pool:
        for rec in pool.imap(_analyze_job, ((gid, T.rot) for gid, T in jobs()), chunksize=16):
            if keep(rec):
                yield rec


def summarize(records: Iterable[ScanRecord]) -> dict:
    total = witnesses = violations = disconnected = 0
    for r in records:
        total += 1
        witnesses += r.tutte_witness
        violations += r.conjecture_violation
        disconnected += r.num_components >= 2
    return {
        "graphs": total,
        "disconnected_complexes": disconnected,
        "tutte_witnesses": witnesses,
        "conjecture_violations": violations,
    }


def write_report(records: Iterable[ScanRecord], out: TextIO) -> tuple[list[ScanRecord], dict]:
    """Write records as JSONL followed by a ``{"summary": ...}`` line."""
    kept = []
    for rec in records:
        out.write(rec.to_json() + "\n")
        out.flush()
        kept.append(rec)
    summary = summarize(kept)
    out.write(json.dumps({"summary": summary}, separators=(",", ":")) + "\n")
    return kept, summary


def read_report(lines: Iterable[str]) -> tuple[list[ScanRecord], dict | None]:
    records, summary = [], None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        doc = json.loads(line)
        if "summary" in doc:
            summary = doc["summary"]
        else:
            records.append(ScanRecord.from_dict(doc))
    return records, summary


def validate_records(records: list[ScanRecord], summary: dict | None) -> list[str]:
    """Return a list of problems; empty means the report is consistent."""
    problems = []
    for r in records:
        where = f"graph {r.graph_id}"
        if r.num_components != len(r.components):
            problems.append(f"{where}: num_components={r.num_components} but "
                            f"{len(r.components)} component rows")
        if sum(c[0] for c in r.components) != r.num_colorings:
            problems.append(f"{where}: component coloring counts do not add up to num_colorings")
        witness, violation = flags([c[2] for c in r.components])
        if r.tutte_witness != witness:
            problems.append(f"{where}: tutte_witness={r.tutte_witness}, expected {witness}")
        if r.conjecture_violation != violation:
            problems.append(f"{where}: conjecture_violation={r.conjecture_violation}, "
                            f"expected {violation}")
        if r.conjecture_violation and not r.tutte_witness:
            problems.append(f"{where}: conjecture_violation without tutte_witness")
        if r.num_components >= 2 and not r.conjecture_violation and \
                {c[2] for c in r.components} != {"even", "odd"}:
            problems.append(f"{where}: disconnected complex lacks a parity but is not flagged")
        if r.euler_genus < 0 or r.euler_genus % 2:
            problems.append(f"{where}: Euler genus {r.euler_genus} is not a nonnegative even number")
    if summary is None:
        problems.append("missing summary line")
    elif summary != summarize(records):
        problems.append(f"summary {summary} disagrees with records {summarize(records)}")
    return problems
