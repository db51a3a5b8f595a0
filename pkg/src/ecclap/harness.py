"""Run configurations, corpus verification and report rendering."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import BOUNDS_CSV_FIELDS, DEFAULT_BOUNDS_TOL, BoundsReport, check_bounds
from .graph_core import (
    KNOWN_CONNECTED_COUNTS,
    MAX_ENUM_N,
    Graph,
    GraphError,
    connected_masks,
    pair_list,
    parse_graph6,
)
from .linalg import DEFAULT_TOL
from .metrics import is_connected
from .spectral_energy import ENERGY_CSV_FIELDS, EnergyReport, energy_reports

log = logging.getLogger(__name__)

__all__ = [
    "ANALYSIS_CSV_FIELDS",
    "BATCH_CSV_FIELDS",
    "RunConfig",
    "VerifySummary",
    "analyze_graph",
    "format_float",
    "render_analysis",
    "render_batch",
    "render_verify",
    "run_batch",
    "run_verify",
]

COMMANDS = ("analyze", "verify", "family", "batch")
FORMATS = ("csv", "json")
DEFAULT_RESIDUAL_TOL = 1e-8
MASK_CHUNK = 4096

ANALYSIS_CSV_FIELDS = ("graph_id",) + ENERGY_CSV_FIELDS + BOUNDS_CSV_FIELDS[2:]
BATCH_CSV_FIELDS = ("line", "status", "reason") + ANALYSIS_CSV_FIELDS


def format_float(x: float) -> str:
    """Fixed 12-significant-digit rendering used by every CSV writer."""
    return f"{x:.12g}"


@dataclass(frozen=True)
class RunConfig:
    command: str
    edge_list: str | None = None
    graph6: str | None = None
    family: tuple | None = None
    graph6_file: str | None = None
    n_max: int = 0
    tol: float = DEFAULT_BOUNDS_TOL
    solver_tol: float = DEFAULT_TOL
    residual_tol: float = DEFAULT_RESIDUAL_TOL
    workers: int = 1
    output_format: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.tol <= 0 or self.solver_tol <= 0 or self.residual_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.command == "verify" and not 1 <= self.n_max <= MAX_ENUM_N:
            raise ValueError(f"verify needs 1 <= n_max <= {MAX_ENUM_N}")
        if self.command in ("analyze", "family"):
            sources = [s for s in (self.edge_list, self.graph6, self.family) if s is not None]
            if len(sources) != 1:
                raise ValueError("analyze takes exactly one input source")
        if self.command == "batch" and self.graph6_file is None:
            raise ValueError("batch needs a graph6 file")


# ---------------------------------------------------------------------------
# Single graphs and batches
# ---------------------------------------------------------------------------

def analyze_graph(g: Graph, tol: float = DEFAULT_BOUNDS_TOL,
                  solver_tol: float = DEFAULT_TOL) -> tuple[EnergyReport, BoundsReport]:
    report = energy_reports([g], solver_tol)[0]
    return report, check_bounds(report, tol)


def _analysis_row(energy: EnergyReport, bounds: BoundsReport) -> list[str]:
    return [energy.graph6] + energy.csv_values(format_float) + bounds.csv_values(format_float)[2:]


def _write_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_analysis(energy: EnergyReport, bounds: BoundsReport, fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"energy": energy.to_dict(), "bounds": bounds.to_dict()})
    return _write_csv(ANALYSIS_CSV_FIELDS, [_analysis_row(energy, bounds)])


@dataclass
class BatchRecord:
    line: int
    graph6: str
    status: str
    reason: str = ""
    energy: EnergyReport | None = None
    bounds: BoundsReport | None = None


def run_batch(lines, tol: float = DEFAULT_BOUNDS_TOL,
              solver_tol: float = DEFAULT_TOL) -> list[BatchRecord]:
    """One record per input line, in order. Bad lines become ``skipped`` records."""
    records = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            records.append(BatchRecord(lineno, "", "skipped", "empty line"))
            continue
        try:
            g = parse_graph6(text)
        except GraphError as exc:
            records.append(BatchRecord(lineno, text, "skipped", f"parse error: {exc}"))
            continue
        if not is_connected(g):
            records.append(BatchRecord(lineno, text, "skipped", "not a connected graph"))
            continue
        energy, bounds = analyze_graph(g, tol, solver_tol)
        records.append(BatchRecord(lineno, text, "ok", "", energy, bounds))
    return records


def render_batch(records: list[BatchRecord], fmt: str) -> str:
    if fmt == "json":
        out = []
        for rec in records:
            item = {"line": rec.line, "graph6": rec.graph6, "status": rec.status}
            if rec.reason:
                item["reason"] = rec.reason
            if rec.energy is not None:
                item["energy"] = rec.energy.to_dict()
                item["bounds"] = rec.bounds.to_dict()
            out.append(item)
        return _dump_json(out)
    rows = []
    blank = [""] * (len(ANALYSIS_CSV_FIELDS) - 1)
    for rec in records:
        if rec.energy is None:
            rows.append([str(rec.line), rec.status, rec.reason, rec.graph6] + blank)
        else:
            rows.append([str(rec.line), rec.status, rec.reason]
                        + _analysis_row(rec.energy, rec.bounds))
    return _write_csv(BATCH_CSV_FIELDS, rows)


# ---------------------------------------------------------------------------
# Exhaustive verification
# ---------------------------------------------------------------------------

@dataclass
class VerifySummary:
    graphs_checked: int = 0
    counts_by_n: dict = field(default_factory=dict)
    worst_residual: float = 0.0
    violations: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def counts_match(self) -> bool:
        return all(KNOWN_CONNECTED_COUNTS[n] == c for n, c in self.counts_by_n.items())

    def to_dict(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "counts_by_n": {str(n): c for n, c in self.counts_by_n.items()},
            "counts_match_known": self.counts_match,
            "worst_lemma_residual": self.worst_residual,
            "violations": list(self.violations),
            "passed": self.passed,
            "wall_time_s": round(self.wall_time, 3),
        }

    def describe(self) -> str:
        lines = [
            f"graphs checked: {self.graphs_checked} "
            f"({', '.join(f'n={n}: {c}' for n, c in self.counts_by_n.items())})",
            f"counts match known sequence: {self.counts_match}",
            f"worst lemma residual: {self.worst_residual:.3e}",
            f"bound/lemma violations: {len(self.violations)}",
            f"wall time: {self.wall_time:.2f} s",
        ]
        lines += [f"  violation: {v}" for v in self.violations[:20]]
        return "\n".join(lines)


def _verify_chunk(n: int, start: int, stop: int, tol: float,
                  solver_tol: float) -> list[BoundsReport]:
    graphs = [Graph.from_mask(n, mask) for mask in connected_masks(n, start, stop)]
    if not graphs:
        return []
    return [check_bounds(r, tol) for r in energy_reports(graphs, solver_tol)]


def _chunks(n_max: int):
    for n in range(1, n_max + 1):
        total = 1 << len(pair_list(n))
        for start in range(0, total, MASK_CHUNK):
            yield n, start, min(start + MASK_CHUNK, total)


def run_verify(n_max: int, tol: float = DEFAULT_BOUNDS_TOL, solver_tol: float = DEFAULT_TOL,
               residual_tol: float = DEFAULT_RESIDUAL_TOL,
               workers: int = 1) -> tuple[VerifySummary, list[BoundsReport]]:
    """Check lemmas and bounds on every labeled connected graph with ``n <= n_max``.

    Results are ordered by ``n`` then edge-mask ordinal regardless of ``workers``.
    A graph is a violation if any bound fails or a lemma residual exceeds
    ``residual_tol * n``.
    """
    if not 1 <= n_max <= MAX_ENUM_N:
        raise ValueError(f"n_max must be in [1, {MAX_ENUM_N}], got {n_max}")
    t0 = time.perf_counter()
    jobs = list(_chunks(n_max))
    args = ([j[0] for j in jobs], [j[1] for j in jobs], [j[2] for j in jobs],
            [tol] * len(jobs), [solver_tol] * len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_chunk, *args))
    else:
        parts = list(map(_verify_chunk, *args))

    summary = VerifySummary()
    reports: list[BoundsReport] = []
    for part in parts:
        for b in part:
            reports.append(b)
            summary.counts_by_n[b.n] = summary.counts_by_n.get(b.n, 0) + 1
            worst = b.residuals.worst()
            summary.worst_residual = max(summary.worst_residual, worst)
            for name in b.violations:
                summary.violations.append(f"{b.graph_id}: bound {name} fails")
            if worst >= residual_tol * b.n:
                summary.violations.append(f"{b.graph_id}: lemma residual {worst:.3e}")
    summary.graphs_checked = len(reports)
    summary.wall_time = time.perf_counter() - t0
    log.info("verified %d graphs up to n=%d", summary.graphs_checked, n_max)
    return summary, reports


def render_verify(summary: VerifySummary, reports: list[BoundsReport], fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"summary": summary.to_dict(),
                           "reports": [b.to_dict() for b in reports]})
    return _write_csv(BOUNDS_CSV_FIELDS, [b.csv_values(format_float) for b in reports])
