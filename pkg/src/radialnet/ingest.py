"""Parsers for AS-path and edge-list text formats, source merging and
contribution statistics.

Both formats are line-oriented UTF-8 (LF or CRLF): edge lists carry two
whitespace-separated unsigned integers per line, AS-path files one BGP path
per line (space-separated AS numbers, optional brace-delimited AS sets).
Lines starting with '#' and blank lines are skipped.  Parsers do not clean:
self-loops and duplicates survive into the EdgeSet and are dropped by
build_graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph import MAX_LABEL, EdgeSet, Graph

log = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed input line; carries the 1-based line number and content."""

    def __init__(self, message: str, line_no: int, line: str):
        super().__init__(f"line {line_no}: {message}: {line!r}")
        self.line_no = line_no
        self.line = line


def _parse_label(token: str, line_no: int, line: str) -> int:
    if not token.isdigit():
        raise ParseError(f"malformed token {token!r}", line_no, line)
    value = int(token)
    if value > MAX_LABEL:
        raise ParseError(f"label {value} exceeds unsigned 32-bit range", line_no, line)
    return value


def parse_edge_list(stream, source: str | None = None) -> EdgeSet:
    """Parse "<u> <v>" lines into an EdgeSet (loops preserved)."""
    es = EdgeSet()
    for line_no, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError("expected exactly two vertex labels", line_no, line)
        u = _parse_label(tokens[0], line_no, line)
        v = _parse_label(tokens[1], line_no, line)
        es.add(u, v, source)
    return es


_AS_SET = None  # sentinel item for a brace-delimited AS-set


def _tokenize_path(line: str, line_no: int) -> list:
    items = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch.isspace():
            i += 1
        elif ch == "{":
            close = line.find("}", i)
            if close < 0:
                raise ParseError("unterminated AS-set brace", line_no, line)
            items.append(_AS_SET)
            i = close + 1
        else:
            j = i
            while j < n and not line[j].isspace() and line[j] != "{":
                j += 1
            items.append(_parse_label(line[i:j], line_no, line))
            i = j
    return items


def parse_as_paths(stream, source: str | None = None) -> EdgeSet:
    """Infer edges from AS paths: one edge per adjacent AS pair.

    Consecutive repeats of one AS (path prepending) collapse and contribute
    no edge.  Adjacencies touching a brace-delimited AS-set are skipped
    entirely: the members' mutual order is unknown, so no edge is invented.
    """
    es = EdgeSet()
    for line_no, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        path = []
        for item in _tokenize_path(line, line_no):
            if path and item is not _AS_SET and path[-1] == item:
                continue
            path.append(item)
        for a, b in zip(path, path[1:]):
            if a is not _AS_SET and b is not _AS_SET:
                es.add(a, b, source)
    return es


@dataclass(frozen=True)
class SourceStat:
    name: str
    edges: int       # distinct edges contributed
    exclusive: int   # edges found in this source only


@dataclass(frozen=True)
class SourceReport:
    """Contribution statistics from merging several edge sources."""

    sources: tuple[SourceStat, ...]
    union_edges: int
    baseline: str
    gain: float      # (union - baseline) / baseline, distinct-edge counts

    def csv_rows(self):
        """Rows for the source,edges,exclusive,gain layout; per-source gain is
        the union's relative surplus over that source, plus a union total row.
        """
        yield "source,edges,exclusive,gain"
        for s in self.sources:
            g = (self.union_edges - s.edges) / s.edges
            yield f"{s.name},{s.edges},{s.exclusive},{g:.12g}"
        yield f"union,{self.union_edges},,"


def merge_sources(sources: list[tuple[str, EdgeSet]], baseline: str) -> tuple[EdgeSet, SourceReport]:
    """Union the given (name, EdgeSet) sources and report per-source counts,
    exclusive edges, and the union's gain over the baseline source.
    """
    names = [name for name, _ in sources]
    if baseline not in names:
        raise ValueError(f"baseline {baseline!r} not among sources {names}")
    if len(set(names)) != len(names):
        raise ValueError("duplicate source names")

    union = EdgeSet()
    holders: dict[tuple[int, int], set[str]] = {}
    for name, es in sources:
        for pair, mult in es.counts.items():
            union.counts[pair] += mult
            union.source_tags.setdefault(pair, set()).add(name)
            holders.setdefault(pair, set()).add(name)

    stats = []
    for name, es in sources:
        exclusive = sum(1 for pair in es.counts if holders[pair] == {name})
        stats.append(SourceStat(name=name, edges=len(es), exclusive=exclusive))
    baseline_edges = dict((s.name, s.edges) for s in stats)[baseline]
    gain = (len(union) - baseline_edges) / baseline_edges
    report = SourceReport(sources=tuple(stats), union_edges=len(union),
                          baseline=baseline, gain=gain)
    return union, report


def write_edge_list(es: EdgeSet, fileobj, deduplicate: bool = False) -> int:
    """Serialize an EdgeSet as sorted "<u> <v>" lines; returns lines written.

    With deduplicate=False, multiplicities are preserved (round-trip safe);
    the CLI writes merged outputs deduplicated.
    """
    written = 0
    for pair in sorted(es.counts):
        times = 1 if deduplicate else es.counts[pair]
        for _ in range(times):
            fileobj.write(f"{pair[0]} {pair[1]}\n")
            written += 1
    return written


def write_graph_edge_list(g: Graph, fileobj) -> int:
    """Stream a graph's canonical edge list without materializing it."""
    written = 0
    for u, v in g.iter_edges():
        fileobj.write(f"{u} {v}\n")
        written += 1
    return written
