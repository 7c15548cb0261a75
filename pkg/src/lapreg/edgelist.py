"""Edge-list file ingestion.

Accepts whitespace-separated "u v" or "u v w" lines with '#' comments,
SNAP-style.  Node ids are compacted to 0..n-1 in first-seen order;
self-loops are dropped and duplicate pairs (either orientation) keep their
first occurrence, both with counts reported through logging.
"""

from __future__ import annotations

import logging

import numpy as np

from .errors import DisconnectedError, EdgeListParseError
from .graphs import Graph, component_count, graph_from_edges

log = logging.getLogger(__name__)


def load_edge_list(
    path,
    indexing: int = 0,
    weighted: bool = False,
    symmetrize: bool = True,
) -> Graph:
    """Parse a text edge list into a validated Graph.

    ``indexing`` names the file's convention (0- or 1-based).  Without
    ``weighted`` any third column is ignored and unit weights are used.
    ``symmetrize`` treats reverse-orientation duplicates as expected
    (directed source data); when False they are counted among the dropped
    anomalies.  Raises EdgeListParseError with the offending line number,
    or DisconnectedError with the component count.
    """
    if indexing not in (0, 1):
        raise ValueError(f"indexing must be 0 or 1, got {indexing}")

    ids: dict[int, int] = {}
    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()
    oriented: set[tuple[int, int]] = set()
    self_loops = 0
    duplicates = 0

    def compact(raw: int) -> int:
        if raw not in ids:
            ids[raw] = len(ids)
        return ids[raw]

    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            parts = text.split()
            if len(parts) not in (2, 3):
                raise EdgeListParseError(
                    f"line {lineno}: expected 'u v' or 'u v w', got {line.strip()!r}"
                )
            try:
                u_raw, v_raw = int(parts[0]), int(parts[1])
                w = float(parts[2]) if weighted and len(parts) == 3 else 1.0
            except ValueError:
                raise EdgeListParseError(
                    f"line {lineno}: non-numeric field in {line.strip()!r}"
                ) from None
            u_raw -= indexing
            v_raw -= indexing
            if u_raw < 0 or v_raw < 0:
                raise EdgeListParseError(
                    f"line {lineno}: negative node id after applying {indexing}-based indexing"
                )
            u, v = compact(u_raw), compact(v_raw)
            if u == v:
                self_loops += 1
                continue
            pair = (min(u, v), max(u, v))
            if pair in seen:
                if not (symmetrize and (u, v) not in oriented):
                    duplicates += 1
                continue
            seen.add(pair)
            oriented.add((u, v))
            edges.append((pair[0], pair[1], w))

    n = len(ids)
    if n < 2:
        raise EdgeListParseError(f"{path}: fewer than 2 nodes after parsing")
    if self_loops:
        log.warning("%s: dropped %d self-loop(s)", path, self_loops)
    if duplicates:
        log.warning("%s: dropped %d duplicate edge line(s)", path, duplicates)

    try:
        return graph_from_edges(n, edges)
    except DisconnectedError:
        g = Graph(
            n=n,
            src=np.array([e[0] for e in edges], dtype=np.int64),
            dst=np.array([e[1] for e in edges], dtype=np.int64),
            weight=np.array([e[2] for e in edges], dtype=np.float64),
        )
        raise DisconnectedError(
            f"{path}: graph has {component_count(g)} components"
        ) from None
