"""Edge-list file format.

Format: an optional header line "n <count>", then one arc per line as two
whitespace-separated labels; lines starting with '#' are comments.  Integer
labels are used as vertex ids directly (a header larger than the biggest
label leaves isolated vertices); anything else is remapped to dense ids in
lexicographic label order, with the mapping kept for reports.  Duplicate
arc lines and self-loops are rejected with the offending line number.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .digraph_core import Digraph, build_digraph
from .errors import ParseError


@dataclass(frozen=True)
class EdgeListFile:
    digraph: Digraph
    labels: dict[int, str]

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))


def _is_int_label(token: str) -> bool:
    try:
        return int(token) >= 0
    except ValueError:
        return False


def parse_edge_list(text: str) -> EdgeListFile:
    header_n: Optional[int] = None
    header_line = 1
    raw_arcs: list[tuple[str, str, int]] = []
    seen_lines: set[tuple[str, str]] = set()
    saw_content = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not saw_content and tokens[0] == "n":
            saw_content = True
            if len(tokens) != 2 or not _is_int_label(tokens[1]):
                raise ParseError(line_no, f"malformed header {line!r}")
            header_n = int(tokens[1])
            header_line = line_no
            continue
        saw_content = True
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected two labels, got {line!r}")
        u, v = tokens
        if u == v:
            raise ParseError(line_no, f"self-loop on {u!r} is not allowed")
        if (u, v) in seen_lines:
            raise ParseError(line_no, f"duplicate arc {u!r} -> {v!r}")
        seen_lines.add((u, v))
        raw_arcs.append((u, v, line_no))

    label_pool = {u for u, _, _ in raw_arcs} | {v for _, v, _ in raw_arcs}
    if all(_is_int_label(t) for t in label_pool):
        ids = {t: int(t) for t in label_pool}
        derived_n = max(ids.values(), default=-1) + 1
    else:
        ordered = sorted(label_pool)
        ids = {t: i for i, t in enumerate(ordered)}
        derived_n = len(ordered)
    n = derived_n if header_n is None else header_n
    if n < derived_n:
        raise ParseError(
            header_line,
            f"header n={header_n} is smaller than the labels require ({derived_n})",
        )

    arcs = []
    for u, v, line_no in raw_arcs:
        iu, iv = ids[u], ids[v]
        if iu >= n or iv >= n:
            raise ParseError(line_no, f"vertex label outside the declared range: {u!r} {v!r}")
        arcs.append((iu, iv))
    digraph = build_digraph(n, arcs)
    labels = {i: t for t, i in ids.items()}
    return EdgeListFile(digraph=digraph, labels=labels)


def load_edge_list(path: str | Path) -> EdgeListFile:
    return parse_edge_list(Path(path).read_text())


def serialize_edge_list(
    digraph: Digraph, labels: Optional[dict[int, str]] = None
) -> str:
    """Render a digraph in the edge-list format, one sorted arc per line.
    Round-trips through parse_edge_list up to label remapping."""
    labels = labels or {}
    lines = [f"n {digraph.n}"]
    for u, v in sorted(digraph.arcs):
        lines.append(f"{labels.get(u, str(u))} {labels.get(v, str(v))}")
    return "\n".join(lines) + "\n"
