"""Undirected graph representation, edge-list I/O, and instance generators.

All graphs are simple (no self-loops, no parallel edges) with 0-based
vertex indices.  Graphs are immutable after construction and safe to share
across concurrent solver runs.

The random generators draw from a private ``random.Random(seed)`` instance
(Mersenne Twister) with a fixed, documented draw order, so identical
parameters and seed produce bit-identical graphs on every platform.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass


class EdgeListError(ValueError):
    """Malformed edge-list input; ``line_no`` is 1-based."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` holds each edge once as an ordered pair (u < v), sorted
    lexicographically; ``adjacency`` holds a sorted neighbor tuple per
    vertex.  The class invariants (symmetry, degree-sum identity) are
    established by :meth:`from_edges` and preserved by immutability.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edge_pairs) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Rejects self-loops, out-of-range endpoints, and duplicate edges
        (in either orientation).
        """
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        return cls(
            n=n,
            edges=tuple(sorted(seen)),
            adjacency=tuple(tuple(sorted(adj)) for adj in neighbors),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(adj) for adj in self.adjacency)

    def has_isolated_vertex(self) -> bool:
        return any(len(adj) == 0 for adj in self.adjacency)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a header line ``n m`` followed by
    exactly m lines ``u v`` with 0 <= u, v < n and u != v.

    Lines starting with ``#`` are comments; blank lines are skipped; LF
    and CRLF endings are both accepted.  Every error reports the 1-based
    line number of the offending line.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    adjacency_seen: set[tuple[int, int]] = set()
    last_line_no = 0
    for line_no, raw in enumerate(text.split("\n"), start=1):
        last_line_no = line_no
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListError(line_no, f"expected header 'n m', got {line!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError(line_no, f"non-integer header {line!r}") from None
            if n < 0 or m < 0:
                raise EdgeListError(line_no, f"negative count in header {line!r}")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise EdgeListError(line_no, f"unexpected extra line {line!r} after {m} edges")
        if len(parts) != 2:
            raise EdgeListError(line_no, f"expected edge 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"non-integer edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(line_no, f"vertex index out of range in {line!r} (n={n})")
        if u == v:
            raise EdgeListError(line_no, f"self-loop {line!r}")
        key = (u, v) if u < v else (v, u)
        if key in adjacency_seen:
            raise EdgeListError(line_no, f"duplicate edge {line!r}")
        adjacency_seen.add(key)
        edges.append((u, v))
    if header is None:
        raise EdgeListError(last_line_no or 1, "missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(
            last_line_no + 1, f"expected {m} edge lines, found {len(edges)}"
        )
    return Graph.from_edges(n, edges)


def load_edge_list(path) -> Graph:
    """Read and parse an edge-list file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    """Render a graph in the edge-list format accepted by :func:`parse_edge_list`."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def generate_grid(rows: int, cols: int) -> Graph:
    """rows x cols lattice; vertex (r, c) has index r*cols + c."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def generate_net(rows: int, cols: int) -> Graph:
    """Grid plus both diagonals of every unit cell (king-move lattice)."""
    if rows < 1 or cols < 1:
        raise ValueError("net dimensions must be positive")
    grid = generate_grid(rows, cols)
    edges = list(grid.edges)
    for r in range(rows - 1):
        for c in range(cols - 1):
            a = r * cols + c
            edges.append((a, a + cols + 1))
            edges.append((a + 1, a + cols))
    return Graph.from_edges(rows * cols, edges)


def generate_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    """Random bipartite graph on independent sets {0..a-1} and {a..a+b-1}.

    Each of the a*b cross pairs becomes an edge independently with
    probability p; pairs are examined in row-major order (i in the first
    set outermost), one uniform draw per pair.
    """
    if a < 1 or b < 1:
        raise ValueError("side cardinalities must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = []
    for i in range(a):
        for j in range(b):
            if rng.random() < p:
                edges.append((i, a + j))
    return Graph.from_edges(a + b, edges)


def generate_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style G(n, p); pairs (i, j), i < j, examined in
    row-major order with one uniform draw per pair."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


# Label grammar: <class>-<dims>[-<densityPercent>][-s<seed>]
#   grid-3x4   net-2x2   bipartite-100-100-10   random-50-20   random-50-20-s7
_GENERATOR_CLASSES = ("grid", "net", "bipartite", "random")


@dataclass(frozen=True)
class InstanceLabel:
    """Structured name of a synthetic instance; round-trips through text."""

    kind: str
    dims: tuple[int, ...]
    density_pct: int | None = None
    seed: int | None = None

    def __str__(self) -> str:
        if self.kind in ("grid", "net"):
            parts = [self.kind, "x".join(str(d) for d in self.dims)]
        else:
            parts = [self.kind] + [str(d) for d in self.dims]
        if self.density_pct is not None:
            parts.append(str(self.density_pct))
        if self.seed is not None:
            parts.append(f"s{self.seed}")
        return "-".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "InstanceLabel":
        tokens = text.strip().split("-")
        if len(tokens) < 2:
            raise ValueError(f"bad instance label {text!r}")
        kind = tokens[0]
        if kind not in _GENERATOR_CLASSES:
            raise ValueError(
                f"unknown instance class {kind!r} (expected one of {_GENERATOR_CLASSES})"
            )
        rest = tokens[1:]
        seed = None
        if re.fullmatch(r"s\d+", rest[-1]):
            seed = int(rest[-1][1:])
            rest = rest[:-1]
        try:
            if kind in ("grid", "net"):
                if len(rest) != 1 or "x" not in rest[0]:
                    raise ValueError
                r, c = rest[0].split("x")
                return cls(kind, (int(r), int(c)), None, seed)
            if kind == "bipartite":
                if len(rest) != 3:
                    raise ValueError
                return cls(kind, (int(rest[0]), int(rest[1])), int(rest[2]), seed)
            # random
            if len(rest) != 2:
                raise ValueError
            return cls(kind, (int(rest[0]),), int(rest[1]), seed)
        except ValueError:
            raise ValueError(f"bad instance label {text!r}") from None


def build_from_label(label: InstanceLabel, fallback_seed: int = 0) -> Graph:
    """Instantiate a generator label; the label's own seed wins over the fallback."""
    seed = label.seed if label.seed is not None else fallback_seed
    if label.kind == "grid":
        return generate_grid(*label.dims)
    if label.kind == "net":
        return generate_net(*label.dims)
    if label.kind == "bipartite":
        a, b = label.dims
        return generate_bipartite(a, b, label.density_pct / 100.0, seed)
    if label.kind == "random":
        return generate_random(label.dims[0], label.density_pct / 100.0, seed)
    raise ValueError(f"class {label.kind!r} has no generator (file input only)")
