"""Mixed graphs: combinatorial representation, edge-list I/O, degree statistics.

A mixed graph has both undirected edges and directed arcs between distinct
vertices, with at most one connection per vertex pair (simple, no loops).
Vertices are 0-based internally; the text format is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed or violates simplicity."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class MixedGraph:
    """Simple mixed graph on vertices 0..n-1.

    ``undirected`` holds unordered pairs stored as (i, j) with i < j;
    ``arcs`` holds ordered (tail, head) pairs. The underlying unordered pair
    of every edge or arc is unique across both sets.
    """

    n: int
    undirected: frozenset[tuple[int, int]]
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        seen: set[tuple[int, int]] = set()
        for i, j in self.undirected:
            if not (0 <= i < j < self.n):
                raise ValueError(f"undirected edge ({i}, {j}) not canonical for n={self.n}")
            seen.add((i, j))
        for t, h in self.arcs:
            if t == h:
                raise ValueError(f"self-loop at vertex {t}")
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ValueError(f"arc ({t}, {h}) out of range for n={self.n}")
            pair = (t, h) if t < h else (h, t)
            if pair in seen:
                raise ValueError(f"duplicate underlying pair {pair}")
            seen.add(pair)
        if len(seen) < len(self.undirected) + len(self.arcs):
            raise ValueError("duplicate underlying pair across edge sets")

    @property
    def edge_count(self) -> int:
        """Edges of the underlying graph (arcs count once)."""
        return len(self.undirected) + len(self.arcs)


@dataclass(frozen=True)
class GraphStats:
    """Degree statistics of the underlying graph, consumed by the bounds."""

    n: int
    m: int
    arc_count: int
    undirected_count: int
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    zagreb: int

    def __post_init__(self):
        assert self.m == self.arc_count + self.undirected_count
        assert sum(self.degrees) == 2 * self.m
        assert all(self.min_degree <= d <= self.max_degree for d in self.degrees)
        assert self.zagreb == sum(d * d for d in self.degrees)


def graph_stats(g: MixedGraph) -> GraphStats:
    """Compute degrees, extremes and the first Zagreb index of ``g``."""
    degrees = [0] * g.n
    for i, j in g.undirected:
        degrees[i] += 1
        degrees[j] += 1
    for t, h in g.arcs:
        degrees[t] += 1
        degrees[h] += 1
    return GraphStats(
        n=g.n,
        m=g.edge_count,
        arc_count=len(g.arcs),
        undirected_count=len(g.undirected),
        degrees=tuple(degrees),
        max_degree=max(degrees),
        min_degree=min(degrees),
        zagreb=sum(d * d for d in degrees),
    )


def zagreb_lower_bound(stats: GraphStats) -> float:
    """Lower bound on the first Zagreb index in terms of n, m and the degree extremes.

    Requires n >= 3 (the n-2 denominator); equality holds e.g. for regular
    graphs and stars.
    """
    n, m = stats.n, stats.m
    if n < 3:
        raise ValueError(f"zagreb lower bound needs n >= 3, got n={n}")
    dmax, dmin = stats.max_degree, stats.min_degree
    return (
        4.0 * m * m / n
        + 0.5 * (dmax - dmin) ** 2
        + (2.0 * n / (n - 2)) * (2.0 * m / n - (dmax + dmin) / 2.0) ** 2
    )


def random_mixed_graph(n: int, edge_prob: float, orient_prob: float, seed: int) -> MixedGraph:
    """Sample a mixed graph: each pair kept with ``edge_prob``, kept pairs become
    arcs with ``orient_prob`` (direction uniform), else undirected.

    Uses the PCG64 generator; pairs are visited in lexicographic order and the
    orientation draws happen only for kept pairs, so a fixed seed reproduces
    the graph exactly.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not (0.0 <= edge_prob <= 1.0 and 0.0 <= orient_prob <= 1.0):
        raise ValueError(f"probabilities must lie in [0, 1], got {edge_prob}, {orient_prob}")
    rng = np.random.Generator(np.random.PCG64(seed))
    undirected = []
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= edge_prob:
                continue
            if rng.random() < orient_prob:
                if rng.random() < 0.5:
                    arcs.append((i, j))
                else:
                    arcs.append((j, i))
            else:
                undirected.append((i, j))
    return MixedGraph(n=n, undirected=frozenset(undirected), arcs=frozenset(arcs))


def parse_graph(text: str) -> MixedGraph:
    """Parse the edge-list format: first line n, then ``i -- j`` / ``i -> j`` lines.

    Labels are 1-based; ``#`` starts a comment; blank lines are skipped.
    """
    n: int | None = None
    undirected: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"expected vertex count, got {line!r}", lineno) from None
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] not in ("--", "->"):
            raise GraphFormatError(f"expected 'i -- j' or 'i -> j', got {line!r}", lineno)
        try:
            i, j = int(tokens[0]), int(tokens[2])
        except ValueError:
            raise GraphFormatError(f"vertex labels must be integers, got {line!r}", lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"vertex label out of range 1..{n} in {line!r}", lineno)
        if i == j:
            raise GraphFormatError(f"self-loop at vertex {i}", lineno)
        i -= 1
        j -= 1
        pair = (i, j) if i < j else (j, i)
        if pair in seen:
            raise GraphFormatError(
                f"duplicate underlying pair {{{pair[0] + 1}, {pair[1] + 1}}}"
                f" (first seen on line {seen[pair]})",
                lineno,
            )
        seen[pair] = lineno
        if tokens[1] == "--":
            undirected.append(pair)
        else:
            arcs.append((i, j))
    if n is None:
        raise GraphFormatError("empty input: no vertex count found")
    return MixedGraph(n=n, undirected=frozenset(undirected), arcs=frozenset(arcs))


def serialize_graph(g: MixedGraph) -> str:
    """Canonical text form: n, sorted undirected edges, then sorted arcs, 1-based."""
    lines = [str(g.n)]
    for i, j in sorted(g.undirected):
        lines.append(f"{i + 1} -- {j + 1}")
    for t, h in sorted(g.arcs):
        lines.append(f"{t + 1} -> {h + 1}")
    return "\n".join(lines) + "\n"
