"""Undirected simple graphs over indexed vertices.

Vertex sets are plain Python ints used as bitmasks: bit ``i`` set means
vertex ``i`` is a member.  Helpers at the bottom convert between masks and
sorted index lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 128

EDGE_LIST = "edge-list"
DIMACS = "dimacs"
FORMATS = (EDGE_LIST, DIMACS)


class GraphError(ValueError):
    """Raised for invalid graph construction."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(GraphError):
    pass


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> list[int]:
    """Sorted vertex indices of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[i]`` is the neighbour bitmask of vertex ``i``.  Build instances with
    :meth:`from_edges` rather than directly unless the adjacency is already
    known to be valid.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match label count")
        if n > MAX_VERTICES:
            raise CapacityError(f"graph has {n} vertices; at most {MAX_VERTICES} are supported")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be unique")
        full = (1 << n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {self.labels[v]!r}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n_or_labels: int | Sequence[str], edges: Iterable[tuple[int, int]] = ()) -> Graph:
        if isinstance(n_or_labels, int):
            labels = tuple(str(i) for i in range(n_or_labels))
        else:
            labels = tuple(n_or_labels)
        n = len(labels)
        if n > MAX_VERTICES:
            raise CapacityError(f"graph has {n} vertices; at most {MAX_VERTICES} are supported")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {labels[u]!r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls.from_edges(n)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.vertex_mask:
            raise GraphError(f"vertex set {mask:#b} is not inside 0..{self.n - 1}")

    def is_clique(self, s: int | Iterable[int]) -> bool:
        """True iff every two distinct vertices of ``s`` are adjacent.

        ``s`` may be a bitmask or an iterable of indices.  The empty set and
        singletons are cliques.
        """
        mask = s if isinstance(s, int) else mask_of(s)
        self.check_mask(mask)
        for v in members(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "labels": list(self.labels), "edges": [list(e) for e in self.edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_edge_list(self) -> str:
        """Serialize in the edge-list format accepted by :func:`parse_graph`.

        Every label is declared on its own line first, which keeps isolated
        vertices and pins the vertex order on reparse.
        """
        lines = list(self.labels)
        lines += [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges()]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dimacs(self) -> str:
        es = self.edges()
        out = [f"p edge {self.n} {len(es)}"]
        out += [f"e {u + 1} {v + 1}" for u, v in es]
        return "\n".join(out) + "\n"


def _parse_edge_list(text: str) -> Graph:
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vertex(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            vertex(parts[0])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise ParseError(f"self-loop at vertex {parts[0]!r}", lineno)
            u, v = vertex(parts[0]), vertex(parts[1])
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"expected 'u v' or a single vertex name, got {raw.strip()!r}", lineno)
        if len(labels) > MAX_VERTICES:
            raise CapacityError(f"more than {MAX_VERTICES} vertices")
    return Graph.from_edges(labels, sorted(edges))


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: set[tuple[int, int]] = set()
    n_lines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in problem line", lineno)
            if n > MAX_VERTICES:
                raise CapacityError(f"graph has {n} vertices; at most {MAX_VERTICES} are supported")
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p' line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            n_lines += 1
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        if n_lines == 0:
            return Graph.from_edges(0)
        raise ParseError("missing 'p edge n m' line")
    # duplicates collapse, so only the raw line count is compared
    if n_lines != declared_m:
        raise ParseError(f"header declares {declared_m} edges but {n_lines} edge lines were read")
    return Graph.from_edges([str(i + 1) for i in range(n)], sorted(edges))


def parse_graph(text: str, format: str = EDGE_LIST) -> Graph:
    """Parse ``text`` as an edge list or a DIMACS graph."""
    if format == EDGE_LIST:
        return _parse_edge_list(text)
    if format == DIMACS:
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")


def infer_format(path: str) -> str:
    lower = path.lower()
    if lower.endswith((".dimacs", ".col", ".clq", ".dim")):
        return DIMACS
    return EDGE_LIST
