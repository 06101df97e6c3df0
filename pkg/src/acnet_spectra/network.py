"""Graph data model for AC electrical networks.

Vertices are named; every edge carries three non-negative element values
``(L, R, D)`` describing one series branch (inductive, resistive and
inverse-capacitive contributions, with ``L + R + D > 0``). The graph must
be finite, simple, loop-free and connected -- everything downstream
assumes exactly that, so it is enforced at construction time.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

__all__ = [
    "Bipartition",
    "Edge",
    "Network",
    "NetworkError",
    "bipartition",
    "complete_bipartite_network",
    "complete_network",
    "cycle_network",
    "diameter",
    "p4_example",
    "parse_network",
    "path_network",
    "serialize_network",
    "shortest_path",
]

DEFAULT_ELEMENTS = (0.0, 1.0, 0.0)  # a plain unit resistor


class NetworkError(ValueError):
    """Malformed network file or invalid network data."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class Edge:
    """Undirected edge between two vertex indices, with element values."""

    u: int
    v: int
    L: float = 0.0
    R: float = 0.0
    D: float = 0.0


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of the vertex set; every edge crosses the parts."""

    part_plus: tuple[int, ...]
    part_minus: tuple[int, ...]


def _element_error(edge_label: str, L: float, R: float, D: float) -> str | None:
    for value in (L, R, D):
        if not math.isfinite(value) or value < 0.0:
            return f"edge {edge_label}: element values must be non-negative finite reals"
    if L + R + D == 0.0:
        return f"all-zero edge (L=R=D=0) {edge_label}"
    return None


@dataclass(frozen=True)
class Network:
    """Connected loop-free graph whose edges carry (L, R, D) values.

    Immutable after construction; the constructor validates every
    structural invariant (label uniqueness, no loops, no duplicate
    edges, positive element sums, connectivity).
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        normalized = tuple(
            e if isinstance(e, Edge) else Edge(int(e[0]), int(e[1]), *map(float, e[2:]))
            for e in self.edges
        )
        object.__setattr__(self, "edges", normalized)
        self._validate()

    def _validate(self) -> None:
        n = len(self.vertices)
        if n < 2:
            raise NetworkError("a network needs at least two vertices")
        if len(set(self.vertices)) != n:
            raise NetworkError("vertex labels must be unique")
        for label in self.vertices:
            if not label or any(ch.isspace() for ch in label) or "#" in label or "=" in label:
                raise NetworkError(f"invalid vertex label {label!r}")
        seen_pairs: set[frozenset[int]] = set()
        for e in self.edges:
            for idx in (e.u, e.v):
                if not 0 <= idx < n:
                    raise NetworkError(f"edge endpoint index {idx} out of range")
            pair_label = f"between {self.vertices[e.u]!r} and {self.vertices[e.v]!r}"
            if e.u == e.v:
                raise NetworkError(f"loop edge at {self.vertices[e.u]!r}")
            pair = frozenset((e.u, e.v))
            if pair in seen_pairs:
                raise NetworkError(f"duplicate edge {pair_label}")
            seen_pairs.add(pair)
            problem = _element_error(pair_label, e.L, e.R, e.D)
            if problem:
                raise NetworkError(problem)
        dist = _bfs_distances(self, 0)
        for idx, d in enumerate(dist):
            if d < 0:
                raise NetworkError(
                    f"graph is disconnected ({self.vertices[idx]!r} unreachable "
                    f"from {self.vertices[0]!r})"
                )

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise NetworkError(f"unknown vertex label {label!r}") from None

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Neighbor lists as (vertex index, edge index) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for k, e in enumerate(self.edges):
            adj[e.u].append((e.v, k))
            adj[e.v].append((e.u, k))
        for row in adj:
            row.sort()
        return adj


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def parse_network(text: str) -> Network:
    """Parse the line-oriented network format.

    The format is UTF-8, whitespace-tokenized, with ``#`` starting a
    comment anywhere on a line::

        vertices: <label> <label> ...
        edge <label> <label> [L=<real>] [R=<real>] [D=<real>]

    Element keys may appear in any order; omitted keys default to 0.
    Raises :class:`NetworkError` with the offending line number for
    syntax problems, loops, duplicate edges, all-zero edges, unknown
    labels, or a disconnected graph.
    """
    vertices: list[str] = []
    index: dict[str, int] = {}
    edges: list[Edge] = []
    seen_pairs: set[frozenset[int]] = set()
    got_vertices = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "vertices:":
            if got_vertices:
                raise NetworkError("repeated 'vertices:' line", lineno)
            labels = tokens[1:]
            if len(labels) < 2:
                raise NetworkError("need at least two vertex labels", lineno)
            for label in labels:
                if "=" in label:
                    raise NetworkError(f"invalid vertex label {label!r}", lineno)
                if label in index:
                    raise NetworkError(f"duplicate vertex label {label!r}", lineno)
                index[label] = len(vertices)
                vertices.append(label)
            got_vertices = True
        elif head == "edge":
            if not got_vertices:
                raise NetworkError("'edge' line before 'vertices:' line", lineno)
            if len(tokens) < 3:
                raise NetworkError("edge needs two endpoint labels", lineno)
            a, b = tokens[1], tokens[2]
            for label in (a, b):
                if label not in index:
                    raise NetworkError(f"unknown vertex label {label!r}", lineno)
            if a == b:
                raise NetworkError(f"loop edge at {a!r}", lineno)
            elements = {"L": 0.0, "R": 0.0, "D": 0.0}
            given: set[str] = set()
            for token in tokens[3:]:
                key, sep, value = token.partition("=")
                if not sep or key not in elements:
                    raise NetworkError(f"expected L=/R=/D= assignment, got {token!r}", lineno)
                if key in given:
                    raise NetworkError(f"repeated element key {key!r}", lineno)
                try:
                    elements[key] = float(value)
                except ValueError:
                    raise NetworkError(f"bad numeric value {value!r}", lineno) from None
                given.add(key)
            pair = frozenset((index[a], index[b]))
            if pair in seen_pairs:
                raise NetworkError(f"duplicate edge between {a!r} and {b!r}", lineno)
            seen_pairs.add(pair)
            problem = _element_error(
                f"between {a!r} and {b!r}", elements["L"], elements["R"], elements["D"]
            )
            if problem:
                raise NetworkError(problem, lineno)
            edges.append(Edge(index[a], index[b], elements["L"], elements["R"], elements["D"]))
        else:
            raise NetworkError(f"unrecognized directive {head!r}", lineno)

    if not got_vertices:
        raise NetworkError("missing 'vertices:' line")
    return Network(tuple(vertices), tuple(edges))


def serialize_network(net: Network) -> str:
    """Render a network in the file format; parse(serialize(net)) == net."""
    lines = ["vertices: " + " ".join(net.vertices)]
    for e in net.edges:
        lines.append(
            f"edge {net.vertices[e.u]} {net.vertices[e.v]} L={e.L!r} R={e.R!r} D={e.D!r}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph metrics
# ---------------------------------------------------------------------------

def _bfs_distances(net: Network, source: int) -> list[int]:
    dist = [-1] * net.n
    dist[source] = 0
    adj = net.adjacency()
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(net: Network) -> int:
    """Maximum over vertex pairs of the shortest-path edge count."""
    return max(max(_bfs_distances(net, src)) for src in range(net.n))


def bipartition(net: Network) -> Bipartition | None:
    """Two-coloring by breadth-first search; None if an odd cycle exists."""
    color = [-1] * net.n
    color[0] = 0
    adj = net.adjacency()
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if color[y] < 0:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return None
    plus = tuple(i for i in range(net.n) if color[i] == 0)
    minus = tuple(i for i in range(net.n) if color[i] == 1)
    return Bipartition(plus, minus)


def shortest_path(net: Network, a: int | str, b: int | str) -> list[int]:
    """A minimal-edge-count path from a to b, endpoints included.

    Ties are broken toward the lowest next vertex index, so the result
    is the lexicographically smallest shortest path.
    """
    start = net.index(a) if isinstance(a, str) else int(a)
    goal = net.index(b) if isinstance(b, str) else int(b)
    for idx in (start, goal):
        if not 0 <= idx < net.n:
            raise NetworkError(f"vertex index {idx} out of range")
    dist_to_goal = _bfs_distances(net, goal)
    adj = net.adjacency()
    path = [start]
    current = start
    while current != goal:
        current = next(
            y for y, _ in adj[current] if dist_to_goal[y] == dist_to_goal[current] - 1
        )
        path.append(current)
    return path


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _edge_elements(count: int, elements) -> list[tuple[float, float, float]]:
    if elements is None:
        return [DEFAULT_ELEMENTS] * count
    elements = list(elements)
    if elements and isinstance(elements[0], (int, float)):
        elements = [tuple(elements)] * count
    if len(elements) != count:
        raise NetworkError(f"expected {count} element triples, got {len(elements)}")
    return [tuple(float(x) for x in triple) for triple in elements]


def path_network(k: int, elements=None, prefix: str = "v") -> Network:
    """Path on k vertices; elements default to unit resistors."""
    elems = _edge_elements(k - 1, elements)
    return Network(
        tuple(f"{prefix}{i}" for i in range(k)),
        tuple(Edge(i, i + 1, *elems[i]) for i in range(k - 1)),
    )


def cycle_network(k: int, elements=None, prefix: str = "v") -> Network:
    elems = _edge_elements(k, elements)
    edges = [Edge(i, (i + 1) % k, *elems[i]) for i in range(k)]
    return Network(tuple(f"{prefix}{i}" for i in range(k)), tuple(edges))


def complete_network(k: int, elements=None, prefix: str = "v") -> Network:
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    elems = _edge_elements(len(pairs), elements)
    edges = [Edge(u, v, *e) for (u, v), e in zip(pairs, elems)]
    return Network(tuple(f"{prefix}{i}" for i in range(k)), tuple(edges))


def complete_bipartite_network(p: int, q: int, elements=None) -> Network:
    labels = tuple(f"a{i}" for i in range(p)) + tuple(f"b{j}" for j in range(q))
    pairs = [(i, p + j) for i in range(p) for j in range(q)]
    elems = _edge_elements(len(pairs), elements)
    edges = [Edge(u, v, *e) for (u, v), e in zip(pairs, elems)]
    return Network(labels, tuple(edges))


def p4_example() -> Network:
    """The 4-vertex path whose edge weights become s, 1/s, s.

    Outer edges are pure inverse-capacitance (D=1, weight s), the middle
    edge pure inductance (L=1, weight 1/s).
    """
    return Network(
        ("x1", "x2", "x3", "x4"),
        (
            Edge(0, 1, 0.0, 0.0, 1.0),
            Edge(1, 2, 1.0, 0.0, 0.0),
            Edge(2, 3, 0.0, 0.0, 1.0),
        ),
    )
