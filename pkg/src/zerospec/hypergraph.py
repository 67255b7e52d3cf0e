"""Uniform hypergraphs: validation, file parsing, generators and incidence matrices.

Vertices are labelled ``1..n``.  Edges are stored as sorted tuples and the
edge list keeps input order, which fixes the row order of the incidence
matrix.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .exceptions import HypergraphError

__all__ = [
    "Hypergraph",
    "parse_hypergraph",
    "format_hypergraph",
    "connected_components",
    "is_connected",
    "incidence_matrix",
    "gen_complete",
    "gen_cored_star",
    "gen_power",
    "gen_random_connected",
]


@dataclass(frozen=True)
class Hypergraph:
    """An m-uniform hypergraph on vertices ``1..n``.

    ``labels`` is set on components produced by :func:`connected_components`
    and maps local vertex ``i`` (1-based) to ``labels[i - 1]`` in the parent.
    """

    n: int
    m: int
    edges: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise HypergraphError(f"vertex count must be a positive integer, got {self.n!r}")
        if not isinstance(self.m, int) or self.m < 2:
            raise HypergraphError(f"uniformity must be an integer >= 2, got {self.m!r}")
        edges = []
        seen = set()
        for raw in self.edges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != self.m:
                raise HypergraphError(
                    f"edge {list(raw)} has {len(edge)} vertices, expected {self.m}"
                )
            if len(set(edge)) != len(edge):
                raise HypergraphError(f"duplicate vertex in edge {list(raw)}")
            if edge[0] < 1 or edge[-1] > self.n:
                raise HypergraphError(
                    f"vertex label out of range 1..{self.n} in edge {list(raw)}"
                )
            if edge in seen:
                raise HypergraphError(f"duplicate edge {list(edge)}")
            seen.add(edge)
            edges.append(edge)
        # an edgeless hypergraph only arises as an isolated-vertex component
        if not edges and self.n != 1:
            raise HypergraphError("hypergraph must have at least one edge")
        object.__setattr__(self, "edges", tuple(edges))
        if self.labels is not None:
            labels = tuple(int(v) for v in self.labels)
            if len(labels) != self.n:
                raise HypergraphError("label map length must equal n")
            object.__setattr__(self, "labels", labels)

    @property
    def k(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for edge in self.edges:
            for v in edge:
                deg[v] += 1
        return deg[1:]

    def original_label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v - 1]

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "edges": [list(e) for e in self.edges]}


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the plain-text or JSON hypergraph format.

    Plain text: a header line ``m n k`` followed by ``k`` lines of ``m``
    vertex labels; lines starting with ``#`` and blank lines are skipped.
    Input whose first non-whitespace character is ``{`` is read as JSON
    ``{"m": .., "n": .., "edges": [[..], ..]}``.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)

    lines = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise HypergraphError("malformed header: empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise HypergraphError(f"malformed header {lines[0]!r}: expected 'm n k'")
    try:
        m, n, k = (int(tok) for tok in header)
    except ValueError:
        raise HypergraphError(f"malformed header {lines[0]!r}: expected integers") from None
    if k < 1:
        raise HypergraphError(f"malformed header {lines[0]!r}: edge count must be >= 1")
    body = lines[1:]
    if len(body) != k:
        raise HypergraphError(f"malformed header: declares {k} edges, found {len(body)}")
    edges = []
    for ln in body:
        try:
            edges.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise HypergraphError(f"non-integer vertex label in line {ln!r}") from None
    return Hypergraph(n=n, m=m, edges=tuple(edges))


def _parse_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"malformed JSON hypergraph: {exc}") from None
    if not isinstance(data, dict) or not {"m", "n", "edges"} <= data.keys():
        raise HypergraphError("malformed header: JSON needs keys 'm', 'n', 'edges'")
    m, n, edges = data["m"], data["n"], data["edges"]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (m, n)):
        raise HypergraphError("malformed header: 'm' and 'n' must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError("'edges' must be a list of lists")
    if any(not isinstance(v, int) or isinstance(v, bool) for e in edges for v in e):
        raise HypergraphError("vertex labels must be integers")
    return Hypergraph(n=n, m=m, edges=tuple(tuple(e) for e in edges))


def format_hypergraph(H: Hypergraph) -> str:
    """Render ``H`` in the plain-text file format (inverse of parsing)."""
    out = [f"{H.m} {H.n} {H.k}"]
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def _component_roots(H: Hypergraph) -> list[int]:
    parent = list(range(H.n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for edge in H.edges:
        root = find(edge[0])
        for v in edge[1:]:
            other = find(v)
            if other != root:
                parent[other] = root
    return [find(v) for v in range(H.n + 1)]


def is_connected(H: Hypergraph) -> bool:
    roots = _component_roots(H)
    return len(set(roots[1:])) == 1


def connected_components(H: Hypergraph) -> list[Hypergraph]:
    """Split ``H`` into vertex-induced connected components.

    Components are ordered by their smallest original vertex; each one is
    relabelled to ``1..n_c`` preserving order, with ``labels`` recording the
    original vertex of every local vertex.
    """
    roots = _component_roots(H)
    groups: dict[int, list[int]] = {}
    for v in range(1, H.n + 1):
        groups.setdefault(roots[v], []).append(v)
    if len(groups) == 1:
        return [Hypergraph(n=H.n, m=H.m, edges=H.edges, labels=tuple(range(1, H.n + 1)))]

    edges_by_root: dict[int, list[tuple[int, ...]]] = {r: [] for r in groups}
    for edge in H.edges:
        edges_by_root[roots[edge[0]]].append(edge)

    components = []
    for root, verts in sorted(groups.items(), key=lambda item: item[1][0]):
        local = {v: i for i, v in enumerate(verts, start=1)}
        edges = tuple(tuple(local[v] for v in e) for e in edges_by_root[root])
        components.append(Hypergraph(n=len(verts), m=H.m, edges=edges, labels=tuple(verts)))
    return components


def incidence_matrix(H: Hypergraph) -> np.ndarray:
    """Return the k x n 0/1 edge-vertex incidence matrix (rows in edge order)."""
    B = np.zeros((H.k, H.n), dtype=np.int64)
    for row, edge in enumerate(H.edges):
        B[row, [v - 1 for v in edge]] = 1
    return B


def gen_complete(n: int, m: int) -> Hypergraph:
    """Complete m-uniform hypergraph: every m-subset of ``1..n`` is an edge."""
    if n <= m:
        raise HypergraphError(f"complete hypergraph needs n >= m + 1, got n={n}, m={m}")
    return Hypergraph(n=n, m=m, edges=tuple(combinations(range(1, n + 1), m)))


def gen_cored_star(t: int, m: int) -> Hypergraph:
    """Hyperstar with ``t`` edges sharing the centre vertex 1.

    Every other vertex has degree one, so each edge has a private vertex.
    """
    if t < 1 or m < 2:
        raise HypergraphError(f"hyperstar needs t >= 1 and m >= 2, got t={t}, m={m}")
    edges = []
    for i in range(t):
        start = 2 + i * (m - 1)
        edges.append((1, *range(start, start + m - 1)))
    return Hypergraph(n=1 + t * (m - 1), m=m, edges=tuple(edges))


def gen_power(graph_edges: Iterable[Sequence[int]], m: int, n0: int | None = None) -> Hypergraph:
    """Generalized power hypergraph of a simple graph.

    Vertex ``u`` of the graph is blown up into the block
    ``(u-1)*m/2 + 1 .. u*m/2`` and each graph edge ``{u, v}`` becomes the
    union of the two blocks.  ``n0`` defaults to the largest graph vertex.
    """
    if m % 2:
        raise HypergraphError(f"power hypergraph needs even uniformity, got m={m}")
    graph_edges = [tuple(e) for e in graph_edges]
    if not graph_edges:
        raise HypergraphError("graph must have at least one edge")
    for e in graph_edges:
        if len(e) != 2 or e[0] == e[1]:
            raise HypergraphError(f"graph edge {list(e)} is not a 2-subset")
    if n0 is None:
        n0 = max(max(e) for e in graph_edges)
    h = m // 2

    def block(u):
        return range((u - 1) * h + 1, u * h + 1)

    edges = tuple((*block(u), *block(v)) for u, v in graph_edges)
    return Hypergraph(n=n0 * h, m=m, edges=edges)


def gen_random_connected(
    n: int, m: int, extra_edges: int = 0, rng: random.Random | None = None
) -> Hypergraph:
    """Random connected m-uniform hypergraph on exactly ``n`` vertices.

    A spanning chain of edges is grown first, each new edge touching at least
    one covered vertex; up to ``extra_edges`` further distinct random edges
    are then added.
    """
    if n < m:
        raise HypergraphError(f"need n >= m, got n={n}, m={m}")
    rng = rng or random.Random()
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    covered = verts[:m]
    uncovered = verts[m:]
    edges = {tuple(sorted(covered))}
    while uncovered:
        take = rng.randint(1, min(m - 1, len(uncovered)))
        new = [uncovered.pop() for _ in range(take)]
        old = rng.sample(covered, m - take)
        edges.add(tuple(sorted(new + old)))
        covered.extend(new)
    attempts = 0
    target = len(edges) + extra_edges
    while len(edges) < target and attempts < 20 * (extra_edges + 1):
        edges.add(tuple(sorted(rng.sample(range(1, n + 1), m))))
        attempts += 1
    ordered = sorted(edges)
    rng.shuffle(ordered)
    return Hypergraph(n=n, m=m, edges=tuple(ordered))
