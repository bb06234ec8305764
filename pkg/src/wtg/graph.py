"""Finite multigraphs with loops, stable edge indices and edge labels.

Edges keep their original index through deletion and contraction, so a
subset of edges is always an ``int`` mask over original indices (bit ``i``
for edge ``i``).  Vertices are ``0..vertex_count-1`` internally and 1-based
in JSON files.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    pass


class EdgeKind(enum.Enum):
    LOOP = "loop"
    BRIDGE = "bridge"
    ORDINARY = "ordinary"


class Edge(NamedTuple):
    index: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise GraphError(f"edge {e.index} has an endpoint out of range")
            if e.index in seen:
                raise GraphError(f"duplicate edge index {e.index}")
            seen.add(e.index)

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[Sequence[int]], one_based: bool = False):
        shift = 1 if one_based else 0
        edges = tuple(Edge(i, int(u) - shift, int(v) - shift) for i, (u, v) in enumerate(pairs))
        return cls(vertex_count, edges)

    # -- basic queries ------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> list[int]:
        return [e.index for e in self.edges]

    def edge_mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= 1 << e.index
        return m

    def edge(self, index: int) -> Edge:
        for e in self.edges:
            if e.index == index:
                return e
        raise GraphError(f"no edge with index {index}")

    def _dsu(self, A: int | None) -> _DSU:
        dsu = _DSU(self.vertex_count)
        for e in self.edges:
            if A is None or A >> e.index & 1:
                dsu.union(e.u, e.v)
        return dsu

    def component_count(self, A: int | None = None) -> int:
        """``k(G_A)``: components of the spanning subgraph ``(V, A)``."""
        if A is not None and A & ~self.edge_mask():
            raise GraphError("edge set mentions edges not in the graph")
        dsu = self._dsu(A)
        return sum(1 for v in range(self.vertex_count) if dsu.find(v) == v)

    def components(self, A: int | None = None) -> list[tuple[int, ...]]:
        """Vertex sets of the components of ``(V, A)``, ordered by smallest vertex."""
        dsu = self._dsu(A)
        groups: dict[int, list[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(dsu.find(v), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def betti1(self, A: int | None = None) -> int:
        """Cycle rank ``|A| - |V| + k(G_A)``."""
        size = len(self.edges) if A is None else A.bit_count()
        return size - self.vertex_count + self.component_count(A)

    def classify_edge(self, index: int) -> EdgeKind:
        e = self.edge(index)
        if e.is_loop:
            return EdgeKind.LOOP
        rest = self.edge_mask() & ~(1 << index)
        if self.component_count(rest) > self.component_count():
            return EdgeKind.BRIDGE
        return EdgeKind.ORDINARY

    # -- minors ---------------------------------------------------------------

    def delete(self, index: int) -> "Multigraph":
        self.edge(index)
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if e.index != index))

    def contract(self, index: int) -> "Multigraph":
        """Identify the endpoints of a non-loop edge; other edges keep their index."""
        e = self.edge(index)
        if e.is_loop:
            raise GraphError("contract-loop")
        keep, gone = min(e.u, e.v), max(e.u, e.v)

        def image(w: int) -> int:
            if w == gone:
                w = keep
            return w - 1 if w > gone else w

        edges = tuple(
            Edge(f.index, image(f.u), image(f.v)) for f in self.edges if f.index != index
        )
        return Multigraph(self.vertex_count - 1, edges)

    def minor(self, index: int, kind: str) -> "Multigraph":
        if kind == "delete":
            return self.delete(index)
        if kind == "contract":
            return self.contract(index)
        raise GraphError(f"unknown minor kind {kind!r}")

    def restrict(self, A: int) -> "Multigraph":
        """Spanning subgraph ``(V, A)``."""
        return Multigraph(self.vertex_count, tuple(e for e in self.edges if A >> e.index & 1))

    def renumbered(self, order: Sequence[int]) -> "Multigraph":
        """Same graph with edge ``order[i]`` given index ``i``."""
        return Multigraph(
            self.vertex_count,
            tuple(Edge(i, self.edge(old).u, self.edge(old).v) for i, old in enumerate(order)),
        )

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[e.u + 1, e.v + 1] for e in sorted(self.edges)],
        }

    @classmethod
    def from_json(cls, data) -> "Multigraph":
        try:
            n = int(data["vertices"])
            pairs = [tuple(p) for p in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        for p in pairs:
            if len(p) != 2:
                raise GraphError(f"edge {list(p)} does not have two endpoints")
        return cls.from_pairs(n, pairs, one_based=True)

    @classmethod
    def load(cls, path: str | Path) -> "Multigraph":
        return cls.from_json(json.loads(Path(path).read_text()))


def component_count(g: Multigraph, A: int | None = None) -> int:
    return g.component_count(A)


def betti1(g: Multigraph, A: int | None = None) -> int:
    return g.betti1(A)


def classify_edge(g: Multigraph, index: int) -> EdgeKind:
    return g.classify_edge(index)


def edge_minor(g: Multigraph, index: int, kind: str) -> Multigraph:
    return g.minor(index, kind)


COLOURING_GUARD = 10**7


def colouring_count(g: Multigraph, A: int, lam: int) -> int:
    """Count maps ``V -> {1..λ}`` constant on each component of ``(V, A)``.

    Brute force over all ``λ^|V|`` colourings; an oracle for ``λ^{k(G_A)}``.
    """
    if lam < 1:
        raise GraphError("λ must be a positive integer")
    if lam ** g.vertex_count > COLOURING_GUARD:
        raise GraphError(f"colouring enumeration guard exceeded: {lam}^{g.vertex_count} > {COLOURING_GUARD}")
    joined = [(e.u, e.v) for e in g.edges if A >> e.index & 1]
    return sum(
        1
        for col in itertools.product(range(lam), repeat=g.vertex_count)
        if all(col[u] == col[v] for u, v in joined)
    )


# ---------------------------------------------------------------------------
# edge labels
# ---------------------------------------------------------------------------

def validate_label(label: Sequence[int], n: int) -> tuple[int, ...]:
    """A label maps original edge ``i`` to ``label[i] ∈ {1..n}`` bijectively."""
    label = tuple(int(x) for x in label)
    if len(label) != n or sorted(label) != list(range(1, n + 1)):
        raise GraphError(f"label {list(label)} is not a bijection onto 1..{n}")
    return label


def identity_label(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def label_mask(label: Sequence[int], A: int) -> int:
    """``s(A)`` as a mask over ``Ω``: edge bit ``i`` goes to bit ``label[i] - 1``."""
    out = 0
    i = 0
    while A:
        if A & 1:
            out |= 1 << (label[i] - 1)
        A >>= 1
        i += 1
    return out


def load_label(source: str, n: int) -> tuple[int, ...]:
    """Accept a JSON file ``{"label": [...]}`` or an inline list ``"[4,1,2,3]"``."""
    text = source.strip()
    if text.startswith("["):
        data = json.loads(text)
    else:
        raw = json.loads(Path(source).read_text())
        data = raw["label"] if isinstance(raw, dict) else raw
    return validate_label(data, n)
