"""Built-in instances and the exhaustive small-graph corpus.

The shipped JSON files live in ``wtg/data``.  The corpus holds every
connected multigraph (loops and parallel edges allowed) with at most
``max_edges`` edges, one representative per isomorphism class.
"""

from __future__ import annotations

import itertools
import json
import random
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .graph import Multigraph, validate_label
from .matroid import RankOracle

DATA_FILES = (
    "paw.json",
    "paw_label.json",
    "paw_complex.json",
    "wheel5.json",
    "wheel5_variant.json",
    "binary7.json",
    "ternary7.json",
    "triangle_matroid.json",
    "u23.json",
    "empty_matroid.json",
)


def data_path(name: str):
    return resources.files("wtg").joinpath("data").joinpath(name)


def load_data(name: str):
    return json.loads(data_path(name).read_text())


def paw() -> Multigraph:
    """Triangle 1-2-4 with a pendant edge 2-3; edges in file order."""
    return Multigraph.from_json(load_data("paw.json"))


def paw_label() -> tuple[int, ...]:
    return validate_label(load_data("paw_label.json")["label"], 4)


def paw_complex() -> Multigraph:
    """Triangle on edges 0-2 and a pendant edge 3 hanging off the triangle."""
    return Multigraph.from_json(load_data("paw_complex.json"))


def wheel_pair() -> tuple[Multigraph, Multigraph]:
    """The 5-spoke wheel and a non-isomorphic graph with the same chromatic polynomial."""
    return (
        Multigraph.from_json(load_data("wheel5.json")),
        Multigraph.from_json(load_data("wheel5_variant.json")),
    )


def matroid_files() -> dict[str, RankOracle]:
    names = ("binary7.json", "ternary7.json", "triangle_matroid.json", "u23.json", "empty_matroid.json")
    return {name: RankOracle.from_json(load_data(name)) for name in names}


# ---------------------------------------------------------------------------
# exhaustive corpus
# ---------------------------------------------------------------------------

Shape = tuple[int, tuple[tuple[int, int], ...]]


def _canonical(vertices: int, edges: tuple[tuple[int, int], ...]) -> Shape:
    best = None
    for perm in itertools.permutations(range(vertices)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return vertices, best


def _extensions(shape: Shape) -> Iterator[Shape]:
    vertices, edges = shape
    for u in range(vertices):
        for v in range(u, vertices):
            yield vertices, edges + ((u, v),)
        yield vertices + 1, edges + ((u, vertices),)


@lru_cache(maxsize=None)
def _shapes(max_edges: int) -> tuple[Shape, ...]:
    # every connected multigraph arises by adding one edge to a smaller one
    # (drop a non-bridge edge, or a pendant edge together with its leaf)
    layer = {(1, ())}
    found = sorted(layer)
    for _ in range(max_edges):
        layer = {_canonical(*ext) for s in layer for ext in _extensions(s)}
        found.extend(sorted(layer, key=lambda s: (len(s[1]), s)))
    return tuple(found)


def connected_corpus(max_edges: int = 5, min_edges: int = 0) -> list[Multigraph]:
    """Connected multigraphs up to isomorphism, ordered by edge count then shape."""
    return [
        Multigraph.from_pairs(v, edges)
        for v, edges in _shapes(max_edges)
        if len(edges) >= min_edges
    ]


def random_labels(n: int, count: int, seed: int = 0) -> list[tuple[int, ...]]:
    """``count`` labels drawn with a fixed seed; the identity label comes first."""
    rng = random.Random(f"labels:{seed}:{n}")
    out = [tuple(range(1, n + 1))]
    while len(out) < count:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out[:count]


def random_graphs(count: int, seed: int = 0, max_vertices: int = 5, max_edges: int = 7) -> list[Multigraph]:
    """Small random multigraphs (possibly disconnected, with loops and parallel edges)."""
    rng = random.Random(f"graphs:{seed}")
    out = []
    for _ in range(count):
        v = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        out.append(Multigraph.from_pairs(v, [(rng.randrange(v), rng.randrange(v)) for _ in range(m)]))
    return out
