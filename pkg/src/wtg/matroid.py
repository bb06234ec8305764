"""Matroids as rank oracles: graphic, linear over F_p, and uniform.

Ground elements are ``0..n-1`` and subsets are bitmasks over them.  A minor
keeps the parent's base oracle and only records which elements are gone
and which were contracted, so surviving elements keep their identity.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .graph import Multigraph
from .linalg import rank_mod_p


class MatroidError(ValueError):
    pass


class ElementKind(enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    ORDINARY = "ordinary"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise MatroidError(f"{self.p} is not prime")
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise MatroidError("ragged matrix")
        object.__setattr__(self, "rows", tuple(tuple(x % self.p for x in r) for r in self.rows))

    @property
    def cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def rank(self, A: int) -> int:
        cols = [self.column(j) for j in range(self.cols) if A >> j & 1]
        return rank_mod_p(cols, self.p)


class _Memo:
    """Value-transparent rank cache for a base oracle."""

    def __init__(self, fn: Callable[[int], int]):
        self.fn = fn
        self.cache: dict[int, int] = {}

    def __call__(self, A: int) -> int:
        r = self.cache.get(A)
        if r is None:
            r = self.fn(A)
            self.cache[A] = r
        return r


@dataclass(frozen=True)
class RankOracle:
    """A matroid on ``elements`` with ``rank(A) = base(A ∪ C) - base(C)``.

    ``C`` is the set of contracted elements of the original matroid.
    """

    size: int  # number of elements of the original matroid
    ground: int  # mask of surviving elements
    base: Callable[[int], int] = field(repr=False, compare=False)
    contracted: int = 0
    kind: str = "abstract"
    source: object = field(default=None, repr=False, compare=False)

    @classmethod
    def from_rank(cls, n: int, rank: Callable[[int], int], kind: str = "abstract", source=None):
        return cls(n, (1 << n) - 1, _Memo(rank), 0, kind, source)

    @classmethod
    def graphic(cls, g: Multigraph) -> "RankOracle":
        ids = sorted(g.edge_ids())
        if ids != list(range(len(ids))):
            raise MatroidError("graphic matroid needs edges indexed 0..n-1")
        v = g.vertex_count
        return cls.from_rank(len(ids), lambda A: v - g.component_count(A), "graphic", g)

    @classmethod
    def linear(cls, m: FpMatrix) -> "RankOracle":
        return cls.from_rank(m.cols, m.rank, "linear", m)

    @classmethod
    def uniform(cls, r: int, n: int) -> "RankOracle":
        if not 0 <= r <= n:
            raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        return cls.from_rank(n, lambda A: min(r, A.bit_count()), "uniform", (r, n))

    # -- queries --------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ground.bit_count()

    def elements(self) -> list[int]:
        return [i for i in range(self.size) if self.ground >> i & 1]

    def rank(self, A: int | None = None) -> int:
        if A is None:
            A = self.ground
        elif A & ~self.ground:
            raise MatroidError("subset mentions elements outside the ground set")
        if not self.contracted:
            return self.base(A)
        return self.base(A | self.contracted) - self.base(self.contracted)

    def classify(self, e: int) -> ElementKind:
        bit = 1 << e
        if not self.ground & bit:
            raise MatroidError(f"element {e} not in the ground set")
        if self.rank(bit) == 0:
            return ElementKind.LOOP
        if self.rank() - self.rank(self.ground & ~bit) == 1:
            return ElementKind.COLOOP
        return ElementKind.ORDINARY

    def delete(self, e: int) -> "RankOracle":
        bit = 1 << e
        if not self.ground & bit:
            raise MatroidError(f"element {e} not in the ground set")
        return RankOracle(self.size, self.ground & ~bit, self.base, self.contracted, self.kind, self.source)

    def contract(self, e: int) -> "RankOracle":
        bit = 1 << e
        if not self.ground & bit:
            raise MatroidError(f"element {e} not in the ground set")
        return RankOracle(self.size, self.ground & ~bit, self.base, self.contracted | bit, self.kind, self.source)

    def minor(self, e: int, kind: str) -> "RankOracle":
        if kind == "delete":
            return self.delete(e)
        if kind == "contract":
            return self.contract(e)
        raise MatroidError(f"unknown minor kind {kind!r}")

    def dual(self) -> "RankOracle":
        """``ρ*(A) = |A| - ρ(E) + ρ(E ∖ A)`` on the same (unminored) ground set."""
        if self.contracted or self.ground != (1 << self.size) - 1:
            raise MatroidError("dual is only built for unminored matroids")
        full, rE = self.ground, self.rank()
        return RankOracle.from_rank(
            self.size, lambda A: A.bit_count() - rE + self.rank(full & ~A), "dual", self
        )

    # -- JSON -----------------------------------------------------------------

    @classmethod
    def from_json(cls, data) -> "RankOracle":
        try:
            kind = data["kind"]
            if kind == "linear":
                return cls.linear(FpMatrix(int(data["p"]), tuple(tuple(int(x) for x in r) for r in data["matrix"])))
            if kind == "graphic":
                return cls.graphic(Multigraph.from_json(data["graph"]))
            if kind == "uniform":
                return cls.uniform(int(data["r"]), int(data["n"]))
        except (KeyError, TypeError) as exc:
            raise MatroidError(f"malformed matroid JSON: {exc}") from exc
        raise MatroidError(f"unknown matroid kind {kind!r}")

    @classmethod
    def load(cls, path: str | Path) -> "RankOracle":
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict:
        if self.contracted or self.ground != (1 << self.size) - 1:
            raise MatroidError("only unminored matroids have a file form")
        if self.kind == "linear":
            return {"kind": "linear", "p": self.source.p, "matrix": [list(r) for r in self.source.rows]}
        if self.kind == "graphic":
            return {"kind": "graphic", "graph": self.source.to_json()}
        if self.kind == "uniform":
            r, n = self.source
            return {"kind": "uniform", "r": r, "n": n}
        raise MatroidError("abstract rank oracles have no file form")


def graphic_rank(g: Multigraph, A: int) -> int:
    return g.vertex_count - g.component_count(A)


def linear_rank(m: FpMatrix, A: int) -> int:
    return m.rank(A)


def matroid_classify(m: RankOracle, e: int) -> ElementKind:
    return m.classify(e)


def matroid_minor(m: RankOracle, e: int, kind: str) -> RankOracle:
    return m.minor(e, kind)


def relabel_elements(m: RankOracle, order: Sequence[int]) -> RankOracle:
    """Matroid whose element ``i`` is ``m``'s element ``order[i]``."""
    if m.contracted or m.ground != (1 << m.size) - 1:
        raise MatroidError("relabelling needs an unminored matroid")

    def translate(A: int) -> int:
        out = 0
        for i, old in enumerate(order):
            if A >> i & 1:
                out |= 1 << old
        return out

    return RankOracle.from_rank(m.size, lambda A: m.rank(translate(A)), m.kind, None)
