"""Homogeneous weights on d-subsets and the harmonic subspace.

A ``WeightFn`` of degree ``d`` on ``{1..n}`` assigns a rational to every
d-subset.  Its extension ``f̃(X)`` sums the values over the d-subsets of
``X``.  Harmonic weights are those killed by the map sending a d-set to the
formal sum of its (d-1)-subsets.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Mapping

from .algebra import (
    MAX_GROUND,
    as_fraction,
    check_mask,
    elements_of,
    mask_of,
    masks_of_size,
)
from .linalg import nullspace


class WeightError(ValueError):
    pass


class WeightFn:
    """Immutable homogeneous weight of degree ``d`` on ``{1..n}``.

    Only nonzero values are stored; omitted d-subsets weigh zero.
    """

    __slots__ = ("n", "d", "_values", "_tilde_cache")

    def __init__(self, n: int, d: int, values: Mapping[int, object] | None = None):
        if not 0 <= n <= MAX_GROUND:
            raise WeightError(f"n={n} outside 0..{MAX_GROUND}")
        if not 0 <= d <= n:
            raise WeightError(f"degree d={d} outside 0..{n}")
        self.n = n
        self.d = d
        clean: dict[int, Fraction] = {}
        for mask, v in (values or {}).items():
            check_mask(mask, n)
            if mask.bit_count() != d:
                raise WeightError(f"set {elements_of(mask)} is not a {d}-subset")
            v = as_fraction(v)
            if v:
                clean[mask] = v
        self._values = clean
        self._tilde_cache: dict[int, Fraction] = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_sets(cls, n: int, d: int, values: Mapping[Iterable[int], object]) -> "WeightFn":
        return cls(n, d, {mask_of(k): v for k, v in values.items()})

    @classmethod
    def indicator(cls, n: int, elements: Iterable[int]) -> "WeightFn":
        m = mask_of(elements)
        return cls(n, m.bit_count(), {m: 1})

    @classmethod
    def ones(cls, n: int, d: int = 0) -> "WeightFn":
        """``f ≡ 1`` on every d-subset; ``d = 0`` gives the classical theory."""
        return cls(n, d, {m: 1 for m in masks_of_size(n, d)})

    @classmethod
    def constant(cls, n: int, d: int, c) -> "WeightFn":
        return cls(n, d, {m: c for m in masks_of_size(n, d)})

    @classmethod
    def from_vector(cls, n: int, d: int, vector: Iterable) -> "WeightFn":
        """Values listed in the lexicographic order of the d-subsets."""
        keys = masks_of_size(n, d)
        vector = list(vector)
        if len(vector) != len(keys):
            raise WeightError(f"expected {len(keys)} values, got {len(vector)}")
        return cls(n, d, dict(zip(keys, vector)))

    # -- access -------------------------------------------------------------

    def __call__(self, Z: int) -> Fraction:
        return self._values.get(Z, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._values.items())

    def vector(self) -> list[Fraction]:
        return [self(m) for m in masks_of_size(self.n, self.d)]

    def total(self) -> Fraction:
        """``Σ_Z f(Z)`` over all d-subsets."""
        return sum(self._values.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightFn):
            return NotImplemented
        return (self.n, self.d, self._values) == (other.n, other.d, other._values)

    def __hash__(self) -> int:
        return hash((self.n, self.d, frozenset(self._values.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{elements_of(m)}: {v}" for m, v in self.items())
        return f"WeightFn(n={self.n}, d={self.d}, {{{body}}})"

    def __add__(self, other: "WeightFn") -> "WeightFn":
        if (self.n, self.d) != (other.n, other.d):
            raise WeightError("weights live in different spaces")
        vals = dict(self._values)
        for m, v in other._values.items():
            vals[m] = vals.get(m, 0) + v
        return WeightFn(self.n, self.d, vals)

    def scale(self, c) -> "WeightFn":
        c = as_fraction(c)
        return WeightFn(self.n, self.d, {m: v * c for m, v in self._values.items()})

    def permute(self, sigma: Mapping[int, int]) -> "WeightFn":
        """``(σf)(Z) = f(σ⁻¹ Z)``, i.e. the value at ``Z`` moves to ``σ(Z)``."""
        return WeightFn(
            self.n, self.d,
            {mask_of(sigma[j] for j in elements_of(m)): v for m, v in self._values.items()},
        )

    # -- the extension f̃ ----------------------------------------------------

    def tilde(self, X: int) -> Fraction:
        """``f̃(X) = Σ_{Z ⊆ X, |Z| = d} f(Z)``."""
        cached = self._tilde_cache.get(X)
        if cached is not None:
            return cached
        size = X.bit_count()
        if size < self.d:
            value = Fraction(0)
        elif comb(size, self.d) <= len(self._values):
            value = sum(
                (self(mask_of(c)) for c in itertools.combinations(elements_of(X), self.d)),
                Fraction(0),
            )
        else:
            value = sum((v for m, v in self._values.items() if m & X == m), Fraction(0))
        if len(self._tilde_cache) < 1 << 20:
            self._tilde_cache[X] = value
        return value

    # -- harmonicity ----------------------------------------------------------

    def gamma_defect(self) -> dict[int, Fraction]:
        """For each (d-1)-subset ``Y``: ``Σ_{Z ⊇ Y, |Z| = d} f(Z)``."""
        if self.d == 0:
            raise WeightError("gamma undefined below degree 1")
        out = {Y: Fraction(0) for Y in masks_of_size(self.n, self.d - 1)}
        for Z, v in self._values.items():
            for j in elements_of(Z):
                out[Z & ~(1 << (j - 1))] += v
        return out

    def is_harmonic(self) -> bool:
        """Degree-0 weights are harmonic (the target space of γ is zero)."""
        if self.d == 0:
            return True
        return not any(self.gamma_defect().values())

    def level_sum(self, J: int, i: int) -> Fraction:
        """``f^{(i)}(J) = Σ_{|J ∩ Z| = i} f(Z)``."""
        if not 0 <= i <= self.d:
            raise WeightError(f"level i={i} outside 0..{self.d}")
        return sum((v for Z, v in self._values.items() if (Z & J).bit_count() == i), Fraction(0))

    def symmetrize(self) -> "WeightFn":
        """``R(f) = Σ_{σ ∈ S_n} σf``.

        Every permutation orbit covers each d-subset ``d!(n-d)!`` times per
        unit of total weight, so the result is constant.
        """
        c = factorial(self.d) * factorial(self.n - self.d) * self.total()
        return WeightFn.constant(self.n, self.d, c)

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "values": [{"set": elements_of(m), "value": _frac_text(v)} for m, v in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeightFn":
        try:
            n, d = int(data["n"]), int(data["d"])
            vals = {}
            for item in data.get("values", []):
                m = mask_of(int(j) for j in item["set"])
                if m in vals:
                    raise WeightError(f"set {item['set']} listed twice")
                vals[m] = as_fraction(item["value"])
        except (KeyError, TypeError) as exc:
            raise WeightError(f"malformed weight JSON: {exc}") from exc
        return cls(n, d, vals)

    @classmethod
    def load(cls, path: str | Path) -> "WeightFn":
        return cls.from_json(json.loads(Path(path).read_text()))


def _frac_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def extend_tilde(f: WeightFn, X: int) -> Fraction:
    return f.tilde(X)


def gamma_defect(f: WeightFn) -> dict[int, Fraction]:
    return f.gamma_defect()


def level_sum(f: WeightFn, J: int, i: int) -> Fraction:
    return f.level_sum(J, i)


def symmetrize(f: WeightFn) -> WeightFn:
    return f.symmetrize()


def symmetrize_by_permutations(f: WeightFn) -> WeightFn:
    """Literal ``Σ_σ σf`` over all ``n!`` permutations (for small ``n``)."""
    if f.n > 8:
        raise WeightError(f"n={f.n} too large for the permutation sum")
    total = WeightFn(f.n, f.d)
    for perm in itertools.permutations(range(1, f.n + 1)):
        total = total + f.permute(dict(zip(range(1, f.n + 1), perm)))
    return total


def hom_basis(n: int, d: int) -> list[WeightFn]:
    """Indicator basis of the homogeneous space, lexicographic in the d-subsets."""
    return [WeightFn(n, d, {m: 1}) for m in masks_of_size(n, d)]


def gamma_matrix(n: int, d: int) -> list[list[int]]:
    """Incidence matrix of (d-1)-subsets (rows) in d-subsets (columns)."""
    rows = masks_of_size(n, d - 1)
    cols = masks_of_size(n, d)
    return [[1 if Y & Z == Y else 0 for Z in cols] for Y in rows]


def harmonic_basis(n: int, d: int) -> list[WeightFn]:
    """Exact rational basis of the harmonic weights of degree ``d``."""
    if not 0 <= d <= n:
        raise WeightError(f"degree d={d} outside 0..{n}")
    return list(_harmonic_basis(n, d))


@lru_cache(maxsize=64)
def _harmonic_basis(n: int, d: int) -> tuple[WeightFn, ...]:
    if d == 0:
        return (WeightFn.ones(n, 0),)
    cols = masks_of_size(n, d)
    basis = nullspace(gamma_matrix(n, d), len(cols))
    return tuple(WeightFn(n, d, dict(zip(cols, v))) for v in basis)
