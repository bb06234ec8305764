"""Label-sum invariants Φ̂, T̂, χ̂ and the checks built on them.

Summing a labelled polynomial over all ``n!`` labels is the same as using
the symmetrized weight ``R(f)``, which is constant on d-subsets.  That
gives the closed form

    Σ_s f̃(s(A)) = n! · F · C(|A|, d) / C(n, d),      F = Σ_Z f(Z),

used by :func:`invariant_closed_form`.  :func:`invariant_label_sum` does the
literal sum over permutations and is the oracle for it.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Sequence

from .algebra import BIG_X, BIG_Y, LAM, MVPoly, SetIndexedPoly, submasks
from .graph import Multigraph, identity_label
from .matroid import FpMatrix, RankOracle
from .polynomials import (
    TGParams,
    _xy_monomial,
    classical_chromatic,
    classical_tutte,
    tg_phi_setpoly,
    tutte_rank_data,
)
from .weights import WeightFn, hom_basis

log = logging.getLogger(__name__)

LABEL_SUM_GUARD = 9
KINDS = ("chromatic", "tutte", "tg")


class GuardError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantReport:
    polynomial: MVPoly
    method: str  # "label-sum" | "closed-form"
    kind: str
    n: int

    @property
    def n_factorial_factor(self) -> int:
        return factorial(self.n)

    @property
    def reduced(self) -> MVPoly:
        """The polynomial with the explicit ``n!`` divided out."""
        return self.polynomial / self.n_factorial_factor

    def to_text(self) -> str:
        return f"{self.n}! * ({self.reduced.to_text()})"


def _as_matroid(instance) -> RankOracle:
    if isinstance(instance, RankOracle):
        return instance
    if isinstance(instance, Multigraph):
        return RankOracle.graphic(instance)
    raise TypeError(f"expected a graph or matroid, got {type(instance).__name__}")


def _as_graph(instance, kind: str) -> Multigraph:
    if not isinstance(instance, Multigraph):
        raise TypeError(f"the {kind} invariant needs a graph")
    return instance


def _instance_size(instance) -> int:
    return instance.edge_count if isinstance(instance, Multigraph) else instance.size


def _chromatic_expansion(g: Multigraph) -> SetIndexedPoly:
    """``Σ_A (-1)^{|A|} λ^{k(G_A)} [E∖A]`` with identity labels."""
    E = g.edge_mask()
    acc: dict[int, MVPoly] = {}
    for A in submasks(E):
        acc[E & ~A] = LAM ** g.component_count(A) * (-1 if A.bit_count() & 1 else 1)
    return SetIndexedPoly(g.edge_count, acc)


def _tutte_expansion(m: RankOracle) -> SetIndexedPoly:
    return SetIndexedPoly(m.size, {A: _xy_monomial((a, b)) for A, a, b in tutte_rank_data(m)})


def _expansion(instance, kind: str, params: TGParams | None) -> SetIndexedPoly:
    if kind == "chromatic":
        return _chromatic_expansion(_as_graph(instance, kind))
    if kind == "tutte":
        return _tutte_expansion(_as_matroid(instance))
    if kind == "tg":
        if params is None:
            raise ValueError("the tg invariant needs α and β")
        g = _as_graph(instance, kind)
        return tg_phi_setpoly(g, identity_label(g.edge_count), params)
    raise ValueError(f"unknown invariant kind {kind!r}; expected one of {KINDS}")


def invariant_label_sum(instance, f: WeightFn, kind: str, params: TGParams | None = None) -> InvariantReport:
    """Literal ``Σ_{s ∈ S_n}`` of the labelled polynomial.

    The labelled polynomial for ``s`` is the identity-label expansion with
    every index set pushed through ``s``, so the expansion is built once
    and each label only contributes the weights ``f̃(s(K))``.
    """
    n = _instance_size(instance)
    if n > LABEL_SUM_GUARD:
        raise GuardError(f"label sum over {n}! labels exceeds the guard n <= {LABEL_SUM_GUARD}; use the closed form")
    if f.n != n:
        raise ValueError(f"weight is on {f.n} elements but the instance has {n}")
    expansion = _expansion(instance, kind, params).terms()
    hits: dict[int, Counter] = {K: Counter() for K in expansion}
    image = [0] * (1 << n)
    for perm in itertools.permutations(range(1, n + 1)):
        # images of all subsets under perm, each from the one without its lowest bit
        for K in range(1, 1 << n):
            low = K & -K
            image[K] = image[K ^ low] | 1 << (perm[low.bit_length() - 1] - 1)
        for K, seen in hits.items():
            seen[image[K]] += 1
    weights = {K: sum((c * f.tilde(X) for X, c in seen.items()), Fraction(0)) for K, seen in hits.items()}
    total = MVPoly.zero()
    for K, poly in expansion.items():
        if weights[K]:
            total = total + poly.scale(weights[K])
    return InvariantReport(total, "label-sum", kind, n)


def symmetrized_tilde(f: WeightFn, size: int) -> Fraction:
    """``R(f)~(A)`` for any ``|A| = size``: ``d!(n-d)! F · C(size, d)``."""
    # R(f) is the constant d!(n-d)!·F; not materialized, C(n, d) can be huge
    return factorial(f.d) * factorial(f.n - f.d) * f.total() * comb(size, f.d)


def _first_d_subset(d: int) -> int:
    return (1 << d) - 1


def invariant_closed_form(instance, f: WeightFn, kind: str) -> InvariantReport:
    """Invariant via the symmetrized weight; any ``n`` up to the mask limit."""
    n = _instance_size(instance)
    if f.n != n:
        raise ValueError(f"weight is on {f.n} elements but the instance has {n}")
    by_size = [symmetrized_tilde(f, a) for a in range(n + 1)]
    if kind == "chromatic":
        g = _as_graph(instance, kind)
        acc: dict[int, Fraction] = defaultdict(Fraction)
        for A in submasks(g.edge_mask()):
            a = A.bit_count()
            w = by_size[n - a]
            if w:
                acc[g.component_count(A)] += -w if a & 1 else w
        poly = sum((LAM ** k * c for k, c in acc.items() if c), MVPoly.zero())
    elif kind == "tutte":
        m = _as_matroid(instance)
        acc2: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for A, a, b in tutte_rank_data(m):
            w = by_size[A.bit_count()]
            if w:
                acc2[(a, b)] += w
        poly = sum((_xy_monomial(k) * c for k, c in acc2.items() if c), MVPoly.zero())
    else:
        raise ValueError(f"no closed form for kind {kind!r}")
    return InvariantReport(poly, "closed-form", kind, n)


# ---------------------------------------------------------------------------
# label-summed recipe identities
# ---------------------------------------------------------------------------

def verify_invariant_identities(g: Multigraph, f: WeightFn, params: TGParams) -> dict:
    """Compare Φ̂ and χ̂ with the Tutte invariant, literally and via the dual.

    ``literal`` forms substitute into ``T̂_f(M_G)``; ``dual`` forms use
    ``T̂_f(M_G*)`` with the two variables swapped, which accounts for Φ and χ
    weighting the complement ``s(E∖A)``.
    """
    m = RankOracle.graphic(g)
    dual = m.dual()
    rE, k, nE, nV = m.rank(), g.component_count(), g.edge_count, g.vertex_count
    alpha, beta = params.alpha, params.beta
    prefactor = alpha ** (nE - nV + k) * beta ** (nV - k)

    phi_hat = invariant_label_sum(g, f, "tg", params).polynomial
    chi_hat = invariant_label_sum(g, f, "chromatic").polynomial
    t_hat = invariant_label_sum(m, f, "tutte").polynomial
    t_hat_dual = invariant_label_sum(dual, f, "tutte").polynomial

    sign = -1 if rE % 2 else 1
    thm = t_hat.substitute({"x": BIG_X / beta, "y": BIG_Y / alpha}).scale(prefactor)
    cor = t_hat.substitute({"x": 1 - LAM, "y": 0}) * LAM ** k * sign
    thm_dual = t_hat_dual.substitute({"x": BIG_Y / alpha, "y": BIG_X / beta}).scale(prefactor)
    cor_dual = t_hat_dual.substitute({"x": 0, "y": 1 - LAM}) * LAM ** k * sign
    return {
        "tg_recipe": phi_hat == thm,
        "chromatic_tutte": chi_hat == cor,
        "tg_recipe_dual": phi_hat == thm_dual,
        "chromatic_tutte_dual": chi_hat == cor_dual,
        "phi_hat": phi_hat,
        "chi_hat": chi_hat,
        "t_hat": t_hat,
    }


# ---------------------------------------------------------------------------
# log-concavity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogConcavity:
    holds: bool
    index: int | None = None
    sequence: tuple[Fraction, ...] = field(default=(), repr=False)


def log_concavity_check(p: MVPoly | Sequence) -> LogConcavity:
    """Check ``a_{i-1} a_{i+1} <= a_i^2`` for the absolute coefficients.

    ``p`` is a polynomial univariate in λ (coefficients read from ``λ^0``
    upward) or an explicit sequence ``a_0, a_1, ...``.
    """
    if isinstance(p, MVPoly):
        seq = tuple(abs(c) for c in p.coefficients("λ"))
    else:
        seq = tuple(abs(Fraction(c)) for c in p)
    for i in range(1, len(seq) - 1):
        if seq[i - 1] * seq[i + 1] > seq[i] ** 2:
            return LogConcavity(False, i, seq)
    return LogConcavity(True, None, seq)


# ---------------------------------------------------------------------------
# the binary/ternary matroid pair and the distinguishing-pair search
# ---------------------------------------------------------------------------

BINARY_PAIR_MATRIX = ((1, 1, 1, 1, 0, 0, 0), (1, 1, 0, 0, 1, 1, 0), (0, 0, 1, 0, 1, 0, 1))
TERNARY_PAIR_MATRIX = ((2, 1, 0, 1, 0, 1, 2), (1, 1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1, 2))


def matroid_pair() -> tuple[RankOracle, RankOracle]:
    return (
        RankOracle.linear(FpMatrix(2, BINARY_PAIR_MATRIX)),
        RankOracle.linear(FpMatrix(3, TERNARY_PAIR_MATRIX)),
    )


def size_refined_rank_sums(m: RankOracle) -> list[MVPoly]:
    """``Σ_{|A| = a} (x-1)^{ρ(E)-ρ(A)} (y-1)^{a-ρ(A)}`` for ``a = 0..n``."""
    buckets: list[dict] = [defaultdict(int) for _ in range(m.size + 1)]
    for A, a, b in tutte_rank_data(m):
        buckets[A.bit_count()][(a, b)] += 1
    return [sum((_xy_monomial(k) * c for k, c in bucket.items()), MVPoly.zero()) for bucket in buckets]


def matroid_pair_check() -> dict:
    m1, m2 = matroid_pair()
    per_degree = {}
    for d in range(1, 8):
        per_degree[d] = all(
            invariant_closed_form(m1, f, "tutte").polynomial == invariant_closed_form(m2, f, "tutte").polynomial
            for f in hom_basis(7, d)
        )
    refined = [a == b for a, b in zip(size_refined_rank_sums(m1), size_refined_rank_sums(m2))]
    t1, t2 = classical_tutte(m1), classical_tutte(m2)
    return {
        "weighted_equal_by_degree": per_degree,
        "weighted_equal": all(per_degree.values()),
        "size_refined_equal": all(refined),
        "size_refined_equal_by_size": refined,
        "classical_equal": t1 == t2,
        "classical_m1": t1,
        "classical_m2": t2,
    }


CATALOG_GUARD = 12


def _weighted_signature(m: RankOracle) -> list[MVPoly]:
    """Closed-form T̂ for ``F = 1`` at every degree; it determines all of T̂."""
    return [
        invariant_closed_form(m, WeightFn(m.size, d, {_first_d_subset(d): 1}), "tutte").polynomial
        for d in range(m.size + 1)
    ]


def distinguishing_pair_search(catalog: Iterable[tuple[str, object]]) -> dict:
    """Bucket matroids by classical Tutte polynomial and compare weighted invariants.

    ``catalog`` yields ``(name, source)`` with ``source`` a RankOracle, a
    graph, a JSON-style dict (matroid or graph) or a path to one.  Bad entries are reported and skipped.
    """
    errors = []
    loaded: list[tuple[str, RankOracle]] = []
    for name, source in catalog:
        try:
            if isinstance(source, (str, Path)):
                source = json.loads(Path(source).read_text())
            if isinstance(source, dict) and "vertices" in source:
                m = RankOracle.graphic(Multigraph.from_json(source))
            elif isinstance(source, dict):
                m = RankOracle.from_json(source)
            else:
                m = _as_matroid(source)
            if m.size > CATALOG_GUARD:
                raise GuardError(f"{m.size} elements exceeds the catalog guard {CATALOG_GUARD}")
            loaded.append((name, m))
        except (ValueError, TypeError, OSError) as exc:
            log.warning("skipping catalog entry %s: %s", name, exc)
            errors.append({"name": name, "error": str(exc)})

    buckets: dict[tuple, list[tuple[str, RankOracle]]] = defaultdict(list)
    for name, m in loaded:
        t = classical_tutte(m)
        buckets[(m.size, tuple(sorted(t.terms().items())))].append((name, m))

    distinguishing, agreeing = [], []
    for members in buckets.values():
        sigs = {name: _weighted_signature(m) for name, m in members}
        for (n1, _), (n2, _) in itertools.combinations(members, 2):
            differing = [d for d, (a, b) in enumerate(zip(sigs[n1], sigs[n2])) if a != b]
            if differing:
                distinguishing.append({"pair": (n1, n2), "degrees": differing})
            else:
                agreeing.append({"pair": (n1, n2)})
    return {
        "buckets": [[name for name, _ in members] for members in buckets.values()],
        "distinguishing": distinguishing,
        "agreeing": agreeing,
        "errors": errors,
    }


def classical_chromatic_pair_equal(g1: Multigraph, g2: Multigraph) -> bool:
    return classical_chromatic(g1) == classical_chromatic(g2)
