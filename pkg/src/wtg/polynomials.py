"""Weighted chromatic, Tutte and Tutte–Grothendieck polynomials.

Each polynomial has two routes:

* a direct subset sum over ``A ⊆ E``;
* a deletion–contraction recursion that builds a :class:`SetIndexedPoly`
  (``f̃``-symbols combined with ``∘``) and only plugs the weight in at the
  very end.  Eager evaluation would kill everything for ``d ≥ 1`` since
  ``f̃(∅) = 0``.

Labels are tuples with ``label[i]`` the element of ``{1..n}`` carried by
edge (or matroid element) ``i``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import BIG_X, BIG_Y, LAM, MAX_GROUND, MVPoly, SetIndexedPoly, X_, Y_, as_fraction, submasks
from .graph import EdgeKind, Multigraph, label_mask, validate_label
from .matroid import ElementKind, RankOracle
from .weights import WeightFn

Pivot = Callable[[Sequence[int]], int]


class HarmonicityError(ValueError):
    pass


def lowest_index(ids: Sequence[int]) -> int:
    return min(ids)


@dataclass(frozen=True)
class TGParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if not self.alpha or not self.beta:
            raise ValueError("α and β must both be nonzero")


def _check_sizes(n: int, label: Sequence[int], f: WeightFn | None):
    if n > MAX_GROUND:
        raise ValueError(f"{n} elements exceeds the size guard {MAX_GROUND}")
    label = validate_label(label, n)
    if f is not None and f.n != n:
        raise ValueError(f"weight is on {f.n} elements but the instance has {n}")
    return label


def _graph_edges_canonical(g: Multigraph) -> None:
    if sorted(g.edge_ids()) != list(range(g.edge_count)):
        raise ValueError("labelled graphs need edges indexed 0..n-1")


def _poly_from(acc: dict, builder) -> MVPoly:
    total = MVPoly.zero()
    for key, c in acc.items():
        if c:
            total = total + builder(key).scale(c)
    return total


# ---------------------------------------------------------------------------
# chromatic
# ---------------------------------------------------------------------------

def chromatic_direct(g: Multigraph, label: Sequence[int], f: WeightFn) -> MVPoly:
    """``Σ_A f̃(s(E∖A)) (-1)^{|A|} λ^{k(G_A)}``."""
    _graph_edges_canonical(g)
    label = _check_sizes(g.edge_count, label, f)
    E = g.edge_mask()
    acc: dict[int, Fraction] = defaultdict(Fraction)
    for A in submasks(E):
        w = f.tilde(label_mask(label, E & ~A))
        if w:
            acc[g.component_count(A)] += -w if A.bit_count() & 1 else w
    return _poly_from(acc, lambda k: LAM ** k)


def chromatic_setpoly(g: Multigraph, label: Sequence[int], pivot: Pivot = lowest_index) -> SetIndexedPoly:
    """Deletion–contraction expansion of the weighted chromatic polynomial."""
    _graph_edges_canonical(g)
    return _chromatic_setpoly(g, _check_sizes(g.edge_count, label, None), pivot)


# the expansions do not depend on f, so repeated weights reuse them
@lru_cache(maxsize=64)
def _chromatic_setpoly(g: Multigraph, label: tuple[int, ...], pivot: Pivot) -> SetIndexedPoly:
    n = g.edge_count

    def rec(h: Multigraph) -> SetIndexedPoly:
        if not h.edges:
            return SetIndexedPoly.unit(n, LAM ** h.vertex_count)
        e = pivot(h.edge_ids())
        deleted = rec(h.delete(e))
        if h.edge(e).is_loop:
            return deleted.adjoin(label[e]) - deleted
        return deleted.adjoin(label[e]) - rec(h.contract(e))

    return rec(g)


def chromatic_recursive(g: Multigraph, label: Sequence[int], f: WeightFn,
                        pivot: Pivot = lowest_index) -> MVPoly:
    if f.n != g.edge_count:
        raise ValueError(f"weight is on {f.n} elements but the graph has {g.edge_count} edges")
    return chromatic_setpoly(g, label, pivot).evaluate(f)


def classical_chromatic(g: Multigraph) -> MVPoly:
    n = g.edge_count
    return chromatic_direct(g, tuple(range(1, n + 1)), WeightFn.ones(n, 0))


# ---------------------------------------------------------------------------
# Tutte
# ---------------------------------------------------------------------------

def _xy_monomial(key: tuple[int, int]) -> MVPoly:
    a, b = key
    return (X_ - 1) ** a * (Y_ - 1) ** b


def tutte_rank_data(m: RankOracle) -> list[tuple[int, int, int]]:
    """``(A, ρ(E) - ρ(A), |A| - ρ(A))`` for every subset of the ground set."""
    rE = m.rank()
    out = []
    for A in submasks(m.ground):
        r = m.rank(A)
        out.append((A, rE - r, A.bit_count() - r))
    return out


def tutte_direct(m: RankOracle, label: Sequence[int], f: WeightFn) -> MVPoly:
    """``Σ_A f̃(s(A)) (x-1)^{ρ(E)-ρ(A)} (y-1)^{|A|-ρ(A)}``."""
    if m.ground != (1 << m.size) - 1:
        raise ValueError("labelled matroids must not be minors")
    label = _check_sizes(m.size, label, f)
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for A, a, b in tutte_rank_data(m):
        w = f.tilde(label_mask(label, A))
        if w:
            acc[(a, b)] += w
    return _poly_from(acc, _xy_monomial)


def tutte_setpoly(m: RankOracle, label: Sequence[int], pivot: Pivot = lowest_index) -> SetIndexedPoly:
    if m.ground != (1 << m.size) - 1:
        raise ValueError("labelled matroids must not be minors")
    n = m.size
    label = _check_sizes(n, label, None)

    def rec(mm: RankOracle) -> SetIndexedPoly:
        if not mm.ground:
            return SetIndexedPoly.unit(n, 1)
        e = pivot(mm.elements())
        kind = mm.classify(e)
        j = label[e]
        if kind is ElementKind.LOOP:
            t = rec(mm.delete(e))
            return t + t.adjoin(j).scale(Y_ - 1)
        if kind is ElementKind.COLOOP:
            t = rec(mm.contract(e))
            return t.scale(X_ - 1) + t.adjoin(j)
        return rec(mm.delete(e)) + rec(mm.contract(e)).adjoin(j)

    return rec(m)


def tutte_recursive(m: RankOracle, label: Sequence[int], f: WeightFn,
                    pivot: Pivot = lowest_index) -> MVPoly:
    if f.n != m.size:
        raise ValueError(f"weight is on {f.n} elements but the matroid has {m.size}")
    return tutte_setpoly(m, label, pivot).evaluate(f)


def classical_tutte(m: RankOracle) -> MVPoly:
    return tutte_direct(m, tuple(range(1, m.size + 1)), WeightFn.ones(m.size, 0))


# ---------------------------------------------------------------------------
# Tutte–Grothendieck
# ---------------------------------------------------------------------------

BRIDGE_RULES = ("recipe", "literal")


def _tg_setpoly(g: Multigraph, label: Sequence[int], params: TGParams, pivot: Pivot,
                bridge_rule: str, mirrored: bool) -> SetIndexedPoly:
    """Shared recursion for Φ (``mirrored=False``) and P (``mirrored=True``).

    ``bridge_rule="recipe"`` uses ``(X-β)·∘Φ(G∖e) + β·Φ(G∖e)`` at a bridge;
    ``"literal"`` multiplies both summands by an extra ``(Y-α)/α``.
    """
    if bridge_rule not in BRIDGE_RULES:
        raise ValueError(f"bridge_rule must be one of {BRIDGE_RULES}")
    _graph_edges_canonical(g)
    label = _check_sizes(g.edge_count, label, None)
    return _tg_setpoly_cached(g, label, params, pivot, bridge_rule, mirrored)


@lru_cache(maxsize=64)
def _tg_setpoly_cached(g: Multigraph, label: tuple[int, ...], params: TGParams, pivot: Pivot,
                       bridge_rule: str, mirrored: bool) -> SetIndexedPoly:
    n = g.edge_count
    alpha, beta = params.alpha, params.beta
    y_shift = BIG_Y - alpha
    y_prime = y_shift / alpha
    x_shift = BIG_X - beta

    def split(t: SetIndexedPoly, j: int, with_e, without_e) -> SetIndexedPoly:
        # Φ puts ∘ on the first coefficient, P on the second
        if mirrored:
            with_e, without_e = without_e, with_e
        return t.adjoin(j).scale(with_e) + t.scale(without_e)

    def rec(h: Multigraph) -> SetIndexedPoly:
        if not h.edges:
            return SetIndexedPoly.unit(n, 1)
        e = pivot(h.edge_ids())
        j = label[e]
        kind = h.classify_edge(e)
        if kind is EdgeKind.LOOP:
            return split(rec(h.delete(e)), j, MVPoly.const(alpha), y_shift)
        if kind is EdgeKind.BRIDGE:
            t = rec(h.delete(e))
            if bridge_rule == "literal":
                return split(t, j, x_shift * y_prime, y_prime.scale(beta))
            return split(t, j, x_shift, MVPoly.const(beta))
        deleted = rec(h.delete(e))
        contracted = rec(h.contract(e))
        if mirrored:
            return deleted.scale(alpha) + contracted.adjoin(j).scale(beta)
        return deleted.adjoin(j).scale(alpha) + contracted.scale(beta)

    return rec(g)


def tg_phi_setpoly(g, label, params: TGParams, pivot: Pivot = lowest_index,
                   bridge_rule: str = "recipe") -> SetIndexedPoly:
    return _tg_setpoly(g, label, params, pivot, bridge_rule, mirrored=False)


def tg_p_setpoly(g, label, params: TGParams, pivot: Pivot = lowest_index,
                 bridge_rule: str = "recipe") -> SetIndexedPoly:
    return _tg_setpoly(g, label, params, pivot, bridge_rule, mirrored=True)


def tg_phi(g: Multigraph, label: Sequence[int], f: WeightFn, params: TGParams,
           pivot: Pivot = lowest_index, bridge_rule: str = "recipe") -> MVPoly:
    """Weighted Tutte–Grothendieck polynomial Φ_f in ``X, Y``.

    Defined by recursion on the lowest-index surviving edge unless another
    ``pivot`` is supplied.
    """
    if f.n != g.edge_count:
        raise ValueError(f"weight is on {f.n} elements but the graph has {g.edge_count} edges")
    return tg_phi_setpoly(g, label, params, pivot, bridge_rule).evaluate(f)


def tg_p(g: Multigraph, label: Sequence[int], f: WeightFn, params: TGParams,
         pivot: Pivot = lowest_index, bridge_rule: str = "recipe") -> MVPoly:
    if f.n != g.edge_count:
        raise ValueError(f"weight is on {f.n} elements but the graph has {g.edge_count} edges")
    return tg_p_setpoly(g, label, params, pivot, bridge_rule).evaluate(f)


def tg_phi_subset_form(g: Multigraph, label: Sequence[int], f: WeightFn, params: TGParams) -> MVPoly:
    """Closed subset sum for Φ_f under the recipe bridge rule.

    ``Σ_A f̃(s(E∖A)) α^{ν(E)-ν(A)} β^{ρ(A)} (X-β)^{ρ(E)-ρ(A)} (Y-α)^{ν(A)}``
    with ``ν(A) = |A| - ρ(A)``.  No pivot is involved, so agreement with
    :func:`tg_phi` under every edge order shows order independence.
    """
    _graph_edges_canonical(g)
    label = _check_sizes(g.edge_count, label, f)
    m = RankOracle.graphic(g)
    E = g.edge_mask()
    rE = m.rank()
    nuE = g.edge_count - rE
    acc: dict[tuple[int, int, int, int], Fraction] = defaultdict(Fraction)
    for A in submasks(E):
        w = f.tilde(label_mask(label, E & ~A))
        if w:
            r = m.rank(A)
            nu = A.bit_count() - r
            acc[(nuE - nu, r, rE - r, nu)] += w
    alpha, beta = params.alpha, params.beta
    return _poly_from(
        acc,
        lambda k: MVPoly.const(alpha ** k[0] * beta ** k[1]) * (BIG_X - beta) ** k[2] * (BIG_Y - alpha) ** k[3],
    )


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------

def require_harmonic(f: WeightFn) -> None:
    if not f.is_harmonic():
        raise HarmonicityError("harmonicity required")


def chromatic_tutte_sides(g: Multigraph, label: Sequence[int], f: WeightFn) -> tuple[MVPoly, MVPoly]:
    """Both sides of ``χ_f = (-1)^{ρ(E)+d} λ^{k(G)} T_f(M_G; 1-λ, 0)``."""
    m = RankOracle.graphic(g)
    lhs = chromatic_direct(g, label, f)
    tutte = tutte_direct(m, label, f)
    sign = -1 if (m.rank() + f.d) % 2 else 1
    rhs = tutte.substitute({"x": 1 - LAM, "y": 0}) * LAM ** g.component_count() * sign
    return lhs, rhs


def verify_chromatic_tutte(g: Multigraph, label: Sequence[int], f: WeightFn) -> bool:
    require_harmonic(f)
    lhs, rhs = chromatic_tutte_sides(g, label, f)
    return lhs == rhs


def tg_recipe_rhs(g: Multigraph, label: Sequence[int], f: WeightFn, params: TGParams) -> MVPoly:
    """``(-1)^d α^{|E|-|V|+k} β^{|V|-k} T_f(M_G; X/β, Y/α)``."""
    m = RankOracle.graphic(g)
    k = g.component_count()
    tutte = tutte_direct(m, label, f)
    scaled = tutte.substitute({"x": BIG_X / params.beta, "y": BIG_Y / params.alpha})
    factor = params.alpha ** (g.edge_count - g.vertex_count + k) * params.beta ** (g.vertex_count - k)
    return scaled.scale(factor * (-1) ** f.d)


def verify_tg_recipe(g: Multigraph, label: Sequence[int], f: WeightFn, params: TGParams,
                     pivot: Pivot = lowest_index, bridge_rule: str = "recipe") -> bool:
    require_harmonic(f)
    return tg_phi(g, label, f, params, pivot, bridge_rule) == tg_recipe_rhs(g, label, f, params)
