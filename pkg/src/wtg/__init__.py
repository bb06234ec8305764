"""Exact weighted chromatic, Tutte and Tutte–Grothendieck polynomials.

Weights are homogeneous functions on the d-subsets of ``{1..n}``; a label
ties the edges of a graph (or elements of a matroid) to ``{1..n}``.
"""

from .algebra import MVPoly, SetIndexedPoly, mvpoly_substitute, setpoly_adjoin, setpoly_evaluate
from .graph import Edge, EdgeKind, GraphError, Multigraph, identity_label, label_mask, validate_label
from .invariants import (
    InvariantReport,
    distinguishing_pair_search,
    invariant_closed_form,
    invariant_label_sum,
    log_concavity_check,
    matroid_pair_check,
    verify_invariant_identities,
)
from .matroid import ElementKind, FpMatrix, MatroidError, RankOracle
from .polynomials import (
    TGParams,
    chromatic_direct,
    chromatic_recursive,
    classical_chromatic,
    classical_tutte,
    tg_p,
    tg_phi,
    tutte_direct,
    tutte_recursive,
    verify_chromatic_tutte,
    verify_tg_recipe,
)
from .weights import WeightError, WeightFn, harmonic_basis, hom_basis

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "EdgeKind",
    "ElementKind",
    "FpMatrix",
    "GraphError",
    "InvariantReport",
    "MVPoly",
    "MatroidError",
    "Multigraph",
    "RankOracle",
    "SetIndexedPoly",
    "TGParams",
    "WeightError",
    "WeightFn",
    "chromatic_direct",
    "chromatic_recursive",
    "classical_chromatic",
    "classical_tutte",
    "distinguishing_pair_search",
    "harmonic_basis",
    "hom_basis",
    "identity_label",
    "invariant_closed_form",
    "invariant_label_sum",
    "label_mask",
    "log_concavity_check",
    "matroid_pair_check",
    "mvpoly_substitute",
    "setpoly_adjoin",
    "setpoly_evaluate",
    "tg_p",
    "tg_phi",
    "tutte_direct",
    "tutte_recursive",
    "validate_label",
    "verify_chromatic_tutte",
    "verify_invariant_identities",
    "verify_tg_recipe",
]
