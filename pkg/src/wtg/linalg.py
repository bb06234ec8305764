"""Small exact linear algebra: rational null spaces and ranks over Q and F_p."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}`` over Q, one vector per free column.

    The basis is the standard one read off the reduced row echelon form:
    each vector has a 1 in its free column and 0 in every other free column.
    Rows are kept sparse, which matters for incidence matrices.
    """
    pending = [{j: Fraction(x) for j, x in enumerate(row) if x} for row in rows]
    reduced: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for c in range(ncols):
        pr = next((i for i, row in enumerate(pending) if c in row), None)
        if pr is None:
            continue
        prow = pending.pop(pr)
        inv = 1 / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        for group in (pending, reduced):
            for i, row in enumerate(group):
                factor = row.get(c)
                if factor:
                    out = dict(row)
                    for j, v in prow.items():
                        nv = out.get(j, 0) - factor * v
                        if nv:
                            out[j] = nv
                        else:
                            out.pop(j, None)
                    group[i] = out
        reduced.append(prow)
        pivots.append(c)
        if not pending:
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row.get(fc, Fraction(0))
        basis.append(v)
    return basis


def rank_mod_p(columns: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p of the matrix whose columns are given.

    Deterministic pivoting: the first row (in order) with a nonzero entry.
    """
    if not columns:
        return 0
    vecs = [[x % p for x in col] for col in columns]
    nrows = len(vecs[0])
    rank = 0
    for row in range(nrows):
        piv = next((j for j in range(rank, len(vecs)) if vecs[j][row]), None)
        if piv is None:
            continue
        vecs[rank], vecs[piv] = vecs[piv], vecs[rank]
        inv = pow(vecs[rank][row], -1, p)
        pv = vecs[rank]
        for j in range(rank + 1, len(vecs)):
            a = vecs[j][row]
            if a:
                t = a * inv % p
                vecs[j] = [(u - t * w) % p for u, w in zip(vecs[j], pv)]
        rank += 1
        if rank == len(vecs):
            break
    return rank


def rank_sparse(rows: Sequence[dict[int, int]]) -> int:
    """Exact rank over Q of an integer matrix given as sparse rows.

    Gaussian elimination with Fraction arithmetic on dictionaries; the
    boundary matrices handled here are small and very sparse.
    """
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        vec = {c: Fraction(v) for c, v in row.items() if v}
        while vec:
            lead = min(vec)
            prow = pivot_rows.get(lead)
            if prow is None:
                inv = 1 / vec[lead]
                pivot_rows[lead] = {c: v * inv for c, v in vec.items()}
                rank += 1
                break
            factor = vec[lead]
            for c, v in prow.items():
                nv = vec.get(c, 0) - factor * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
    return rank
