"""Central extensions of an algebra inside the variety of an identity.

A one-dimensional central extension of A attaches an annihilator line
F·c and deforms the product by a bilinear form theta:

    (x, s)(y, t) = (xy, theta(x, y)).

Because c kills every product, the c-component of a bracketed monomial
evaluated on base arguments comes from the outermost multiplication
alone: it is theta(u, v) where u and v are the values of the two root
subtrees computed in A itself. A multilinear identity P therefore holds
in the extension exactly when it holds in A and theta kills the
P-weighted sum of these root pairs on every basis tuple. That linear
condition on the d^2 entries of theta cuts out the cocycles Z2_P; the
coborders B2 (deformations absorbed by moving the complement of the
annihilator line) are spanned by the component forms (x, y) -> (xy)_k.
When B2 sits inside Z2_P, dim H2_P = dim Z2_P - dim B2 counts genuinely
new extensions; H2_P = 0 means every extension in the variety of P is
split or a trivial deformation.

The brute-force alternative, building the (d+1)-dimensional extension
and running the identity checker on it, is deliberately kept as
extension_algebra for tests to cross-validate the root-pair rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Optional

import numpy as np

from .algebras import Algebra
from .conservative import is_terminal, terminal_identity
from .fastrank import certified_nullspace
from .identities import (
    _block_ranges,
    _int_weights,
    _parallel_blocks,
    _proj_gather,
    _shape_key,
    _shape_tables,
    first_violation,
)
from .linalg import Matrix, RankSink, RowEchelonBasis
from .monomials import IdentityCombination, shapes

_INT64_LIMIT = 1 << 62

BilinearForm = Matrix


def coborder_space(a: Algebra):
    """(dimension, basis) of the forms (x, y) -> f(xy), f a functional.

    These are spanned by the d component slices of the structure array,
    so the dimension equals the number of independent component forms.
    """
    d = a.dim
    sink = RankSink(d * d)
    for k in range(d):
        sink.feed([a.c[i][j][k] for i in range(d) for j in range(d)])
    basis = sink.basis()
    return basis.rank, [Matrix(d, d, row) for row in basis.rows]


def _root_pair_terms(a: Algebra, p: IdentityCombination):
    """Per-monomial data for the cocycle system.

    For each nonzero term of p: (integer weight, left-subtree value table,
    right-subtree value table, gather of flat basis tuples into the left
    table, same for the right, product of the two entry bounds).
    """
    d = a.dim
    n = p.degree
    weights, _wden = _int_weights(p)
    tables, bounds, _den = _shape_tables(a, n)
    degree_shapes = shapes(n)
    perms = list(permutations(range(1, n + 1)))
    nfact = factorial(n)
    terms = []
    for mi, w in enumerate(weights):
        if not w:
            continue
        sh = degree_shapes[mi // nfact]
        perm = perms[mi % nfact]
        left, right = sh.split()
        nl = left.leaves
        lkey, rkey = _shape_key(left), _shape_key(right)
        lidx = _proj_gather(d, n, tuple(perm[:nl]))
        ridx = _proj_gather(d, n, tuple(perm[nl:]))
        terms.append((w, tables[lkey], tables[rkey], lidx, ridx, bounds[lkey] * bounds[rkey]))
    return terms


def _cocycle_rref(a: Algebra, p: IdentityCombination) -> RowEchelonBasis:
    d = a.dim
    n = p.degree
    bad = first_violation(a, p)
    if bad is not None:
        raise ValueError(
            "base does not satisfy P: %s fails %s at basis tuple %r"
            % (a.name or "algebra", p.name or "the identity", bad)
        )
    cols = d * d
    if d == 0:
        return RowEchelonBasis(0, [], [])
    terms = _root_pair_terms(a, p)
    wsum = sum(abs(t[0]) for t in terms)
    maxprod = max((t[5] for t in terms), default=1)
    tables_object = any(t[1].dtype == object or t[2].dtype == object for t in terms)
    dtype = object if tables_object or wsum * maxprod >= _INT64_LIMIT else np.int64

    rows_total = d**n
    ranges = _block_ranges(rows_total, max(16, min(rows_total, (1 << 19) // cols)))

    def build(rng):
        v0, v1 = rng
        acc = np.zeros((v1 - v0, d, d), dtype=dtype)
        for w, tl, tr, lidx, ridx, _b in terms:
            lv = tl[lidx[v0:v1]]
            rv = tr[ridx[v0:v1]]
            if dtype is object and lv.dtype != object:
                lv = lv.astype(object)
                rv = rv.astype(object)
            acc += (w * lv)[:, :, None] * rv[:, None, :]
        return acc.reshape(v1 - v0, cols)

    def block_source():
        return _parallel_blocks(ranges, build)

    _rank, null = certified_nullspace(cols, block_source)
    return null


def cocycle_space(a: Algebra, p: IdentityCombination):
    """(dimension, basis of bilinear forms) of Z2 with respect to p.

    Raises ValueError when the base algebra itself violates p; no
    extension can repair that.
    """
    null = _cocycle_rref(a, p)
    d = a.dim
    return null.rank, [Matrix(d, d, row) for row in null.rows]


@dataclass(frozen=True)
class CohomologyReport:
    """Dimensions around one algebra/identity pair.

    h2_dim is only meaningful when coborders_contained holds (it is
    z2_dim - b2_dim then, and None otherwise); stray_coborder carries a
    witness form outside the cocycle space in the degenerate case.
    """

    b2_dim: int
    z2_dim: int
    h2_dim: Optional[int]
    coborders_contained: bool
    stray_coborder: Optional[Matrix] = None


def cohomology(a: Algebra, p: IdentityCombination) -> CohomologyReport:
    znull = _cocycle_rref(a, p)
    bdim, bmats = coborder_space(a)
    stray = next((m for m in bmats if not znull.contains(m.entries)), None)
    if stray is not None:
        return CohomologyReport(bdim, znull.rank, None, False, stray)
    return CohomologyReport(bdim, znull.rank, znull.rank - bdim, True)


def terminal_cocycle_space(a: Algebra):
    """Z2 with respect to the terminal identity; requires a terminal base."""
    if not is_terminal(a):
        raise ValueError("not terminal: %s" % (a.name or "algebra"))
    return cocycle_space(a, terminal_identity())


def terminal_cohomology(a: Algebra) -> CohomologyReport:
    if not is_terminal(a):
        raise ValueError("not terminal: %s" % (a.name or "algebra"))
    return cohomology(a, terminal_identity())


def extension_algebra(a: Algebra, theta: Matrix, name: str = "") -> Algebra:
    """The (dim+1)-dimensional central extension with form theta.

    Direct construction for cross-checks: e_{d+1} annihilates everything
    and products of base vectors gain theta(e_i, e_j) on the new axis.
    """
    d = a.dim
    if theta.rows != d or theta.cols != d:
        raise ValueError("form size %dx%d, algebra dimension %d" % (theta.rows, theta.cols, d))
    from fractions import Fraction

    z = Fraction(0)
    c = [
        [list(a.c[i][j]) + [theta[i, j]] for j in range(d)] + [[z] * (d + 1)]
        for i in range(d)
    ]
    c.append([[z] * (d + 1) for _ in range(d + 1)])
    return Algebra(name or (a.name + "+c" if a.name else "extension"), d + 1, c)
