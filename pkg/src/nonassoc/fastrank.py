"""Certified rank and nullspace for large integer systems.

The systems here are very tall (up to a few hundred thousand rows) but
narrow (at most a few thousand columns), with integer entries. Doing exact
rational elimination row by row is far too slow, so the computation runs in
three stages:

1. Filter. Rows are reduced modulo a fixed prime against an RREF kept in
   float64, so the heavy reduction step is a BLAS matrix product. A row
   whose residue is nonzero is provably independent (over Q) of the rows
   accepted before it: a rational dependency among integer rows scales to a
   primitive integer dependency, which survives reduction mod p because not
   all of its coefficients can be divisible by p. Rows that reduce to zero
   mod p are merely *suspected* dependent and are dropped.

2. Exact stage. The accepted rows (at most `cols` of them) go through
   fraction-free integer elimination, giving their exact RREF and the
   candidate nullspace.

3. Certification. Every row of the original system is multiplied against
   the candidate nullspace exactly. A nonzero product exposes a row the
   filter wrongly dropped; such rows are added to the accepted set and the
   exact stage reruns. Each round strictly increases the exact rank, so
   the loop terminates. When no row violates the candidate, the nullspace
   is exactly right: the accepted rows prove rank >= r, the certification
   proves rank <= r.

When stage 2 already shows full column rank the nullspace is empty and no
certification pass is needed: accepted rows are independent outright.

The prime must be small enough that a full reduction fits float64 exactly:
with p < 2^20 and at most 2^13 pivot columns, every accumulated dot product
stays below 2^13 * (p-1)^2 < 2^53.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .linalg import RowEchelonBasis

PRIME = 1_048_573  # largest prime below 2^20
_MAX_FILTER_COLS = 8192  # 2^13; keeps float64 dot products exact


def _content_reduce(row: list) -> list:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


def echelon_int(rows, cols: int):
    """Fraction-free forward elimination over the integers.

    Returns (pivot_cols, echelon_rows) with echelon rows sorted by pivot
    column and content-reduced. Inserting rows out of arrival order is
    sound: every stored row is zero left of its own pivot.
    """
    piv = []  # sorted list of (pivot_col, row)
    for raw in rows:
        row = [int(v) for v in raw]
        for pc, prow in piv:
            c = row[pc]
            if c:
                lead = prow[pc]
                row = [a * lead - c * b for a, b in zip(row, prow)]
        p = next((j for j, v in enumerate(row) if v), None)
        if p is None:
            continue
        row = _content_reduce(row)
        lo = 0
        while lo < len(piv) and piv[lo][0] < p:
            lo += 1
        piv.insert(lo, (p, row))
    return tuple(p for p, _ in piv), [r for _, r in piv]


def _backward_eliminate(pivots, rows):
    """Clear entries above each pivot, keeping integer rows."""
    rows = [list(r) for r in rows]
    for i in range(len(rows) - 1, -1, -1):
        pc = pivots[i]
        lead = rows[i][pc]
        for u in range(i):
            c = rows[u][pc]
            if c:
                rows[u] = [a * lead - c * b for a, b in zip(rows[u], rows[i])]
                rows[u] = _content_reduce(rows[u])
    return rows


def rref_int(rows, cols: int):
    """(pivot_cols, RREF rows as Fraction tuples) of an integer matrix."""
    pivots, ech = echelon_int(rows, cols)
    ech = _backward_eliminate(pivots, ech)
    out = []
    for pc, row in zip(pivots, ech):
        lead = row[pc]
        out.append(tuple(Fraction(v, lead) for v in row))
    return pivots, out


def nullspace_int(rows, cols: int):
    """(rank, canonical nullspace basis, primitive integer basis rows).

    The third element carries the same basis rows scaled to primitive
    integer vectors, for exact certification products.
    """
    pivots, rref = rref_int(rows, cols)
    rank = len(pivots)
    pivset = set(pivots)
    free = [j for j in range(cols) if j not in pivset]
    null_rows = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for pc, row in zip(pivots, rref):
            if row[f]:
                v[pc] = -row[f]
        null_rows.append(v)
    # canonicalize (the standard basis above is not RREF in general)
    if null_rows:
        den_cleared = []
        for v in null_rows:
            den = 1
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
            den_cleared.append([int(x * den) for x in v])
        npiv, nrref = rref_int(den_cleared, cols)
        basis = RowEchelonBasis(cols, nrref, npiv)
    else:
        basis = RowEchelonBasis(cols, [], ())
    prim = []
    for row in basis.rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        prim.append(_content_reduce([int(x * den) for x in row]))
    return rank, basis, prim


class ModularFilter:
    """Streaming independence filter modulo PRIME, reductions in float64.

    The RREF state is kept in insertion order (not pivot order); bulk
    reduction only needs each state row to be 1 at its own pivot and 0 at
    every other pivot, which back-substitution maintains.
    """

    def __init__(self, cols: int, prime: int = PRIME):
        if cols > _MAX_FILTER_COLS:
            raise ValueError("filter supports at most %d columns" % _MAX_FILTER_COLS)
        self.cols = cols
        self.p = prime
        self._buf = np.zeros((min(cols, 64), cols), dtype=np.float64)
        self.pivcols: list[int] = []

    @property
    def state(self) -> np.ndarray:
        return self._buf[: len(self.pivcols)]

    def _insert(self, res: np.ndarray):
        """Normalize res, back-substitute the state, append. Returns (pivot, row)."""
        p = self.p
        pc = int(np.nonzero(res)[0][0])
        inv = pow(int(res[pc]), -1, p)
        newrow = np.mod(res * float(inv), p)
        newrow[pc] = 1.0
        r = len(self.pivcols)
        if r:
            col = self._buf[:r, pc].copy()
            if col.any():
                self._buf[:r] = np.mod(self._buf[:r] - np.outer(col, newrow), p)
        if r == self._buf.shape[0]:
            grown = np.zeros((min(self.cols, 2 * r), self.cols), dtype=np.float64)
            grown[:r] = self._buf
            self._buf = grown
        self._buf[r] = newrow
        self.pivcols.append(pc)
        return pc, newrow

    def filter_block(self, block: np.ndarray) -> list[int]:
        """Indices of rows provably independent of everything seen before."""
        p = self.p
        bm = np.mod(block, p).astype(np.float64)
        if self.pivcols:
            piv = np.array(self.pivcols)
            bm = np.mod(bm - bm[:, piv] @ self.state, p)
        accepted: list[int] = []
        live = np.nonzero(bm.any(axis=1))[0]
        while live.size:
            r = int(live[0])
            accepted.append(r)
            pc, newrow = self._insert(bm[r])
            rest = live[1:]
            if rest.size:
                coef = bm[rest, pc]
                hit = np.nonzero(coef)[0]
                if hit.size:
                    rows = rest[hit]
                    bm[rows] = np.mod(bm[rows] - np.outer(coef[hit], newrow), p)
                live = rest[bm[rest].any(axis=1)]
            else:
                live = rest
        return accepted

    @property
    def rank_lower_bound(self) -> int:
        return len(self.pivcols)


def _exact_products(block: np.ndarray, null_rows: list[list[int]]) -> np.ndarray:
    """block @ null^T computed exactly; int64 fast path when bounds allow."""
    cols = block.shape[1]
    nmax = max((abs(v) for r in null_rows for v in r), default=0)
    if block.dtype != object:
        bmax = int(np.abs(block).max(initial=0))
        if bmax == 0:
            return np.zeros((block.shape[0], len(null_rows)), dtype=np.int64)
        if bmax * nmax * cols < 2**62:
            return block @ np.array(null_rows, dtype=np.int64).T
    return block.astype(object) @ np.array(null_rows, dtype=object).T


def certified_nullspace(cols: int, block_source, prime: int = PRIME):
    """Exact (rank, nullspace basis) of a streamed integer row system.

    block_source is a zero-argument callable returning a fresh iterable of
    2-d integer numpy arrays (the system's rows, in any fixed order); it is
    called once for the filter pass and once per certification pass.
    """
    filt = ModularFilter(cols, prime)
    accepted: list[list[int]] = []
    for block in block_source():
        for r in filt.filter_block(block):
            accepted.append([int(v) for v in block[r]])
    prev_rank = -1
    while True:
        rank, basis, prim = nullspace_int(accepted, cols)
        if rank <= prev_rank:
            raise AssertionError("certification produced no rank growth")
        prev_rank = rank
        if not prim:
            return rank, basis
        violators = _find_violators(block_source, prim, cols)
        if not violators:
            return rank, basis
        accepted.extend(violators)


def _find_violators(block_source, prim, cols: int) -> list[list[int]]:
    """Rows of the streamed system not annihilated by the candidate basis."""
    violators: list[list[int]] = []
    for block in block_source():
        prod = _exact_products(block, prim)
        nz = prod.astype(bool) if prod.dtype == object else prod != 0
        for r in np.nonzero(nz.any(axis=1))[0]:
            violators.append([int(v) for v in block[r]])
        if len(violators) > cols:
            break
    return violators


def certified_rank(cols: int, block_source, prime: int = PRIME) -> int:
    rank, _basis = certified_nullspace(cols, block_source, prime)
    return rank


def certified_rowspace(cols: int, block_source, prime: int = PRIME):
    """Exact (rank, RowEchelonBasis of the row space) of a streamed system.

    Same filter-certify loop as certified_nullspace; once no streamed row
    violates the candidate nullspace, the accepted rows span the full row
    space and their RREF is the canonical answer. A full-column-rank exact
    stage also ends the loop: the row space is then all of Q^cols.
    """
    filt = ModularFilter(cols, prime)
    accepted: list[list[int]] = []
    for block in block_source():
        for r in filt.filter_block(block):
            accepted.append([int(v) for v in block[r]])
    prev_rank = -1
    while True:
        rank, _basis, prim = nullspace_int(accepted, cols)
        if rank <= prev_rank:
            raise AssertionError("certification produced no rank growth")
        prev_rank = rank
        pivots, rref = rref_int(accepted, cols)
        if not prim:
            return rank, RowEchelonBasis(cols, rref, pivots)
        violators = _find_violators(block_source, prim, cols)
        if not violators:
            return rank, RowEchelonBasis(cols, rref, pivots)
        accepted.extend(violators)
