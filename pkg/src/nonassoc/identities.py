"""Multilinear identity spaces over an algebra.

The evaluation matrix of degree n has one row per (basis tuple, output
component) and one column per monomial. Rather than evaluating monomials
tuple by tuple, each bracketing shape gets a value table: an array indexed
by the flattened leaf tuple whose row is the product vector. Tables are
built bottom-up with integer matrix products (structure constants cleared
of denominators; the uniform scale den^(n-1) does not move nullspaces),
and a permutation of variables becomes a precomputed gather.

Row blocks stream into the certified rank engine; NONASSOC_THREADS caps
how many blocks are assembled concurrently.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

import numpy as np

from . import fastrank
from .algebras import Algebra, multiply
from .linalg import RankSink
from .monomials import (
    BracketShape,
    IdentityCombination,
    MultilinearMonomial,
    monomial_count,
    monomial_index,
    perm_index,
    shapes,
)

_INT64_LIMIT = 2**62


def worker_count() -> int:
    env = os.environ.get("NONASSOC_THREADS", "")
    if env.strip():
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _block_ranges(total: int, block: int):
    return [(v0, min(v0 + block, total)) for v0 in range(0, total, block)]


def _parallel_blocks(ranges, build):
    """Yield build(r) for each range, assembling ahead on worker threads."""
    k = worker_count()
    if k <= 1 or len(ranges) <= 1:
        for r in ranges:
            yield build(r)
        return
    with ThreadPoolExecutor(max_workers=k) as ex:
        yield from ex.map(build, ranges)


@lru_cache(maxsize=8)
def _digit_table(d: int, n: int) -> np.ndarray:
    """(d^n, n) array: row v = the digits of v, most significant first."""
    idx = np.arange(d**n, dtype=np.int64)
    cols = [(idx // d ** (n - 1 - j)) % d for j in range(n)]
    out = np.stack(cols, axis=1)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=8)
def _perm_gathers(d: int, n: int) -> np.ndarray:
    """(n!, d^n): row r maps flat(v) to flat(w), w_j = v_{tau(j)}, where
    tau is the r-th permutation of (1..n) in lexicographic order."""
    from itertools import permutations

    digits = _digit_table(d, n)
    powers = d ** (n - 1 - np.arange(n, dtype=np.int64))
    rows = []
    for tau in permutations(range(1, n + 1)):
        rows.append(digits[:, [t - 1 for t in tau]] @ powers)
    out = np.stack(rows)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=512)
def _proj_gather(d: int, n: int, positions: tuple) -> np.ndarray:
    """(d^n,): flat(v) -> flat((v_{p})_{p in positions}), 1-based."""
    digits = _digit_table(d, n)
    m = len(positions)
    powers = d ** (m - 1 - np.arange(m, dtype=np.int64))
    out = digits[:, [p - 1 for p in positions]] @ powers
    out.setflags(write=False)
    return out


def _subtree_keys(tree, out):
    if tree is None:
        out.setdefault("x", None)
        return "x"
    lk = _subtree_keys(tree[0], out)
    rk = _subtree_keys(tree[1], out)
    key = "(%s%s)" % (lk, rk)
    out.setdefault(key, tree)
    return key


@lru_cache(maxsize=6)
def _shape_tables(a: Algebra, n: int):
    """Value tables for every subtree of every degree-n shape.

    Returns (tables, bounds, den): tables maps a subtree key to an array
    of shape (d^leaves, d) whose row at flat leaf tuple w is the product
    vector scaled by den^(leaves-1); bounds maps the key to a proven bound
    on absolute entries. dtype is int64 unless a bound crosses 2^62.
    """
    d = a.dim
    carr, den = a.int_constants()
    cmax = max(1, int(max(abs(int(v)) for p in carr for r in p for v in r)) if d else 1)

    trees: dict = {}
    for s in shapes(n):
        _subtree_keys(s.tree, trees)

    def leaves(t):
        return 1 if t is None else leaves(t[0]) + leaves(t[1])

    bounds = {"x": 1}

    def bound_of(key, tree):
        if key in bounds:
            return bounds[key]
        lk = _subtree_keys(tree[0], {})
        rk = _subtree_keys(tree[1], {})
        b = d * bound_of(lk, tree[0]) * bound_of(rk, tree[1]) * cmax
        bounds[key] = b
        return b

    for key, tree in trees.items():
        if tree is not None:
            bound_of(key, tree)

    use_object = any(b >= _INT64_LIMIT for b in bounds.values()) or carr.dtype == object
    dtype = object if use_object else np.int64
    cflat = carr.astype(dtype).reshape(d, d * d)

    tables = {"x": np.eye(d, dtype=dtype)}

    def table_of(key, tree):
        if key in tables:
            return tables[key]
        lk = _subtree_keys(tree[0], {})
        rk = _subtree_keys(tree[1], {})
        tl = table_of(lk, tree[0])
        tr = table_of(rk, tree[1])
        dl, dr = tl.shape[0], tr.shape[0]
        w = (tl @ cflat).reshape(dl, d, d)  # [a, q, k]
        t = tr @ w.transpose(1, 0, 2).reshape(d, dl * d)  # [b, (a k)]
        t = t.reshape(dr, dl, d).transpose(1, 0, 2).reshape(dl * dr, d)
        t = np.ascontiguousarray(t)
        t.setflags(write=False)
        tables[key] = t
        return t

    for key, tree in trees.items():
        if tree is not None:
            table_of(key, tree)
    return tables, bounds, den


def _shape_key(shape: BracketShape) -> str:
    return _subtree_keys(shape.tree, {})


def evaluate_monomial(a: Algebra, m: MultilinearMonomial, args) -> list:
    """Exact product vector of one monomial at 1-based basis indices."""
    args = tuple(args)
    if len(args) != m.degree:
        raise ValueError("argument count != degree")
    for v in args:
        if not (1 <= v <= a.dim):
            raise ValueError("basis index %r out of range" % (v,))
    cursor = [0]

    def ev(t):
        if t is None:
            cursor[0] += 1
            return a.basis_vector(args[m.perm[cursor[0] - 1] - 1])
        return multiply(a, ev(t[0]), ev(t[1]))

    return ev(m.shape.tree)


def _int_weights(c: IdentityCombination):
    den = 1
    for x in c.coeffs:
        den = lcm(den, x.denominator)
    return [int(x * den) for x in c.coeffs], den


def _evaluation_block_builder(a: Algebra, n: int, shape_indices):
    """Returns (build(range)->array, cols). Column order: for each listed
    shape, all n! permutations in lexicographic order."""
    d = a.dim
    tables, _bounds, _den = _shape_tables(a, n)
    gathers = _perm_gathers(d, n)
    nf = factorial(n)
    keys = [_shape_key(shapes(n)[si]) for si in shape_indices]
    dtype = tables[keys[0]].dtype
    cols = nf * len(keys)

    def build(rng):
        v0, v1 = rng
        bs = v1 - v0
        sub = np.ascontiguousarray(gathers[:, v0:v1])
        m3 = np.empty((bs, d, cols), dtype=dtype)
        for ci, key in enumerate(keys):
            vals = tables[key][sub]  # (n!, bs, d)
            m3[:, :, ci * nf:(ci + 1) * nf] = vals.transpose(1, 2, 0)
        return m3.reshape(bs * d, cols)

    return build, cols


def _nullspace_combinations(a: Algebra, n: int, shape_indices):
    build, cols = _evaluation_block_builder(a, n, shape_indices)
    d = a.dim
    block = max(16, min(d**n, (1 << 19) // max(1, cols)))
    ranges = _block_ranges(d**n, block)

    def source():
        return _parallel_blocks(ranges, build)

    rank, basis = fastrank.certified_nullspace(cols, source)
    total = monomial_count(n)
    nf = factorial(n)
    combos = []
    for row in basis.rows:
        coeffs = [Fraction(0)] * total
        for ci, si in enumerate(shape_indices):
            for r in range(nf):
                coeffs[si * nf + r] = row[ci * nf + r]
        combos.append(IdentityCombination(n, coeffs))
    return basis.rank, combos


def identity_space(a: Algebra, n: int):
    """(dimension, canonical basis) of the degree-n identities of a.

    Degree 5 joins all 14 shapes into one 1680-column system, and the
    exact certification of such a wide nullspace is the expensive part:
    a 4-dimensional algebra already needs around twenty minutes.  When
    one shape at a time is enough, shape_identity_space stays fast even
    at degree 5.
    """
    if not 2 <= n <= 5:
        raise ValueError("degree must be between 2 and 5")
    if n == 5 and a.dim >= 4:
        warnings.warn(
            "full degree-5 identity space on dim %d certifies a %d x 1680 "
            "system exactly and can take tens of minutes; "
            "shape_identity_space handles a single shape quickly"
            % (a.dim, (a.dim ** 5) * a.dim),
            RuntimeWarning,
            stacklevel=2,
        )
    return _nullspace_combinations(a, n, range(len(shapes(n))))


def shape_identity_space(a: Algebra, n: int, shape_index: int):
    """Identities supported on a single bracketing shape (1-based index)."""
    count = len(shapes(n))
    if not 1 <= shape_index <= count:
        raise ValueError("shape index must be in 1..%d" % count)
    return _nullspace_combinations(a, n, (shape_index - 1,))


def satisfies_identity(a: Algebra, c: IdentityCombination) -> bool:
    return first_violation(a, c) is None


def first_violation(a: Algebra, c: IdentityCombination):
    """None, or the lexicographically first basis tuple (1-based) where
    the combination has a nonzero value."""
    n = c.degree
    d = a.dim
    if d == 0:
        return None
    tables, bounds, _den = _shape_tables(a, n)
    gathers = _perm_gathers(d, n)
    weights, _wden = _int_weights(c)
    terms = []  # (weight, table, perm rank)
    wsum = 0
    bmax = 1
    for m, _coef in c.terms():
        idx = monomial_index(m)
        key = _shape_key(m.shape)
        terms.append((weights[idx], tables[key], perm_index(m.perm)))
        wsum += abs(weights[idx])
        bmax = max(bmax, bounds[key])
    if not terms:
        return None
    as_object = tables["x"].dtype == object or wsum * bmax >= _INT64_LIMIT
    block = 4096
    for v0, v1 in _block_ranges(d**n, block):
        acc = np.zeros((v1 - v0, d), dtype=object if as_object else np.int64)
        for w, tab, pr in terms:
            vals = tab[gathers[pr, v0:v1]]
            if as_object and vals.dtype != object:
                vals = vals.astype(object)
            acc += w * vals
        flat = acc.any(axis=1)
        nz = np.nonzero(flat)[0]
        if nz.size:
            v = v0 + int(nz[0])
            digits = _digit_table(d, n)[v]
            return tuple(int(x) + 1 for x in digits)
    return None


def evaluate_combination_table(a: Algebra, c: IdentityCombination):
    """(R, denom): R[flat(v), k] * 1/denom is the exact value of the
    combination at the basis tuple v, component k."""
    n = c.degree
    d = a.dim
    tables, bounds, den = _shape_tables(a, n)
    gathers = _perm_gathers(d, n)
    weights, wden = _int_weights(c)
    terms = []
    wsum = 0
    bmax = 1
    for m, _coef in c.terms():
        idx = monomial_index(m)
        key = _shape_key(m.shape)
        terms.append((weights[idx], tables[key], perm_index(m.perm)))
        wsum += abs(weights[idx])
        bmax = max(bmax, bounds[key])
    as_object = tables["x"].dtype == object or wsum * bmax >= _INT64_LIMIT
    acc = np.zeros((d**n, d), dtype=object if as_object else np.int64)
    for w, tab, pr in terms:
        vals = tab[gathers[pr]]
        if as_object and vals.dtype != object:
            vals = vals.astype(object)
        acc += w * vals
    return acc, wden * den ** (n - 1)


def combination_in_span(c: IdentityCombination, basis) -> bool:
    """True iff c is a rational combination of the given identities."""
    if not basis:
        return not any(c.coeffs)
    length = len(c.coeffs)
    sink = RankSink(length)
    for b in basis:
        if b.degree != c.degree:
            raise ValueError("degree mismatch")
        sink.feed(b.coeffs)
    return not sink.feed(c.coeffs)


def spaces_equal(basis_a, basis_b) -> bool:
    """Do two identity lists span the same subspace?"""
    return (
        all(combination_in_span(b, basis_a) for b in basis_b)
        and all(combination_in_span(a, basis_b) for a in basis_a)
    )
