"""Conservative products and the terminal identity.

An algebra with product P is conservative when some second bilinear map F
on the same space satisfies, for all a and b,

    [L_b, [L_a, P]] = -[L_{F(a,b)}, P]

where L_x is left multiplication and the bracket of an operator T with a
bilinear map B is [T, B](x, y) = T(B(x,y)) - B(Tx, y) - B(x, Ty). Expanding
both sides on basis vectors turns this into one shared linear system: the
unknown vector w = F(e_a, e_b) must solve G w = rhs(a, b), where G depends
only on the structure constants and the right hand side is the expanded
double commutator evaluated at (e_a, e_b, x, y). Solving the d^2 systems
simultaneously (they share G) settles conservativity exactly and produces
a canonical witness F.

The algebra is terminal when the specific choice F(a, b) = (2ab + ba)/3
works. Substituting that F into the expanded condition and clearing the
denominator yields one degree-4 multilinear identity with integer
coefficients, so terminality is an ordinary identity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

import numpy as np

from .algebras import Algebra, BilinearMap
from .fastrank import certified_rowspace
from .identities import evaluate_combination_table, first_violation, satisfies_identity
from .monomials import IdentityCombination

# [L_b, [L_a, P]](x, y) written out as tree monomials, with the variable
# correspondence a = x1, b = x2, x = x3, y = x4:
#
#     b(a(xy)) - b((ax)y) - b(x(ay))
#   - a((bx)y) + (a(bx))y + (bx)(ay)
#   - a(x(by)) + (ax)(by) + x(a(by))
_COMMUTATOR_TERMS = (
    (1, "x(x(xx))", (2, 1, 3, 4)),
    (-1, "x((xx)x)", (2, 1, 3, 4)),
    (-1, "x(x(xx))", (2, 3, 1, 4)),
    (-1, "x((xx)x)", (1, 2, 3, 4)),
    (1, "(x(xx))x", (1, 2, 3, 4)),
    (1, "(xx)(xx)", (2, 3, 1, 4)),
    (-1, "x(x(xx))", (1, 3, 2, 4)),
    (1, "(xx)(xx)", (1, 3, 2, 4)),
    (1, "x(x(xx))", (3, 1, 2, 4)),
)

# Sites where the witness value w = F(a, b) appears in the expanded
# condition: +w(xy), -(wx)y, -x(wy). Each template says which degree-4
# shape hosts the doubled pair and where the leaves of w's two factors go.
_WITNESS_SITES = (
    (1, "(xx)(xx)", lambda u, v: (u, v, 3, 4)),
    (-1, "((xx)x)x", lambda u, v: (u, v, 3, 4)),
    (-1, "x((xx)x)", lambda u, v: (3, u, v, 4)),
)


@lru_cache(maxsize=1)
def commutator_expansion() -> IdentityCombination:
    """[L_{x2}, [L_{x1}, P]] applied to (x3, x4), as a degree-4 combination."""
    return IdentityCombination.from_terms(
        4,
        [((sh, perm), c) for c, sh, perm in _COMMUTATOR_TERMS],
        name="double-commutator",
    )


@lru_cache(maxsize=1)
def terminal_identity() -> IdentityCombination:
    """The degree-4 identity equivalent to F(a,b) = (2ab + ba)/3 working.

    It is three times the expanded condition so that the 2/3 and 1/3 in F
    clear to integers: 3 [L_b,[L_a,P]](x,y) + (2ab+ba)(xy) - ((2ab+ba)x)y
    - x((2ab+ba)y), fifteen monomials in all.
    """
    terms = [((sh, perm), 3 * c) for c, sh, perm in _COMMUTATOR_TERMS]
    for site_coef, sh, place in _WITNESS_SITES:
        for u, v, weight in ((1, 2, 2), (2, 1, 1)):
            terms.append(((sh, place(u, v)), site_coef * weight))
    return IdentityCombination.from_terms(4, terms, name="terminal")


def is_terminal(a: Algebra) -> bool:
    if a.dim == 0:
        return True
    return satisfies_identity(a, terminal_identity())


def first_terminal_violation(a: Algebra):
    """First basis tuple (1-based) where the terminal identity fails, or None."""
    if a.dim == 0:
        return None
    return first_violation(a, terminal_identity())


def terminal_witness(a: Algebra) -> BilinearMap:
    """The map (x, y) -> (2xy + yx)/3 on coordinates."""
    d = a.dim
    c = [
        [
            [(2 * a.c[i][j][k] + a.c[j][i][k]) / 3 for k in range(d)]
            for j in range(d)
        ]
        for i in range(d)
    ]
    return BilinearMap(d, c)


def _g_tensor(a: Algebra):
    """Coefficient tensor of the witness side of the expanded condition.

    Returns (G, den) with G[k, x, y, l] integral, scaled by den^2, such that
    sum_k w_k G[k,x,y,l] / den^2 is the l-component of
    -w(e_x e_y) + (w e_x) e_y + e_x (w e_y) for w = sum_k w_k e_k.
    """
    carr, den = a.int_constants()
    d = a.dim
    arr = np.asarray(carr)
    big = int(abs(np.asarray(arr, dtype=object)).max()) if d else 0
    if arr.dtype != object and 3 * d * big * big >= 2**62:
        arr = arr.astype(object)
    a1 = np.einsum("xym,kml->kxyl", arr, arr)  # e_k (e_x e_y)
    a2 = np.einsum("kxm,myl->kxyl", arr, arr)  # (e_k e_x) e_y
    a3 = np.einsum("kym,xml->kxyl", arr, arr)  # e_x (e_k e_y)
    return -a1 + a2 + a3, den


@dataclass(frozen=True)
class ConservativeWitness:
    """A verified associated multiplication.

    F is the canonical solution: every coordinate of F(e_a, e_b) not
    pinned by a pivot of the shared coefficient matrix is set to zero,
    taking the unknowns in (a, b, k) lexicographic column order. freedom
    counts the free rational parameters of the full solution set, d^2
    times the corank of the shared matrix.
    """

    F: BilinearMap
    freedom: int


def conservative_solve(a: Algebra) -> Optional[ConservativeWitness]:
    """Solve for an associated multiplication; None when there is none."""
    d = a.dim
    if d == 0:
        return ConservativeWitness(BilinearMap.zero(0), 0)
    g, den = _g_tensor(a)
    g2 = g.transpose(1, 2, 3, 0).reshape(d**3, d)
    r_table, rden = evaluate_combination_table(a, commutator_expansion())
    h = np.asarray(r_table).reshape(d, d, d, d, d).transpose(2, 3, 4, 0, 1)
    h = h.reshape(d**3, d * d)
    if g2.dtype == object or h.dtype == object:
        g2 = np.asarray(g2, dtype=object)
        h = np.asarray(h, dtype=object)
    combined = np.concatenate([g2, h], axis=1)
    cols = d + d * d

    def blocks():
        step = max(1, (1 << 19) // cols)
        return (combined[i : i + step] for i in range(0, len(combined), step))

    _rank, basis = certified_rowspace(cols, blocks)

    g_rank = sum(1 for p in basis.pivot_cols if p < d)
    if g_rank < basis.rank:
        # a pivot in the right-hand-side block: some combination of
        # equations has zero coefficient side but a nonzero right hand
        # side, so some pair (a, b) has no solution
        return None

    # Every pivot sits in the coefficient block, so reading each right
    # hand side column off the pivot rows (free coordinates zero) solves
    # that pair's system.
    scale = Fraction(den * den, rden)
    w = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for row, p in zip(basis.rows, basis.pivot_cols):
        for j in range(d * d):
            val = row[d + j]
            if val:
                ai, bi = divmod(j, d)
                w[ai][bi][p] = val * scale
    witness = BilinearMap(d, w)
    defect = witness_defect(a, witness)
    if defect is not None:
        raise AssertionError("computed witness fails verification at %r" % (defect,))
    return ConservativeWitness(witness, d * d * (d - g_rank))


def is_conservative(a: Algebra) -> bool:
    return conservative_solve(a) is not None


def witness_defect(a: Algebra, f: BilinearMap):
    """Check a claimed F against the defining condition on all basis tuples.

    Returns None when F works, else the first failing (a, b, x, y, l)
    1-based, l being the coordinate where the two sides differ. The check
    is exact: both sides are cleared to integers and compared.
    """
    d = a.dim
    if f.dim != d:
        raise ValueError("witness dimension %d != algebra dimension %d" % (f.dim, d))
    if d == 0:
        return None
    fden = 1
    for plane in f.c:
        for row in plane:
            for x in row:
                fden = lcm(fden, x.denominator)
    fint = np.array(
        [[[int(x * fden) for x in row] for row in plane] for plane in f.c],
        dtype=object,
    )
    g, den = _g_tensor(a)
    r_table, rden = evaluate_combination_table(a, commutator_expansion())
    lhs = np.asarray(r_table, dtype=object).reshape(d, d, d, d, d)
    fg = np.einsum("abk,kxyl->abxyl", fint, np.asarray(g, dtype=object))
    diff = lhs * (fden * den * den) - fg * rden
    hits = np.nonzero(diff)
    if not len(hits[0]):
        return None
    return tuple(int(h[0]) + 1 for h in hits)


def verify_witness(a: Algebra, f: BilinearMap) -> bool:
    return witness_defect(a, f) is None
