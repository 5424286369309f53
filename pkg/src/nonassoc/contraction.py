"""Inönü–Wigner contraction along a subset of the basis.

Scaling the chosen basis vectors by t turns each structure constant into a
monomial c * t^(s_i + s_j - s_k). When the unscaled vectors span a
subalgebra no negative power can appear, and letting t -> 0 keeps exactly
the exponent-zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import Algebra, BilinearMap, multiply


class ContractionError(ValueError):
    pass


@dataclass(frozen=True)
class ScaledBasis:
    dim: int
    exponents: tuple  # s_1..s_n, each 0 or 1

    def __post_init__(self):
        if len(self.exponents) != self.dim:
            raise ContractionError("exponent list length != dim")
        if any(s not in (0, 1) for s in self.exponents):
            raise ContractionError("exponents must be 0 or 1")

    @classmethod
    def scaling(cls, dim: int, scaled_indices) -> "ScaledBasis":
        idx = set(scaled_indices)
        for i in idx:
            if not (1 <= i <= dim):
                raise ContractionError("basis index %r out of range" % (i,))
        return cls(dim, tuple(1 if i in idx else 0 for i in range(1, dim + 1)))


@dataclass(frozen=True)
class LaurentConstant:
    """A structure constant as a finite map t-exponent -> coefficient."""

    coeffs: tuple  # ((exponent, Fraction), ...) sorted by exponent

    @classmethod
    def monomial(cls, exponent: int, coef: Fraction) -> "LaurentConstant":
        if not coef:
            return cls(())
        return cls(((exponent, coef),))

    def min_exponent(self):
        return self.coeffs[0][0] if self.coeffs else None

    def at_zero(self) -> Fraction:
        for e, c in self.coeffs:
            if e < 0:
                raise ContractionError("negative t-power t^%d" % e)
            if e == 0:
                return c
        return Fraction(0)


def laurent_constants(a: Algebra, scaled_indices) -> dict:
    """{(i, j, k): LaurentConstant} in the scaled basis, 1-based keys."""
    sb = ScaledBasis.scaling(a.dim, scaled_indices)
    s = sb.exponents
    out = {}
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                c = a.c[i][j][k]
                if c:
                    e = s[i] + s[j] - s[k]
                    out[(i + 1, j + 1, k + 1)] = LaurentConstant.monomial(e, c)
    return out


def _check_complement_closed(a: Algebra, scaled: set) -> None:
    unscaled = [i for i in range(1, a.dim + 1) if i not in scaled]
    for i in unscaled:
        for j in unscaled:
            prod = multiply(a, a.basis_vector(i), a.basis_vector(j))
            for k in scaled:
                if prod[k - 1]:
                    raise ContractionError(
                        "not a subalgebra: e_%d e_%d has component %s e_%d"
                        % (i, j, prod[k - 1], k)
                    )


def iw_contract(a: Algebra, scaled_indices, name: str = "") -> Algebra:
    """Contract a with respect to the subalgebra spanned by the unscaled
    basis vectors; errors out if they do not span one."""
    scaled = set(scaled_indices)
    _check_complement_closed(a, scaled)
    lc = laurent_constants(a, scaled)
    n = a.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), mono in lc.items():
        e = mono.min_exponent()
        if e is not None and e < 0:
            raise ContractionError(
                "negative t-power t^%d at (e_%d, e_%d -> e_%d)" % (e, i, j, k)
            )
        c[i - 1][j - 1][k - 1] = mono.at_zero()
    label = name or "%s~contracted{%s}" % (a.name, ",".join(map(str, sorted(scaled))))
    return Algebra(label, n, BilinearMap(n, c))


@dataclass(frozen=True)
class ContractionCheck:
    target: str
    source: str
    scaled: tuple
    ok: bool
    mismatches: tuple  # ((i, j, k, computed, expected), ...)


def compare_tables(computed: Algebra, expected: Algebra):
    """All (i, j, k, got, want) triples where two tables disagree."""
    if computed.dim != expected.dim:
        raise ValueError("dimension mismatch")
    bad = []
    n = computed.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                g = computed.c[i][j][k]
                w = expected.c[i][j][k]
                if g != w:
                    bad.append((i + 1, j + 1, k + 1, g, w))
    return tuple(bad)


def contraction_chain_check(sab_pairs=((2, 1), (0, -3), (-1, 1), (0, 0), (Fraction(1, 2), Fraction(-2, 3)))):
    """Recompute every named contraction from its source and compare with
    the catalog table entry-for-entry."""
    from .catalog import catalog, sab_adapted, sab_bar

    w2big = catalog("W2(big)")
    w2bar = catalog("W2bar")
    cases = [
        ("W2bar", w2big, (2,)),
        ("S1bar", w2bar, (1,)),
        ("S5bar", w2bar, (5,)),
        ("W2hat", w2big, (7, 8)),
        ("W2hathat", w2big, (5, 6, 7, 8)),
        ("W2tilde", w2big, (3, 4, 5, 6, 7, 8)),
        ("W2tildetilde", w2big, (2, 3, 4, 5, 6, 7, 8)),
    ]
    report = []
    for target, source, scaled in cases:
        got = iw_contract(source, scaled)
        bad = compare_tables(got, catalog(target))
        report.append(ContractionCheck(target, source.name, tuple(scaled), not bad, bad))
    for alpha, beta in sab_pairs:
        source = sab_adapted(alpha, beta)
        expected = sab_bar(alpha, beta)
        got = iw_contract(source, (8,))
        bad = compare_tables(got, expected)
        report.append(ContractionCheck(expected.name, source.name, (8,), not bad, bad))
    return report
