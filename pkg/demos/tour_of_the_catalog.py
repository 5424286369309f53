"""A walk through the built-in algebra catalog.

Prints every catalog entry with its construction, then looks at one
eight-dimensional algebra in detail: its nonzero products, its
derivation algebra, and the ideal that keeps it from being simple.

Run as ``python demos/tour_of_the_catalog.py``.
"""

from fractions import Fraction

from nonassoc.algebras import (
    Subspace,
    derivation_algebra,
    is_ideal,
    is_subalgebra,
    multiply,
)
from nonassoc.catalog import catalog, catalog_summary
from nonassoc.linalg import format_rational


def term(coef: Fraction, k: int) -> str:
    if coef == 1:
        return "e%d" % k
    if coef == -1:
        return "-e%d" % k
    return "%s e%d" % (format_rational(coef), k)


def print_products(a):
    shown = 0
    for i in range(1, a.dim + 1):
        for j in range(1, a.dim + 1):
            v = multiply(a, a.basis_vector(i), a.basis_vector(j))
            if all(x == 0 for x in v):
                continue
            rhs = " + ".join(term(x, k + 1) for k, x in enumerate(v) if x)
            print("  e%d e%d = %s" % (i, j, rhs.replace("+ -", "- ")))
            shown += 1
    if shown == 0:
        print("  (all products vanish)")


def main():
    print("catalog")
    print("=======")
    for name, dim, parameterized, note in catalog_summary():
        print("  %-16s dim %d  %s" % (name, dim, note))

    a = catalog("W2bar")
    print()
    print("%s in detail" % a.name)
    print("=" * (len(a.name) + 10))
    print("nonzero products:")
    print_products(a)

    dim, basis = derivation_algebra(a)
    print()
    print("its derivation algebra has dimension %d; one basis element:" % dim)
    mat = basis[0]
    for i in range(mat.rows):
        print("  [%s]" % ", ".join(
            format_rational(mat[i, j]) for j in range(mat.cols)))

    span = Subspace.span_of_basis_indices(a.dim, (2, 3, 4, 6, 7, 8))
    print()
    print("the span of e2,e3,e4,e6,e7,e8:")
    print("  subalgebra: %s" % is_subalgebra(a, span))
    print("  ideal:      %s" % is_ideal(a, span))
    print("a proper nonzero ideal, so %s is not simple." % a.name)


if __name__ == "__main__":
    main()
