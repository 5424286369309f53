"""Multilinear identity fingerprints.

For a handful of algebras this script computes the dimension of the
space of multilinear identities at degrees 3 and 4, checks which of the
six standard alternating identities hold, and exhibits the single
degree-3 identity of one member of the parameterized family together
with the basis tuple where a wrong-sign variant of it fails.

Run as ``python demos/identity_profiles.py``.  Takes a few seconds; the
degree-4 computations on eight-dimensional algebras dominate.
"""

from nonassoc.catalog import catalog, sab_bar
from nonassoc.claims import named_identity, resolve_identity
from nonassoc.identities import (
    first_violation,
    identity_space,
    satisfies_identity,
    spaces_equal,
)

ST_NAMES = ("st3_1", "st3_2", "st4_1", "st4_2", "st5_1", "st5_2")


def profile(a):
    marks = []
    for name in ST_NAMES:
        ok = satisfies_identity(a, named_identity(name))
        marks.append("+" if ok else "-")
    return " ".join(marks)


def main():
    print("dimensions of the full multilinear identity spaces")
    print("---------------------------------------------------")
    print("  %-14s %8s %8s" % ("algebra", "degree 3", "degree 4"))
    for key in ("W2bar", "S5bar", "W2tildetilde", "S2", "D2", "E2"):
        a = catalog(key)
        d3 = identity_space(a, 3)[0]
        d4 = identity_space(a, 4)[0]
        print("  %-14s %8d %8d" % (key, d3, d4))

    print()
    print("which standard alternating identities hold")
    print("-------------------------------------------")
    print("  %-14s %s" % ("algebra", " ".join(ST_NAMES)))
    for key in ("W2", "S2", "D2", "E2"):
        a = catalog(key)
        pattern = profile(a)
        print("  %-14s %s" % (key, "     ".join(pattern.split())))

    a = sab_bar(0, -3)
    print()
    print("the one degree-3 identity of %s" % a.name)
    print("---------------------------------------")
    dim, basis = identity_space(a, 3)
    print("identity space dimension at degree 3: %d" % dim)
    good = resolve_identity({"combo": [["2", "st3_1"], ["3", "st3_2"]]})
    print("2*st3_1 + 3*st3_2 holds: %s" % satisfies_identity(a, good))
    print("it spans the space: %s" % spaces_equal([good], basis))
    flipped = resolve_identity({"combo": [["2", "st3_1"], ["-3", "st3_2"]]})
    where = first_violation(a, flipped)
    print("2*st3_1 - 3*st3_2 first fails at basis tuple %s" % (where,))


if __name__ == "__main__":
    main()
