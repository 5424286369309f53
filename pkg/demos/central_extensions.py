"""Central extensions inside a variety of algebras.

Given an algebra A satisfying an identity P, a bilinear form theta on A
defines a one-higher-dimensional product on A + <z> with z annihilating
everything.  The extension satisfies P exactly when theta solves a
linear system (the cocycles); forms of the shape f(xy) give isomorphic
copies of the split extension (the coborders).  The quotient counts the
genuinely new algebras.

The script inspects two quotients, builds an extension from a cocycle
and checks the identity really survives, and shows what happens with a
form that is not a cocycle.

Run as ``python demos/central_extensions.py``.
"""

from fractions import Fraction

from nonassoc.catalog import catalog, sab_bar
from nonassoc.claims import named_identity, resolve_identity
from nonassoc.cohomology import (
    cocycle_space,
    cohomology,
    extension_algebra,
    terminal_cohomology,
)
from nonassoc.identities import first_violation, satisfies_identity
from nonassoc.linalg import Matrix, RankSink


def main():
    a = sab_bar(0, -3)
    p = resolve_identity({"combo": [["2", "st3_1"], ["3", "st3_2"]]})
    rep = cohomology(a, p)
    print("base algebra %s with its degree-3 identity" % a.name)
    print("  dim B2 = %d   (coborders: forms f(xy))" % rep.b2_dim)
    print("  dim Z2 = %d   (cocycles: extensions stay in the variety)"
          % rep.z2_dim)
    print("  dim H2 = %d   (genuinely new central extensions)" % rep.h2_dim)

    dim, thetas = cocycle_space(a, p)
    theta = thetas[0]
    ext = extension_algebra(a, theta, name="extended")
    print()
    print("extension by the first cocycle basis element:")
    print("  dim %d -> %d" % (a.dim, ext.dim))
    print("  still satisfies the identity: %s" % satisfies_identity(ext, p))

    # a form chosen outside the cocycle space must break the identity
    sink = RankSink(a.dim * a.dim)
    for m in thetas:
        sink.feed(m.entries)
    bad = None
    for pos in range(a.dim * a.dim):
        flat = [Fraction(0)] * (a.dim * a.dim)
        flat[pos] = Fraction(1)
        if sink.feed(flat):
            bad = Matrix(a.dim, a.dim, flat)
            break
    broken = extension_algebra(a, bad, name="broken")
    print("  a non-cocycle form instead violates it at basis tuple %s"
          % (first_violation(broken, p),))

    print()
    print("degree-4 story: extensions inside the terminal variety")
    print("------------------------------------------------------")
    for key in ("W2hat", "S2", "E2"):
        rep = terminal_cohomology(catalog(key))
        print("  %-8s dim B2 = %2d  dim Z2 = %2d  dim H2 = %d"
              % (key, rep.b2_dim, rep.z2_dim, rep.h2_dim))
    print("trivial quotients: every central extension of these inside the")
    print("terminal variety is the split one, up to isomorphism.")

    print()
    print("a base outside the variety has no cocycle theory at all:")
    try:
        cohomology(catalog("W2(big)"), named_identity("st3_1"))
    except ValueError as exc:
        print("  %s" % exc)


if __name__ == "__main__":
    main()
