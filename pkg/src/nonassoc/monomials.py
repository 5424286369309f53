"""Free multilinear nonassociative monomials.

A monomial of degree n is a planar binary tree with n leaves (the bracketing
shape) together with a permutation assigning the variables x_1..x_n to the
leaves from left to right. Shapes are kept in a fixed canonical order so that
coefficient vectors mean the same thing everywhere: identity files, computed
bases and the hardwired identity families all index monomials the same way.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Iterator, Sequence

MAX_DEGREE = 5


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


class BracketShape:
    """Planar binary tree; leaves are None, inner nodes are (left, right)."""

    __slots__ = ("tree", "leaves")

    def __init__(self, tree):
        self.tree = tree
        self.leaves = _count_leaves(tree)

    @classmethod
    def parse(cls, s: str) -> "BracketShape":
        text = s.replace(" ", "")
        tree, rest = _parse_tree(text)
        if rest:
            # top level is written without the outer parentheses: "A B"
            right, rest = _parse_tree(rest)
            if rest:
                raise ValueError("trailing characters in shape %r" % s)
            tree = (tree, right)
        return cls(tree)

    def __str__(self) -> str:
        if self.tree is None:
            return "x"
        l, r = self.tree
        return "%s%s" % (_render(l), _render(r))

    def __repr__(self) -> str:
        return "BracketShape(%r)" % str(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketShape) and self.tree == other.tree

    def __hash__(self):
        return hash(self.tree)

    def split(self):
        """Left and right subtrees at the root."""
        if self.tree is None:
            raise ValueError("a leaf has no subtrees")
        l, r = self.tree
        return BracketShape(l), BracketShape(r)

    def sort_key(self):
        """Canonical ordering key.

        The key records, recursively, the leaf position (1-based, from the
        left) of the leftmost pair of sibling leaves, then collapses that
        pair to a single leaf. Left combs sort first, right combs last.
        """
        return _collapse_key(self.tree)


def _count_leaves(tree) -> int:
    if tree is None:
        return 1
    return _count_leaves(tree[0]) + _count_leaves(tree[1])


def _parse_tree(s: str):
    if not s:
        raise ValueError("empty shape")
    if s[0] == "x":
        return None, s[1:]
    if s[0] != "(":
        raise ValueError("expected 'x' or '(' at %r" % s)
    left, rest = _parse_tree(s[1:])
    right, rest = _parse_tree(rest)
    if not rest or rest[0] != ")":
        raise ValueError("unbalanced parentheses in shape")
    return (left, right), rest[1:]


def _render(tree) -> str:
    if tree is None:
        return "x"
    l, r = tree
    return "(%s%s)" % (_render(l), _render(r))


def _cherry_position(tree):
    """Leaf index (1-based) of the leftmost sibling leaf pair, or None."""

    def walk(t, offset):
        if t is None:
            return None
        l, r = t
        if l is None and r is None:
            return offset + 1
        hit = walk(l, offset)
        if hit is not None:
            return hit
        return walk(r, offset + _count_leaves(l))

    return walk(tree, 0)


def _collapse_cherry(tree, target):
    """Replace the sibling leaf pair starting at leaf index target by a leaf."""

    def walk(t, offset):
        l, r = t
        if l is None and r is None and offset + 1 == target:
            return None
        if l is not None:
            nl = walk(l, offset)
            if nl is not l:
                return (nl, r)
        if r is not None:
            nr = walk(r, offset + _count_leaves(l))
            if nr is not r:
                return (l, nr)
        return t

    return walk(tree, 0)


def _collapse_key(tree):
    if tree is None:
        return ()
    p = _cherry_position(tree)
    return (p,) + _collapse_key(_collapse_cherry(tree, p))


def _all_trees(n: int):
    if n == 1:
        yield None
        return
    for k in range(1, n):
        for l in _all_trees(k):
            for r in _all_trees(n - k):
                yield (l, r)


_SHAPE_CACHE: dict[int, list[BracketShape]] = {}


def shapes(n: int) -> list[BracketShape]:
    """All bracketing shapes of degree n in canonical order."""
    if n < 1 or n > MAX_DEGREE:
        raise ValueError("degree %d out of range (1..%d)" % (n, MAX_DEGREE))
    if n not in _SHAPE_CACHE:
        ts = [BracketShape(t) for t in _all_trees(n)]
        ts.sort(key=BracketShape.sort_key)
        _SHAPE_CACHE[n] = ts
    return _SHAPE_CACHE[n]


def left_comb(n: int) -> BracketShape:
    t = None
    for _ in range(n - 1):
        t = (t, None)
    return BracketShape(t)


def right_comb(n: int) -> BracketShape:
    t = None
    for _ in range(n - 1):
        t = (None, t)
    return BracketShape(t)


class MultilinearMonomial:
    """A shape with variables assigned to leaves: leaf j holds x_{perm[j]}."""

    __slots__ = ("shape", "perm")

    def __init__(self, shape: BracketShape, perm: Sequence[int]):
        if sorted(perm) != list(range(1, shape.leaves + 1)):
            raise ValueError("perm %r is not a permutation of 1..%d" % (perm, shape.leaves))
        self.shape = shape
        self.perm = tuple(perm)

    @property
    def degree(self) -> int:
        return self.shape.leaves

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearMonomial)
            and self.shape == other.shape
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.shape, self.perm))

    def __repr__(self):
        return "MultilinearMonomial(%r, %r)" % (str(self.shape), self.perm)

    def __str__(self):
        out = []
        it = iter(self.perm)

        def walk(t):
            if t is None:
                out.append("x%d" % next(it))
                return
            out.append("(")
            walk(t[0])
            walk(t[1])
            out.append(")")

        walk(self.shape.tree)
        s = "".join(out)
        return s[1:-1] if s.startswith("(") else s


def perm_index(perm: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of 1..n."""
    perm = list(perm)
    n = len(perm)
    rest = sorted(perm)
    idx = 0
    for i, v in enumerate(perm):
        k = rest.index(v)
        idx += k * factorial(n - 1 - i)
        del rest[k]
    return idx


def perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def monomial_count(n: int) -> int:
    return catalan(n - 1) * factorial(n)


def enumerate_monomials(n: int) -> list[MultilinearMonomial]:
    """All degree-n monomials: shape-major, permutations in lex order."""
    if n < 2 or n > MAX_DEGREE:
        raise ValueError("degree %d out of range (2..%d)" % (n, MAX_DEGREE))
    out = []
    for sh in shapes(n):
        for perm in permutations(range(1, n + 1)):
            out.append(MultilinearMonomial(sh, perm))
    return out


def monomial_index(m: MultilinearMonomial) -> int:
    """Position of a monomial in the canonical degree-n list."""
    n = m.degree
    shape_idx = next(
        i for i, sh in enumerate(shapes(n)) if sh == m.shape
    )
    return shape_idx * factorial(n) + perm_index(m.perm)


class IdentityCombination:
    """Rational coefficient vector over the canonical monomial list."""

    __slots__ = ("degree", "coeffs", "name")

    def __init__(self, degree: int, coeffs: Sequence, name: str = ""):
        expected = monomial_count(degree)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != expected:
            raise ValueError(
                "coefficient vector length %d, expected %d for degree %d"
                % (len(coeffs), expected, degree)
            )
        self.degree = degree
        self.coeffs = tuple(coeffs)
        self.name = name

    @classmethod
    def from_terms(cls, degree: int, terms, name: str = "") -> "IdentityCombination":
        """terms: iterable of (MultilinearMonomial | (shape, perm), coefficient)."""
        coeffs = [Fraction(0)] * monomial_count(degree)
        for mono, c in terms:
            if not isinstance(mono, MultilinearMonomial):
                sh, perm = mono
                if isinstance(sh, str):
                    sh = BracketShape.parse(sh)
                mono = MultilinearMonomial(sh, perm)
            if mono.degree != degree:
                raise ValueError("term degree %d != %d" % (mono.degree, degree))
            coeffs[monomial_index(mono)] += Fraction(c)
        return cls(degree, coeffs, name)

    def terms(self):
        """Nonzero (monomial, coefficient) pairs in canonical order."""
        monos = enumerate_monomials(self.degree)
        return [(monos[i], c) for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdentityCombination)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        label = self.name or "%d terms" % sum(1 for c in self.coeffs if c)
        return "IdentityCombination(degree=%d, %s)" % (self.degree, label)

    def scaled(self, k) -> "IdentityCombination":
        k = Fraction(k)
        return IdentityCombination(self.degree, [k * c for c in self.coeffs], self.name)

    def plus(self, other: "IdentityCombination") -> "IdentityCombination":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return IdentityCombination(
            self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )


def st_identity(n: int, variant: int) -> IdentityCombination:
    """The standard alternating identities.

    Variant 1 alternates over the left comb (...(x_{s(1)}x_{s(2)})...)x_{s(n)}.
    Variant 2 alternates over the right comb with the arguments reversed:
    x_{s(n)}(... x_{s(3)}(x_{s(2)}x_{s(1)})...).
    """
    if n < 2 or n > MAX_DEGREE:
        raise ValueError("degree %d out of range (2..%d)" % (n, MAX_DEGREE))
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    terms = []
    if variant == 1:
        comb_shape = left_comb(n)
        for sigma in permutations(range(1, n + 1)):
            terms.append((MultilinearMonomial(comb_shape, sigma), perm_sign(sigma)))
    else:
        comb_shape = right_comb(n)
        for sigma in permutations(range(1, n + 1)):
            # leaf j (from the left) holds x_{sigma(n+1-j)}
            leaf_perm = tuple(reversed(sigma))
            terms.append((MultilinearMonomial(comb_shape, leaf_perm), perm_sign(sigma)))
    return IdentityCombination.from_terms(n, terms, name="st%d_%d" % (n, variant))


def tail_fixed_alternating(n: int, j: int) -> IdentityCombination:
    """Alternating sum over the right comb with x_j pinned to the last leaf.

    The remaining variables are distributed over the first n-1 leaves in all
    orders, signed by the parity of the arrangement relative to increasing
    order. At degree 5 the combination of all five with alternating signs
    +,-,+,-,+ recovers st_identity(5, 2).
    """
    if n < 2 or n > MAX_DEGREE:
        raise ValueError("degree %d out of range (2..%d)" % (n, MAX_DEGREE))
    if not 1 <= j <= n:
        raise ValueError("fixed variable %d out of range 1..%d" % (j, n))
    others = [v for v in range(1, n + 1) if v != j]
    comb_shape = right_comb(n)
    terms = []
    for p in permutations(range(1, n)):
        leaf_perm = tuple(others[k - 1] for k in p) + (j,)
        terms.append((MultilinearMonomial(comb_shape, leaf_perm), perm_sign(p)))
    return IdentityCombination.from_terms(n, terms, name="tail%d_%d" % (n, j))


def iter_leaf_assignments(m: MultilinearMonomial, args: Sequence) -> Iterator:
    """Arguments in leaf order: position j gets args[perm[j]-1]."""
    for v in m.perm:
        yield args[v - 1]
