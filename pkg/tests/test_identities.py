import itertools
import random
from fractions import Fraction

import pytest

from nonassoc.algebras import change_of_basis, multiply
from nonassoc.catalog import catalog, sab_bar
from nonassoc.identities import (
    combination_in_span,
    evaluate_combination_table,
    evaluate_monomial,
    first_violation,
    identity_space,
    satisfies_identity,
    shape_identity_space,
    spaces_equal,
)
from nonassoc.monomials import (
    IdentityCombination,
    enumerate_monomials,
    monomial_count,
    shapes,
    st_identity,
)


def _naive_monomial(a, m, args):
    """Plain recursive evaluation over Fractions, no tables."""
    cursor = [0]

    def ev(t):
        if t is None:
            cursor[0] += 1
            return a.basis_vector(args[m.perm[cursor[0] - 1] - 1])
        return multiply(a, ev(t[0]), ev(t[1]))

    return ev(m.shape.tree)


def _naive_identity_dim(a, n):
    """Exact nullspace of the evaluation matrix, one row per (tuple, comp)."""
    from nonassoc.linalg import Matrix, nullspace

    monos = enumerate_monomials(n)
    rows = []
    for args in itertools.product(range(1, a.dim + 1), repeat=n):
        cols = [evaluate_monomial(a, m, args) for m in monos]
        for k in range(a.dim):
            rows.append([col[k] for col in cols])
    return nullspace(Matrix.from_rows(rows)).rank


def test_evaluate_monomial_against_recursion():
    rng = random.Random(5)
    for key, n in [("D2", 3), ("S2", 3), ("E2", 4)]:
        a = catalog(key)
        monos = enumerate_monomials(n)
        for _ in range(15):
            m = rng.choice(monos)
            args = tuple(rng.randint(1, a.dim) for _ in range(n))
            assert evaluate_monomial(a, m, args) == _naive_monomial(a, m, args)


def test_evaluate_monomial_validation():
    a = catalog("E2")
    m = enumerate_monomials(3)[0]
    with pytest.raises(ValueError):
        evaluate_monomial(a, m, (1, 2))
    with pytest.raises(ValueError):
        evaluate_monomial(a, m, (1, 2, 3))


def test_identity_space_dims_match_brute_force():
    for key, n in [("D2", 3), ("E2", 3), ("E2", 4)]:
        a = catalog(key)
        dim, basis = identity_space(a, n)
        assert dim == _naive_identity_dim(a, n)
        assert len(basis) == dim
        for c in basis:
            assert satisfies_identity(a, c)


def test_identity_space_known_dimensions():
    assert identity_space(catalog("D2"), 3)[0] == 6
    assert identity_space(catalog("E2"), 3)[0] == 8
    assert identity_space(catalog("S2"), 3)[0] == 3
    assert identity_space(catalog("B2"), 3)[0] == 0


def test_identity_space_degree_bounds():
    a = catalog("E2")
    with pytest.raises(ValueError):
        identity_space(a, 1)
    with pytest.raises(ValueError):
        identity_space(a, 6)


def test_degree_five_warns_on_large_algebras(monkeypatch):
    import nonassoc.identities as ident

    calls = []
    monkeypatch.setattr(
        ident, "_nullspace_combinations", lambda a, n, si: calls.append(n) or (0, [])
    )
    with pytest.warns(RuntimeWarning):
        ident.identity_space(catalog("S2"), 5)
    assert calls == [5]


def test_shape_identity_space_is_a_subspace():
    a = catalog("D2")
    total_dim, total_basis = identity_space(a, 3)
    shape_dims = 0
    for si in range(1, len(shapes(3)) + 1):
        dim, basis = shape_identity_space(a, 3, si)
        shape_dims += dim
        for c in basis:
            assert satisfies_identity(a, c)
            assert combination_in_span(c, total_basis)
    assert shape_dims <= total_dim
    with pytest.raises(ValueError):
        shape_identity_space(a, 3, 3)


def test_st_implication_up_the_degrees():
    # an algebra obeying the alternating identity at degree n obeys it at n+1
    for key in ("D2", "E2"):
        a = catalog(key)
        for variant in (1, 2):
            assert satisfies_identity(a, st_identity(3, variant))
            assert satisfies_identity(a, st_identity(4, variant))


def test_st_profile_of_the_six_dim_subalgebra():
    a = catalog("W2")
    assert not satisfies_identity(a, st_identity(4, 2))
    assert not satisfies_identity(a, st_identity(5, 1))
    assert satisfies_identity(a, st_identity(5, 2))


def test_degree_three_combination_at_special_pair():
    a = sab_bar(0, -3)
    dim, basis = identity_space(a, 3)
    assert dim == 1
    gen = st_identity(3, 1).scaled(2).plus(st_identity(3, 2).scaled(3))
    assert satisfies_identity(a, gen)
    assert spaces_equal(basis, [gen])
    flipped = st_identity(3, 1).scaled(2).plus(st_identity(3, 2).scaled(-3))
    assert not satisfies_identity(a, flipped)


def test_generic_pair_has_no_degree_three_identities():
    rng = random.Random(41)
    special = {(Fraction(0), Fraction(-3))}
    for _ in range(4):
        while True:
            pair = (
                Fraction(rng.randint(-6, 6), rng.randint(1, 3)),
                Fraction(rng.randint(-6, 6), rng.randint(1, 3)),
            )
            if pair not in special:
                break
        assert identity_space(sab_bar(*pair), 3)[0] == 0, pair


def test_first_violation_is_lexicographically_first():
    a = catalog("W2")
    c = st_identity(4, 2)
    v = first_violation(a, c)
    assert v is not None and len(v) == 4
    # no earlier tuple evaluates to a nonzero vector
    def value_at(args):
        total = [Fraction(0)] * a.dim
        for m, coef in c.terms():
            vec = evaluate_monomial(a, m, args)
            total = [t + coef * x for t, x in zip(total, vec)]
        return total

    assert any(value_at(v))
    for args in itertools.product(range(1, a.dim + 1), repeat=4):
        if args == v:
            break
        assert not any(value_at(args))


def test_first_violation_none_for_satisfied_identity():
    assert first_violation(catalog("D2"), st_identity(3, 1)) is None


def test_evaluate_combination_table_is_exact():
    a = catalog("S2")
    c = st_identity(3, 1).scaled(Fraction(1, 2))
    table, denom = evaluate_combination_table(a, c)
    rng = random.Random(9)
    for _ in range(10):
        args = tuple(rng.randint(1, a.dim) for _ in range(3))
        flat = 0
        for v in args:
            flat = flat * a.dim + (v - 1)
        want = [Fraction(0)] * a.dim
        for m, coef in c.terms():
            vec = evaluate_monomial(a, m, args)
            want = [t + coef * x for t, x in zip(want, vec)]
        assert [Fraction(int(table[flat][k]), denom) for k in range(a.dim)] == want


def test_combination_in_span_and_spaces_equal():
    s1 = st_identity(3, 1)
    s2 = st_identity(3, 2)
    both = [s1, s2]
    assert combination_in_span(s1.scaled(5), both)
    assert combination_in_span(s1.plus(s2.scaled(-2)), both)
    zero = IdentityCombination(3, [0] * monomial_count(3))
    assert combination_in_span(zero, [])
    assert not combination_in_span(s1, [])
    assert not combination_in_span(s1, [s2])
    assert spaces_equal([s1, s2], [s1.plus(s2), s1.plus(s2.scaled(-1))])
    assert not spaces_equal([s1], [s2])
    with pytest.raises(ValueError):
        combination_in_span(st_identity(4, 1), [s1])


def test_identity_dims_invariant_under_change_of_basis():
    a = catalog("D2")
    rng = random.Random(13)
    want = identity_space(a, 3)[0]
    for _ in range(3):
        while True:
            cols = [
                [Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)
            ]
            try:
                b = change_of_basis(a, cols)
                break
            except ValueError:
                continue
        assert identity_space(b, 3)[0] == want
