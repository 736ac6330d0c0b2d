from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from tautring import (
    CharClass,
    MultiPoly,
    elementary_symmetric,
    exact_div,
    expand,
    is_weyl_invariant,
    parse_class,
    substitute,
    symmetric_reduce,
    to_pe_basis,
)
from tautring.errors import NotInvariant, NotSymmetric
from tautring.symmetric import parity_dichotomy_holds

from conftest import classes, polys

x1, x2 = MultiPoly.gens(2)


def d_n_group(n):
    # signed permutations with an even number of sign changes; D_1 is trivial
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if n == 1 and signs != (1,):
                continue
            if signs.count(-1) % 2 == 0:
                yield perm, signs


def act(f, perm, signs):
    return substitute(f, [MultiPoly.var(f.n, perm[i]).scale(signs[i]) for i in range(f.n)])


def cp2_q11_sum():
    # e*p1 restricted to each CP^2 fixed point is e_j*p_j, so each term t_j/e_j is p_j
    p0 = x1 ** 2 + x2 ** 2
    p1 = x1 ** 2 + (x2 - x1) ** 2
    p2 = x2 ** 2 + (x1 - x2) ** 2
    e0, e1, e2 = x1 * x2, x1 * (x1 - x2), x2 * (x2 - x1)
    num = e0 * p0 * e1 * e2 + e1 * p1 * e0 * e2 + e2 * p2 * e0 * e1
    return exact_div(num, e0 * e1 * e2)


def test_elementary_symmetric_examples():
    assert elementary_symmetric(1, [x1 ** 2, x2 ** 2]) == x1 ** 2 + x2 ** 2
    assert elementary_symmetric(2, [x1, x2]) == x1 * x2
    assert elementary_symmetric(0, [x1 + 5, x2]) == MultiPoly.one(2)


def test_invariance_examples():
    assert is_weyl_invariant(x1 * x2, 2)
    assert not is_weyl_invariant(x1 + x2, 2)
    assert is_weyl_invariant(cp2_q11_sum(), 2)


def test_rank_one_group_is_trivial():
    x = MultiPoly.var(1, 0)
    assert is_weyl_invariant(x ** 3 + x, 1)
    assert to_pe_basis(x ** 3, 1) == parse_class("e*p1", 1)


def test_to_pe_basis_examples():
    assert to_pe_basis(4 * (x1 ** 2 + x2 ** 2), 2) == parse_class("4*p1", 2)
    assert to_pe_basis(x1 ** 2 * x2 ** 2, 2) == parse_class("p2", 2)
    assert to_pe_basis(cp2_q11_sum(), 2) == parse_class("4*p1 - 4*e", 2)


def test_to_pe_basis_reports_witness():
    with pytest.raises(NotInvariant) as info:
        to_pe_basis(x1 + x2, 2)
    assert "sign flip" in info.value.witness
    with pytest.raises(NotInvariant):
        to_pe_basis(x1 ** 2, 2)


def test_symmetric_reduce_examples():
    E1, E2 = MultiPoly.gens(2)
    assert symmetric_reduce(x1 ** 2 + x2 ** 2) == E1 ** 2 - 2 * E2
    assert symmetric_reduce(x1 * x2) == E2
    assert symmetric_reduce((x1 + x2) ** 3) == E1 ** 3


def test_symmetric_reduce_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        symmetric_reduce(x1 ** 2 * x2)


@given(polys(max_deg=3, max_terms=4))
def test_invariance_agrees_with_whole_group(f):
    whole = all(act(f, perm, signs) == f for perm, signs in d_n_group(f.n))
    assert is_weyl_invariant(f, f.n) == whole


@given(polys(max_deg=3, max_terms=4))
def test_group_average_is_invariant_and_rewritable(f):
    group = list(d_n_group(f.n))
    avg = sum((act(f, p, s) for p, s in group), MultiPoly.zero(f.n)).scale(1 / len(group))
    assert is_weyl_invariant(avg, f.n)
    assert expand(to_pe_basis(avg, f.n)) == avg


@given(classes())
def test_roundtrip_through_expand(c):
    assert to_pe_basis(expand(c), c.n) == c


@given(st.integers(2, 4).flatmap(lambda n: classes(n=n)))
def test_expanded_classes_satisfy_dichotomy(c):
    assert parity_dichotomy_holds(expand(c))


def test_dichotomy_detects_mixed_parity():
    assert not parity_dichotomy_holds(x1 ** 2 * x2)
    assert parity_dichotomy_holds(x1 ** 3 * x2 + x1 ** 2)


def test_expand_is_multiplicative():
    a, b = parse_class("e + p1", 2), parse_class("e*p1 - 3", 2)
    assert expand(a * b) == expand(a) * expand(b)
    assert expand(CharClass.euler(3) ** 2) == expand(CharClass.pontryagin(3, 3))
