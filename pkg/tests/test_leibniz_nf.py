from math import factorial

import pytest
from hypothesis import given

from conftest import monomials
from nal.freealgebra import MultiDegree, Poly, enumerate_monomials, substitute, triple, variables
from nal.leibniz_nf import (
    find_redex,
    is_right_normed,
    monomial_to_word,
    normal_form,
    reachable_normal_forms,
    redexes,
    rewrite_at,
    right_normed_basis,
    termination_measure,
    word_to_monomial,
)
from nal.tideal import TIdeal
from nal.varieties import LEIBNIZ

a, b, c, d = variables("a b c d")


def two_variable_monomials(max_degree):
    for n in range(1, max_degree + 1):
        for i in range(n + 1):
            md = MultiDegree.of({k: v for k, v in (("x", i), ("y", n - i)) if v})
            yield from enumerate_monomials(md)


def test_basic_rewrite():
    assert normal_form((a * b) * c) == a * (b * c) - b * (a * c)
    assert normal_form(triple(a, b, c)) == Poly.zero()


def test_right_normed_words_are_fixed_points():
    m = word_to_monomial("abcd")
    assert m == ("a", ("b", ("c", "d")))
    assert is_right_normed(m) and monomial_to_word(m) == tuple("abcd")
    assert normal_form(Poly({m: 1})) == Poly({m: 1})


def test_innermost_leftmost_choice():
    m = ((("a", "b"), "c"), ("d", "a"))
    assert set(redexes(m)) == {(), (0,)}
    assert find_redex(m) == (0,)


def test_normal_form_order_independence_to_degree_6():
    count = 0
    for m in two_variable_monomials(6):
        forms = reachable_normal_forms(m)
        assert len(forms) == 1
        (only,) = forms
        assert only == normal_form(Poly({m: 1}))
        count += 1
    assert count == 2 + 4 + 16 + 80 + 448 + 2688


@given(monomials(max_leaves=6))
def test_rewrites_decrease_the_measure(m):
    mu = termination_measure(m)
    for pos in redexes(m):
        for mm in rewrite_at(m, pos).monomials():
            assert termination_measure(mm) < mu
    assert (mu == 0) == is_right_normed(m)


LEIBNIZ_IDEAL = TIdeal([LEIBNIZ])


@given(monomials(max_leaves=5))
def test_normal_form_differs_by_a_consequence_of_leibniz(m):
    p = Poly({m: 1})
    nf = normal_form(p)
    assert all(is_right_normed(k) for k in nf.monomials())
    diff = p - nf
    if diff:
        assert LEIBNIZ_IDEAL.contains(diff)


@pytest.mark.parametrize("n", range(1, 6))
def test_multilinear_right_normed_basis_has_factorial_size(n):
    md = MultiDegree.of({chr(ord("a") + i): 1 for i in range(n)})
    assert len(right_normed_basis(md)) == factorial(n)


def test_basis_with_repeated_letters():
    assert right_normed_basis(MultiDegree.of(x=2, y=1)) == [("x", "x", "y"), ("x", "y", "x"), ("y", "x", "x")]


def test_normal_form_is_compatible_with_products_of_normal_forms():
    # nf(p * q) == nf(nf(p) * nf(q)) since rewriting is a congruence
    p, q = (a * b) * c, (b * a) * a
    assert normal_form(p * q) == normal_form(normal_form(p) * normal_form(q))


def test_substitution_commutes_with_normal_form_modulo_rewriting():
    p = (a * b) * c
    sigma = {"a": a * b, "b": c, "c": a}
    assert normal_form(substitute(p, sigma)) == normal_form(substitute(normal_form(p), sigma))
