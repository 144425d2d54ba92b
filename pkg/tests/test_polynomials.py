import math
from fractions import Fraction

import pytest

from veechfib.errors import InvalidArgumentError, NoRealRootError
from veechfib.exact.polynomials import (
    IntPolynomial,
    cos_two_pi_minpoly,
    cyclotomic_polynomial,
    euler_phi,
    isolate_largest_real_root,
    minpoly_two_cos,
    parse_polynomial,
    rational_from_str,
    rational_to_str,
    squarefree_part,
)


def test_minpoly_two_cos_pinned_values():
    assert minpoly_two_cos(3) == IntPolynomial([-1, 1])
    assert minpoly_two_cos(5) == IntPolynomial([-1, -1, 1])
    assert minpoly_two_cos(18) == IntPolynomial([-3, 0, 9, 0, -6, 0, 1])
    assert minpoly_two_cos(30) == IntPolynomial([1, 0, -8, 0, 14, 0, -7, 0, 1])


def test_minpoly_two_cos_derived_via_cyclotomic():
    # independent oracle: Phi_10(x) = x^4 - x^3 + x^2 - x + 1 descends to x^2-x-1
    assert cyclotomic_polynomial(10) == IntPolynomial([1, -1, 1, -1, 1])
    assert cos_two_pi_minpoly(10) == IntPolynomial([-1, -1, 1])


def test_minpoly_two_cos_rejects_small_n():
    with pytest.raises(InvalidArgumentError):
        minpoly_two_cos(2)


@pytest.mark.parametrize("n", range(3, 61))
def test_minpoly_two_cos_degree_monic_and_root(n):
    m = minpoly_two_cos(n)
    assert m.is_monic
    assert m.degree == euler_phi(2 * n) // 2
    interval = isolate_largest_real_root(m, Fraction(1, 10**12))
    value = 2 * math.cos(math.pi / n)
    assert float(interval.lower) - 1e-12 <= value <= float(interval.upper) + 1e-12


def test_isolate_largest_real_root_examples():
    exact = isolate_largest_real_root(IntPolynomial([-1, 1]))
    assert exact.is_exact and exact.lower == 1

    golden = isolate_largest_real_root(IntPolynomial([-1, -1, 1]), Fraction(1, 10))
    assert Fraction(3, 2) <= golden.lower and golden.upper <= Fraction(17, 10)

    with pytest.raises(NoRealRootError):
        isolate_largest_real_root(IntPolynomial([1, 0, 1]))


def test_root_interval_refinement_default_width():
    interval = isolate_largest_real_root(IntPolynomial([-1, -1, 1]))
    assert interval.width <= Fraction(1, 10**20)
    narrower = interval.refine(Fraction(1, 10**40))
    assert narrower.width <= Fraction(1, 10**40)
    golden = (1 + 5**0.5) / 2
    assert float(narrower.lower) <= golden <= float(narrower.upper) + 1e-15


def test_isolate_picks_largest_root():
    # roots 1, 2, 3: the interval must contain only 3
    f = IntPolynomial([-1, 1]) * IntPolynomial([-2, 1]) * IntPolynomial([-3, 1])
    interval = isolate_largest_real_root(f, Fraction(1, 100))
    assert interval.lower > Fraction(5, 2)
    assert interval.contains(3) or interval.is_exact


def test_squarefree_part():
    f = IntPolynomial([-1, 1]) * IntPolynomial([-1, 1]) * IntPolynomial([0, 1])
    assert squarefree_part(f) == IntPolynomial([-1, 1]) * IntPolynomial([0, 1])


def test_parse_and_str():
    assert parse_polynomial("x^2-x-1") == IntPolynomial([-1, -1, 1])
    assert parse_polynomial("x^2 - 4x + 2") == IntPolynomial([2, -4, 1])
    assert parse_polynomial("y^3-6y^2+9y-3") == IntPolynomial([-3, 9, -6, 1])
    assert str(IntPolynomial([-1, -1, 1])) == "x^2 - x - 1"
    with pytest.raises(InvalidArgumentError):
        parse_polynomial("")


def test_json_round_trip():
    f = IntPolynomial([-3, 0, 9, 0, -6, 0, 1])
    assert f.to_json() == ["-3", "0", "9", "0", "-6", "0", "1"]
    assert IntPolynomial.from_json(f.to_json()) == f


def test_rational_serialization():
    assert rational_to_str(Fraction(-3, 10)) == "-3/10"
    assert rational_from_str("-3/10") == Fraction(-3, 10)
    assert rational_from_str("7") == 7


def test_parity_helpers():
    assert IntPolynomial([0, 1, 0, 2]).odd_terms_only()
    assert IntPolynomial([3, 0, -1]).even_terms_only()
    assert not IntPolynomial([1, 1]).odd_terms_only()


def test_arithmetic_basics():
    f = IntPolynomial([1, 2])
    g = IntPolynomial([-1, 1])
    assert f * g == IntPolynomial([-1, -1, 2])
    assert f + g == IntPolynomial([0, 3])
    q, r = (f * g).divmod_monic(g)
    assert q == f and r.is_zero
    assert (f * g).try_exact_divide(f) == g
    assert IntPolynomial([1, 1]).try_exact_divide(IntPolynomial([0, 2])) is None
