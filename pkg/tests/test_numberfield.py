from fractions import Fraction

import pytest

from veechfib.errors import MixedModulusError, NonIntegralElementError
from veechfib.exact.numberfield import (
    RealAlgebraicField,
    coordinates_in_power_basis,
    element_minimal_polynomial,
    in_order,
)
from veechfib.exact.polynomials import IntPolynomial, minpoly_two_cos


@pytest.fixture
def golden_field():
    return RealAlgebraicField(IntPolynomial([-1, -1, 1]))


def test_modulus_relation(golden_field):
    mu = golden_field.generator
    assert (mu * mu - mu - 1).is_zero


def test_element_minimal_polynomial_of_square(golden_field):
    # oracle: mu^2 = mu + 1, and (mu+1)^2 - 3(mu+1) + 1 = mu^2 - mu - 1 = 0
    mu = golden_field.generator
    assert element_minimal_polynomial(mu * mu) == IntPolynomial([1, -3, 1])


def test_element_minimal_polynomial_identity_case(golden_field):
    mu = golden_field.generator
    assert element_minimal_polynomial(mu) == golden_field.modulus


def test_element_minimal_polynomial_degree_seven_case():
    field = RealAlgebraicField(minpoly_two_cos(7))
    mu = field.generator
    assert element_minimal_polynomial(mu * mu) == IntPolynomial([-1, 6, -5, 1])


def test_minimal_polynomial_annihilates_in_ring():
    for n in (5, 7, 9, 12, 18):
        field = RealAlgebraicField(minpoly_two_cos(n))
        elem = field.generator ** 2 - 2 * field.generator + 1
        m = element_minimal_polynomial(elem)
        acc = field.zero
        for c in reversed(m.coefficients):
            acc = acc * elem + c
        assert acc.is_zero


def test_non_integral_element_reports_rational_polynomial(golden_field):
    half_mu = golden_field.generator / 2
    with pytest.raises(NonIntegralElementError) as err:
        element_minimal_polynomial(half_mu)
    assert err.value.rational_coefficients == (
        Fraction(-1, 4),
        Fraction(-1, 2),
        Fraction(1),
    )


def test_real_embedding_sign_and_order(golden_field):
    mu = golden_field.generator
    assert mu.sign() == 1
    assert (-mu).sign() == -1
    assert golden_field.zero.sign() == 0
    assert 1 < mu < 2
    assert mu**2 > mu
    assert float(mu) == pytest.approx((1 + 5**0.5) / 2)


def test_field_inverse_and_division(golden_field):
    mu = golden_field.generator
    assert mu * mu.inverse() == golden_field.one
    assert (mu**3 / mu) == mu**2


def test_mixed_modulus_rejected(golden_field):
    other = RealAlgebraicField(IntPolynomial([-2, 0, 1]))
    with pytest.raises(MixedModulusError):
        golden_field.generator + other.generator


def test_suborder_membership(golden_field):
    mu = golden_field.generator
    alpha = mu * mu
    assert in_order(alpha + 1, alpha, 2)
    assert in_order(mu, alpha, 2)  # mu = alpha - 1 here
    assert not in_order(mu / 2, alpha, 2)


def test_suborder_coordinates_outside_subfield():
    field = RealAlgebraicField(minpoly_two_cos(18))
    mu = field.generator
    alpha = mu * mu
    assert coordinates_in_power_basis(mu, alpha, 3) is None
    coords = coordinates_in_power_basis(alpha**2 - 3, alpha, 3)
    assert coords == (Fraction(-3), Fraction(0), Fraction(1))


def test_element_json(golden_field):
    mu = golden_field.generator
    assert (mu / 2).to_json() == ["0/1", "1/2"]
