import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veechfib.errors import InvalidDiscriminantError, SpinRequiredError
from veechfib.exact.polynomials import IntPolynomial
from veechfib.prototypes import (
    Prototype,
    brute_force_count,
    enumerate_prototypes,
    prototype_twisting,
    prototypes_csv,
    standard_parameters,
    weierstrass_alpha,
)


def test_single_prototype_for_discriminant_five():
    assert [p.as_tuple() for p in enumerate_prototypes(5)] == [(1, 1, 0, -1)]


def test_two_prototypes_for_discriminant_eight():
    assert [p.as_tuple() for p in enumerate_prototypes(8)] == [
        (1, 1, 0, -2),
        (2, 1, 0, 0),
    ]


def test_square_discriminant_rejected():
    with pytest.raises(InvalidDiscriminantError):
        enumerate_prototypes(4)
    with pytest.raises(InvalidDiscriminantError):
        enumerate_prototypes(9)
    with pytest.raises(InvalidDiscriminantError):
        enumerate_prototypes(7)  # 3 mod 4


def test_spin_filter_required_for_one_mod_eight():
    with pytest.raises(SpinRequiredError):
        enumerate_prototypes(17)
    # a trivial filter exposes both spin classes: six quadruples in all
    assert len(enumerate_prototypes(17, spin_filter=lambda p: True)) == 6


def test_every_prototype_revalidates():
    for d in (5, 8, 12, 13, 20, 21, 24, 28, 29, 32):
        for proto in enumerate_prototypes(d):
            assert proto.validate()


def test_enumeration_matches_brute_force_scan():
    for d in range(5, 101):
        if d % 4 not in (0, 1) or math.isqrt(d) ** 2 == d or d % 8 == 1:
            continue
        assert len(enumerate_prototypes(d)) == brute_force_count(d), d


def test_twisting_examples():
    assert prototype_twisting(Prototype(2, 1, 0, 0, 8)) == 3
    assert prototype_twisting(Prototype(1, 1, 0, -1, 5)) == 2
    assert prototype_twisting(Prototype(3, 2, 0, 1, 25)) == 5


@given(w=st.integers(1, 60), h=st.integers(1, 60))
@settings(max_examples=200, deadline=None)
def test_twisting_is_numerator_plus_denominator(w, h):
    d = 4 * w * h  # synthetic discriminant; twisting depends on (w, h) only
    proto = Prototype(w, h, 0, 0, d)
    g = math.gcd(w, h)
    assert prototype_twisting(proto) == w // g + h // g
    assert prototype_twisting(proto) >= 2


def test_weierstrass_alpha_examples():
    assert weierstrass_alpha(1, 1) == IntPolynomial([-1, -1, 1])
    assert weierstrass_alpha(2, 0) == IntPolynomial([2, -4, 1])
    assert weierstrass_alpha(3, 1) == IntPolynomial([3, -5, 1])


def test_weierstrass_alpha_discriminant_identity():
    for w in range(1, 40):
        for e in (-1, 0, 1):
            f = weierstrass_alpha(w, e)
            b, c = f.coefficients[1], f.coefficients[0]
            assert b * b - 4 * c == e * e + 4 * w


def test_standard_parameters_give_valid_prototype():
    for d in (5, 8, 12, 13, 20, 21, 24, 28, 29):
        w, e = standard_parameters(d)
        assert e * e + 4 * w == d
        proto = Prototype(w, 1, 0, e, d)
        assert proto.validate()
        assert proto in enumerate_prototypes(d)


def test_csv_emitter():
    csv_text = prototypes_csv(enumerate_prototypes(8))
    assert csv_text.splitlines() == [
        "D,w,h,t,e,twisting",
        "8,1,1,0,-2,2",
        "8,2,1,0,0,3",
    ]
