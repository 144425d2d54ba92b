from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veechfib.errors import InvalidArgumentError, MathematicalInconsistencyError
from veechfib.invariants import (
    assemble_invariants,
    bmy_check,
    bmy_sufficient,
    c1_squared,
    derived_characteristics,
    euler_characteristic,
    kappa_bound_check,
    kappa_mu,
    kodaira_classify,
    section_self_intersection,
    signature,
)


def test_kappa_mu_values():
    assert kappa_mu((2,)) == Fraction(2, 9)
    assert kappa_mu((1, 3)) == Fraction(7, 16)
    assert kappa_mu((6,)) == Fraction(4, 7)
    assert kappa_mu(()) == 0


def test_euler_characteristic():
    assert euler_characteristic(2, 0, 120) == 116
    assert euler_characteristic(1, 0, 12) == 12
    assert euler_characteristic(7, 1, 0) == 0
    with pytest.raises(InvalidArgumentError):
        euler_characteristic(0, 1, 0)


def test_signature_formula():
    assert signature(Fraction(2, 9), -18, 120) == -72
    assert signature(0, -7, 12) == -8
    assert signature(0, 3, 0) == 0


def test_c1_squared_formula():
    assert c1_squared(Fraction(2, 9), -18, 2, 0) == 16
    assert c1_squared(Fraction(7, 16), 0, 1, 5) == 0
    # cross-check against 3 sigma + 2 c2 for the headline values
    assert 3 * (-72) + 2 * 116 == 16


def test_derived_characteristics_headline():
    d = derived_characteristics(116, -72, 0)
    assert d.c2 == 116
    assert d.chi_holomorphic == 11
    assert d.geometric_genus == 10
    assert (d.b2, d.b2_plus, d.b2_minus) == (114, 21, 93)


def test_derived_characteristics_rational_elliptic():
    d = derived_characteristics(12, -8, 0)
    assert d.chi_holomorphic == 1 and d.geometric_genus == 0
    assert (d.b2, d.b2_plus, d.b2_minus) == (10, 1, 9)


def test_derived_characteristics_symmetric():
    d = derived_characteristics(4, 0, 2)
    assert (d.b2, d.b2_plus, d.b2_minus) == (6, 3, 3)


def test_derived_characteristics_divisibility_guard():
    with pytest.raises(MathematicalInconsistencyError):
        derived_characteristics(5, 1, 0)


def test_bmy_check():
    r = bmy_check(116, -72)
    assert r.slack == Fraction(332, 3) and r.strict
    r = bmy_check(3, 1)
    assert r.slack == 0 and not r.strict


def test_bmy_sufficient():
    assert bmy_sufficient(2, 20, 120)
    assert bmy_sufficient(3, 2, 3)
    assert not bmy_sufficient(5, 10, 20)


def test_kappa_bound_examples():
    assert kappa_bound_check((1, 1))
    assert 12 * kappa_mu((1, 1)) == 3
    assert kappa_bound_check((2,))
    assert 12 * kappa_mu((2,)) == Fraction(8, 3)
    assert kappa_bound_check((6,))
    assert 12 * kappa_mu((6,)) == Fraction(48, 7)


def _partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def test_kappa_bound_exhaustive_up_to_genus_eight():
    for genus in range(2, 9):
        for partition in _partitions(2 * genus - 2):
            assert kappa_bound_check(partition), partition
            is_equality = 12 * kappa_mu(partition) == 3 * genus - 3
            assert is_equality == all(m == 1 for m in partition), partition


@given(
    parts=st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=10)
)
@settings(max_examples=200, deadline=None)
def test_kappa_bound_random_partitions(parts):
    total = sum(parts)
    if total % 2 != 0:
        parts = parts + [1]
    assert kappa_bound_check(tuple(parts))


def test_section_self_intersection():
    assert section_self_intersection(-18, 2) == -3
    for m in (1, 2, 5):
        assert section_self_intersection(-4 * (m + 1), m) == -2
    assert section_self_intersection(-18, 2).numerator % 2 == 1  # odd: form is odd


def test_kodaira_classification():
    assert kodaira_classify(3, 118) == "minimal-general-type"
    assert kodaira_classify(1, 0, elliptic_level=3) == "elliptic-rational-beauville"
    assert kodaira_classify(1, 0, elliptic_level=4) == "elliptic-k3"
    assert kodaira_classify(1, 0, elliptic_level=5) == "elliptic-proper"
    assert kodaira_classify(2, 0, minimality_proven=True) == "minimal-general-type"
    assert kodaira_classify(2, 0) == "undetermined-base-genus-0"


def test_assembled_invariants_satisfy_identities():
    inv = assemble_invariants(2, 0, 20, 120, (2,), b1=0, minimality_proven=True)
    assert inv.verify_identities()
    assert 12 * inv.chi_holomorphic == inv.c1_squared + inv.c2
    assert 3 * inv.sigma == inv.c1_squared - 2 * inv.c2
    assert inv.noether_line
    assert inv.intersection_form_parity == "odd"
    assert inv.zero_section_self_intersections == (Fraction(-3),)


def test_assembly_rejects_non_integral_signature():
    # T = 1 makes sigma fractional for this base
    with pytest.raises(MathematicalInconsistencyError):
        assemble_invariants(2, 1, 1, 1, (2,), b1=2)
