"""Closed-form characteristic numbers of a fibered complex surface.

Everything is exact rational arithmetic.  The three fundamental inputs
are the fiber data (genus g and the zero partition, through the
constant kappa), the open-base Euler characteristic chi(B) = 2 - 2b -
|cusps|, and the total twisting T (the number of vanishing cycles).
From those:

    e     = 4(g-1)(b-1) + T
    sigma = -2 kappa chi(B) - (2/3) T
    c1^2  = -6 kappa chi(B) + 8(g-1)(b-1)

and the remaining characteristic numbers follow from Noether's formula
12 chi(O) = c1^2 + c2 and the signature identity 3 sigma = c1^2 - 2 c2,
which every assembled result re-checks exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgumentError, MathematicalInconsistencyError
from .exact.polynomials import rational_to_str


def kappa_mu(partition):
    """kappa = (1/12) sum m(m+2)/(m+1) over the zero orders m."""
    total = Fraction(0)
    for m in partition:
        if m < 1:
            raise InvalidArgumentError("zero orders must be positive")
        total += Fraction(m * (m + 2), m + 1)
    return total / 12


def euler_characteristic(fiber_genus, base_genus, twisting):
    """e = 4(g-1)(b-1) + T."""
    if fiber_genus < 1 or base_genus < 0 or twisting < 0:
        raise InvalidArgumentError("need g >= 1, b >= 0, T >= 0")
    return 4 * (fiber_genus - 1) * (base_genus - 1) + twisting


def signature(kappa, chi_base, twisting):
    """sigma = -2 kappa chi(B) - (2/3) T, as an exact rational."""
    return -2 * Fraction(kappa) * Fraction(chi_base) - Fraction(2 * twisting, 3)


def c1_squared(kappa, chi_base, fiber_genus, base_genus):
    """c1^2 = -6 kappa chi(B) + 8(g-1)(b-1)."""
    return -6 * Fraction(kappa) * Fraction(chi_base) + 8 * (fiber_genus - 1) * (
        base_genus - 1
    )


def _as_int(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise MathematicalInconsistencyError(f"{what} = {x} is not an integer")
    return x.numerator


@dataclass(frozen=True)
class DerivedCharacteristics:
    c2: int
    chi_holomorphic: int
    geometric_genus: int
    b2: int
    b2_plus: int
    b2_minus: int


def derived_characteristics(euler, sigma, b1):
    """Betti and Hodge-type numbers from (e, sigma, b1).

    c2 = e; chi(O) = (c1^2 + c2)/12 with c1^2 = 3 sigma + 2 e; p_g =
    chi(O) - 1 + b1/2 (irregularity = b1/2); b2 = e - 2 + 2 b1 and
    b2_pm = (b2 +- sigma)/2.  Divisibility and parity are enforced, not
    rounded.
    """
    sigma = _as_int(sigma, "signature")
    if b1 < 0 or b1 % 2 != 0:
        raise InvalidArgumentError("b1 must be a nonnegative even integer")
    c2 = euler
    c1sq = 3 * sigma + 2 * euler
    if (c1sq + c2) % 12 != 0:
        raise MathematicalInconsistencyError(
            f"Noether fails: c1^2 + c2 = {c1sq + c2} is not divisible by 12"
        )
    chi_o = (c1sq + c2) // 12
    p_g = chi_o - 1 + b1 // 2
    b2 = euler - 2 + 2 * b1
    if b2 < 0 or (b2 + sigma) % 2 != 0:
        raise MathematicalInconsistencyError(f"b2 = {b2}, sigma = {sigma} incompatible")
    return DerivedCharacteristics(
        c2=c2,
        chi_holomorphic=chi_o,
        geometric_genus=p_g,
        b2=b2,
        b2_plus=(b2 + sigma) // 2,
        b2_minus=(b2 - sigma) // 2,
    )


@dataclass(frozen=True)
class BmyResult:
    slack: Fraction
    strict: bool


def bmy_check(euler, sigma):
    """Slack e/3 - sigma of the Bogomolov-Miyaoka-Yau bound sigma <= e/3."""
    slack = Fraction(euler, 3) - Fraction(sigma)
    return BmyResult(slack=slack, strict=slack > 0)


def bmy_sufficient(fiber_genus, cusp_count, twisting):
    """Sufficient criterion for strict BMY: (g-1)/2 * |cusps| < T.

    Assumes the base has genus >= 1 (the caller's responsibility).
    """
    return (fiber_genus - 1) * cusp_count < 2 * twisting


def kappa_bound_check(partition):
    """12 kappa <= 3g - 3, equality exactly for the all-ones partition."""
    if not partition:
        raise InvalidArgumentError("partition must be nonempty")
    genus2 = sum(partition) + 2
    if genus2 % 2 != 0:
        raise InvalidArgumentError("partition must sum to 2g - 2")
    g = genus2 // 2
    twelve_kappa = 12 * kappa_mu(partition)
    bound = Fraction(3 * g - 3)
    all_ones = all(m == 1 for m in partition)
    if all_ones:
        return twelve_kappa == bound
    return twelve_kappa < bound


def section_self_intersection(chi_base, zero_order):
    """Self-intersection (2 - 2b - |cusps|)/(2(m+1)) of a zero section."""
    if zero_order < 1:
        raise InvalidArgumentError("zero order must be >= 1")
    return Fraction(chi_base) / (2 * (zero_order + 1))


GENERAL_TYPE = "minimal-general-type"
ELLIPTIC_RATIONAL = "elliptic-rational-beauville"
ELLIPTIC_K3 = "elliptic-k3"
ELLIPTIC_PROPER = "elliptic-proper"
UNDETERMINED_BASE_GENUS_0 = "undetermined-base-genus-0"


def kodaira_classify(fiber_genus, base_genus, elliptic_level=None, minimality_proven=False):
    """Coarse Kodaira classification tag of the total space.

    Fiber genus >= 2 over a positive-genus base is minimal general
    type.  Genus-one fibers give elliptic surfaces, subdivided by the
    congruence level (3: rational, 4: K3, >= 5: properly elliptic).
    Base genus 0 with fiber genus >= 2 is undetermined in general;
    minimality_proven marks the members with a dedicated argument.
    """
    if fiber_genus == 1:
        if elliptic_level == 3:
            return ELLIPTIC_RATIONAL
        if elliptic_level == 4:
            return ELLIPTIC_K3
        return ELLIPTIC_PROPER
    if fiber_genus >= 2 and base_genus >= 1:
        return GENERAL_TYPE
    if fiber_genus >= 2 and minimality_proven:
        return GENERAL_TYPE
    return UNDETERMINED_BASE_GENUS_0


@dataclass(frozen=True)
class FibrationInvariants:
    """The complete invariant record of one fibration."""

    fiber_genus: int
    base_genus: int
    cusp_count: int
    twisting: int
    zero_partition: tuple
    kappa: Fraction
    euler: int
    sigma: int
    c1_squared: int
    c2: int
    chi_holomorphic: int
    geometric_genus: int
    b1: int
    b2: int
    b2_plus: int
    b2_minus: int
    bmy_slack: Fraction
    bmy_strict: bool
    noether_line: bool
    kodaira_tag: str
    zero_section_self_intersections: tuple
    intersection_form_parity: str
    pi1_isomorphic_to_base: bool

    def verify_identities(self):
        """Noether and signature-theorem identities, exactly."""
        if 12 * self.chi_holomorphic != self.c1_squared + self.c2:
            raise MathematicalInconsistencyError("12 chi(O) != c1^2 + c2")
        if 3 * self.sigma != self.c1_squared - 2 * self.c2:
            raise MathematicalInconsistencyError("3 sigma != c1^2 - 2 c2")
        if self.c2 != self.euler:
            raise MathematicalInconsistencyError("c2 != e")
        return True

    def to_json(self):
        return {
            "fiber_genus": self.fiber_genus,
            "base_genus": self.base_genus,
            "cusp_count": self.cusp_count,
            "twisting": self.twisting,
            "zero_partition": list(self.zero_partition),
            "kappa": rational_to_str(self.kappa),
            "euler": self.euler,
            "sigma": self.sigma,
            "c1_squared": self.c1_squared,
            "c2": self.c2,
            "chi_holomorphic": self.chi_holomorphic,
            "geometric_genus": self.geometric_genus,
            "b1": self.b1,
            "b2": self.b2,
            "b2_plus": self.b2_plus,
            "b2_minus": self.b2_minus,
            "bmy_slack": rational_to_str(self.bmy_slack),
            "bmy_strict": self.bmy_strict,
            "noether_line": self.noether_line,
            "kodaira": self.kodaira_tag,
            "zero_section_self_intersections": [
                rational_to_str(s) for s in self.zero_section_self_intersections
            ],
            "intersection_form_parity": self.intersection_form_parity,
            "pi1_isomorphic_to_base": self.pi1_isomorphic_to_base,
            "formulas": {
                "euler": "e = 4(g-1)(b-1) + T",
                "sigma": "sigma = -2 kappa chi(B) - (2/3) T",
                "c1_squared": "c1^2 = -6 kappa chi(B) + 8(g-1)(b-1)",
                "chi_holomorphic": "chi(O) = (c1^2 + c2)/12",
                "geometric_genus": "p_g = chi(O) - 1 + b1/2",
                "zero_section": "S^2 = (2 - 2b - |cusps|) / (2(m+1))",
                "bmy": "slack = e/3 - sigma",
            },
        }


def assemble_invariants(
    fiber_genus,
    base_genus,
    cusp_count,
    twisting,
    zero_partition,
    b1,
    elliptic_level=None,
    minimality_proven=False,
    pi1_isomorphic_to_base=True,
):
    """Build the full invariant record from cover data; all exact.

    chi(B) is the open-base Euler characteristic 2 - 2b - |cusps|; b1
    is the first Betti number of the total space (2b when the
    fundamental group matches the completed base).
    """
    kappa = kappa_mu(zero_partition)
    chi_base = Fraction(2 - 2 * base_genus - cusp_count)
    e = euler_characteristic(fiber_genus, base_genus, twisting)
    sigma_val = _as_int(signature(kappa, chi_base, twisting), "signature")
    c1sq = _as_int(c1_squared(kappa, chi_base, fiber_genus, base_genus), "c1^2")
    derived = derived_characteristics(e, sigma_val, b1)
    if c1sq != 3 * sigma_val + 2 * e:
        raise MathematicalInconsistencyError(
            "signature theorem fails: c1^2 != 3 sigma + 2 c2"
        )
    bmy = bmy_check(e, sigma_val)
    sections = tuple(section_self_intersection(chi_base, m) for m in zero_partition)
    parity = "odd" if any(
        s.denominator == 1 and s.numerator % 2 != 0 for s in sections
    ) else "unknown"
    noether = c1sq == 2 * derived.geometric_genus - 4
    inv = FibrationInvariants(
        fiber_genus=fiber_genus,
        base_genus=base_genus,
        cusp_count=cusp_count,
        twisting=twisting,
        zero_partition=tuple(zero_partition),
        kappa=kappa,
        euler=e,
        sigma=sigma_val,
        c1_squared=c1sq,
        c2=derived.c2,
        chi_holomorphic=derived.chi_holomorphic,
        geometric_genus=derived.geometric_genus,
        b1=b1,
        b2=derived.b2,
        b2_plus=derived.b2_plus,
        b2_minus=derived.b2_minus,
        bmy_slack=bmy.slack,
        bmy_strict=bmy.strict,
        noether_line=noether,
        kodaira_tag=kodaira_classify(
            fiber_genus, base_genus, elliptic_level, minimality_proven
        ),
        zero_section_self_intersections=sections,
        intersection_form_parity=parity,
        pi1_isomorphic_to_base=pi1_isomorphic_to_base,
    )
    inv.verify_identities()
    return inv
