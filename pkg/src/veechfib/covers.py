"""Degrees, cusps, genus and twisting of level-p congruence covers.

The degree comes from the classical generation theorem for SL(2) over a
finite field: two opposite elementary matrices [[1, a], [0, 1]] and
[[1, 0], [1, 1]] with a generating the field generate all of
SL(2, F_q), except over F_9 where they generate a copy of SL(2, 5) of
order 120.  The deck group of the cover is that image modulo its
center's -I when the Veech group contains -I, whence the degree is
q(q^2 - 1) or q(q^2 - 1)/2.

group_closure_order provides the desk-scale oracle: an exhaustive
breadth-first closure of the generated matrix group, usable whenever
the target order fits under a configurable cap.

riemann_hurwitz_cover and cover_twisting are the bookkeeping half:
cusp counts |G|/k per base cusp, exact multiplicative Euler
characteristic for the genus, and T = sum over base cusps of
d * (twists) / (root index).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import (
    CapExceededError,
    InadmissiblePrimeError,
    InconsistentCoverError,
    InvalidArgumentError,
    InvalidRootDataError,
)
from .exact.finitefield import FiniteFieldSpec, is_irreducible_mod_p, is_prime
from .exact.polynomials import IntPolynomial, rational_to_str


@dataclass(frozen=True)
class OrbifoldSignature:
    """Hyperbolic orbifold data: genus, cone orders, cusp count."""

    base_genus: int
    orbifold_orders: tuple
    cusp_count: int

    def __post_init__(self):
        if self.base_genus < 0 or self.cusp_count < 0:
            raise InvalidArgumentError("negative orbifold data")
        if any(n < 2 for n in self.orbifold_orders):
            raise InvalidArgumentError("orbifold orders must be >= 2")
        if self.euler_characteristic >= 0:
            raise InvalidArgumentError("orbifold is not hyperbolic")

    @property
    def euler_characteristic(self):
        chi = Fraction(2 - 2 * self.base_genus - self.cusp_count)
        for n in self.orbifold_orders:
            chi -= Fraction(n - 1, n)
        return chi


@dataclass(frozen=True)
class CoverData:
    """Summary of a finite cover of a cusped hyperbolic orbifold.

    per_cusp_twists holds the twist count of the monodromy around one
    cusp in each fiber over a base cusp orbit; total_twisting is the
    grand total over all cusps of the cover.  Both are None until
    with_twisting fills them in.
    """

    degree: int
    base_genus: int
    cusp_count: int
    cusps_per_orbit: tuple
    cusp_image_orders: tuple
    per_cusp_twists: tuple = None
    total_twisting: int = None
    group_label: str = ""
    exceptional: bool = False

    def with_twisting(self, per_cusp_twists, total_twisting):
        return replace(
            self, per_cusp_twists=tuple(per_cusp_twists), total_twisting=total_twisting
        )

    def euler_characteristic(self):
        return Fraction(2 - 2 * self.base_genus - self.cusp_count)

    def to_json(self):
        return {
            "degree": self.degree,
            "base_genus": self.base_genus,
            "cusp_count": self.cusp_count,
            "cusps_per_orbit": list(self.cusps_per_orbit),
            "cusp_image_orders": list(self.cusp_image_orders),
            "per_cusp_twists": list(self.per_cusp_twists or ()),
            "total_twisting": self.total_twisting,
            "group_label": self.group_label,
            "exceptional": self.exceptional,
            "euler_characteristic": rational_to_str(self.euler_characteristic()),
            "formula": "chi(cover) = 2 - 2b - |cusps| = degree * chi_orb(base)",
        }


@dataclass(frozen=True)
class CongruenceDegree:
    degree: int
    group_order: int
    group_label: str
    exceptional: bool

    def to_json(self):
        return {
            "degree": self.degree,
            "group_order": self.group_order,
            "group_label": self.group_label,
            "exceptional": self.exceptional,
            "formula": "|SL(2, q)| = q(q^2-1); degree halves when -I is a deck relation",
        }


def congruence_degree(alpha_minpoly, p, genus, contains_minus_i):
    """Cover degree for the level-p congruence cover of a trace field.

    alpha_minpoly is the degree-g minimal polynomial of the congruence
    parameter; it must be irreducible mod p.  The generated image is
    SL(2, p^g), of order p^g (p^2g - 1), except for (p, g) = (3, 2)
    where it is the order-120 copy of SL(2, 5) inside SL(2, 9).  The
    returned degree divides out the center when the Veech group
    contains -I.
    """
    if not isinstance(alpha_minpoly, IntPolynomial):
        alpha_minpoly = IntPolynomial(alpha_minpoly)
    if not is_prime(p) or p < 3:
        raise InvalidArgumentError(f"p = {p} must be an odd prime")
    if alpha_minpoly.degree != genus:
        raise InvalidArgumentError(
            f"minimal polynomial degree {alpha_minpoly.degree} != genus {genus}"
        )
    if not is_irreducible_mod_p(alpha_minpoly, p):
        raise InadmissiblePrimeError(
            f"{alpha_minpoly} is reducible mod {p}; level {p} is inadmissible"
        )
    if (p, genus) == (3, 2):
        order = 120
        label = "PSL(2,5)" if contains_minus_i else "SL(2,5)"
        exceptional = True
    else:
        q = p**genus
        order = q * (q * q - 1)
        label = f"PSL(2,{q})" if contains_minus_i else f"SL(2,{q})"
        exceptional = False
    degree = order // 2 if contains_minus_i else order
    return CongruenceDegree(degree, order, label, exceptional)


# ---------------------------------------------------------------------------
# Brute-force group order oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixGroupSpec:
    """Finite field plus a list of 2x2 generator matrices of determinant 1."""

    field: FiniteFieldSpec
    generators: tuple

    def __post_init__(self):
        for mat in self.generators:
            (a, b), (c, d) = mat
            for entry in (a, b, c, d):
                if entry.spec != self.field:
                    raise InvalidArgumentError("generator entries live in the wrong field")
            det = a * d - b * c
            if det != self.field.one:
                raise InvalidArgumentError("generator determinant is not 1")


def theorem_generator_pair(field, abar=None):
    """The pair [[1, abar], [0, 1]], [[1, 0], [1, 1]].

    abar defaults to the residue of x; pass the residue of the actual
    congruence parameter when it differs (over F_9 the generated group
    genuinely depends on it: it is the order-120 copy of SL(2, 5) when
    abar^2 = -1 and all of SL(2, 9) otherwise).
    """
    one, zero = field.one, field.zero
    if abar is None:
        abar = field.generator
    return MatrixGroupSpec(
        field,
        (
            ((one, abar), (zero, one)),
            ((one, zero), (one, one)),
        ),
    )


DEFAULT_CLOSURE_CAP = 10**7


def group_closure_order(spec, cap=DEFAULT_CLOSURE_CAP):
    """Exact order of the generated matrix group by exhaustive closure.

    Elements are packed into integers via base-q digit encoding and
    multiplied through precomputed field tables, so the search is a
    plain BFS over ints.  Raises CapExceededError when the closure
    outgrows cap, or up front when even the ambient group does: the
    oracle requires |SL(2, q)| = q(q^2 - 1) <= cap.
    """
    field = spec.field
    q = field.order
    if q * (q * q - 1) > cap:
        raise CapExceededError(
            f"|SL(2,{q})| = {q * (q * q - 1)} exceeds cap = {cap}; "
            "raise the cap to search this field"
        )
    mul, add = _field_tables(field)
    idx = field.element_index
    gens = [
        (idx(m[0][0]), idx(m[0][1]), idx(m[1][0]), idx(m[1][1])) for m in spec.generators
    ]
    one, zero = 1, 0  # indices: element_index maps 1 -> 1, 0 -> 0
    identity = (one, zero, zero, one)
    seen = {identity}
    queue = deque([identity])
    while queue:
        a, b, c, d = queue.popleft()
        for e, f, g, h in gens:
            nxt = (
                add[mul[a][e]][mul[b][g]],
                add[mul[a][f]][mul[b][h]],
                add[mul[c][e]][mul[d][g]],
                add[mul[c][f]][mul[d][h]],
            )
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(f"group closure exceeded cap = {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)


def _field_tables(field):
    q = field.order
    elements = [field.element_from_index(i) for i in range(q)]
    mul = [[0] * q for _ in range(q)]
    add = [[0] * q for _ in range(q)]
    for i in range(q):
        for j in range(i, q):
            m = field.element_index(elements[i] * elements[j])
            s = field.element_index(elements[i] + elements[j])
            mul[i][j] = mul[j][i] = m
            add[i][j] = add[j][i] = s
    return mul, add


# ---------------------------------------------------------------------------
# Cusp and genus bookkeeping
# ---------------------------------------------------------------------------


def cusp_image_order(p):
    """Order of a cusp generator in the level-p deck group.

    A nontrivial unipotent U over characteristic p satisfies U^p = I,
    and the cusp monodromies here act nontrivially mod p, so the order
    is exactly p.  Families with other cusp behavior can bypass this by
    passing explicit orders to riemann_hurwitz_cover.
    """
    if not is_prime(p) or p < 3:
        raise InvalidArgumentError(f"p = {p} must be an odd prime")
    return p


def riemann_hurwitz_cover(signature, degree, orbifold_image_orders, cusp_image_orders):
    """Genus and cusp count of a degree-d cover of a hyperbolic orbifold.

    Each orbifold point must map to an element of its full order (the
    cover is then an honest surface, unbranched over the cone points in
    the orbifold sense); each base cusp with image order k contributes
    d/k cusps.  The genus solves 2 - 2b - |cusps| = d * chi_orb exactly
    and must come out a nonnegative integer.
    """
    if degree < 1:
        raise InvalidArgumentError("degree must be positive")
    if len(orbifold_image_orders) != len(signature.orbifold_orders):
        raise InvalidArgumentError("one image order per orbifold point required")
    if len(cusp_image_orders) != signature.cusp_count:
        raise InvalidArgumentError("one image order per cusp required")
    for full, image in zip(signature.orbifold_orders, orbifold_image_orders):
        if image != full:
            raise InconsistentCoverError(
                f"orbifold point of order {full} has image order {image}; "
                "the cover would be an orbifold, not a surface"
            )
        if degree % image != 0:
            raise InconsistentCoverError(f"degree {degree} not divisible by {image}")
    cusps_per_orbit = []
    for k in cusp_image_orders:
        if k < 1 or degree % k != 0:
            raise InconsistentCoverError(f"cusp image order {k} does not divide {degree}")
        cusps_per_orbit.append(degree // k)
    cusp_count = sum(cusps_per_orbit)
    chi_cover = degree * signature.euler_characteristic
    genus2 = 2 - cusp_count - chi_cover  # = 2b
    if genus2.denominator != 1 or genus2.numerator % 2 != 0 or genus2 < 0:
        raise InconsistentCoverError(
            f"cover genus is not a nonnegative integer: 2b = {genus2}"
        )
    return CoverData(
        degree=degree,
        base_genus=int(genus2) // 2,
        cusp_count=cusp_count,
        cusps_per_orbit=tuple(cusps_per_orbit),
        cusp_image_orders=tuple(cusp_image_orders),
    )


def cover_twisting(cusps_per_orbit, image_orders, base_twists, roots):
    """Total twisting T = sum over base cusps of degree * T_c / k_c.

    base_twists[c] counts the Dehn twists in the minimal multitwist at
    base cusp c; roots[c] = k_c when the cusp generator is a k_c-th
    root of that multitwist.  Each cusp over c is a multitwist with
    order * T_c / k_c twists, which must be a positive integer.
    """
    lengths = {len(cusps_per_orbit), len(image_orders), len(base_twists), len(roots)}
    if len(lengths) != 1:
        raise InvalidArgumentError("per-cusp sequences must have equal length")
    total = 0
    per_cusp = []
    for count, order, twists, k in zip(cusps_per_orbit, image_orders, base_twists, roots):
        if twists < 1 or k < 1:
            raise InvalidRootDataError("twists and root indices must be positive")
        num = order * twists
        if num % k != 0:
            raise InvalidRootDataError(
                f"k = {k} does not divide order * twists = {num}; fractional multitwist"
            )
        per_cusp.append(num // k)
        total += count * (num // k)
    return total, tuple(per_cusp)
