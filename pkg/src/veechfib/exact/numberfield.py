"""Exact arithmetic in real number rings Q[x]/(m) with a chosen real root.

A RealAlgebraicField wraps a monic integer minimal polynomial together
with a RootInterval picking out one real root; the interval gives every
element an exact sign (refine until the interval evaluation of its
residue excludes zero), so elements can be compared, sorted and checked
for positivity without floating point.

Elements always carry their field.  Mixed-field arithmetic raises
MixedModulusError; nothing is ever coerced.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import (
    InvalidArgumentError,
    MixedModulusError,
    NonIntegralElementError,
)
from .polynomials import (
    IntPolynomial,
    isolate_largest_real_root,
    qdivmod,
    qeval,
    qeval_interval,
    qmul,
    qstrip,
    qsub,
    rational_to_str,
)


class RealAlgebraicField:
    """The ring Q[x]/(modulus) with a distinguished real embedding.

    The modulus must be monic with integer coefficients and irreducible
    over Q in all intended uses (it is taken on faith here; division by
    a zero divisor of a reducible modulus raises ZeroDivisionError).
    """

    def __init__(self, modulus, root=None):
        if not isinstance(modulus, IntPolynomial):
            modulus = IntPolynomial(modulus)
        if not modulus.is_monic or modulus.degree < 1:
            raise InvalidArgumentError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.degree = modulus.degree
        self._modulus_q = modulus.to_qpoly()
        if root is None:
            root = isolate_largest_real_root(modulus)
        self.root = root

    def __eq__(self, other):
        return isinstance(other, RealAlgebraicField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("RealAlgebraicField", self.modulus))

    def __repr__(self):
        return f"RealAlgebraicField(Q[x]/({self.modulus}))"

    # -- element constructors -------------------------------------------------

    def element(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            reduced = qdivmod(qstrip(coeffs), self._modulus_q)[1]
            coeffs = list(reduced)
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return NumberFieldElement(self, tuple(coeffs[: self.degree]))

    def from_rational(self, x):
        return self.element([Fraction(x)])

    @property
    def zero(self):
        return self.from_rational(0)

    @property
    def one(self):
        return self.from_rational(1)

    @property
    def generator(self):
        if self.degree == 1:
            # x = -c0 in a linear field
            return self.from_rational(-self.modulus.coefficients[0])
        return self.element([0, 1])

    def _refine_root(self, width):
        self.root = self.root.refine(width)
        return self.root


class NumberFieldElement:
    """Element of a RealAlgebraicField: residue of degree < deg(modulus)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, NumberFieldElement):
            raise InvalidArgumentError(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise MixedModulusError(
                f"mixed moduli: {self.field.modulus} vs {other.field.modulus}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return NumberFieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, tuple(a * Fraction(other) for a in self.coeffs))
        self._check(other)
        prod = qmul(qstrip(self.coeffs), qstrip(other.coeffs))
        return self.field.element(prod)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        # Bezout: s*self + t*modulus = gcd; gcd must be a nonzero constant.
        r0, r1 = self.field._modulus_q, qstrip(self.coeffs)
        s0, s1 = (), (Fraction(1),)
        while r1:
            q, r = qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, qsub(s0, qmul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (reducible modulus?)")
        inv = tuple(c / r0[0] for c in s0)
        return self.field.element(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) / self.field.from_rational(other)
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NumberFieldElement) or other.field != self.field:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.modulus, self.coeffs))

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    @property
    def is_integral_residue(self):
        """True when all power-basis coordinates are integers."""
        return all(c.denominator == 1 for c in self.coeffs)

    def rational_value(self):
        if not self.is_rational:
            raise InvalidArgumentError("element is not rational")
        return self.coeffs[0]

    # -- real embedding -------------------------------------------------------

    def sign(self):
        """Sign of the element under the field's distinguished embedding."""
        if self.is_zero:
            return 0
        if self.is_rational:
            c = self.coeffs[0]
            return 1 if c > 0 else -1
        poly = qstrip(self.coeffs)
        root = self.field.root
        for _ in range(400):
            if root.is_exact:
                v = qeval(poly, root.lower)
                return 0 if v == 0 else (1 if v > 0 else -1)
            lo, hi = qeval_interval(poly, root.lower, root.upper)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            root = self.field._refine_root(root.width / 4)
        raise ArithmeticError("sign determination did not converge")

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return (self - other).sign() < 0

    def __le__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def isolating_interval(self, width):
        """Rational interval of at most the given width containing the value."""
        width = Fraction(width)
        poly = qstrip(self.coeffs)
        root = self.field.root
        while True:
            lo, hi = qeval_interval(poly, root.lower, root.upper)
            if hi - lo <= width:
                return lo, hi
            root = self.field._refine_root(root.width / 4)

    def __float__(self):
        lo, hi = self.isolating_interval(Fraction(1, 10**17))
        return float((lo + hi) / 2)

    # -- lifts ----------------------------------------------------------------

    def lift(self):
        """Canonical residue representative as Fraction tuple (ascending)."""
        return qstrip(self.coeffs)

    def integer_lift(self):
        """Canonical residue as IntPolynomial; requires integral coordinates."""
        if not self.is_integral_residue:
            raise InvalidArgumentError("element has non-integer coordinates")
        return IntPolynomial([int(c) for c in self.coeffs])

    def to_json(self):
        return [rational_to_str(c) for c in self.coeffs]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*a" if c != 1 else "a")
            else:
                terms.append(f"{c}*a^{i}" if c != 1 else f"a^{i}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Minimal polynomials and suborder coordinates
# ---------------------------------------------------------------------------


def _row_reduce(rows):
    """In-place Gaussian elimination over Q; returns pivot column list."""
    pivots = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def element_minimal_polynomial(elem):
    """Monic integer minimal polynomial of a number-ring element.

    Found as the first linear dependence among the powers 1, elem,
    elem^2, ... in the ambient power basis; no factorization is needed.
    Raises NonIntegralElementError (carrying the exact rational
    coefficients) when the element is not an algebraic integer.
    """
    field = elem.field
    d = field.degree
    powers = [field.one]
    for _ in range(d):
        powers.append(powers[-1] * elem)
    for k in range(1, d + 1):
        # Solve elem^k = sum_{j<k} c_j elem^j exactly.
        matrix = [[powers[j].coeffs[i] for j in range(k)] for i in range(d)]
        target = [powers[k].coeffs[i] for i in range(d)]
        sol = _solve_exact(matrix, target)
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            if all(c.denominator == 1 for c in coeffs):
                return IntPolynomial([int(c) for c in coeffs])
            raise NonIntegralElementError(
                "element is not an algebraic integer; minimal polynomial has "
                "non-integer coefficients",
                coeffs,
            )
    raise ArithmeticError("no linear dependence found; corrupt field data")


def _solve_exact(matrix, target):
    """Solve matrix * x = target over Q; None when inconsistent.

    The solution is unique whenever the columns are independent, which
    holds for power-basis and suborder-basis systems used here.
    """
    rows = [list(row) + [t] for row, t in zip(matrix, target)]
    n_unknowns = len(matrix[0]) if matrix else 0
    pivots = _row_reduce(rows)
    if n_unknowns in pivots:
        return None  # inconsistent: pivot in the augmented column
    sol = [Fraction(0)] * n_unknowns
    for r, c in enumerate(pivots):
        sol[c] = rows[r][-1]
    # verify (guards against underdetermined systems)
    for row, t in zip(matrix, target):
        if sum(a * x for a, x in zip(row, sol)) != t:
            return None
    return sol


def coordinates_in_power_basis(elem, alpha, degree):
    """Coordinates of elem in the basis 1, alpha, ..., alpha^(degree-1).

    Returns a tuple of Fractions, or None when elem lies outside the
    Q-span (i.e. outside Q(alpha) viewed inside the ambient field).
    """
    field = elem.field
    if alpha.field != field:
        raise MixedModulusError("alpha and element live in different fields")
    powers = [field.one]
    for _ in range(degree - 1):
        powers.append(powers[-1] * alpha)
    matrix = [[powers[j].coeffs[i] for j in range(degree)] for i in range(field.degree)]
    target = list(elem.coeffs)
    sol = _solve_exact(matrix, target)
    return None if sol is None else tuple(sol)


def in_order(elem, alpha, degree):
    """Exact membership test for the subring Z[alpha]."""
    coords = coordinates_in_power_basis(elem, alpha, degree)
    if coords is None:
        return False
    return all(c.denominator == 1 for c in coords)
