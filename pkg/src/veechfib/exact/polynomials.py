"""Exact univariate polynomial arithmetic over Z and Q.

Integer polynomials are immutable ``IntPolynomial`` values holding a
tuple of arbitrary-precision coefficients in ascending degree; the zero
polynomial is the empty tuple.  Rational-coefficient work (Euclidean
division, gcds, Sturm chains) runs on plain tuples of ``Fraction``
through the ``q*`` helpers, mirroring the dense "dup" convention of the
usual computer-algebra codebases but at the small scale this package
needs.

The module also hosts the cyclotomic machinery: ``cyclotomic
polynomial``, the palindromic descent producing the minimal polynomial
of ``2*cos(2*pi/N)``, and ``minpoly_two_cos`` for ``2*cos(pi/n)``.  All
of it is exact integer arithmetic; no floating point enters anywhere.

Real roots are isolated with Sturm chains over ``Fraction`` and
returned as ``RootInterval`` values that can be refined to any rational
width.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from ..errors import InvalidArgumentError, NoRealRootError

# ---------------------------------------------------------------------------
# Fraction-tuple helpers (ascending degree, trailing zeros stripped)
# ---------------------------------------------------------------------------


def qstrip(coeffs):
    """Drop trailing zero coefficients."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def qadd(f, g):
    n = max(len(f), len(g))
    return qstrip([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def qneg(f):
    return tuple(-c for c in f)


def qsub(f, g):
    return qadd(f, qneg(g))


def qmul(f, g):
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return qstrip(out)


def qdivmod(f, g):
    """Euclidean division over Q; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    glead = Fraction(g[-1])
    while len(f) >= len(g) and qstrip(f):
        shift = len(f) - len(g)
        c = Fraction(f[-1]) / glead
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] -= c * b
        while f and f[-1] == 0:
            f.pop()
    return qstrip(q), qstrip(f)


def qeval(f, x):
    out = Fraction(0)
    for c in reversed(f):
        out = out * x + c
    return out


def qderivative(f):
    return qstrip([i * c for i, c in enumerate(f)][1:])


def qmonic(f):
    if not f:
        return f
    lead = f[-1]
    return tuple(Fraction(c, 1) / lead for c in f)


def qgcd(f, g):
    """Monic gcd over Q via the Euclidean algorithm."""
    f, g = qstrip(f), qstrip(g)
    while g:
        f, g = g, qdivmod(f, g)[1]
    return qmonic(f)


def qeval_interval(f, lo, hi):
    """Interval evaluation of f over [lo, hi] by Horner with interval ops.

    Returns (min, max) rational bounds of the enclosure; exact when the
    interval is a point.
    """
    alo = ahi = Fraction(0)
    for c in reversed(f):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------


class IntPolynomial:
    """Integer-coefficient polynomial, coefficients ascending by degree.

    Immutable; the zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coefficients])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divmod_monic(self, other):
        """Euclidean division by a monic divisor; stays in Z[x]."""
        if not other.is_monic:
            raise InvalidArgumentError("divisor must be monic for integer division")
        rem = list(self.coefficients)
        div = other.coefficients
        quo = [0] * max(len(rem) - len(div) + 1, 0)
        while len(rem) >= len(div):
            c = rem[-1]
            shift = len(rem) - len(div)
            quo[shift] = c
            for i, b in enumerate(div):
                rem[shift + i] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPolynomial(quo), IntPolynomial(rem)

    def try_exact_divide(self, other):
        """Return self / other in Z[x], or None when it does not divide."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = qdivmod(self.to_qpoly(), other.to_qpoly())
        if r:
            return None
        if any(c.denominator != 1 for c in q):
            return None
        return IntPolynomial([int(c) for c in q])

    def evaluate(self, x):
        out = 0 if isinstance(x, int) else Fraction(0)
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def content(self):
        from math import gcd

        g = 0
        for c in self.coefficients:
            g = gcd(g, abs(c))
        return g

    def primitive_part(self):
        """Content removed, leading coefficient made positive."""
        if self.is_zero:
            return self
        g = self.content()
        sign = 1 if self.leading_coefficient > 0 else -1
        return IntPolynomial([sign * c // g for c in self.coefficients])

    # -- parity -------------------------------------------------------------

    def odd_terms_only(self):
        return all(c == 0 for i, c in enumerate(self.coefficients) if i % 2 == 0)

    def even_terms_only(self):
        return all(c == 0 for i, c in enumerate(self.coefficients) if i % 2 == 1)

    # -- conversions --------------------------------------------------------

    def to_qpoly(self):
        return tuple(Fraction(c) for c in self.coefficients)

    @classmethod
    def from_qpoly(cls, coeffs):
        if any(Fraction(c).denominator != 1 for c in coeffs):
            raise InvalidArgumentError("coefficients are not integers")
        return cls([int(c) for c in coeffs])

    def to_json(self):
        """JSON form: array of decimal strings, ascending degree."""
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data):
        return cls([int(c) for c in data])

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            if i == 0:
                body = f"{abs(c)}"
            elif i == 1:
                body = "x" if abs(c) == 1 else f"{abs(c)}*x"
            else:
                body = f"x^{i}" if abs(c) == 1 else f"{abs(c)}*x^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self})"


_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*(x|y)?(?:\^(\d+))?")


def parse_polynomial(text):
    """Parse expressions like ``x^2 - x - 1`` into an IntPolynomial."""
    text = text.strip().replace("**", "^")
    if not text:
        raise InvalidArgumentError("empty polynomial string")
    coeffs = {}
    pos = 0
    seen = False
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidArgumentError(f"cannot parse polynomial near: {text[pos:]!r}")
        sign, digits, var, exp = m.groups()
        if digits is None and var is None:
            raise InvalidArgumentError(f"cannot parse polynomial near: {text[pos:]!r}")
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        k = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        seen = True
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not seen:
        raise InvalidArgumentError(f"cannot parse polynomial: {text!r}")
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPolynomial(out)


def rational_to_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text):
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


# ---------------------------------------------------------------------------
# gcd / squarefree over Z
# ---------------------------------------------------------------------------


def int_gcd_poly(f, g):
    """Primitive positive gcd of two integer polynomials."""
    h = qgcd(f.to_qpoly(), g.to_qpoly())
    if not h:
        return IntPolynomial()
    den = 1
    for c in h:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    return IntPolynomial([int(c * den) for c in h]).primitive_part()


def _gcd_int(a, b):
    from math import gcd

    return gcd(a, b)


def squarefree_part(f):
    """f with repeated roots stripped; primitive, positive leading term."""
    if f.is_zero or f.degree == 0:
        return f.primitive_part() if f.degree == 0 else f
    g = int_gcd_poly(f, f.derivative())
    if g.degree <= 0:
        return f.primitive_part()
    q, _ = qdivmod(f.to_qpoly(), g.to_qpoly())
    den = 1
    for c in q:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    return IntPolynomial([int(c * den) for c in q]).primitive_part()


# ---------------------------------------------------------------------------
# Sturm chains and root isolation
# ---------------------------------------------------------------------------


def sturm_chain(f):
    """Sturm chain of a squarefree rational polynomial (Fraction tuples)."""
    chain = [qstrip(f), qderivative(qstrip(f))]
    while chain[-1]:
        rem = qdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        # Positive rescaling keeps the sign structure and the numbers small.
        chain.append(qmonic(qneg(rem)) if rem[-1] < 0 else qneg(qmonic(rem)))
    return [c for c in chain if c]


def sign_variations(chain, x):
    signs = []
    for f in chain:
        v = qeval(f, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def count_roots_in(chain, lo, hi):
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_root_bound(f):
    """B with all real roots of f strictly inside [-B, B]."""
    coeffs = f.to_qpoly() if isinstance(f, IntPolynomial) else qstrip(f)
    lead = abs(coeffs[-1])
    return 1 + max((abs(c) for c in coeffs[:-1]), default=Fraction(0)) / lead


DEFAULT_ROOT_WIDTH = Fraction(1, 10**20)


class RootInterval:
    """Rational interval [lower, upper] isolating one real root of polynomial.

    ``refine(width)`` returns a narrower RootInterval for the same root;
    a collapsed interval (lower == upper) marks an exactly known rational
    root.
    """

    __slots__ = ("polynomial", "lower", "upper", "_squarefree", "_chain")

    def __init__(self, polynomial, lower, upper, _squarefree=None, _chain=None):
        self.polynomial = polynomial
        self.lower = Fraction(lower)
        self.upper = Fraction(upper)
        if self.lower > self.upper:
            raise InvalidArgumentError("interval endpoints out of order")
        self._squarefree = _squarefree
        self._chain = _chain

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def is_exact(self):
        return self.lower == self.upper

    def midpoint(self):
        return (self.lower + self.upper) / 2

    def _ensure_chain(self):
        if self._squarefree is None:
            self._squarefree = squarefree_part(self.polynomial).to_qpoly()
        if self._chain is None:
            self._chain = sturm_chain(self._squarefree)
        return self._squarefree, self._chain

    def refine(self, width):
        """Shrink the interval below the requested rational width."""
        width = Fraction(width)
        if width <= 0:
            raise InvalidArgumentError("width must be positive")
        if self.is_exact or self.width <= width:
            return self
        sf, chain = self._ensure_chain()
        lo, hi = self.lower, self.upper
        while hi - lo > width:
            mid = (lo + hi) / 2
            if qeval(sf, mid) == 0:
                lo = hi = mid
                break
            if count_roots_in(chain, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        return RootInterval(self.polynomial, lo, hi, sf, chain)

    def contains(self, x):
        return self.lower <= Fraction(x) <= self.upper

    def __repr__(self):
        return f"RootInterval([{self.lower}, {self.upper}], {self.polynomial})"

    def to_json(self):
        return {
            "lower": rational_to_str(self.lower),
            "upper": rational_to_str(self.upper),
            "polynomial": self.polynomial.to_json(),
        }


def isolate_largest_real_root(f, width=DEFAULT_ROOT_WIDTH):
    """Isolate the largest real root of f in a rational interval.

    Raises NoRealRootError when f has no real root.  The result interval
    contains exactly the largest root and has width at most ``width``
    (or is an exact rational point).
    """
    if isinstance(f, (tuple, list)):
        f = IntPolynomial(f)
    if f.is_zero:
        raise InvalidArgumentError("zero polynomial has no distinguished root")
    if f.degree == 0:
        raise NoRealRootError(f"{f} has no real root")
    sf_poly = squarefree_part(f)
    sf = sf_poly.to_qpoly()
    chain = sturm_chain(sf)
    bound = cauchy_root_bound(sf_poly)
    lo, hi = -bound, bound
    total = count_roots_in(chain, lo, hi)
    if total == 0:
        raise NoRealRootError(f"{f} has no real root")
    # Shrink from the left until exactly one root remains in (lo, hi].
    while count_roots_in(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if qeval(sf, mid) == 0:
            # mid is a root; the largest lies in [mid, hi].
            if count_roots_in(chain, mid, hi) == 0:
                return RootInterval(f, mid, mid, sf, chain)
            lo = mid
        elif count_roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return RootInterval(f, lo, hi, sf, chain).refine(width)


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and 2cos minimal polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial, exactly, by recursive division."""
    if n < 1:
        raise InvalidArgumentError("cyclotomic index must be >= 1")
    xn_minus_1 = IntPolynomial([-1] + [0] * (n - 1) + [1])
    result = xn_minus_1
    for d in range(1, n):
        if n % d == 0:
            q, r = result.divmod_monic(cyclotomic_polynomial(d))
            assert r.is_zero
            result = q
    return result


def _two_cos_power_polys(k):
    """V_j with x^j + x^-j = V_j(x + 1/x) for j = 0..k."""
    polys = [IntPolynomial([2]), IntPolynomial([0, 1])]
    while len(polys) <= k:
        polys.append(IntPolynomial([0, 1]) * polys[-1] - polys[-2])
    return polys


@lru_cache(maxsize=None)
def cos_two_pi_minpoly(n):
    """Minimal polynomial over Q of 2*cos(2*pi/n), monic in Z[x]."""
    if n < 1:
        raise InvalidArgumentError("index must be >= 1")
    if n == 1:
        return IntPolynomial([-2, 1])
    if n == 2:
        return IntPolynomial([2, 1])
    phi = cyclotomic_polynomial(n)
    k = phi.degree // 2
    vs = _two_cos_power_polys(k)
    c = phi.coefficients
    # Phi palindromic: Phi(x)/x^k = c[k] + sum_{j>=1} c[k+j] (x^j + x^-j).
    out = IntPolynomial([c[k]])
    for j in range(1, k + 1):
        out = out + c[k + j] * vs[j]
    assert out.is_monic and out.degree == k
    return out


def minpoly_two_cos(n):
    """Minimal polynomial of 2*cos(pi/n) for n >= 3; degree phi(2n)/2."""
    if not isinstance(n, int) or n < 3:
        raise InvalidArgumentError("minpoly_two_cos requires an integer n >= 3")
    return cos_two_pi_minpoly(2 * n)


def euler_phi(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out
