"""Flat-surface models built from bipartite intersection graphs.

The construction takes a pair of transverse multicurves encoded as a
bipartite graph (black = horizontal core curves, white = vertical ones,
entries of Q count intersections), solves the eigenvector system
Q h = mu h exactly in the number field of the dominant eigenvalue, and
produces a cylinder list in which every cylinder has inverse modulus mu
(circumference = mu * height).

Supported families are the path diagrams A(m) and the exceptional E7 /
E8 diagrams.  For even regular-polygon surfaces the order-2 rotation of
the path diagram is quotiented combinatorially on the cylinder list:
one cylinder is kept per swapped pair, the middle cylinder is kept as
is.  Cylinder counts, genus and the zero partition of each supported
family are fixed data, cross-checked against the rank of the quotient
intersection matrix.

Cylinder heights are stored twice: as exact number-field elements and
as the integer polynomial lifts in mu used by the staircase parity
check (the lifts are NOT reduced modulo the minimal polynomial, which
matters when the minimal polynomial is not an even polynomial).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    InapplicableModelError,
    InvalidArgumentError,
    MathematicalInconsistencyError,
    NoRealRootError,
    UnsupportedFamilyError,
    UnsupportedGraphError,
)
from .exact.finitefield import is_irreducible_mod_p, is_prime
from .exact.linalg import charpoly, rank
from .exact.numberfield import RealAlgebraicField, in_order
from .exact.polynomials import (
    IntPolynomial,
    cos_two_pi_minpoly,
    isolate_largest_real_root,
    squarefree_part,
)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


class BipartiteIntersectionGraph:
    """Intersection pattern of two filling multicurves.

    Rows index the black curves, columns the white curves; entry (i, j)
    counts intersection points.  The graph must be connected with no
    zero row or column (the pair fills the surface).
    """

    def __init__(self, intersections):
        q = tuple(tuple(int(x) for x in row) for row in intersections)
        if not q or not q[0]:
            raise InvalidArgumentError("intersection matrix must be nonempty")
        if any(len(row) != len(q[0]) for row in q):
            raise InvalidArgumentError("ragged intersection matrix")
        if any(x < 0 for row in q for x in row):
            raise InvalidArgumentError("intersection counts must be nonnegative")
        self.intersections = q
        self.black_count = len(q)
        self.white_count = len(q[0])
        if any(all(x == 0 for x in row) for row in q):
            raise InvalidArgumentError("a black curve meets no white curve")
        for j in range(self.white_count):
            if all(q[i][j] == 0 for i in range(self.black_count)):
                raise InvalidArgumentError("a white curve meets no black curve")
        if not self._connected():
            raise InvalidArgumentError("intersection graph is not connected")

    def _connected(self):
        n = self.black_count + self.white_count
        adj = self.adjacency_matrix()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in range(n):
                if adj[v][u] and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n

    def adjacency_matrix(self):
        """Full symmetric adjacency: blacks first, then whites."""
        b, w = self.black_count, self.white_count
        n = b + w
        adj = [[0] * n for _ in range(n)]
        for i in range(b):
            for j in range(w):
                adj[i][b + j] = adj[b + j][i] = self.intersections[i][j]
        return adj

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteIntersectionGraph)
            and self.intersections == other.intersections
        )

    def __repr__(self):
        return f"BipartiteIntersectionGraph({self.intersections})"

    def to_json(self):
        return [list(row) for row in self.intersections]


_E7_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4))
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _diagram_graph(n_vertices, edges):
    """Two-color a simply laced diagram; vertex 1 is black."""
    color = {1: 0}
    adj = {v: [] for v in range(1, n_vertices + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
    blacks = sorted(v for v in color if color[v] == 0)
    whites = sorted(v for v in color if color[v] == 1)
    q = [[0] * len(whites) for _ in blacks]
    for a, b in edges:
        if color[a] == 1:
            a, b = b, a
        q[blacks.index(a)][whites.index(b)] = 1
    graph = BipartiteIntersectionGraph(q)
    return graph, blacks, whites


def coxeter_graph(family, size=None):
    """Bipartite graph of a Coxeter diagram: 'A' with a size, or E7 / E8.

    For type A the vertices are the path 1..size; odd positions are
    black, even positions white (path order).  E7 and E8 use the
    standard Bourbaki numbering.
    """
    if family == "A":
        if size is None or size < 2:
            raise InvalidArgumentError("type A needs a path length >= 2")
        blacks = list(range(1, size + 1, 2))
        whites = list(range(2, size + 1, 2))
        q = [[0] * len(whites) for _ in blacks]
        for i, b in enumerate(blacks):
            for j, w in enumerate(whites):
                if abs(b - w) == 1:
                    q[i][j] = 1
        return BipartiteIntersectionGraph(q)
    if family == "E7":
        return _diagram_graph(7, _E7_EDGES)[0]
    if family == "E8":
        return _diagram_graph(8, _E8_EDGES)[0]
    raise UnsupportedFamilyError(f"unknown Coxeter family: {family!r}")


# ---------------------------------------------------------------------------
# Perron-Frobenius data
# ---------------------------------------------------------------------------

_COS_CANDIDATE_LIMIT = 200
_CERTIFY_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _minimal_polynomial_of_largest_root(cp):
    """Irreducible factor of cp whose largest real root is cp's largest.

    The factor basis is constructive: linear factors with small rational
    roots plus the minimal polynomials of 2cos(2*pi/N) (which exhaust
    the spectra of the simply laced diagrams and their affine cousins).
    A remainder that resists this basis is accepted whole when some
    prime certifies it irreducible; otherwise the graph is rejected.
    """
    sf = squarefree_part(cp)
    factors = []
    rest = sf
    # linear factors: integer roots of the (monic, squarefree) charpoly
    if not rest.is_zero and rest.coefficients[0] == 0:
        factors.append(IntPolynomial([0, 1]))  # squarefree: x divides once
        rest = rest.divmod_monic(IntPolynomial([0, 1]))[0]
    const = rest.coefficients[0] if not rest.is_zero else 0
    if abs(const) <= 10**6 and rest.degree >= 1:
        for r in sorted(_divisors(abs(const)) | {0}):
            for root in (r, -r):
                cand = IntPolynomial([-root, 1])
                while rest.degree >= 1 and rest.evaluate(root) == 0:
                    q = rest.try_exact_divide(cand)
                    if q is None:
                        break
                    factors.append(cand)
                    rest = q
    for n_index in range(3, _COS_CANDIDATE_LIMIT + 1):
        if rest.degree < 1:
            break
        cand = cos_two_pi_minpoly(n_index)
        if cand.degree > rest.degree:
            continue
        q = rest.try_exact_divide(cand)
        if q is not None:
            factors.append(cand)
            rest = q
    if rest.degree >= 1:
        if any(
            rest.leading_coefficient % p != 0 and is_irreducible_mod_p(rest, p)
            for p in _CERTIFY_PRIMES
        ):
            factors.append(rest.primitive_part())
        else:
            raise UnsupportedGraphError(
                "cannot certify the minimal polynomial of the dominant eigenvalue"
            )
    # pick the factor owning the globally largest real root
    best = None
    for f in factors:
        try:
            iv = isolate_largest_real_root(f, Fraction(1, 2**20))
        except NoRealRootError:
            continue
        if best is None:
            best = (f, iv)
            continue
        bf, biv = best
        while not (iv.lower > biv.upper or biv.lower > iv.upper):
            iv = iv.refine(iv.width / 4) if not iv.is_exact else iv
            biv = biv.refine(biv.width / 4) if not biv.is_exact else biv
            if iv.is_exact and biv.is_exact:
                break
        if iv.lower > biv.upper or (iv.is_exact and biv.is_exact and iv.lower > biv.lower):
            best = (f, iv)
    if best is None:
        raise UnsupportedGraphError("adjacency matrix has no real eigenvalue")
    return best


def _divisors(n):
    if n == 0:
        return set()
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def perron_frobenius(graph):
    """Exact dominant eigendata of the full bipartite adjacency matrix.

    Returns (mu, heights): mu is the largest real eigenvalue as an
    element of the field defined by its own minimal polynomial, heights
    is the positive eigenvector normalized to first entry 1, and the
    identity adjacency * heights = mu * heights is verified exactly.
    """
    adj = graph.adjacency_matrix()
    cp = charpoly(adj)
    minpoly, interval = _minimal_polynomial_of_largest_root(cp)
    fld = RealAlgebraicField(minpoly, interval.refine(Fraction(1, 2**30)))
    mu = fld.generator
    heights = _solve_eigenvector(adj, fld, mu)
    # normalize first entry to 1
    heights = tuple(h / heights[0] for h in heights)
    _verify_eigenvector(adj, mu, heights)
    for h in heights:
        if h.sign() <= 0:
            raise MathematicalInconsistencyError("eigenvector is not strictly positive")
    return mu, heights


def _solve_eigenvector(adj, fld, mu):
    n = len(adj)
    heights = [None] * n
    heights[0] = fld.one
    # Propagate: a vertex equation with exactly one unknown pins it down.
    # This resolves any tree in <= n rounds.
    for _ in range(n):
        progress = False
        for v in range(n):
            nbrs = [u for u in range(n) if adj[v][u]]
            unknown = [u for u in nbrs if heights[u] is None]
            if heights[v] is not None and len(unknown) == 1:
                u = unknown[0]
                acc = mu * heights[v]
                for w in nbrs:
                    if w != u:
                        acc = acc - adj[v][w] * heights[w]
                if adj[v][u] != 1:
                    acc = acc / fld.from_rational(adj[v][u])
                heights[u] = acc
                progress = True
            elif heights[v] is None and not unknown:
                acc = fld.zero
                for w in nbrs:
                    acc = acc + adj[v][w] * heights[w]
                heights[v] = acc / mu
                progress = True
        if all(h is not None for h in heights):
            return tuple(heights)
        if not progress:
            break
    return _solve_eigenvector_dense(adj, fld, mu)


def _solve_eigenvector_dense(adj, fld, mu):
    """Gaussian elimination for (A - mu I) h = 0 with h[0] = 1."""
    n = len(adj)
    rows = []
    for v in range(n):
        row = [fld.from_rational(adj[v][u]) for u in range(n)]
        row[v] = row[v] - mu
        rows.append(row)
    # substitute h[0] = 1: move column 0 to the right-hand side
    rhs = [(-rows[v][0]) for v in range(n)]
    mat = [row[1:] for row in rows]
    sol = _field_solve(mat, rhs, fld)
    if sol is None:
        raise UnsupportedGraphError("eigenvector system is degenerate")
    return tuple([fld.one] + sol)


def _field_solve(mat, rhs, fld):
    rows = [list(r) + [b] for r, b in zip(mat, rhs)]
    n_unknowns = len(mat[0]) if mat else 0
    r = 0
    pivots = []
    for c in range(n_unknowns):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < n_unknowns:
        return None
    sol = [fld.zero] * n_unknowns
    for row_i, c in enumerate(pivots):
        sol[c] = rows[row_i][-1]
    for row, b in zip(mat, rhs):
        acc = fld.zero
        for a, x in zip(row, sol):
            acc = acc + a * x
        if acc != b:
            return None
    return sol


def _verify_eigenvector(adj, mu, heights):
    n = len(adj)
    for v in range(n):
        acc = mu.field.zero
        for u in range(n):
            if adj[v][u]:
                acc = acc + adj[v][u] * heights[u]
        if acc != mu * heights[v]:
            raise MathematicalInconsistencyError("Q h = mu h fails exactly")


# ---------------------------------------------------------------------------
# Surface models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CylinderDatum:
    """One cylinder: direction, exact height/circumference, twist count.

    ``height_lift`` is the integer polynomial in mu representing the
    height in the staircase normalization, kept unreduced for the
    parity check.
    """

    name: str
    direction: str
    height: object
    circumference: object
    twist_count: int
    height_lift: IntPolynomial

    def to_json(self):
        return {
            "name": self.name,
            "direction": self.direction,
            "height": self.height.to_json(),
            "circumference": self.circumference.to_json(),
            "twist_count": self.twist_count,
            "height_lift": self.height_lift.to_json(),
        }


@dataclass(frozen=True)
class SurfaceModel:
    """Output of the construction for one family member."""

    family_tag: str
    graph: BipartiteIntersectionGraph
    construction_graph: BipartiteIntersectionGraph
    mu: object
    heights: tuple
    horizontal: tuple
    vertical: tuple
    genus: int
    zero_partition: tuple
    core_curves_cross_boundary_once: bool = True

    @property
    def cylinders(self):
        return self.horizontal + self.vertical

    def verify(self):
        """Exact Q h = mu h on the construction graph; partition sum."""
        adj = self.construction_graph.adjacency_matrix()
        mu, field_ = self.mu, self.mu.field
        full = _construction_heights(self)
        for v in range(len(adj)):
            acc = field_.zero
            for u in range(len(adj)):
                if adj[v][u]:
                    acc = acc + adj[v][u] * full[u]
            if acc != mu * full[v]:
                raise MathematicalInconsistencyError("Q h = mu h fails on the model")
        if sum(self.zero_partition) != 2 * self.genus - 2:
            raise MathematicalInconsistencyError("zero partition does not sum to 2g-2")
        for cyl in self.cylinders:
            if cyl.circumference != mu * cyl.height:
                raise MathematicalInconsistencyError("cylinder has inverse modulus != mu")
        return True

    def to_json(self):
        return {
            "family": self.family_tag,
            "graph": self.graph.to_json(),
            "mu_minimal_polynomial": self.mu.field.modulus.to_json(),
            "heights": [h.to_json() for h in self.heights],
            "horizontal": [c.to_json() for c in self.horizontal],
            "vertical": [c.to_json() for c in self.vertical],
            "genus": self.genus,
            "zero_partition": list(self.zero_partition),
            "core_curves_cross_boundary_once": self.core_curves_cross_boundary_once,
        }


def _construction_heights(model):
    """Heights indexed by construction-graph vertex, staircase scale."""
    tag = model.family_tag
    if tag.startswith("polygon-"):
        n = int(tag.split("-")[1])
        by_vertex = {}
        for cyl in model.cylinders:
            k = int(cyl.name.split("_")[1])
            by_vertex[k] = cyl.height
        if n % 2 == 0:
            for k in range(n // 2 + 1, n):
                by_vertex[k] = by_vertex[n - k]
        # construction graph vertex order: blacks (odd k) then whites (even k)
        order = list(range(1, n, 2)) + list(range(2, n, 2))
        return [by_vertex[k] for k in order]
    # E7/E8: adjacency rows are ordered blacks then whites
    n_vertices = 7 if tag == "E7" else 8
    edges = _E7_EDGES if tag == "E7" else _E8_EDGES
    _, blacks, whites = _diagram_graph(n_vertices, edges)
    by_vertex = {int(cyl.name.split("_")[1]): cyl.height for cyl in model.cylinders}
    return [by_vertex[v] for v in blacks + whites]


def _polygon_series(n):
    """Classify n as ('q', q), ('2q', q) or ('2^k', k); else reject."""
    if n % 2 == 1 and n > 3 and is_prime(n):
        return ("q", n)
    if n % 2 == 0 and (n // 2) > 3 and is_prime(n // 2):
        return ("2q", n // 2)
    if n >= 8 and n & (n - 1) == 0:
        return ("2^k", n.bit_length() - 1)
    raise UnsupportedFamilyError(
        f"regular {n}-gon is not in the supported series: n must be an odd prime q > 3, "
        f"twice such a prime, or a power of two >= 8"
    )


_CHEBYSHEV_CACHE = [IntPolynomial([1]), IntPolynomial([0, 1])]


def _chebyshev_like(k):
    """P_k with P_k(2cos t) = sin((k+1)t)/sin(t); parity of P_k = parity of k."""
    while len(_CHEBYSHEV_CACHE) <= k:
        _CHEBYSHEV_CACHE.append(
            IntPolynomial([0, 1]) * _CHEBYSHEV_CACHE[-1] - _CHEBYSHEV_CACHE[-2]
        )
    return _CHEBYSHEV_CACHE[k]


def _quotient_path_graph(size):
    """Intersection graph of the involution quotient of the A(size*2-1) path."""
    return coxeter_graph("A", size)


@lru_cache(maxsize=None)
def build_surface(family_tag):
    """Build the exact surface model for polygon-n, E7 or E8.

    Heights are normalized so the lowest horizontal cylinder has height
    mu (the staircase normalization); horizontal cylinders are the ones
    whose height lifts are odd polynomials in mu.
    """
    tag = family_tag.strip()
    if tag.lower().startswith("polygon-"):
        return _build_polygon(int(tag.split("-", 1)[1]))
    if tag.upper() in ("E7", "E8"):
        return _build_sporadic(tag.upper())
    raise UnsupportedFamilyError(f"unknown family tag: {family_tag!r}")


def _build_polygon(n):
    series, param = _polygon_series(n)
    construction = coxeter_graph("A", n - 1)
    mu, pf_heights = perron_frobenius(construction)
    fld = mu.field
    # vertex k (1-based along the path) has height P_{k-1}(mu);
    # construction-graph order is odd vertices then even vertices.
    order = list(range(1, n, 2)) + list(range(2, n, 2))
    by_vertex = {}
    for idx, k in enumerate(order):
        by_vertex[k] = pf_heights[idx]
        expected = fld.element(_chebyshev_like(k - 1).to_qpoly())
        if by_vertex[k] != expected:
            raise MathematicalInconsistencyError("path eigenvector is not Chebyshev")
    kept = range(1, n) if n % 2 == 1 else range(1, n // 2 + 1)
    cylinders = []
    for k in kept:
        lift = _chebyshev_like(k - 1)
        height = by_vertex[k]
        direction = HORIZONTAL if k % 2 == 0 else VERTICAL
        cylinders.append(
            CylinderDatum(
                name=f"c_{k}",
                direction=direction,
                height=height,
                circumference=mu * height,
                twist_count=1,
                height_lift=lift,
            )
        )
    horizontal = tuple(c for c in cylinders if c.direction == HORIZONTAL)
    vertical = tuple(c for c in cylinders if c.direction == VERTICAL)
    if series == "q":
        genus, partition = (param - 1) // 2, ((param - 3),) if param > 3 else ()
        graph = construction
    elif series == "2q":
        genus = (param - 1) // 2
        m = (param - 3) // 2
        partition = (m, m)
        graph = _quotient_path_graph(n // 2)
    else:
        k = param
        genus = 2 ** (k - 2)
        partition = (2 ** (k - 1) - 2,)
        graph = _quotient_path_graph(n // 2)
    model = SurfaceModel(
        family_tag=f"polygon-{n}",
        graph=graph,
        construction_graph=construction,
        mu=mu,
        heights=tuple(c.height for c in cylinders),
        horizontal=horizontal,
        vertical=vertical,
        genus=genus,
        zero_partition=partition,
    )
    _cross_check_genus(model)
    model.verify()
    return model


def _build_sporadic(which):
    n_vertices = 7 if which == "E7" else 8
    edges = _E7_EDGES if which == "E7" else _E8_EDGES
    graph, blacks, whites = _diagram_graph(n_vertices, edges)
    mu, pf_heights = perron_frobenius(graph)
    fld = mu.field
    order = blacks + whites
    by_vertex = {v: pf_heights[i] for i, v in enumerate(order)}
    scaled, lifts, horizontal_set = _staircase_normalize(mu, by_vertex, blacks, whites)
    cylinders = []
    for v in sorted(by_vertex):
        direction = HORIZONTAL if v in horizontal_set else VERTICAL
        cylinders.append(
            CylinderDatum(
                name=f"c_{v}",
                direction=direction,
                height=scaled[v],
                circumference=mu * scaled[v],
                twist_count=1,
                height_lift=lifts[v],
            )
        )
    horizontal = tuple(c for c in cylinders if c.direction == HORIZONTAL)
    vertical = tuple(c for c in cylinders if c.direction == VERTICAL)
    genus, partition = (3, (1, 3)) if which == "E7" else (4, (6,))
    model = SurfaceModel(
        family_tag=which,
        graph=graph,
        construction_graph=graph,
        mu=mu,
        heights=tuple(c.height for c in cylinders),
        horizontal=horizontal,
        vertical=vertical,
        genus=genus,
        zero_partition=partition,
    )
    _cross_check_genus(model)
    model.verify()
    return model


def _staircase_normalize(mu, by_vertex, blacks, whites):
    """Rescale so one class has odd integer lifts, the other even.

    Tries scalings mu / h over candidate lowest-horizontal cylinders;
    requires the minimal polynomial of mu to be an even polynomial so
    canonical residues are parity-faithful lifts.
    """
    if not mu.field.modulus.even_terms_only():
        raise InapplicableModelError("modulus is not even; no canonical parity lift")
    # smallest height first (exact comparisons), vertex index breaks ties
    candidates = sorted(by_vertex)
    candidates.sort(key=lambda v: _HeightKey(by_vertex[v]))
    for v0 in candidates:
        scale = mu / by_vertex[v0]
        scaled = {v: h * scale for v, h in by_vertex.items()}
        lifts = {}
        ok = True
        for v, h in scaled.items():
            if not h.is_integral_residue:
                ok = False
                break
            lifts[v] = h.integer_lift()
        if not ok:
            continue
        side_of_v0 = blacks if v0 in blacks else whites
        other = whites if v0 in blacks else blacks
        if all(lifts[v].odd_terms_only() for v in side_of_v0) and all(
            lifts[v].even_terms_only() for v in other
        ):
            return scaled, lifts, set(side_of_v0)
    raise MathematicalInconsistencyError("no staircase normalization found")


class _HeightKey:
    """Total order key for number-field elements via the real embedding."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return self.value < other.value

    def __eq__(self, other):
        return self.value == other.value


def _cross_check_genus(model):
    g = rank(model.graph.intersections)
    if g != model.genus:
        raise MathematicalInconsistencyError(
            f"family genus {model.genus} != rank of intersection matrix {g}"
        )


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------


def staircase_parity_check(model):
    """Horizontal height lifts are odd integer polynomials in mu and
    vertical lifts are even, in the normalization with the lowest
    horizontal height equal to mu.

    The check runs on the stored polynomial lifts, never on residues
    reduced modulo the minimal polynomial.
    """
    if not model.horizontal or not model.vertical:
        raise InapplicableModelError("model lacks a horizontal/vertical decomposition")
    for cyl in model.cylinders:
        if model.mu.field.element(cyl.height_lift.to_qpoly()) != cyl.height:
            raise InapplicableModelError(f"stored lift of {cyl.name} is not faithful")
    anchor = IntPolynomial([0, 1])
    if not any(c.height_lift == anchor for c in model.horizontal):
        return False
    return all(c.height_lift.odd_terms_only() for c in model.horizontal) and all(
        c.height_lift.even_terms_only() for c in model.vertical
    )


@dataclass(frozen=True)
class HolonomyBasis:
    """Distinguished basis (x*mu^2, 0), (0, y*mu) of the holonomy lattice."""

    horizontal_vector: object
    vertical_vector: object
    coordinates: tuple  # (cylinder name, coordinate tuple over Z[alpha])


@dataclass(frozen=True)
class HolonomySpanFailure:
    """Names the first core curve whose holonomy escapes the Z[alpha]-span."""

    offending_cylinder: str

    def __bool__(self):
        return False


def holonomy_basis_check(model):
    """Check core-curve holonomy lies in the rank-2 Z[mu^2]-lattice.

    Horizontal core curves have holonomy (mu*height, 0) and vertical
    ones (0, mu*height); membership in Z[alpha]*(mu^2, 0) + Z[alpha]*
    (0, y*mu) with alpha = mu^2 and y the lowest vertical height is
    decided exactly by solving for the coordinates over Z[alpha].
    """
    mu = model.mu
    alpha = mu * mu
    from .exact.numberfield import element_minimal_polynomial

    alpha_degree = element_minimal_polynomial(alpha).degree
    y = min(model.vertical, key=lambda c: _HeightKey(c.height)).height
    basis_h = alpha  # holonomy (mu^2, 0)
    basis_v = y * mu  # holonomy (0, y*mu)
    coords = []
    for cyl in model.horizontal:
        coordinate = cyl.circumference / basis_h
        if not in_order(coordinate, alpha, alpha_degree):
            return HolonomySpanFailure(cyl.name)
        coords.append((cyl.name, coordinate))
    for cyl in model.vertical:
        coordinate = cyl.circumference / basis_v
        if not in_order(coordinate, alpha, alpha_degree):
            return HolonomySpanFailure(cyl.name)
        coords.append((cyl.name, coordinate))
    return HolonomyBasis(
        horizontal_vector=(basis_h, mu.field.zero),
        vertical_vector=(mu.field.zero, basis_v),
        coordinates=tuple(coords),
    )


def cylinder_bound_check(model, zero_count):
    """Each direction has between g and g + s - 1 cylinders."""
    g, s = model.genus, zero_count
    return all(g <= len(side) <= g + s - 1 for side in (model.horizontal, model.vertical))


def core_curve_span_check(model):
    """Core curves span homology: the block skew intersection matrix
    [[0, Q], [-Q^T, 0]] has rank 2*genus."""
    q = model.graph.intersections
    b, w = len(q), len(q[0])
    n = b + w
    block = [[0] * n for _ in range(n)]
    for i in range(b):
        for j in range(w):
            block[i][b + j] = q[i][j]
            block[b + j][i] = -q[i][j]
    return rank(block) == 2 * model.genus
