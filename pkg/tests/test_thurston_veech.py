import pytest

from veechfib.errors import InvalidArgumentError, UnsupportedFamilyError
from veechfib.exact.linalg import charpoly, rank
from veechfib.exact.numberfield import RealAlgebraicField
from veechfib.exact.polynomials import IntPolynomial, minpoly_two_cos
from veechfib.thurston_veech import (
    HORIZONTAL,
    VERTICAL,
    BipartiteIntersectionGraph,
    CylinderDatum,
    HolonomyBasis,
    HolonomySpanFailure,
    SurfaceModel,
    build_surface,
    core_curve_span_check,
    coxeter_graph,
    cylinder_bound_check,
    holonomy_basis_check,
    perron_frobenius,
    staircase_parity_check,
)

SUPPORTED_N = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 10, 14, 22, 26, 34, 38, 8, 16, 32)


def test_coxeter_graph_examples():
    assert coxeter_graph("A", 2).intersections == ((1,),)
    assert coxeter_graph("A", 4).intersections == ((1, 0), (1, 1))
    e7 = coxeter_graph("E7")
    assert sorted((e7.black_count, e7.white_count)) == [3, 4]
    e8 = coxeter_graph("E8")
    assert (e8.black_count, e8.white_count) == (4, 4)
    with pytest.raises(UnsupportedFamilyError):
        coxeter_graph("F4")


def test_graph_validation():
    with pytest.raises(InvalidArgumentError):
        BipartiteIntersectionGraph(((1, 0), (0, 0)))  # zero row
    with pytest.raises(InvalidArgumentError):
        BipartiteIntersectionGraph(((1, 0), (0, 1)))  # disconnected
    with pytest.raises(InvalidArgumentError):
        BipartiteIntersectionGraph(((-1,),))


def test_perron_frobenius_path_two():
    mu, heights = perron_frobenius(coxeter_graph("A", 2))
    assert mu.field.modulus == IntPolynomial([-1, 1])
    assert mu == 1
    assert [h == mu.field.one for h in heights] == [True, True]


def test_perron_frobenius_path_four():
    mu, heights = perron_frobenius(coxeter_graph("A", 4))
    assert mu.field.modulus == IntPolynomial([-1, -1, 1])
    one = mu.field.one
    # construction order is blacks {1,3} then whites {2,4}: heights (1, mu, mu, 1)
    assert heights == (one, mu, mu, one)


def test_perron_frobenius_e7_eigenvalue():
    mu, _ = perron_frobenius(coxeter_graph("E7"))
    assert mu.field.modulus == minpoly_two_cos(18)


@pytest.mark.parametrize("n", range(3, 41))
def test_path_minimal_polynomial_matches_two_cos(n):
    mu, heights = perron_frobenius(coxeter_graph("A", n - 1))
    assert mu.field.modulus == minpoly_two_cos(n)
    assert all(h.sign() > 0 for h in heights)


def test_build_surface_polygon5():
    model = build_surface("polygon-5")
    assert model.genus == 2
    assert model.zero_partition == (2,)
    assert len(model.horizontal) == 2 and len(model.vertical) == 2


def test_build_surface_e8():
    model = build_surface("E8")
    assert model.genus == 4
    assert model.zero_partition == (6,)
    assert len(model.horizontal) == 4 and len(model.vertical) == 4


def test_build_surface_polygon8():
    model = build_surface("polygon-8")
    assert model.genus == 2
    assert model.zero_partition == (2,)
    assert len(model.horizontal) == 2 and len(model.vertical) == 2


def test_build_surface_polygon10_partition():
    model = build_surface("polygon-10")
    assert model.genus == 2
    assert model.zero_partition == (1, 1)
    assert {len(model.horizontal), len(model.vertical)} == {2, 3}


def test_build_surface_e7():
    model = build_surface("E7")
    assert model.genus == 3
    assert model.zero_partition == (1, 3)
    assert {len(model.horizontal), len(model.vertical)} == {3, 4}


@pytest.mark.parametrize("bad_n", [4, 6, 9, 12, 15, 18, 21])
def test_unsupported_polygon_rejected(bad_n):
    with pytest.raises(UnsupportedFamilyError):
        build_surface(f"polygon-{bad_n}")


def test_model_invariants_exact():
    for tag in ("polygon-5", "polygon-8", "polygon-10", "E7", "E8"):
        model = build_surface(tag)
        assert model.verify()
        mu = model.mu
        for cyl in model.cylinders:
            assert cyl.circumference == mu * cyl.height
        assert sum(model.zero_partition) == 2 * model.genus - 2
        assert rank(model.graph.intersections) == model.genus


@pytest.mark.parametrize("tag", [f"polygon-{n}" for n in SUPPORTED_N] + ["E7", "E8"])
def test_structural_checks_all_supported_families(tag):
    model = build_surface(tag)
    assert staircase_parity_check(model)
    assert isinstance(holonomy_basis_check(model), HolonomyBasis)
    assert cylinder_bound_check(model, len(model.zero_partition))
    assert core_curve_span_check(model)


def test_cylinder_bound_examples():
    m7 = build_surface("polygon-7")
    assert cylinder_bound_check(m7, 1)
    e7 = build_surface("E7")
    assert cylinder_bound_check(e7, 2)
    # synthetic model with g-1 cylinders on one side must fail
    broken = SurfaceModel(
        family_tag=m7.family_tag,
        graph=m7.graph,
        construction_graph=m7.construction_graph,
        mu=m7.mu,
        heights=m7.heights,
        horizontal=m7.horizontal[:-1],
        vertical=m7.vertical,
        genus=m7.genus,
        zero_partition=m7.zero_partition,
    )
    assert not cylinder_bound_check(broken, 1)


def _hand_built_model(vertical_heights):
    """Minimal hand-built model over Q(sqrt(3)) with prescribed verticals."""
    field = RealAlgebraicField(IntPolynomial([-3, 0, 1]))
    mu = field.generator
    graph = BipartiteIntersectionGraph(((1, 1),))
    horizontal = (
        CylinderDatum("c_h", HORIZONTAL, mu, mu * mu, 1, IntPolynomial([0, 1])),
    )
    vertical = tuple(
        CylinderDatum(
            f"c_v{i}",
            VERTICAL,
            field.from_rational(v),
            mu * field.from_rational(v),
            1,
            IntPolynomial([v]),
        )
        for i, v in enumerate(vertical_heights)
    )
    return SurfaceModel(
        family_tag="hand-built",
        graph=graph,
        construction_graph=graph,
        mu=mu,
        heights=tuple(c.height for c in horizontal + vertical),
        horizontal=horizontal,
        vertical=vertical,
        genus=1,
        zero_partition=(),
    )


def test_holonomy_failure_names_offending_curve():
    # alpha = mu^2 = 3, Z[alpha] = Z: vertical heights 2 and 3 are
    # incommensurable against the lattice spanned by the lowest one.
    model = _hand_built_model([2, 3])
    result = holonomy_basis_check(model)
    assert isinstance(result, HolonomySpanFailure)
    assert not result
    assert result.offending_cylinder == "c_v1"


def test_holonomy_passes_on_commensurable_hand_built_model():
    model = _hand_built_model([1, 2])
    result = holonomy_basis_check(model)
    assert isinstance(result, HolonomyBasis)
    assert result.horizontal_vector[0] == model.mu * model.mu


def test_holonomy_basis_vectors_for_polygon5():
    model = build_surface("polygon-5")
    basis = holonomy_basis_check(model)
    mu = model.mu
    assert basis.horizontal_vector == (mu * mu, mu.field.zero)
    assert basis.vertical_vector == (mu.field.zero, mu)
    assert len(basis.coordinates) == 4


def test_parity_check_uses_unreduced_lifts():
    # In the golden field the height mu^3 - 2mu reduces to 1; the lift
    # must stay odd for the parity statement to hold.
    model = build_surface("polygon-5")
    lifts = {c.name: c.height_lift for c in model.cylinders}
    assert lifts["c_4"] == IntPolynomial([0, -2, 0, 1])
    assert lifts["c_4"].odd_terms_only()
    heights = {c.name: c.height for c in model.cylinders}
    assert heights["c_4"] == model.mu.field.one


def test_charpoly_tree_vs_berkowitz():
    from veechfib.exact.linalg import _charpoly_berkowitz

    for size in (2, 3, 5, 8):
        adj = coxeter_graph("A", size).adjacency_matrix()
        assert charpoly(adj) == _charpoly_berkowitz(adj)


def _charpoly_permanent_oracle(matrix):
    # det(xI - M) by brute-force permutation expansion over Z[x]
    import itertools

    n = len(matrix)
    total = IntPolynomial([])
    x = IntPolynomial([0, 1])
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = IntPolynomial([sign])
        for i in range(n):
            entry = x - IntPolynomial([matrix[i][perm[i]]]) if i == perm[i] else IntPolynomial(
                [-matrix[i][perm[i]]]
            )
            term = term * entry
        total = total + term
    return total


def test_charpoly_against_permutation_expansion():
    import random

    rng = random.Random(11)
    for _ in range(12):
        n = rng.randrange(2, 6)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                w = rng.randrange(0, 3)
                m[i][j] = m[j][i] = w
        assert charpoly(m) == _charpoly_permanent_oracle(m), m


def test_path_heights_are_symmetric():
    for n in (5, 9, 12):
        _, heights = perron_frobenius(coxeter_graph("A", n))
        # adjacency order: odd vertices ascending, then even vertices
        order = list(range(1, n + 1, 2)) + list(range(2, n + 1, 2))
        by_vertex = {v: h for v, h in zip(order, heights)}
        for k in range(1, n + 1):
            assert by_vertex[k] == by_vertex[n + 1 - k]


def test_quotient_graph_rank_is_genus():
    model = build_surface("polygon-16")
    assert rank(model.graph.intersections) == model.genus == 4


def test_e7_heights_exact_values():
    # solving the diagram equations from the leaf with height 1 gives
    # (1, mu^2-2, mu^4-4mu^2+3, mu^3-2mu, mu^2-1, mu, mu^5-5mu^3+5mu) for
    # vertices 7..1; the model stores those rescaled by mu so the anchor
    # cylinder has height exactly mu, and the class containing it gets the
    # odd-parity (horizontal) label
    model = build_surface("E7")
    lifts = {c.name: c.height_lift for c in model.cylinders}
    assert lifts["c_7"] == IntPolynomial([0, 1])
    assert lifts["c_2"] == IntPolynomial([0, -2, 0, 1])
    assert lifts["c_5"] == IntPolynomial([0, -1, 0, 1])
    assert lifts["c_3"] == IntPolynomial([0, 3, 0, -4, 0, 1])
    assert lifts["c_6"] == IntPolynomial([0, 0, 1])
    assert lifts["c_4"] == IntPolynomial([0, 0, -2, 0, 1])
    # mu * (mu^5 - 5mu^3 + 5mu) reduces to mu^4 - 4mu^2 + 3 (even modulus)
    assert lifts["c_1"] == IntPolynomial([3, 0, -4, 0, 1])
    directions = {c.name: c.direction for c in model.cylinders}
    assert [directions[f"c_{v}"] for v in (2, 3, 5, 7)] == [HORIZONTAL] * 4
    assert [directions[f"c_{v}"] for v in (1, 4, 6)] == [VERTICAL] * 3


def test_alpha_minpoly_matches_cyclotomic_shift_oracle():
    # alpha = 4cos(pi/n)^2 = 2 + 2cos(2pi/n), so its minimal polynomial is
    # the minimal polynomial of 2cos(2pi/n) composed with x - 2: an
    # independent route to the same polynomial.
    from veechfib.exact.numberfield import element_minimal_polynomial
    from veechfib.exact.polynomials import cos_two_pi_minpoly

    def shift_by_minus_two(poly):
        out = IntPolynomial([poly.coefficients[-1]])
        x_minus_2 = IntPolynomial([-2, 1])
        for c in reversed(poly.coefficients[:-1]):
            out = out * x_minus_2 + IntPolynomial([c])
        return out

    for n in (5, 7, 8, 10, 11, 13, 14, 16, 18, 22, 26, 30, 32):
        if n in (18, 30):
            mu = build_surface("E7" if n == 18 else "E8").mu
        else:
            mu = build_surface(f"polygon-{n}").mu
        via_matrix = element_minimal_polynomial(mu * mu)
        via_cyclotomic = shift_by_minus_two(cos_two_pi_minpoly(n))
        assert via_matrix == via_cyclotomic, n
