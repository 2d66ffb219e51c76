"""Element arithmetic and every axiom checker, on passing and failing tables."""

from fractions import Fraction

import pytest

from stringtop import (
    BasisMismatch,
    FrobeniusData,
    GradedBasis,
    GradedElement,
    LinearMap,
    PreconditionError,
    TensorElement,
    UnsupportedStructure,
    apply_coproduct,
    apply_product,
    basis_vector,
    builtin_group,
    check_associativity,
    check_bv,
    check_coassociativity,
    check_cocommutativity,
    check_cocycle,
    check_frobenius,
    check_graded_commutativity,
    check_morphism,
    check_snake,
    dw_algebra,
    linear_combine,
    twist_product,
)

from conftest import circle_loop_algebra

ONE = Fraction(1)
HALF = Fraction(1, 2)


@pytest.fixture
def dw2():
    return dw_algebra(builtin_group("Z/2"))


@pytest.fixture
def dw3():
    return dw_algebra(builtin_group("Z/3"))


def test_linear_combine_additive_inverse():
    basis = GradedBasis([("x", 0), ("y", 0)])
    x = GradedElement(basis, {"x": ONE})
    assert linear_combine([(ONE, x), (Fraction(-1), x)]) == GradedElement(basis)


def test_linear_combine_rational_arithmetic():
    basis = GradedBasis([("x", 0)])
    x = GradedElement(basis, {"x": ONE})
    assert linear_combine([(HALF, x), (HALF, x)]) == x


def test_linear_combine_cancellation():
    basis = GradedBasis([("x", 0), ("y", 0)])
    xy = GradedElement(basis, {"x": ONE, "y": ONE})
    y = GradedElement(basis, {"y": ONE})
    got = linear_combine([(Fraction(2), xy), (Fraction(-2), y)])
    assert got == GradedElement(basis, {"x": Fraction(2)})


def test_linear_combine_rejects_mixed_bases():
    a = GradedElement(GradedBasis([("x", 0)]), {"x": ONE})
    b = GradedElement(GradedBasis([("y", 0)]), {"y": ONE})
    with pytest.raises(BasisMismatch):
        linear_combine([(ONE, a), (ONE, b)])


def test_apply_product_convolution(dw2):
    a = basis_vector(dw2, "[1]")
    assert apply_product(dw2, a, a) == basis_vector(dw2, "[0]")


def test_apply_product_bilinearity_on_zero(dw2):
    zero = dw2.zero()
    y = basis_vector(dw2, "[1]")
    assert apply_product(dw2, zero, y) == zero


def test_apply_coproduct_identity_class(dw2):
    got = apply_coproduct(dw2, basis_vector(dw2, "[0]"))
    assert got == TensorElement(dw2.basis, {("[0]", "[0]"): ONE, ("[1]", "[1]"): ONE})


def test_apply_coproduct_twisted_class(dw2):
    got = apply_coproduct(dw2, basis_vector(dw2, "[1]"))
    assert got == TensorElement(dw2.basis, {("[0]", "[1]"): ONE, ("[1]", "[0]"): ONE})


def test_apply_coproduct_linear(dw2):
    assert apply_coproduct(dw2, dw2.zero()) == TensorElement(dw2.basis)


def test_degree_homogeneity_enforced_at_construction():
    basis = GradedBasis([("a", 0), ("b", 1)])
    bad = {("a", "a"): GradedElement(basis, {"b": ONE})}
    with pytest.raises(ValueError, match="degree homogeneous"):
        FrobeniusData(basis, 0, bad, {})


def test_associativity_failure_names_triple():
    basis = GradedBasis([("a", 0), ("b", 0)])
    product = {
        ("a", "a"): GradedElement(basis, {"b": ONE}),
        ("a", "b"): GradedElement(basis, {"a": ONE}),
    }
    table = FrobeniusData(basis, 0, product, {})
    report = check_associativity(table)
    assert not report.ok
    assert report.violations[0].site == ("a", "a", "a")


def test_graded_commutativity_catches_odd_sign():
    # two odd shifted-degree generators with a symmetric nonzero product
    basis = GradedBasis([("u", 1), ("v", 1), ("w", 2)])
    w = GradedElement(basis, {"w": ONE})
    table = FrobeniusData(basis, 0, {("u", "v"): w, ("v", "u"): w}, {})
    report = check_graded_commutativity(table)
    assert not report.ok
    assert ("u", "v") in [v.site for v in report.violations]


def test_coproduct_checks_pass_on_enumerated_cyclic_group(dw3):
    assert check_coassociativity(dw3).ok
    assert check_cocommutativity(dw3).ok


def test_zero_coproduct_passes_both_coproduct_checks():
    basis = GradedBasis([("a", 0)])
    table = FrobeniusData(basis, 0, {}, {})
    assert check_coassociativity(table).ok
    assert check_cocommutativity(table).ok
    assert check_frobenius(table).ok


def test_cocommutativity_failure_on_asymmetric_tensor():
    basis = GradedBasis([("a", 0), ("b", 0)])
    table = FrobeniusData(
        basis, 0, {}, {"a": TensorElement(basis, {("a", "b"): ONE})}
    )
    report = check_cocommutativity(table)
    assert not report.ok


def test_frobenius_passes_on_convolution_table(dw2):
    assert check_frobenius(dw2).ok


def test_frobenius_detects_scaled_coproduct(dw2):
    doubled = dict(dw2.coproduct)
    doubled["[1]"] = Fraction(2) * dw2.coproduct["[1]"]
    broken = FrobeniusData(
        dw2.basis, 0, dw2.product, doubled, unit=dw2.unit, counit=dw2.counit
    )
    report = check_frobenius(broken)
    assert not report.ok
    assert ("[1]", "[0]") in [v.site for v in report.violations]


def test_snake_passes_with_identity_counit(dw2):
    assert check_snake(dw2).ok


def test_snake_fails_with_doubled_counit(dw2):
    scaled = FrobeniusData(
        dw2.basis, 0, dw2.product, dw2.coproduct, unit=dw2.unit,
        counit={"[0]": Fraction(2)},
    )
    assert not check_snake(scaled).ok


def test_snake_requires_unit_and_counit():
    basis = GradedBasis([("a", 0)])
    table = FrobeniusData(basis, 0, {}, {})
    with pytest.raises(PreconditionError):
        check_snake(table)


def test_snake_on_ground_field(one_dim):
    assert check_snake(one_dim).ok


def test_bv_zero_operator_passes(dw2):
    report = check_bv(dw2, LinearMap(dw2.basis, dw2.basis, {}))
    assert report.ok


def test_bv_circle_loop_fixture_passes():
    algebra, rotation = circle_loop_algebra(3)
    report = check_bv(algebra, rotation)
    assert report.ok
    assert report.skipped > 0  # window edges are excluded, not silently wrong
    assert report.cases > 0


def test_bv_detects_nonzero_square():
    basis = GradedBasis([("x", 0), ("y", 1), ("z", 2)])
    operator = LinearMap(
        basis,
        basis,
        {
            "x": GradedElement(basis, {"y": ONE}),
            "y": GradedElement(basis, {"z": ONE}),
        },
    )
    table = FrobeniusData(basis, 0, {}, {})
    report = check_bv(table, operator)
    assert not report.ok
    assert any(v.site == ("x",) for v in report.violations)


def test_bv_degree_precondition():
    basis = GradedBasis([("x", 0), ("z", 2)])
    operator = LinearMap(basis, basis, {"x": GradedElement(basis, {"z": ONE})})
    table = FrobeniusData(basis, 0, {}, {})
    with pytest.raises(PreconditionError):
        check_bv(table, operator)


def test_cocycle_trivial_weight_passes(dw3):
    report = check_cocycle(dw3, {})
    assert report.ok and report.cases > 0


def test_cocycle_bilinear_weight_on_klein_four():
    algebra = dw_algebra(builtin_group("Z2xZ2"))
    weight = {}
    for left in algebra.basis.labels():
        for right in algebra.basis.labels():
            weight[(left, right)] = Fraction(-1) ** (int(left[2]) * int(right[1]))
    assert check_cocycle(algebra, weight).ok


def test_cocycle_rejects_unbalanced_weight(dw2):
    weight = {("[0]", "[1]"): Fraction(2)}
    report = check_cocycle(dw2, weight)
    assert not report.ok
    assert report.violations[0].site == ("[0]", "[0]", "[1]")


def test_cocycle_requires_monomial_products():
    algebra = dw_algebra(builtin_group("S3"))
    with pytest.raises(UnsupportedStructure):
        check_cocycle(algebra, {})


def test_twist_by_one_is_identity(dw3):
    assert twist_product(dw3, {}) == dw3


def test_twist_by_bilinear_cocycle_stays_associative():
    algebra = dw_algebra(builtin_group("Z2xZ2"))
    weight = {}
    for left in algebra.basis.labels():
        for right in algebra.basis.labels():
            weight[(left, right)] = Fraction(-1) ** (int(left[2]) * int(right[1]))
    twisted = twist_product(algebra, weight)
    assert check_associativity(twisted).ok


def test_twist_by_flip_symmetric_weight_preserves_commutativity():
    algebra = dw_algebra(builtin_group("Z2xZ2"))
    weight = {}
    for left in algebra.basis.labels():
        for right in algebra.basis.labels():
            power = int(left[2]) * int(right[1]) + int(left[1]) * int(right[2])
            weight[(left, right)] = Fraction(-1) ** power
    assert all(weight[(a, b)] == weight[(b, a)] for (a, b) in weight)
    assert check_cocycle(algebra, weight).ok
    twisted = twist_product(algebra, weight)
    assert check_graded_commutativity(twisted).ok
    assert check_associativity(twisted).ok


def test_twist_by_zero_gives_vacuously_associative_table(dw2):
    twisted = twist_product(dw2, lambda a, b: Fraction(0))
    assert not twisted.product
    assert check_associativity(twisted).ok


def test_morphism_identity_passes(dw3):
    assert check_morphism(LinearMap.identity(dw3.basis), dw3, dw3).ok


def test_morphism_detects_bad_scaling(dw2):
    f = LinearMap(
        dw2.basis,
        dw2.basis,
        {
            "[0]": basis_vector(dw2, "[0]"),
            "[1]": Fraction(2) * basis_vector(dw2, "[1]"),
        },
    )
    report = check_morphism(f, dw2, dw2)
    assert not report.ok
    assert ("[1]", "[1]") in [v.site for v in report.violations]


def test_reports_are_deterministic(dw3):
    first = check_frobenius(dw3)
    second = check_frobenius(dw3)
    assert first.lines() == second.lines()


def test_linear_map_composition_is_associative():
    basis = GradedBasis([("a", 0), ("b", 0)])
    a = GradedElement(basis, {"a": ONE})
    b = GradedElement(basis, {"b": ONE})
    f = LinearMap(basis, basis, {"a": a + b, "b": b})
    g = LinearMap(basis, basis, {"a": b, "b": a})
    h = LinearMap(basis, basis, {"a": Fraction(2) * a})
    assert f.compose(g).compose(h) == f.compose(g.compose(h))
