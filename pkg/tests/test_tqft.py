"""Surface operations, handle operator, and closed invariants."""

from fractions import Fraction

import pytest

from stringtop import (
    FrobeniusData,
    GradedBasis,
    GradedElement,
    PreconditionError,
    SurfaceSignature,
    TensorPower,
    apply_product,
    basis_vector,
    builtin_group,
    builtin_group_names,
    closed_invariant,
    commuting_tuple_count,
    conjugacy_classes,
    dw_algebra,
    handle_operator,
    surface_operation,
)

ONE = Fraction(1)


@pytest.fixture
def dw2():
    return dw_algebra(builtin_group("Z/2"))


def test_handle_on_z2_doubles_every_class(dw2):
    handle = handle_operator(dw2)
    for label in dw2.basis.labels():
        assert handle.apply(basis_vector(dw2, label)) == Fraction(2) * basis_vector(
            dw2, label
        )


def test_handle_vanishes_without_coproduct():
    basis = GradedBasis([("a", 0)])
    table = FrobeniusData(
        basis, 0, {("a", "a"): GradedElement(basis, {"a": ONE})}, {}
    )
    handle = handle_operator(table)
    assert not handle.columns


def test_handle_is_identity_on_ground_field(one_dim):
    handle = handle_operator(one_dim)
    for label in one_dim.basis.labels():
        assert handle.apply(basis_vector(one_dim, label)) == basis_vector(one_dim, label)


def test_pair_of_pants_is_the_product(dw2):
    sig = SurfaceSignature(2, 1, 0)
    x = basis_vector(dw2, "[1]")
    y = basis_vector(dw2, "[1]")
    result = surface_operation(dw2, sig, [x, y])
    expected = apply_product(dw2, x, y)
    assert result == TensorPower(1, {(l,): c for l, c in expected.terms.items()})


def test_one_handle_cylinder(dw2):
    result = surface_operation(dw2, SurfaceSignature(1, 1, 1), [basis_vector(dw2, "[1]")])
    assert result == TensorPower(1, {("[1]",): Fraction(2)})


def test_splitting_cylinder_gives_the_coproduct(dw2):
    result = surface_operation(dw2, SurfaceSignature(1, 2, 0), [basis_vector(dw2, "[0]")])
    assert result == TensorPower(2, {("[0]", "[0]"): ONE, ("[1]", "[1]"): ONE})


def test_no_input_surface_starts_from_the_unit(dw2):
    result = surface_operation(dw2, SurfaceSignature(0, 1, 0), [])
    assert result == TensorPower(1, {("[0]",): ONE})


def test_no_input_requires_unit():
    basis = GradedBasis([("a", 0)])
    table = FrobeniusData(basis, 0, {}, {})
    with pytest.raises(PreconditionError):
        surface_operation(table, SurfaceSignature(0, 1, 0), [])


def test_closed_signature_routes_to_closed_invariant(dw2):
    result = surface_operation(dw2, SurfaceSignature(0, 0, 1), [])
    assert result == TensorPower(0, {(): Fraction(2)})


def test_closed_signature_with_inputs_is_rejected(dw2):
    with pytest.raises(PreconditionError):
        surface_operation(dw2, SurfaceSignature(1, 0, 0), [basis_vector(dw2, "[0]")])


def test_genus_additivity():
    from conftest import one_dimensional_algebra
    from stringtop import sphere_string_algebra

    algebras = [
        dw_algebra(builtin_group("S3")),
        dw_algebra(builtin_group("Q8")),
        sphere_string_algebra(1),
        one_dimensional_algebra(),
    ]
    for algebra in algebras:
        labels = algebra.basis.labels()
        for g1 in (0, 1, 2):
            for g2 in (0, 1):
                for a in labels:
                    for b in labels:
                        args = [basis_vector(algebra, a), basis_vector(algebra, b)]
                        two_step_inner = surface_operation(
                            algebra, SurfaceSignature(2, 1, g1), args
                        )
                        element = algebra.zero()
                        for (label,), coeff in two_step_inner.terms.items():
                            element = element + coeff * basis_vector(algebra, label)
                        two_step = surface_operation(
                            algebra, SurfaceSignature(1, 1, g2), [element]
                        )
                        direct = surface_operation(
                            algebra, SurfaceSignature(2, 1, g1 + g2), args
                        )
                        assert two_step == direct


def test_pants_glue_associatively(dw2):
    labels = dw2.basis.labels()
    for a in labels:
        for b in labels:
            for c in labels:
                ea, eb, ec = (basis_vector(dw2, l) for l in (a, b, c))
                left_first = apply_product(dw2, apply_product(dw2, ea, eb), ec)
                right_first = apply_product(dw2, ea, apply_product(dw2, eb, ec))
                direct = surface_operation(dw2, SurfaceSignature(3, 1, 0), [ea, eb, ec])
                as_power = TensorPower(1, {(l,): c2 for l, c2 in left_first.terms.items()})
                assert direct == as_power
                assert left_first == right_first


def test_closed_invariant_counts_classes():
    for name in ("Z/2", "S3", "S4", "Q8"):
        group = builtin_group(name)
        algebra = dw_algebra(group)
        classes = len(conjugacy_classes(group))
        assert closed_invariant(algebra, 1) == classes
        assert closed_invariant(algebra, 1) == commuting_tuple_count(group, 1)


def test_closed_invariant_equals_basis_size_whenever_snake_holds():
    for name in builtin_group_names():
        algebra = dw_algebra(builtin_group(name))
        assert closed_invariant(algebra, 1) == len(algebra.basis)


def test_one_dimensional_invariant_is_one(one_dim):
    for genus in (1, 2, 3):
        assert closed_invariant(one_dim, genus) == 1


def test_closed_invariant_requires_counit():
    basis = GradedBasis([("a", 0)])
    table = FrobeniusData(basis, 0, {}, {})
    with pytest.raises(PreconditionError):
        closed_invariant(table, 1)


def test_closed_invariant_requires_positive_genus(one_dim):
    with pytest.raises(PreconditionError):
        closed_invariant(one_dim, 0)


def test_bad_signature_rejected():
    with pytest.raises(ValueError):
        SurfaceSignature(-1, 1, 0)
