"""Reflection-sphere string and loop tables, the excess-rank oracle, and phi."""

from fractions import Fraction

import pytest

from stringtop import (
    apply_coproduct,
    apply_product,
    basis_vector,
    check_associativity,
    check_frobenius,
    check_graded_commutativity,
    check_morphism,
    excess_rank,
    face_product_oracle,
    phi_map,
    sphere_loop_algebra,
    sphere_string_algebra,
)
from stringtop.sphere import face_label, loop_monomial_label, reflection_label

ONE = Fraction(1)


def faces_of(algebra):
    return [l for l in algebra.basis.labels() if l.startswith("F")]


def test_basis_count():
    for n in range(7):
        algebra = sphere_string_algebra(n)
        assert len(algebra.basis) == 2 * (2 ** (n + 1) - 1)


def test_transverse_faces_multiply_to_their_union():
    algebra = sphere_string_algebra(2)
    got = apply_product(
        algebra, basis_vector(algebra, "F{0}"), basis_vector(algebra, "F{1}")
    )
    assert got == basis_vector(algebra, "F{0,1}")


def test_full_union_is_empty_locus():
    algebra = sphere_string_algebra(1)
    got = apply_product(
        algebra, basis_vector(algebra, "F{0}"), basis_vector(algebra, "F{1}")
    )
    assert not got


def test_self_intersection_vanishes():
    algebra = sphere_string_algebra(2)
    face = basis_vector(algebra, "F{0}")
    assert not apply_product(algebra, face, face)


def test_unit_face_acts_on_everything():
    algebra = sphere_string_algebra(2)
    unit = basis_vector(algebra, "F{}")
    for label in algebra.basis.labels():
        vector = basis_vector(algebra, label)
        assert apply_product(algebra, unit, vector) == vector
        assert apply_product(algebra, vector, unit) == vector


def test_group_sector_products_vanish():
    algebra = sphere_string_algebra(1)
    g = basis_vector(algebra, "s{0}")
    h = basis_vector(algebra, "s{1}")
    face = basis_vector(algebra, "F{0}")
    assert not apply_product(algebra, g, h)
    assert not apply_product(algebra, g, face)


def test_string_coproduct_is_trivial():
    algebra = sphere_string_algebra(2)
    assert not algebra.coproduct
    assert not apply_coproduct(algebra, basis_vector(algebra, "F{0}"))


def test_minimal_case_n_zero():
    algebra = sphere_string_algebra(0)
    assert sorted(algebra.basis.labels()) == ["F{}", "s{0}"]
    s = basis_vector(algebra, "s{0}")
    assert not apply_product(algebra, s, s)


def test_degree_additivity_on_nonzero_products():
    for n in range(1, 5):
        algebra = sphere_string_algebra(n)
        for (left, right), element in algebra.product.items():
            for label in element.terms:
                assert (
                    algebra.basis.degree(left)
                    + algebra.basis.degree(right)
                    - algebra.shift
                    == algebra.basis.degree(label)
                )


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_axiom_suite(n):
    algebra = sphere_string_algebra(n)
    assert check_associativity(algebra).ok
    assert check_graded_commutativity(algebra).ok
    assert check_frobenius(algebra).ok


def test_excess_rank_examples():
    assert excess_rank(2, [0], [1]) == 0
    assert excess_rank(2, [0], [0]) == 2
    assert excess_rank(3, [0, 1], [1, 2]) == 2


def subsets(n):
    universe = list(range(n + 1))
    for mask in range(1 << (n + 1)):
        yield frozenset(i for i in universe if mask >> i & 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_agrees_with_stored_table(n):
    algebra = sphere_string_algebra(n)
    proper = [s for s in subsets(n) if len(s) <= n]
    for s in proper:
        for t in proper:
            expected = face_product_oracle(n, s, t)
            stored = algebra.product.get((face_label(s), face_label(t)))
            got = stored.terms if stored is not None else {}
            assert got == expected, (n, sorted(s), sorted(t))


def test_oracle_cases():
    assert face_product_oracle(2, [0], [1]) == {"F{0,1}": ONE}
    assert face_product_oracle(2, [0], [0, 1]) == {}
    assert face_product_oracle(1, [0], [1]) == {}


# ---------------------------------------------------------------------------
# the loop table


def test_loop_monomial_product():
    algebra = sphere_loop_algebra(1, 4)
    g = loop_monomial_label(1, 2, 1)
    h = loop_monomial_label(2, 1, 0)
    got = apply_product(algebra, basis_vector(algebra, g), basis_vector(algebra, h))
    assert got == basis_vector(algebra, loop_monomial_label(3, 3, 1))


def test_odd_generator_squares_to_zero():
    algebra = sphere_loop_algebra(1, 2)
    gv = basis_vector(algebra, loop_monomial_label(1, 0, 1))
    hv = basis_vector(algebra, loop_monomial_label(2, 0, 1))
    assert not apply_product(algebra, gv, hv)


def test_loop_unit():
    algebra = sphere_loop_algebra(1, 2)
    unit = algebra.unit
    for label in algebra.basis.labels():
        vector = basis_vector(algebra, label)
        assert apply_product(algebra, unit, vector) == vector


def test_truncation_is_flagged_not_raised():
    algebra = sphere_loop_algebra(1, 1)
    u = loop_monomial_label(0, 1, 0)
    assert (u, u) in algebra.overflow
    assert (u, u) not in algebra.product
    assert algebra.tags["u-truncation"] == "1"


def test_loop_axioms_up_to_truncation():
    algebra = sphere_loop_algebra(1, 2)
    assoc = check_associativity(algebra)
    comm = check_graded_commutativity(algebra)
    assert assoc.ok and assoc.skipped > 0
    assert comm.ok and comm.skipped > 0


def test_loop_table_accepts_a_caller_supplied_bv_operator():
    # no operator ships with the table; the slot is exercised through check_bv
    from stringtop import LinearMap, check_bv

    algebra = sphere_loop_algebra(1, 2)
    report = check_bv(algebra, LinearMap(algebra.basis, algebra.basis, {}))
    assert report.ok


# ---------------------------------------------------------------------------
# the comparison map


def test_phi_images():
    comparison = phi_map(2, 2)
    unit_col = comparison.columns[face_label(())]
    assert unit_col.terms == {loop_monomial_label(0, 0, 0): ONE}
    assert face_label((0,)) not in comparison.columns
    g = reflection_label(0b101)
    assert comparison.columns[g].terms == {loop_monomial_label(0b101, 0, 1): ONE}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_is_a_morphism(n):
    comparison = phi_map(n, 2)
    string_algebra = sphere_string_algebra(n)
    loop_algebra = sphere_loop_algebra(n, 2)
    report = check_morphism(comparison, string_algebra, loop_algebra)
    assert report.ok


def test_loop_needs_positive_n_and_truncation():
    with pytest.raises(ValueError):
        sphere_loop_algebra(0, 3)
    with pytest.raises(ValueError):
        sphere_loop_algebra(1, 0)
