"""Shared fixtures: independent oracles and hand-built algebra tables."""

from __future__ import annotations

from fractions import Fraction

import pytest

from stringtop import FrobeniusData, GradedBasis, GradedElement, LinearMap, TensorElement

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# group algebra convolution oracle, independent of the class-algebra path


def group_algebra_convolve(group, x, y):
    """Multiply two vectors in Q[G] given as index -> coefficient dicts."""
    out = {}
    for i, ci in x.items():
        for j, cj in y.items():
            k = group.op(i, j)
            out[k] = out.get(k, Fraction(0)) + ci * cj
    return {k: c for k, c in out.items() if c}


def class_sum_vector(group, orbit):
    return {i: ONE for i in orbit}


def class_sum_product_in_classes(group, partition, ci, cj):
    """Express the convolution of two class sums in the class-sum basis."""
    product = group_algebra_convolve(
        group,
        class_sum_vector(group, partition.classes[ci]),
        class_sum_vector(group, partition.classes[cj]),
    )
    coefficients = {}
    for ck, orbit in enumerate(partition.classes):
        values = {product.get(i, Fraction(0)) for i in orbit}
        assert len(values) == 1, "convolution of class sums is not class-constant"
        value = values.pop()
        if value:
            coefficients[ck] = value
    leftover = set(product) - {i for orbit in partition.classes for i in orbit}
    assert not leftover
    return coefficients


def abelian_coproduct_counts(group, g):
    """Direct enumeration of factorizations g = h k, for element-basis groups."""
    out = {}
    for h in range(len(group)):
        k = group.op(group.inv(h), g)
        out[(h, k)] = out.get((h, k), 0) + 1
    return out


# ---------------------------------------------------------------------------
# hand-built tables


def one_dimensional_algebra():
    basis = GradedBasis([("u", 0)])
    e = GradedElement(basis, {"u": ONE})
    return FrobeniusData(
        basis,
        0,
        {("u", "u"): e},
        {"u": TensorElement(basis, {("u", "u"): ONE})},
        unit=e,
        counit={"u": ONE},
    )


def circle_loop_algebra(bound):
    """Laurent monomials u^k (|k| <= bound) times an odd generator v, shift 1.

    Products beyond the exponent window are dropped and flagged so checkers
    skip them.
    """

    def label(k, eps):
        parts = []
        if k == 1:
            parts.append("u")
        elif k != 0:
            parts.append("u^%d" % k)
        if eps:
            parts.append("v")
        return "*".join(parts) if parts else "1"

    monomials = [(k, eps) for k in range(-bound, bound + 1) for eps in (0, 1)]
    basis = GradedBasis((label(k, eps), 1 - eps) for k, eps in monomials)
    product = {}
    overflow = set()
    for k1, e1 in monomials:
        for k2, e2 in monomials:
            if e1 and e2:
                continue
            k = k1 + k2
            if abs(k) > bound:
                overflow.add((label(k1, e1), label(k2, e2)))
                continue
            product[(label(k1, e1), label(k2, e2))] = GradedElement(
                basis, {label(k, e1 + e2): ONE}
            )
    unit = GradedElement(basis, {label(0, 0): ONE})
    algebra = FrobeniusData(basis, 1, product, {}, unit=unit, overflow=overflow)
    columns = {}
    for k, eps in monomials:
        if eps and k:
            columns[label(k, 1)] = GradedElement(basis, {label(k, 0): Fraction(k)})
    rotation = LinearMap(basis, basis, columns)
    return algebra, rotation


@pytest.fixture
def one_dim():
    return one_dimensional_algebra()
