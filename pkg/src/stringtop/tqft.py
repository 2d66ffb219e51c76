"""Positive-boundary surface operations from a Frobenius datum.

A connected oriented surface with p inputs, q outputs and genus g acts as
the left-nested composite: iterated product, then g handles, then iterated
coproduct.  Closed invariants exist only when a calibrated unit and counit
are present and are flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    FrobeniusData,
    GradedElement,
    LinearMap,
    PreconditionError,
    apply_coproduct,
    apply_product,
    basis_vector,
    check_snake,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class SurfaceSignature:
    """Connected oriented surface classification data: p inputs, q outputs, genus."""

    inputs: int
    outputs: int
    genus: int

    def __post_init__(self):
        if self.inputs < 0 or self.outputs < 0 or self.genus < 0:
            raise ValueError("surface signature entries must be nonnegative")


class TensorPower:
    """Sparse element of a q-fold tensor power, keyed by label tuples."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        self.terms = {}
        if terms:
            for key, value in terms.items():
                value = Fraction(value)
                if value != 0:
                    key = tuple(key)
                    if len(key) != arity:
                        raise ValueError("tensor key %r does not have arity %d" % (key, arity))
                    self.terms[key] = value

    def __eq__(self, other):
        return (
            isinstance(other, TensorPower)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "TensorPower(arity=%d, %d terms)" % (self.arity, len(self.terms))


def handle_operator(algebra: FrobeniusData) -> LinearMap:
    """The handle map: product composed with coproduct, columnwise."""
    columns = {}
    for label in algebra.basis.labels():
        tensor = apply_coproduct(algebra, basis_vector(algebra, label))
        acc = algebra.zero()
        for (u, v), coeff in tensor.terms.items():
            acc = acc + coeff * apply_product(
                algebra, basis_vector(algebra, u), basis_vector(algebra, v)
            )
        columns[label] = acc
    return LinearMap(algebra.basis, algebra.basis, columns)


def _iterated_product(algebra, args):
    acc = args[0]
    for arg in args[1:]:
        acc = apply_product(algebra, acc, arg)
    return acc


def _apply_handles(algebra, element, genus):
    handle = handle_operator(algebra) if genus else None
    for _ in range(genus):
        element = handle.apply(element)
    return element


def _iterated_coproduct(algebra, element, outputs):
    state = {(label,): coeff for label, coeff in element.terms.items()}
    for _ in range(outputs - 1):
        nxt = {}
        for key, coeff in state.items():
            tensor = algebra.coproduct.get(key[0])
            if tensor is None:
                continue
            for (u, v), c in tensor.terms.items():
                new_key = (u, v) + key[1:]
                nxt[new_key] = nxt.get(new_key, ZERO) + coeff * c
        state = nxt
    return TensorPower(outputs, state)


def surface_operation(algebra: FrobeniusData, sig: SurfaceSignature, args) -> TensorPower:
    """Evaluate the (p, q, g) surface operation on p elements.

    Left-nested bracketing throughout; the checked associativity and
    coassociativity make the result independent of that choice.  A closed
    signature (q = 0) needs p = 0 and routes to the closed invariant.
    """
    args = list(args)
    if len(args) != sig.inputs:
        raise PreconditionError(
            "expected %d input elements, got %d" % (sig.inputs, len(args))
        )
    for arg in args:
        if not isinstance(arg, GradedElement) or arg.basis != algebra.basis:
            raise PreconditionError("surface inputs must be elements over the algebra basis")
    if sig.outputs == 0:
        if sig.inputs != 0:
            raise PreconditionError(
                "closed evaluation needs no inputs; a surface with inputs must keep an output"
            )
        value = closed_invariant(algebra, sig.genus)
        return TensorPower(0, {(): value})
    if sig.inputs == 0:
        if algebra.unit is None:
            raise PreconditionError("a surface with no inputs needs a unit")
        start = algebra.unit
    else:
        start = _iterated_product(algebra, args)
    start = _apply_handles(algebra, start, sig.genus)
    return _iterated_coproduct(algebra, start, sig.outputs)


def closed_invariant(algebra: FrobeniusData, genus: int) -> Fraction:
    """counit(handle^genus(unit)); requires the counit to pass the snake check."""
    if genus < 1:
        raise PreconditionError("closed invariants are defined for genus at least 1")
    if algebra.unit is None or algebra.counit is None:
        raise PreconditionError("closed invariants need both a unit and a counit")
    if not check_snake(algebra).ok:
        raise PreconditionError("counit is not snake-calibrated")
    element = _apply_handles(algebra, algebra.unit, genus)
    return algebra.counit_value(element)
