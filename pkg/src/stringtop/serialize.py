"""Text format for algebra tables and tensor results.

Tab-separated lines, fixed field order, rationals written as "p/q" with the
denominator omitted when it is 1.  Writing is canonical: the same algebra
always produces byte-identical text.
"""

from __future__ import annotations

from fractions import Fraction

from .core import FrobeniusData, GradedBasis, GradedElement, TensorElement, as_scalar

HEADER = "frobenius-algebra v1"


class FormatError(ValueError):
    """Malformed algebra text; the message names the offending field."""


def format_scalar(value) -> str:
    return str(as_scalar(value))


def parse_scalar(token: str, where: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError("field %s: %r is not a rational p/q" % (where, token)) from None


def _element_fields(basis: GradedBasis, terms) -> list[str]:
    fields = []
    for label in sorted(terms, key=basis.index):
        fields.append(format_scalar(terms[label]))
        fields.append(label)
    return fields


def dumps_algebra(algebra: FrobeniusData) -> str:
    basis = algebra.basis
    lines = [HEADER, "shift\t%d" % algebra.shift]
    for key in sorted(algebra.tags):
        lines.append("tag\t%s\t%s" % (key, algebra.tags[key]))
    for label, degree in basis.entries:
        lines.append("basis\t%s\t%d" % (label, degree))
    if algebra.unit is not None:
        lines.append("\t".join(["unit"] + _element_fields(basis, algebra.unit.terms)))
    if algebra.counit is not None:
        fields = ["counit"]
        for label in sorted(algebra.counit, key=basis.index):
            fields.append(label)
            fields.append(format_scalar(algebra.counit[label]))
        lines.append("\t".join(fields))
    for left, right in sorted(algebra.product, key=lambda k: (basis.index(k[0]), basis.index(k[1]))):
        fields = ["product", left, right]
        fields += _element_fields(basis, algebra.product[(left, right)].terms)
        lines.append("\t".join(fields))
    for source in sorted(algebra.coproduct, key=basis.index):
        fields = ["coproduct", source]
        tensor = algebra.coproduct[source]
        for l, r in sorted(tensor.terms, key=lambda k: (basis.index(k[0]), basis.index(k[1]))):
            fields.append(format_scalar(tensor.terms[(l, r)]))
            fields.append(l)
            fields.append(r)
        lines.append("\t".join(fields))
    for left, right in sorted(algebra.overflow):
        lines.append("overflow\t%s\t%s" % (left, right))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_element_fields(fields, where):
    if len(fields) % 2 != 0:
        raise FormatError("field %s: term list must alternate coefficient and label" % where)
    terms = {}
    for pos in range(0, len(fields), 2):
        terms[fields[pos + 1]] = parse_scalar(fields[pos], where)
    return terms


def loads_algebra(text: str) -> FrobeniusData:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != HEADER:
        raise FormatError("field header: expected %r" % HEADER)
    if lines[-1] != "end":
        raise FormatError("field end: missing terminator line")
    shift = None
    tags = {}
    entries = []
    unit_terms = None
    counit = None
    product_rows = []
    seen_products = set()
    coproduct_rows = []
    seen_coproducts = set()
    overflow = []
    for line in lines[1:-1]:
        fields = line.split("\t")
        keyword = fields[0]
        body = fields[1:]
        if keyword == "shift":
            if len(body) != 1:
                raise FormatError("field shift: expected one integer")
            try:
                shift = int(body[0])
            except ValueError:
                raise FormatError("field shift: %r is not an integer" % body[0]) from None
        elif keyword == "tag":
            if len(body) != 2:
                raise FormatError("field tag: expected key and value")
            tags[body[0]] = body[1]
        elif keyword == "basis":
            if len(body) != 2:
                raise FormatError("field basis: expected label and degree")
            try:
                entries.append((body[0], int(body[1])))
            except ValueError:
                raise FormatError("field basis: degree %r is not an integer" % body[1]) from None
        elif keyword == "unit":
            unit_terms = _parse_element_fields(body, "unit")
        elif keyword == "counit":
            if len(body) % 2 != 0:
                raise FormatError("field counit: expected label/value pairs")
            counit = {}
            for pos in range(0, len(body), 2):
                counit[body[pos]] = parse_scalar(body[pos + 1], "counit")
        elif keyword == "product":
            if len(body) < 2:
                raise FormatError("field product: expected left and right labels")
            if (body[0], body[1]) in seen_products:
                raise FormatError(
                    "field product: duplicate entry for (%s, %s)" % (body[0], body[1])
                )
            seen_products.add((body[0], body[1]))
            product_rows.append((body[0], body[1], _parse_element_fields(body[2:], "product")))
        elif keyword == "coproduct":
            if len(body) < 1:
                raise FormatError("field coproduct: expected a source label")
            if (len(body) - 1) % 3 != 0:
                raise FormatError("field coproduct: terms must come as coefficient, left, right")
            if body[0] in seen_coproducts:
                raise FormatError("field coproduct: duplicate entry for %s" % body[0])
            seen_coproducts.add(body[0])
            terms = {}
            for pos in range(1, len(body), 3):
                terms[(body[pos + 1], body[pos + 2])] = parse_scalar(body[pos], "coproduct")
            coproduct_rows.append((body[0], terms))
        elif keyword == "overflow":
            if len(body) != 2:
                raise FormatError("field overflow: expected two labels")
            overflow.append((body[0], body[1]))
        else:
            raise FormatError("field %r: unknown keyword" % keyword)
    if shift is None:
        raise FormatError("field shift: missing")
    if not entries:
        raise FormatError("field basis: at least one basis line required")
    try:
        basis = GradedBasis(entries)
        product = {
            (left, right): GradedElement(basis, terms) for left, right, terms in product_rows
        }
        coproduct = {src: TensorElement(basis, terms) for src, terms in coproduct_rows}
        unit = GradedElement(basis, unit_terms) if unit_terms is not None else None
        return FrobeniusData(
            basis, shift, product, coproduct, unit=unit, counit=counit, tags=tags, overflow=overflow
        )
    except ValueError as exc:
        raise FormatError("field tables: %s" % exc) from None


def dumps_tensor_terms(terms, arity: int) -> str:
    """Serialize a tensor-power result as 'term coeff label...' lines."""
    lines = ["tensor\t%d" % arity]
    for key in sorted(terms):
        if len(key) != arity:
            raise ValueError("tensor key %r does not have arity %d" % (key, arity))
        lines.append("\t".join(["term", format_scalar(terms[key])] + list(key)))
    lines.append("end")
    return "\n".join(lines) + "\n"
