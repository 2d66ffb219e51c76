"""Exact graded linear algebra over the rationals.

Sparse basis-labelled elements, bilinear structure tables, and the axiom
checkers: associativity, graded commutativity, coassociativity, graded
cocommutativity, product/coproduct compatibility, counit identities, the
seven-term BV identity, and the weight-function cocycle condition.

Every coefficient is a `fractions.Fraction` and every check is an exact
identity.  There is no floating point and no tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class BasisMismatch(ValueError):
    """Two elements over different bases were combined."""


class PreconditionError(ValueError):
    """An operation was called on data that does not meet its contract."""


class UnsupportedStructure(ValueError):
    """The structure table lacks the shape an operation requires."""


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("exact rational expected, got %s" % type(value).__name__)


class GradedBasis:
    """Ordered, duplicate-free list of labels with unshifted integer degrees."""

    __slots__ = ("entries", "_degree", "_index")

    def __init__(self, entries: Iterable[tuple[str, int]]):
        self.entries = tuple((str(label), int(degree)) for label, degree in entries)
        self._degree = {}
        self._index = {}
        for pos, (label, degree) in enumerate(self.entries):
            if label in self._index:
                raise ValueError("duplicate basis label %r" % label)
            if "\t" in label or "\n" in label:
                raise ValueError("basis label %r contains tab or newline" % label)
            self._index[label] = pos
            self._degree[label] = degree

    def labels(self):
        return [label for label, _ in self.entries]

    def degree(self, label: str) -> int:
        return self._degree[label]

    def index(self, label: str) -> int:
        return self._index[label]

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self._index)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedBasis) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "GradedBasis(%d labels)" % len(self.entries)


def _clean_terms(basis: GradedBasis, terms, keyfn) -> dict:
    out = {}
    if terms:
        for key, value in terms.items():
            coeff = as_scalar(value)
            if coeff == 0:
                continue
            out[keyfn(key)] = coeff
    return out


class GradedElement:
    """Sparse rational linear combination of basis labels."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: GradedBasis, terms: Optional[Mapping[str, Scalar]] = None):
        self.basis = basis

        def check(label):
            if label not in basis:
                raise BasisMismatch("label %r is not in the basis" % (label,))
            return label

        self.terms = _clean_terms(basis, terms, check)

    def _require_same_basis(self, other: "GradedElement"):
        if self.basis != other.basis:
            raise BasisMismatch("elements live over different bases")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._require_same_basis(other)
        terms = dict(self.terms)
        for label, coeff in other.terms.items():
            terms[label] = terms.get(label, ZERO) + coeff
        return GradedElement(self.basis, terms)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-1) * other

    def __rmul__(self, coeff) -> "GradedElement":
        coeff = as_scalar(coeff)
        return GradedElement(self.basis, {l: coeff * c for l, c in self.terms.items()})

    def __neg__(self) -> "GradedElement":
        return (-1) * self

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return "GradedElement(%s)" % format_element(self)


class TensorElement:
    """Sparse element of the tensor square, keyed by ordered label pairs."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: GradedBasis, terms: Optional[Mapping] = None):
        self.basis = basis

        def check(key):
            left, right = key
            if left not in basis or right not in basis:
                raise BasisMismatch("tensor key (%r, %r) is not in the basis" % (left, right))
            return (left, right)

        self.terms = _clean_terms(basis, terms, check)

    def _require_same_basis(self, other: "TensorElement"):
        if self.basis != other.basis:
            raise BasisMismatch("tensor elements live over different bases")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._require_same_basis(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, ZERO) + coeff
        return TensorElement(self.basis, terms)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __rmul__(self, coeff) -> "TensorElement":
        coeff = as_scalar(coeff)
        return TensorElement(self.basis, {k: coeff * c for k, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __repr__(self):
        return "TensorElement(%s)" % format_tensor(self)


def linear_combine(coeffs: Iterable[tuple[Scalar, GradedElement]]) -> GradedElement:
    """Exact sparse sum of scaled elements; zero coefficients are dropped."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("linear_combine needs at least one summand")
    basis = coeffs[0][1].basis
    terms: dict[str, Fraction] = {}
    for scalar, element in coeffs:
        if element.basis != basis:
            raise BasisMismatch("summands live over different bases")
        scalar = as_scalar(scalar)
        for label, coeff in element.terms.items():
            terms[label] = terms.get(label, ZERO) + scalar * coeff
    return GradedElement(basis, terms)


class FrobeniusData:
    """Graded basis with sparse product/coproduct tables of a common degree drop.

    The product table is stored for both argument orders; commutativity is a
    checked property, never an assumption.  Unit and counit are optional.
    `overflow` records ordered label pairs whose true product lost terms to a
    truncation; checkers skip tuples that touch them.  `tags` is free-form
    provenance carried into the serialized form.
    """

    __slots__ = ("basis", "shift", "product", "coproduct", "unit", "counit", "tags", "overflow")

    def __init__(
        self,
        basis: GradedBasis,
        shift: int,
        product: Mapping[tuple[str, str], GradedElement],
        coproduct: Mapping[str, TensorElement],
        unit: Optional[GradedElement] = None,
        counit: Optional[Mapping[str, Scalar]] = None,
        tags: Optional[Mapping[str, str]] = None,
        overflow: Iterable[tuple[str, str]] = (),
    ):
        self.basis = basis
        self.shift = int(shift)
        self.product = {}
        for (left, right), element in product.items():
            if left not in basis or right not in basis:
                raise BasisMismatch("product key (%r, %r) outside the basis" % (left, right))
            if element.basis != basis:
                raise BasisMismatch("product value for (%r, %r) over a foreign basis" % (left, right))
            if not element:
                continue
            want = basis.degree(left) + basis.degree(right) - self.shift
            for label in element.terms:
                if basis.degree(label) != want:
                    raise ValueError(
                        "product(%s, %s) is not degree homogeneous: term %s has degree %d, expected %d"
                        % (left, right, label, basis.degree(label), want)
                    )
            self.product[(left, right)] = element
        self.coproduct = {}
        for source, tensor in coproduct.items():
            if source not in basis:
                raise BasisMismatch("coproduct key %r outside the basis" % (source,))
            if tensor.basis != basis:
                raise BasisMismatch("coproduct value for %r over a foreign basis" % (source,))
            if not tensor:
                continue
            want = basis.degree(source) - self.shift
            for left, right in tensor.terms:
                if basis.degree(left) + basis.degree(right) != want:
                    raise ValueError(
                        "coproduct(%s) is not degree homogeneous: term (%s, %s) has degree %d, expected %d"
                        % (source, left, right, basis.degree(left) + basis.degree(right), want)
                    )
            self.coproduct[source] = tensor
        if unit is not None and unit.basis != basis:
            raise BasisMismatch("unit lives over a foreign basis")
        self.unit = unit
        if counit is None:
            self.counit = None
        else:
            cleaned = {}
            for label, value in counit.items():
                if label not in basis:
                    raise BasisMismatch("counit label %r outside the basis" % (label,))
                value = as_scalar(value)
                if value != 0:
                    cleaned[label] = value
            self.counit = cleaned
        self.tags = dict(tags) if tags else {}
        self.overflow = frozenset((str(l), str(r)) for l, r in overflow)

    def shifted_degree(self, label: str) -> int:
        return self.basis.degree(label) - self.shift

    def zero(self) -> GradedElement:
        return GradedElement(self.basis)

    def counit_value(self, element: GradedElement) -> Fraction:
        if self.counit is None:
            raise PreconditionError("algebra has no counit")
        total = ZERO
        for label, coeff in element.terms.items():
            total += coeff * self.counit.get(label, ZERO)
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FrobeniusData)
            and self.basis == other.basis
            and self.shift == other.shift
            and self.product == other.product
            and self.coproduct == other.coproduct
            and self.unit == other.unit
            and self.counit == other.counit
            and self.tags == other.tags
            and self.overflow == other.overflow
        )

    def __repr__(self):
        return "FrobeniusData(%d basis labels, shift %d)" % (len(self.basis), self.shift)


def apply_product(algebra: FrobeniusData, x: GradedElement, y: GradedElement) -> GradedElement:
    """Bilinear extension of the stored product table."""
    result, _ = _product_tracked(algebra, x, y)
    return result


def _product_tracked(algebra, x, y):
    if x.basis != algebra.basis or y.basis != algebra.basis:
        raise BasisMismatch("arguments live over a foreign basis")
    terms: dict[str, Fraction] = {}
    hit_overflow = False
    for la, ca in x.terms.items():
        for lb, cb in y.terms.items():
            if (la, lb) in algebra.overflow:
                hit_overflow = True
            entry = algebra.product.get((la, lb))
            if entry is None:
                continue
            scale = ca * cb
            for label, coeff in entry.terms.items():
                terms[label] = terms.get(label, ZERO) + scale * coeff
    return GradedElement(algebra.basis, terms), hit_overflow


def apply_coproduct(algebra: FrobeniusData, x: GradedElement) -> TensorElement:
    """Colinear extension of the stored coproduct table."""
    if x.basis != algebra.basis:
        raise BasisMismatch("argument lives over a foreign basis")
    terms: dict[tuple[str, str], Fraction] = {}
    for la, ca in x.terms.items():
        tensor = algebra.coproduct.get(la)
        if tensor is None:
            continue
        for key, coeff in tensor.terms.items():
            terms[key] = terms.get(key, ZERO) + ca * coeff
    return TensorElement(algebra.basis, terms)


def basis_vector(algebra: FrobeniusData, label: str) -> GradedElement:
    return GradedElement(algebra.basis, {label: ONE})


class LinearMap:
    """Sparse column map between graded bases; missing columns are zero."""

    __slots__ = ("source", "target", "columns")

    def __init__(self, source: GradedBasis, target: GradedBasis, columns: Mapping[str, GradedElement]):
        self.source = source
        self.target = target
        self.columns = {}
        for label, element in columns.items():
            if label not in source:
                raise BasisMismatch("column label %r outside the source basis" % (label,))
            if element.basis != target:
                raise BasisMismatch("column %r lives over a foreign target basis" % (label,))
            if element:
                self.columns[label] = element

    @classmethod
    def identity(cls, basis: GradedBasis) -> "LinearMap":
        return cls(basis, basis, {l: GradedElement(basis, {l: ONE}) for l in basis.labels()})

    def apply(self, element: GradedElement) -> GradedElement:
        if element.basis != self.source:
            raise BasisMismatch("argument lives over a foreign basis")
        terms: dict[str, Fraction] = {}
        for label, coeff in element.terms.items():
            column = self.columns.get(label)
            if column is None:
                continue
            for tlabel, tcoeff in column.terms.items():
                terms[tlabel] = terms.get(tlabel, ZERO) + coeff * tcoeff
        return GradedElement(self.target, terms)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.target != self.source:
            raise BasisMismatch("composition bases do not match")
        columns = {}
        for label in inner.source.labels():
            col = inner.columns.get(label)
            if col is None:
                continue
            columns[label] = self.apply(col)
        return LinearMap(inner.source, self.target, columns)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearMap)
            and self.source == other.source
            and self.target == other.target
            and self.columns == other.columns
        )

    def __repr__(self):
        return "LinearMap(%d -> %d)" % (len(self.source), len(self.target))


# ---------------------------------------------------------------------------
# rendering helpers shared by reports and the CLI


def format_scalar(value: Scalar) -> str:
    return str(as_scalar(value))


def format_element(element: GradedElement) -> str:
    if not element.terms:
        return "0"
    order = element.basis.index
    parts = []
    for label in sorted(element.terms, key=order):
        parts.append("%s*%s" % (format_scalar(element.terms[label]), label))
    return " + ".join(parts)


def format_tensor(tensor: TensorElement) -> str:
    if not tensor.terms:
        return "0"
    order = tensor.basis.index
    parts = []
    for left, right in sorted(tensor.terms, key=lambda k: (order(k[0]), order(k[1]))):
        parts.append("%s*(%s x %s)" % (format_scalar(tensor.terms[(left, right)]), left, right))
    return " + ".join(parts)


def _format_triple_terms(basis: GradedBasis, terms: Mapping[tuple, Scalar]) -> str:
    if not terms:
        return "0"
    order = basis.index
    parts = []
    for key in sorted(terms, key=lambda k: tuple(order(l) for l in k)):
        parts.append("%s*(%s)" % (format_scalar(terms[key]), " x ".join(key)))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Violation:
    site: tuple
    detail: str


@dataclass
class CheckReport:
    """Deterministic, order-independent record of one exhaustive check."""

    check: str
    cases: int
    violations: list = field(default_factory=list)
    skipped: int = 0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        suffix = "%d cases" % self.cases
        if self.skipped:
            suffix += ", %d skipped at truncation" % self.skipped
        out = ["check %s: %s (%s)" % (self.check, "PASS" if self.ok else "FAIL", suffix)]
        for note in self.notes:
            out.append("  note: %s" % note)
        for violation in self.violations:
            out.append("  violation at (%s): %s" % (", ".join(violation.site), violation.detail))
        return out


# ---------------------------------------------------------------------------
# axiom checkers


def check_associativity(algebra: FrobeniusData) -> CheckReport:
    """(a*b)*c = a*(b*c) over every basis triple."""
    report = CheckReport("associativity", 0)
    labels = algebra.basis.labels()
    for a in labels:
        ea = basis_vector(algebra, a)
        for b in labels:
            eb = basis_vector(algebra, b)
            ab, hit1 = _product_tracked(algebra, ea, eb)
            for c in labels:
                ec = basis_vector(algebra, c)
                left, hit2 = _product_tracked(algebra, ab, ec)
                bc, hit3 = _product_tracked(algebra, eb, ec)
                right, hit4 = _product_tracked(algebra, ea, bc)
                if hit1 or hit2 or hit3 or hit4:
                    report.skipped += 1
                    continue
                report.cases += 1
                if left != right:
                    report.violations.append(
                        Violation((a, b, c), "%s != %s" % (format_element(left), format_element(right)))
                    )
    return report


def check_graded_commutativity(algebra: FrobeniusData) -> CheckReport:
    """a*b = (-1)^{|a||b|} b*a with degrees taken shifted."""
    report = CheckReport("graded-commutativity", 0)
    labels = algebra.basis.labels()
    for a in labels:
        sa = algebra.shifted_degree(a) % 2
        ea = basis_vector(algebra, a)
        for b in labels:
            sb = algebra.shifted_degree(b) % 2
            eb = basis_vector(algebra, b)
            left, hit1 = _product_tracked(algebra, ea, eb)
            right, hit2 = _product_tracked(algebra, eb, ea)
            if hit1 or hit2:
                report.skipped += 1
                continue
            report.cases += 1
            sign = -1 if (sa and sb) else 1
            if left != sign * right:
                report.violations.append(
                    Violation(
                        (a, b),
                        "%s != %s * %s"
                        % (format_element(left), "(-1)" if sign < 0 else "(+1)", format_element(right)),
                    )
                )
    return report


def _coproduct_terms(algebra, label):
    tensor = algebra.coproduct.get(label)
    return tensor.terms.items() if tensor is not None else ()


def check_coassociativity(algebra: FrobeniusData) -> CheckReport:
    """(delta x 1) delta = (1 x delta) delta on every basis vector."""
    report = CheckReport("coassociativity", 0)
    for a in algebra.basis.labels():
        report.cases += 1
        left: dict[tuple, Fraction] = {}
        right: dict[tuple, Fraction] = {}
        for (u, v), c in _coproduct_terms(algebra, a):
            for (x, y), d in _coproduct_terms(algebra, u):
                key = (x, y, v)
                left[key] = left.get(key, ZERO) + c * d
            for (x, y), d in _coproduct_terms(algebra, v):
                key = (u, x, y)
                right[key] = right.get(key, ZERO) + c * d
        left = {k: c for k, c in left.items() if c}
        right = {k: c for k, c in right.items() if c}
        if left != right:
            report.violations.append(
                Violation(
                    (a,),
                    "%s != %s"
                    % (_format_triple_terms(algebra.basis, left), _format_triple_terms(algebra.basis, right)),
                )
            )
    return report


def check_cocommutativity(algebra: FrobeniusData) -> CheckReport:
    """delta = flip . delta with the Koszul sign in shifted degrees."""
    report = CheckReport("graded-cocommutativity", 0)
    for a in algebra.basis.labels():
        report.cases += 1
        flipped: dict[tuple[str, str], Fraction] = {}
        for (u, v), c in _coproduct_terms(algebra, a):
            su = algebra.shifted_degree(u) % 2
            sv = algebra.shifted_degree(v) % 2
            sign = -1 if (su and sv) else 1
            flipped[(v, u)] = flipped.get((v, u), ZERO) + sign * c
        straight = TensorElement(algebra.basis, dict(_coproduct_terms(algebra, a)))
        twisted = TensorElement(algebra.basis, flipped)
        if straight != twisted:
            report.violations.append(
                Violation((a,), "%s != %s" % (format_tensor(straight), format_tensor(twisted)))
            )
    return report


def check_frobenius(algebra: FrobeniusData) -> CheckReport:
    """delta(a*b) = (mu x 1)(1 x delta)(a x b) = (1 x mu)(delta x 1)(a x b).

    Evaluated with the standard Koszul convention in shifted degrees.  No
    element crosses another in either middle term and the structure maps have
    even shifted degree, so no sign materializes.
    """
    report = CheckReport("frobenius-compatibility", 0)
    labels = algebra.basis.labels()
    for a in labels:
        ea = basis_vector(algebra, a)
        for b in labels:
            eb = basis_vector(algebra, b)
            ab, hit = _product_tracked(algebra, ea, eb)
            if hit:
                report.skipped += 1
                continue
            lhs = apply_coproduct(algebra, ab)
            mid1: dict[tuple[str, str], Fraction] = {}
            overflow = False
            for (b1, b2), c in _coproduct_terms(algebra, b):
                prod, hit1 = _product_tracked(algebra, ea, basis_vector(algebra, b1))
                overflow = overflow or hit1
                for label, coeff in prod.terms.items():
                    key = (label, b2)
                    mid1[key] = mid1.get(key, ZERO) + c * coeff
            mid2: dict[tuple[str, str], Fraction] = {}
            for (a1, a2), c in _coproduct_terms(algebra, a):
                prod, hit2 = _product_tracked(algebra, basis_vector(algebra, a2), eb)
                overflow = overflow or hit2
                for label, coeff in prod.terms.items():
                    key = (a1, label)
                    mid2[key] = mid2.get(key, ZERO) + c * coeff
            if overflow:
                report.skipped += 1
                continue
            report.cases += 1
            middle1 = TensorElement(algebra.basis, mid1)
            middle2 = TensorElement(algebra.basis, mid2)
            if lhs != middle1 or middle1 != middle2:
                report.violations.append(
                    Violation(
                        (a, b),
                        "delta(a*b) = %s, (mu x 1)(1 x delta) = %s, (1 x mu)(delta x 1) = %s"
                        % (format_tensor(lhs), format_tensor(middle1), format_tensor(middle2)),
                    )
                )
    return report


def check_snake(algebra: FrobeniusData) -> CheckReport:
    """(counit x id) delta = id = (id x counit) delta on every basis vector."""
    if algebra.unit is None or algebra.counit is None:
        raise PreconditionError("snake check needs both a unit and a counit")
    report = CheckReport("snake", 0)
    counit = algebra.counit
    for a in algebra.basis.labels():
        report.cases += 1
        left: dict[str, Fraction] = {}
        right: dict[str, Fraction] = {}
        for (u, v), c in _coproduct_terms(algebra, a):
            if u in counit:
                left[v] = left.get(v, ZERO) + counit[u] * c
            if v in counit:
                right[u] = right.get(u, ZERO) + counit[v] * c
        expected = basis_vector(algebra, a)
        got_left = GradedElement(algebra.basis, left)
        got_right = GradedElement(algebra.basis, right)
        if got_left != expected or got_right != expected:
            report.violations.append(
                Violation(
                    (a,),
                    "(counit x id)delta = %s, (id x counit)delta = %s, expected %s"
                    % (format_element(got_left), format_element(got_right), format_element(expected)),
                )
            )
    return report


def check_bv(algebra: FrobeniusData, operator: LinearMap) -> CheckReport:
    """D*D = 0 and the seven-term identity, signs in shifted degrees.

    D(abc) = D(ab)c + (-1)^|a| a D(bc) + (-1)^{(|a|+1)|b|} b D(ac)
             - D(a)bc - (-1)^|a| a D(b)c - (-1)^{|a|+|b|} ab D(c)
    """
    if operator.source != algebra.basis or operator.target != algebra.basis:
        raise PreconditionError("BV operator must map the algebra basis to itself")
    for label in algebra.basis.labels():
        column = operator.columns.get(label)
        if column is None:
            continue
        want = algebra.basis.degree(label) + 1
        for term in column.terms:
            if algebra.basis.degree(term) != want:
                raise PreconditionError(
                    "BV operator must raise degree by exactly 1; D(%s) hits %s" % (label, term)
                )
    report = CheckReport("bv-identity", 0)
    labels = algebra.basis.labels()
    for a in labels:
        report.cases += 1
        dd = operator.apply(operator.apply(basis_vector(algebra, a)))
        if dd:
            report.violations.append(Violation((a,), "D(D(%s)) = %s" % (a, format_element(dd))))
    for a in labels:
        sa = algebra.shifted_degree(a) % 2
        ea = basis_vector(algebra, a)
        da = operator.apply(ea)
        for b in labels:
            sb = algebra.shifted_degree(b) % 2
            eb = basis_vector(algebra, b)
            db = operator.apply(eb)
            for c in labels:
                ec = basis_vector(algebra, c)
                dc = operator.apply(ec)
                hits = []

                def mul(x, y):
                    out, hit = _product_tracked(algebra, x, y)
                    hits.append(hit)
                    return out

                ab = mul(ea, eb)
                bc = mul(eb, ec)
                ac = mul(ea, ec)
                abc = mul(ab, ec)
                lhs = operator.apply(abc)
                t1 = mul(operator.apply(ab), ec)
                t2 = (-1 if sa else 1) * mul(ea, operator.apply(bc))
                t3 = (-1 if ((sa + 1) * sb) % 2 else 1) * mul(eb, operator.apply(ac))
                t4 = (-1) * mul(mul(da, eb), ec)
                t5 = (1 if sa else -1) * mul(mul(ea, db), ec)
                t6 = (1 if (sa + sb) % 2 else -1) * mul(ab, dc)
                if any(hits):
                    report.skipped += 1
                    continue
                report.cases += 1
                rhs = t1 + t2 + t3 + t4 + t5 + t6
                if lhs != rhs:
                    report.violations.append(
                        Violation(
                            (a, b, c),
                            "D(abc) = %s, seven-term side = %s"
                            % (format_element(lhs), format_element(rhs)),
                        )
                    )
    return report


def _single_term(element: Optional[GradedElement]):
    if element is None or not element.terms:
        return None
    if len(element.terms) != 1:
        raise UnsupportedStructure(
            "product entry %s has more than one basis term" % format_element(element)
        )
    ((label, coeff),) = element.terms.items()
    return label, coeff


def _require_monomial_products(algebra: FrobeniusData):
    for key, element in algebra.product.items():
        if len(element.terms) > 1:
            raise UnsupportedStructure(
                "weight-function twisting needs single-basis-vector products; "
                "product%s = %s" % (key, format_element(element))
            )


def check_cocycle(algebra: FrobeniusData, alpha) -> CheckReport:
    """alpha(a,b) alpha(ab,c) = alpha(b,c) alpha(a,bc) over contributing triples.

    Requires every stored product entry to be a scalar multiple of a single
    basis vector.  Triples whose full product vanishes along either bracketing
    impose no condition and are not counted.
    """
    _require_monomial_products(algebra)
    weight = _as_weight(alpha)
    report = CheckReport("cocycle-condition", 0)
    labels = algebra.basis.labels()
    for a in labels:
        for b in labels:
            ab = _single_term(algebra.product.get((a, b)))
            if ab is None:
                continue
            for c in labels:
                bc = _single_term(algebra.product.get((b, c)))
                if bc is None:
                    continue
                if _single_term(algebra.product.get((ab[0], c))) is None:
                    continue
                if _single_term(algebra.product.get((a, bc[0]))) is None:
                    continue
                report.cases += 1
                lhs = weight(a, b) * weight(ab[0], c)
                rhs = weight(b, c) * weight(a, bc[0])
                if lhs != rhs:
                    report.violations.append(
                        Violation(
                            (a, b, c),
                            "alpha(a,b)alpha(a*b,c) = %s but alpha(b,c)alpha(a,b*c) = %s"
                            % (format_scalar(lhs), format_scalar(rhs)),
                        )
                    )
    return report


def _as_weight(alpha):
    if callable(alpha):
        return lambda a, b: as_scalar(alpha(a, b))
    mapping = dict(alpha)
    return lambda a, b: as_scalar(mapping.get((a, b), ONE))


def twist_product(algebra: FrobeniusData, alpha) -> FrobeniusData:
    """Rescale every product entry by alpha(left, right); coproduct unchanged."""
    _require_monomial_products(algebra)
    weight = _as_weight(alpha)
    product = {}
    for (left, right), element in algebra.product.items():
        scaled = weight(left, right) * element
        if scaled:
            product[(left, right)] = scaled
    return FrobeniusData(
        algebra.basis,
        algebra.shift,
        product,
        algebra.coproduct,
        unit=algebra.unit,
        counit=algebra.counit,
        tags=algebra.tags,
        overflow=algebra.overflow,
    )


def check_morphism(f: LinearMap, source: FrobeniusData, target: FrobeniusData) -> CheckReport:
    """f(a *_A b) = f(a) *_B f(b) and (f x f) delta_A = delta_B f."""
    if f.source != source.basis or f.target != target.basis:
        raise BasisMismatch("map does not run between the given algebras")
    report = CheckReport("frobenius-morphism", 0)
    labels = source.basis.labels()
    images = {label: f.apply(basis_vector(source, label)) for label in labels}
    for a in labels:
        for b in labels:
            ab, hit = _product_tracked(source, basis_vector(source, a), basis_vector(source, b))
            fab = f.apply(ab)
            pushed, hit2 = _product_tracked(target, images[a], images[b])
            if hit or hit2:
                report.skipped += 1
                continue
            report.cases += 1
            if fab != pushed:
                report.violations.append(
                    Violation(
                        (a, b),
                        "f(a*b) = %s but f(a)*f(b) = %s" % (format_element(fab), format_element(pushed)),
                    )
                )
    for a in labels:
        report.cases += 1
        lhs: dict[tuple[str, str], Fraction] = {}
        for (u, v), c in _coproduct_terms(source, a):
            for lu, cu in images[u].terms.items():
                for lv, cv in images[v].terms.items():
                    key = (lu, lv)
                    lhs[key] = lhs.get(key, ZERO) + c * cu * cv
        rhs = apply_coproduct(target, images[a])
        lhs_t = TensorElement(target.basis, lhs)
        if lhs_t != rhs:
            report.violations.append(
                Violation(
                    (a,),
                    "(f x f)delta(a) = %s but delta(f(a)) = %s"
                    % (format_tensor(lhs_t), format_tensor(rhs)),
                )
            )
    return report
