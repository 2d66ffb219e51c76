"""Age and obstruction-rank bookkeeping for diagonal abelian linear actions.

A group element acting diagonally on C^m is recorded through its eigenvalue
exponents, rationals in [0, 1).  From those the age, the fixed-locus real
dimension, the obstruction rank of a pair of sectors, and the degree ledger
of the intersection pairing are all exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import CheckReport, Violation

ZERO = Fraction(0)


class SectorInconsistency(ValueError):
    """Supplied sector data violates the age/dimension/rank identities."""


@dataclass(frozen=True)
class EigenData:
    """Eigenvalue exponents of a diagonal action on C^m, each in [0, 1)."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "exponents", tuple(Fraction(k) for k in self.exponents)
        )
        for k in self.exponents:
            if not 0 <= k < 1:
                raise ValueError("eigenvalue exponent %s is outside [0, 1)" % k)

    def __len__(self):
        return len(self.exponents)


def eigen_from_action(orders, weight_rows, element) -> EigenData:
    """Exponents of one element of a product of cyclic groups acting diagonally.

    orders: the cyclic factors; weight_rows: one weight vector per factor;
    element: the tuple of cyclic coordinates.
    """
    orders = list(orders)
    if len(weight_rows) != len(orders) or len(element) != len(orders):
        raise ValueError("need one weight row and one coordinate per cyclic factor")
    width = len(weight_rows[0]) if weight_rows else 0
    for row in weight_rows:
        if len(row) != width:
            raise ValueError("weight rows must all have the same length")
    exponents = []
    for j in range(width):
        total = ZERO
        for t, m, row in zip(element, orders, weight_rows):
            total += Fraction((t * row[j]) % m, m)
        exponents.append(total - int(total))
    return EigenData(tuple(exponents))


def age(eigen: EigenData) -> Fraction:
    """Sum of the eigenvalue exponents."""
    return sum(eigen.exponents, ZERO)


def inverse_eigen(eigen: EigenData) -> EigenData:
    return EigenData(tuple((1 - k) if k else ZERO for k in eigen.exponents))


def sector_dimension(eigen: EigenData) -> int:
    """Real dimension of the fixed locus: two per zero exponent."""
    return 2 * sum(1 for k in eigen.exponents if k == 0)


def check_age_dimension(eigen: EigenData) -> CheckReport:
    """dim = d - 2 age(g) - 2 age(g^{-1}) with d the ambient real dimension."""
    report = CheckReport("age-dimension", 1)
    d = 2 * len(eigen)
    lhs = Fraction(sector_dimension(eigen))
    rhs = d - 2 * age(eigen) - 2 * age(inverse_eigen(eigen))
    if lhs != rhs:
        report.violations.append(
            Violation(
                (str(eigen.exponents),),
                "fixed dimension %s but %d - 2 age - 2 age(inverse) = %s" % (lhs, d, rhs),
            )
        )
    return report


def obstruction_rank(age_g, age_h, age_gh, dim_double: int, dim_gh: int) -> int:
    """2(age_g + age_h - age_gh) + dim_double - dim_gh, an even count >= 0."""
    value = 2 * (Fraction(age_g) + Fraction(age_h) - Fraction(age_gh)) + dim_double - dim_gh
    if value.denominator != 1 or value < 0 or value % 2 != 0:
        raise SectorInconsistency(
            "obstruction rank %s from ages (%s, %s, %s) and dimensions (%d, %d) "
            "is not an even nonnegative integer"
            % (value, age_g, age_h, age_gh, dim_double, dim_gh)
        )
    return int(value)


def double_sector_dimension(eigen_g: EigenData, eigen_h: EigenData) -> int:
    """Real dimension of the common fixed locus of two diagonal elements."""
    if len(eigen_g) != len(eigen_h):
        raise ValueError("sector data must share the ambient space")
    return 2 * sum(
        1 for kg, kh in zip(eigen_g.exponents, eigen_h.exponents) if kg == 0 and kh == 0
    )


def orbifold_degree(homological_degree, sector_age) -> Fraction:
    """Regrade a homology class by twice the age of its sector."""
    return Fraction(homological_degree) + 2 * Fraction(sector_age)


@dataclass(frozen=True)
class SectorRecord:
    """One sector: label, age, fixed real dimension, ambient real dimension."""

    label: str
    age: Fraction
    dim: int
    ambient: int

    def __post_init__(self):
        object.__setattr__(self, "age", Fraction(self.age))
        if self.age < 0:
            raise SectorInconsistency("sector %s has negative age" % self.label)
        if self.dim < 0 or self.dim % 2 or self.dim > self.ambient:
            raise SectorInconsistency(
                "sector %s has invalid fixed dimension %d" % (self.label, self.dim)
            )

    @property
    def inverse_age(self) -> Fraction:
        return Fraction(self.ambient - self.dim, 2) - self.age

    def validate(self):
        if self.inverse_age < 0:
            raise SectorInconsistency(
                "sector %s: derived inverse age %s is negative" % (self.label, self.inverse_age)
            )


def sector_record(label: str, eigen: EigenData) -> SectorRecord:
    return SectorRecord(label, age(eigen), sector_dimension(eigen), 2 * len(eigen))


def check_pairing_degree(
    g: SectorRecord, h: SectorRecord, gh: SectorRecord, dim_double: int, i, j
) -> CheckReport:
    """Replay the degree count of the intersection pairing and balance it.

    A class of orbifold degree i on sector g against one of degree j on
    sector h must land in orbifold degree i + j - d on the product sector.
    The ledger walks the pipeline: cross product, Gysin restriction of
    codimension dim_g + dim_h - dim_double, cap with the obstruction class,
    pushforward, regrade.  Any defect in the rank or any imbalance is a
    reported violation carrying the discrepancy.
    """
    if not (g.ambient == h.ambient == gh.ambient):
        raise SectorInconsistency("sector records do not share an ambient dimension")
    for record in (g, h, gh):
        record.validate()
    i = Fraction(i)
    j = Fraction(j)
    d = g.ambient
    codim = g.dim + h.dim - dim_double
    rank = 2 * (g.age + h.age - gh.age) + dim_double - gh.dim
    plain_g = i - 2 * g.age
    plain_h = j - 2 * h.age
    landed = plain_g + plain_h - codim - rank
    result = landed + 2 * gh.age
    target = i + j - d
    report = CheckReport("pairing-degree", 1)
    report.notes = [
        "plain degrees: %s and %s" % (plain_g, plain_h),
        "codimension of the restriction: %s" % codim,
        "obstruction rank: %s" % rank,
        "plain degree after pushforward: %s" % landed,
        "orbifold degree reached: %s, target: %s" % (result, target),
    ]
    if rank.denominator != 1 or rank < 0 or rank % 2 != 0:
        report.violations.append(
            Violation(
                (g.label, h.label, gh.label),
                "obstruction rank %s is not an even nonnegative integer" % rank,
            )
        )
    if result != target:
        report.violations.append(
            Violation(
                (g.label, h.label, gh.label),
                "degree imbalance %s: reached %s, target %s" % (result - target, result, target),
            )
        )
    return report
