"""Dual product on the adjoint-quotient cohomology of a compact connected Lie group.

Everything is expressed through rank-many polynomial generators x_i of degree
2d_i and odd generators y_i of degree 2d_i + 1, where the d_i are the
exponents.  The product multiplies polynomial parts and merges parities by
epsilon + epsilon' - 1 with negative powers of y set to zero; it factors as
the restriction map on the doubled generators followed by fiber integration
over the group.  The dual coproduct is identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

ZERO = Fraction(0)
ONE = Fraction(1)

# GG keys: (x exponents, y parities); GG2 keys add primed copies.


@dataclass(frozen=True)
class ExponentProfile:
    """Rank, exponents, and the dimension they must reproduce."""

    rank: int
    exponents: tuple
    name: str = ""

    def __post_init__(self):
        if self.rank != len(self.exponents) or self.rank < 1:
            raise ValueError("rank must equal the number of exponents")
        if any(d < 1 for d in self.exponents):
            raise ValueError("exponents must be positive")
        if list(self.exponents) != sorted(self.exponents):
            raise ValueError("exponents must be nondecreasing")

    @property
    def dimension(self) -> int:
        return self.rank + 2 * sum(self.exponents)


_BUILTIN_EXPONENTS = {
    "SU(2)": (1,),
    "SU(3)": (1, 2),
    "SU(4)": (1, 2, 3),
    "SU(5)": (1, 2, 3, 4),
    "SO(5)": (1, 3),
    "SP(2)": (1, 3),
    "G2": (1, 5),
}

_EXPECTED_DIMENSION = {
    "SU(2)": 3, "SU(3)": 8, "SU(4)": 15, "SU(5)": 24,
    "SO(5)": 10, "SP(2)": 10, "G2": 14,
}


def builtin_profile(name: str) -> ExponentProfile:
    key = name.strip().upper().replace("_", "")
    if key not in _BUILTIN_EXPONENTS:
        raise ValueError("unknown group name %r" % name)
    exponents = _BUILTIN_EXPONENTS[key]
    profile = ExponentProfile(len(exponents), exponents, name=key)
    if profile.dimension != _EXPECTED_DIMENSION[key]:
        raise ValueError("exponent table for %s is inconsistent with its dimension" % key)
    return profile


def profile_from_exponents(exponents, name="") -> ExponentProfile:
    exponents = tuple(int(d) for d in exponents)
    return ExponentProfile(len(exponents), exponents, name=name)


def monomial(profile, exps, parities, coeff=1):
    """Single-term element P = x^exps * y^parities with a rational coefficient."""
    exps = tuple(int(a) for a in exps)
    parities = tuple(int(e) for e in parities)
    if len(exps) != profile.rank or len(parities) != profile.rank:
        raise ValueError("monomial data must have one entry per generator")
    if any(a < 0 for a in exps) or any(e not in (0, 1) for e in parities):
        raise ValueError("exponents must be nonnegative, parities 0 or 1")
    coeff = Fraction(coeff)
    return {(exps, parities): coeff} if coeff else {}


def x_degree(profile, exps) -> int:
    return sum(2 * d * a for d, a in zip(profile.exponents, exps))


def degree(profile, key) -> int:
    exps, parities = key
    return x_degree(profile, exps) + sum((2 * d + 1) * e for d, e in zip(profile.exponents, parities))


def dual_string_product(profile, u, v):
    """Bilinear extension of (P, eps) * (Q, eps') = PQ * y^{eps + eps' - 1}."""
    out = {}
    for (a, e), cu in u.items():
        for (b, f), cv in v.items():
            if any(ei + fi == 0 for ei, fi in zip(e, f)):
                continue
            key = (
                tuple(ai + bi for ai, bi in zip(a, b)),
                tuple(ei + fi - 1 for ei, fi in zip(e, f)),
            )
            value = out.get(key, ZERO) + cu * cv
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def pair_element(profile, u, v):
    """Cross product into the doubled-generator model: keys (a, a', eps, eps')."""
    out = {}
    for (a, e), cu in u.items():
        for (b, f), cv in v.items():
            key = (a, b, e, f)
            value = out.get(key, ZERO) + cu * cv
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return out


def delta_star(profile, w):
    """Restriction along the diagonal: substitutes x'_i by x_i, keeps y and y'."""
    out = {}
    for (a, b, e, f), c in w.items():
        key = (tuple(ai + bi for ai, bi in zip(a, b)), tuple(0 for _ in a), e, f)
        value = out.get(key, ZERO) + c
        if value:
            out[key] = value
        else:
            out.pop(key, None)
    return out


def m_shriek(profile, w):
    """Fiber integration over the group: y^eps y'^eps' to y^{eps + eps' - 1}.

    Linear over the polynomial part; the primed polynomial generators must
    already have been eliminated.
    """
    out = {}
    for (a, b, e, f), c in w.items():
        if any(b):
            raise ValueError("integrate after eliminating the primed polynomial generators")
        if any(ei + fi == 0 for ei, fi in zip(e, f)):
            continue
        key = (a, tuple(ei + fi - 1 for ei, fi in zip(e, f)))
        value = out.get(key, ZERO) + c
        if value:
            out[key] = value
        else:
            out.pop(key, None)
    return out


def dual_coproduct(profile, element):
    """The dual coproduct vanishes identically."""
    return {}


def unit_monomial(profile):
    """The two-sided unit for the dual product: y_1 ... y_l."""
    return monomial(profile, (0,) * profile.rank, (1,) * profile.rank)


def monomial_basis(profile, max_degree: int):
    """All monomial keys whose polynomial part has degree at most max_degree."""
    exps_list = [()]
    for d in profile.exponents:
        exps_list = [
            prefix + (a,)
            for prefix in exps_list
            for a in range(max_degree // (2 * d) + 1)
        ]
    keys = []
    for exps in exps_list:
        if x_degree(profile, exps) > max_degree:
            continue
        for parities in iproduct((0, 1), repeat=profile.rank):
            keys.append((tuple(exps), tuple(parities)))
    keys.sort()
    return keys


def _render_power(name, power):
    return name if power == 1 else "%s^%d" % (name, power)


def render_monomial(profile, key) -> str:
    exps, parities = key
    parts = [_render_power("x%d" % (i + 1), a) for i, a in enumerate(exps) if a]
    parts += ["y%d" % (i + 1) for i, e in enumerate(parities) if e]
    return "*".join(parts) if parts else "1"


def render_gg2_monomial(profile, key) -> str:
    exps, primed_exps, parities, primed_parities = key
    parts = [_render_power("x%d" % (i + 1), a) for i, a in enumerate(exps) if a]
    parts += [_render_power("x%d'" % (i + 1), a) for i, a in enumerate(primed_exps) if a]
    parts += ["y%d" % (i + 1) for i, e in enumerate(parities) if e]
    parts += ["y%d'" % (i + 1) for i, e in enumerate(primed_parities) if e]
    return "*".join(parts) if parts else "1"


def render_element(profile, element) -> str:
    if not element:
        return "0"
    parts = []
    for key in sorted(element):
        parts.append("%s*%s" % (element[key], render_monomial(profile, key)))
    return " + ".join(parts)
