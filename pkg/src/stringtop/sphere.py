"""String and loop algebras of an odd sphere modulo coordinate reflections.

The quotient of the unit sphere in C^{n+1} by the group generated by the
n+1 coordinate reflections.  The string side is a face algebra on the
simplex: a face for every proper subset of reflection indices, one
degree-zero generator per nontrivial group element, products by transverse
intersection.  The loop side is the group algebra tensored with a truncated
polynomial ring on an even generator u and an odd generator v.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    FrobeniusData,
    GradedBasis,
    GradedElement,
    LinearMap,
)

ONE = Fraction(1)


def _index_set_label(prefix: str, subset) -> str:
    return "%s{%s}" % (prefix, ",".join(str(i) for i in sorted(subset)))


def face_label(subset) -> str:
    return _index_set_label("F", subset)


def reflection_label(bits: int) -> str:
    return _index_set_label("s", [i for i in range(bits.bit_length()) if bits >> i & 1])


def face_degree(n: int, subset) -> int:
    return 2 * (n - len(subset)) + 1


def _subsets(n):
    universe = list(range(n + 1))
    for mask in range(1 << (n + 1)):
        yield frozenset(i for i in universe if mask >> i & 1)


def sphere_string_algebra(n: int) -> FrobeniusData:
    """Face algebra plus degree-zero group generators, shift = sphere dimension.

    F{} is the unit.  Disjoint faces multiply to the face of their union when
    that union is proper, every other face pair multiplies to zero, and all
    products involving a group generator vanish apart from the unit action.
    The coproduct is zero and there is no counit.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    shift = 2 * n + 1
    entries = []
    group_labels = [reflection_label(r) for r in range(1, 1 << (n + 1))]
    for label in group_labels:
        entries.append((label, 0))
    faces = [s for s in _subsets(n) if len(s) <= n]
    faces.sort(key=lambda s: (len(s), sorted(s)))
    face_labels = {s: face_label(s) for s in faces}
    for s in faces:
        entries.append((face_labels[s], face_degree(n, s)))
    basis = GradedBasis(entries)
    unit_label = face_label(())

    product = {}
    for s in faces:
        for t in faces:
            if s & t:
                continue
            union = s | t
            if len(union) > n:
                continue
            product[(face_labels[s], face_labels[t])] = GradedElement(
                basis, {face_labels[union]: ONE}
            )
    for label in group_labels:
        product[(unit_label, label)] = GradedElement(basis, {label: ONE})
        product[(label, unit_label)] = GradedElement(basis, {label: ONE})

    unit = GradedElement(basis, {unit_label: ONE})
    return FrobeniusData(basis, shift, product, {}, unit=unit, tags={"family": "reflection-sphere-string", "n": str(n)})


def excess_rank(n: int, s, t) -> int:
    """Rank of the virtual excess bundle for two fixed spheres, always 2|s & t|."""
    s = frozenset(s)
    t = frozenset(t)
    for subset in (s, t):
        if any(not 0 <= i <= n for i in subset):
            raise ValueError("face indices must lie in 0..%d" % n)
    ambient = 2 * n + 1
    dim_s = 2 * (n - len(s)) + 1
    dim_t = 2 * (n - len(t)) + 1
    dim_union = 2 * (n - len(s | t)) + 1
    rank = ambient - dim_s - dim_t + dim_union
    assert rank == 2 * len(s & t)
    return rank


def face_product_oracle(n: int, s, t) -> dict[str, Fraction]:
    """Recompute a face product from fixed-locus dimensions and excess ranks only.

    The product of two fixed-sphere fundamental classes survives exactly when
    the excess rank vanishes and the target fixed sphere is nonempty; the
    positive-rank contribution dies in degree under the pushforward.
    """
    s = frozenset(s)
    t = frozenset(t)
    if len(s) > n or len(t) > n:
        raise ValueError("faces index proper subsets only")
    if len(s | t) == n + 1:
        return {}
    if excess_rank(n, s, t) > 0:
        return {}
    return {face_label(s | t): ONE}


def loop_monomial_label(bits: int, a: int, eps: int) -> str:
    parts = []
    if bits:
        parts.append(reflection_label(bits))
    if a == 1:
        parts.append("u")
    elif a > 1:
        parts.append("u^%d" % a)
    if eps:
        parts.append("v")
    return "*".join(parts) if parts else "1"


def loop_monomial_degree(n: int, a: int, eps: int) -> int:
    # shifted degree 2n*a - (2n+1)*eps, stored unshifted
    return 2 * n * a - (2 * n + 1) * eps + (2 * n + 1)


def sphere_loop_algebra(n: int, truncation: int) -> FrobeniusData:
    """Group algebra of the reflections times k[u] (truncated) times an odd v.

    Products that would exceed the u-truncation are dropped and the pair is
    flagged in the overflow set; checkers skip and count such pairs.  The
    coproduct is zero.  No BV operator ships with the table: pass one to the
    BV checker to exercise that axiom.
    """
    if n < 1:
        raise ValueError("the loop table needs n >= 1")
    if truncation < 1:
        raise ValueError("truncation must be at least 1")
    order = 1 << (n + 1)
    monomials = []
    for a in range(truncation + 1):
        for eps in (0, 1):
            for bits in range(order):
                monomials.append((bits, a, eps))
    labels = {m: loop_monomial_label(*m) for m in monomials}
    basis = GradedBasis((labels[m], loop_monomial_degree(n, m[1], m[2])) for m in monomials)

    product = {}
    overflow = set()
    for m1 in monomials:
        for m2 in monomials:
            if m1[2] and m2[2]:
                continue  # v squares to zero
            a = m1[1] + m2[1]
            if a > truncation:
                overflow.add((labels[m1], labels[m2]))
                continue
            target = (m1[0] ^ m2[0], a, m1[2] + m2[2])
            product[(labels[m1], labels[m2])] = GradedElement(basis, {labels[target]: ONE})

    unit = GradedElement(basis, {labels[(0, 0, 0)]: ONE})
    return FrobeniusData(
        basis,
        2 * n + 1,
        product,
        {},
        unit=unit,
        tags={"family": "reflection-sphere-loop", "n": str(n), "u-truncation": str(truncation)},
        overflow=overflow,
    )


def phi_map(n: int, truncation: int) -> LinearMap:
    """Constant-loop comparison map from the string table to the loop table.

    The top face goes to the unit, every proper face to zero, and each group
    generator to itself times the odd generator v.
    """
    string = sphere_string_algebra(n)
    loop = sphere_loop_algebra(n, truncation)
    columns = {}
    columns[face_label(())] = GradedElement(loop.basis, {loop_monomial_label(0, 0, 0): ONE})
    for bits in range(1, 1 << (n + 1)):
        columns[reflection_label(bits)] = GradedElement(
            loop.basis, {loop_monomial_label(bits, 0, 1): ONE}
        )
    return LinearMap(string.basis, loop.basis, columns)
