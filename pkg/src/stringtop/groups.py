"""Finite groups and the Frobenius algebra on the center of their group algebra.

Groups are plain multiplication tables, built either directly or as the
closure of permutation generators.  The class algebra carries the orbit-sum
convolution product, the pair-counting coproduct calibrated against the
compatibility and counit checks, transfer maps between coinvariant spaces,
and the commuting-tuple surface count used as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    FrobeniusData,
    GradedBasis,
    GradedElement,
    LinearMap,
    PreconditionError,
    TensorElement,
    check_frobenius,
    check_snake,
)

ONE = Fraction(1)


class GroupTableError(ValueError):
    """Invalid multiplication table; the message names a witness."""


class FiniteGroupTable:
    """Element labels plus an index-valued multiplication table."""

    __slots__ = ("elements", "mult", "identity", "inverse", "_index")

    def __init__(self, elements, mult, identity, inverse):
        self.elements = list(elements)
        self.mult = mult
        self.identity = identity
        self.inverse = inverse
        self._index = {label: i for i, label in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def index(self, label):
        return self._index[label]

    def op(self, i, j):
        return self.mult[i][j]

    def inv(self, i):
        return self.inverse[i]

    def element_order(self, i):
        k, x = 1, i
        while x != self.identity:
            x = self.op(x, i)
            k += 1
        return k


def group_from_table(elements, mult) -> FiniteGroupTable:
    """Validate a square table: associativity, two-sided identity, inverses."""
    elements = [str(e) for e in elements]
    n = len(elements)
    index = {label: i for i, label in enumerate(elements)}
    if len(index) != n:
        raise GroupTableError("element labels are not pairwise distinct")
    rows = []
    for row in mult:
        row = list(row)
        if len(row) != n:
            raise GroupTableError("table is not %d x %d" % (n, n))
        out = []
        for cell in row:
            if isinstance(cell, int):
                if not 0 <= cell < n:
                    raise GroupTableError("table index %d out of range" % cell)
                out.append(cell)
            else:
                if cell not in index:
                    raise GroupTableError("table entry %r is not an element label" % cell)
                out.append(index[cell])
        rows.append(out)
    if len(rows) != n:
        raise GroupTableError("table is not %d x %d" % (n, n))
    identity = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("table has no two-sided identity")
    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            for c in range(n):
                if rows[ab][c] != rows[a][rows[b][c]]:
                    raise GroupTableError(
                        "associativity fails at (%s, %s, %s)"
                        % (elements[a], elements[b], elements[c])
                    )
    inverse = [None] * n
    for a in range(n):
        for b in range(n):
            if rows[a][b] == identity and rows[b][a] == identity:
                inverse[a] = b
                break
        if inverse[a] is None:
            raise GroupTableError("element %s has no inverse" % elements[a])
    return FiniteGroupTable(elements, rows, identity, inverse)


# ---------------------------------------------------------------------------
# permutations


def compose_perms(p, q):
    """Left-to-right function application: (p . q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def invert_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def parse_cycles(text, degree):
    """Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; "e" is identity."""
    text = text.strip()
    images = list(range(degree))
    if text in ("e", "()", ""):
        return tuple(images)
    if not text.startswith("("):
        raise GroupTableError("permutation %r is not in cycle notation" % text)
    for chunk in text.replace(")(", ")|(").split("|"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise GroupTableError("permutation %r is not in cycle notation" % text)
        points = chunk[1:-1].replace(",", " ").split()
        try:
            cycle = [int(p) - 1 for p in points]
        except ValueError:
            raise GroupTableError("permutation %r has a non-integer point" % text) from None
        if any(not 0 <= p < degree for p in cycle):
            raise GroupTableError("permutation %r moves a point outside 1..%d" % (text, degree))
        if len(set(cycle)) != len(cycle):
            raise GroupTableError("permutation %r repeats a point" % text)
        for pos, p in enumerate(cycle):
            images[p] = cycle[(pos + 1) % len(cycle)]
    return tuple(images)


def cycle_label(perm):
    """Canonical cycle-notation label, "e" for the identity."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = perm[x]
        cycles.append(cycle)
    if not cycles:
        return "e"
    return "".join("(%s)" % " ".join(str(p + 1) for p in cycle) for cycle in cycles)


def group_from_permutations(degree, generators) -> FiniteGroupTable:
    """Closure of permutation generators, labelled by canonical cycle notation."""
    if degree <= 0:
        raise GroupTableError("permutation degree must be positive")
    gens = []
    for gen in generators:
        perm = parse_cycles(gen, degree) if isinstance(gen, str) else tuple(gen)
        if sorted(perm) != list(range(degree)):
            raise GroupTableError("generator %r is not a permutation of 1..%d" % (gen, degree))
        gens.append(perm)
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = [identity]
    while queue:
        current = queue.pop(0)
        for gen in gens:
            nxt = compose_perms(current, gen)
            if nxt not in index:
                index[nxt] = len(elements)
                elements.append(nxt)
                queue.append(nxt)
    n = len(elements)
    mult = [[index[compose_perms(elements[i], elements[j])] for j in range(n)] for i in range(n)]
    inverse = [index[invert_perm(p)] for p in elements]
    return FiniteGroupTable([cycle_label(p) for p in elements], mult, 0, inverse)


# ---------------------------------------------------------------------------
# conjugacy classes


class ConjugacyPartition:
    """Partition of the element indices into conjugation orbits."""

    __slots__ = ("classes", "representative")

    def __init__(self, classes, representative):
        self.classes = classes
        self.representative = representative

    def __len__(self):
        return len(self.classes)

    def sizes(self):
        return sorted(len(c) for c in self.classes)


def conjugacy_classes(group: FiniteGroupTable) -> ConjugacyPartition:
    n = len(group)
    assigned = [None] * n
    raw = []
    for start in range(n):
        if assigned[start] is not None:
            continue
        orbit = set()
        for s in range(n):
            orbit.add(group.op(group.op(s, start), group.inv(s)))
        orbit = sorted(orbit)
        for x in orbit:
            assigned[x] = len(raw)
        raw.append(orbit)
    # representative: smallest element order, ties by smallest index
    keyed = []
    for orbit in raw:
        rep = min(orbit, key=lambda x: (group.element_order(x), x))
        keyed.append((group.element_order(rep), rep, orbit))
    keyed.sort()
    classes = [orbit for _, _, orbit in keyed]
    representative = [rep for _, rep, _ in keyed]
    return ConjugacyPartition(classes, representative)


# ---------------------------------------------------------------------------
# built-in groups


def _cyclic(n):
    elements = [str(k) for k in range(n)]
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_from_table(elements, mult)


def _klein_four():
    elements = ["00", "01", "10", "11"]
    mult = [[(i ^ j) for j in range(4)] for i in range(4)]
    return group_from_table(elements, mult)


_BUILTIN_PERM_GROUPS = {
    "S3": (3, ["(1 2)", "(1 2 3)"]),
    "S4": (4, ["(1 2)", "(1 2 3 4)"]),
    "D4": (4, ["(1 2 3 4)", "(1 3)"]),
    "A4": (4, ["(1 2 3)", "(2 3 4)"]),
    # quaternions acting on themselves by left translation
    "Q8": (8, ["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"]),
}


def builtin_group_names():
    return ["Z/%d" % n for n in range(1, 13)] + ["Z2xZ2", "S3", "S4", "D4", "Q8", "A4"]


def builtin_group(name: str) -> FiniteGroupTable:
    key = name.strip().upper().replace("_", "").replace(" ", "")
    if key in ("Z2XZ2", "Z/2XZ/2", "V4"):
        return _klein_four()
    if key.startswith("Z/") or key.startswith("C"):
        digits = key[2:] if key.startswith("Z/") else key[1:]
        if digits.isdigit() and 1 <= int(digits) <= 12:
            return _cyclic(int(digits))
        raise GroupTableError("unknown built-in group %r" % name)
    if key in _BUILTIN_PERM_GROUPS:
        degree, gens = _BUILTIN_PERM_GROUPS[key]
        return group_from_permutations(degree, gens)
    raise GroupTableError("unknown built-in group %r" % name)


# ---------------------------------------------------------------------------
# the class algebra


def class_label(group, rep_index):
    return "[%s]" % group.elements[rep_index]


def _pair_counts(group, class_of, rep):
    """N[(D, E)] = number of factorizations rep = h k with h in D, k in E."""
    counts = {}
    for h in range(len(group)):
        k = group.op(group.inv(h), rep)
        key = (class_of[h], class_of[k])
        counts[key] = counts.get(key, 0) + 1
    return counts


def dw_algebra(group: FiniteGroupTable) -> FrobeniusData:
    """Frobenius algebra on the conjugacy-class basis, all in degree 0.

    Product: convolution of orbit sums, so the coefficient of [E] in
    [C]*[D] counts pairs (g, h) in C x D with g h equal to the chosen
    representative of E.  Coproduct: factorization pair counts through the
    class representative, with the class-size normalization fixed by the
    compatibility and counit checks at construction time.
    """
    partition = conjugacy_classes(group)
    n_classes = len(partition)
    class_of = {}
    for ci, orbit in enumerate(partition.classes):
        for x in orbit:
            class_of[x] = ci
    labels = [class_label(group, rep) for rep in partition.representative]
    basis = GradedBasis((label, 0) for label in labels)

    product = {}
    for ci in range(n_classes):
        for cj in range(n_classes):
            tallies = [0] * n_classes
            hit = [0] * len(group)
            for g in partition.classes[ci]:
                for h in partition.classes[cj]:
                    hit[group.op(g, h)] += 1
            for ck, rep in enumerate(partition.representative):
                tallies[ck] = hit[rep]
            terms = {labels[ck]: Fraction(t) for ck, t in enumerate(tallies) if t}
            if terms:
                product[(labels[ci], labels[cj])] = GradedElement(basis, terms)

    # factorization counts, checked against every other class representative
    counts = []
    for ci in range(n_classes):
        rep = partition.representative[ci]
        base = _pair_counts(group, class_of, rep)
        for other in partition.classes[ci]:
            if other != rep and _pair_counts(group, class_of, other) != base:
                raise GroupTableError(
                    "coproduct counts differ between representatives of class %s" % labels[ci]
                )
        counts.append(base)

    def tensorize(scalefn):
        table = {}
        for ci in range(n_classes):
            terms = {}
            for (d, e), count in counts[ci].items():
                value = Fraction(count) * scalefn(ci, d, e)
                if value:
                    terms[(labels[d], labels[e])] = value
            table[labels[ci]] = TensorElement(basis, terms)
        return table

    sizes = [len(c) for c in partition.classes]
    candidates = [
        ("size-normalized", tensorize(lambda c, d, e: Fraction(sizes[c], sizes[d] * sizes[e]))),
        ("orbit-sum", tensorize(lambda c, d, e: ONE)),
    ]

    identity_label = labels[class_of[group.identity]]
    unit = GradedElement(basis, {identity_label: ONE})

    def calibrate_counit(coproduct):
        # solve (counit x id) delta = id for the scalar on the identity class
        scale = None
        for label in labels:
            kept = {
                right: value
                for (left, right), value in coproduct[label].terms.items()
                if left == identity_label
            }
            if set(kept) != {label}:
                return None
            if scale is None:
                scale = kept[label]
            elif kept[label] != scale:
                return None
        return None if not scale else {identity_label: 1 / scale}

    passing = []
    for name, coproduct in candidates:
        counit = calibrate_counit(coproduct)
        if counit is None:
            continue
        trial = FrobeniusData(
            basis, 0, product, coproduct, unit=unit, counit=counit,
            tags={"product-normalization": "orbit-sum", "coproduct-normalization": name,
                  "counit": "calibrated, not canonical"},
        )
        if check_frobenius(trial).ok and check_snake(trial).ok:
            passing.append(trial)
    if not passing:
        raise GroupTableError("no coproduct normalization satisfies the compatibility checks")
    if len(passing) == 2 and passing[0].coproduct != passing[1].coproduct:
        raise GroupTableError("coproduct normalization is not determined by the checks")
    return passing[0]


# ---------------------------------------------------------------------------
# transfer maps on coinvariants


def _check_subgroup(group: FiniteGroupTable, members):
    idx = set()
    for member in members:
        if isinstance(member, int):
            if not 0 <= member < len(group):
                raise GroupTableError("subgroup index %d out of range" % member)
            idx.add(member)
        else:
            try:
                idx.add(group.index(member))
            except KeyError:
                raise GroupTableError(
                    "subgroup member %r is not a group element" % (member,)
                ) from None
    idx = sorted(idx)
    member_set = set(idx)
    if group.identity not in member_set:
        raise GroupTableError("subgroup does not contain the identity")
    for a in idx:
        if group.inv(a) not in member_set:
            raise GroupTableError("subgroup is not closed under inverses at %s" % group.elements[a])
        for b in idx:
            if group.op(a, b) not in member_set:
                raise GroupTableError(
                    "subgroup is not closed under multiplication at (%s, %s)"
                    % (group.elements[a], group.elements[b])
                )
    return idx


def _validate_action(group: FiniteGroupTable, points, action):
    if len(action) != len(group):
        raise GroupTableError("action must assign one permutation per group element")
    perms = []
    for i, perm in enumerate(action):
        perm = tuple(perm)
        if sorted(perm) != list(range(len(points))):
            raise GroupTableError("action of %s is not a permutation" % group.elements[i])
        perms.append(perm)
    if perms[group.identity] != tuple(range(len(points))):
        raise GroupTableError("identity must act trivially")
    for a in range(len(group)):
        for b in range(len(group)):
            composite = tuple(perms[a][perms[b][x]] for x in range(len(points)))
            if composite != perms[group.op(a, b)]:
                raise GroupTableError(
                    "action is not compatible with the multiplication at (%s, %s)"
                    % (group.elements[a], group.elements[b])
                )
    return perms


def _orbits(points, perms, acting):
    orbit_of = [None] * len(points)
    orbits = []
    for start in range(len(points)):
        if orbit_of[start] is not None:
            continue
        members = sorted({perms[s][start] for s in acting} | {start})
        # close under the action
        frontier = list(members)
        seen = set(members)
        while frontier:
            x = frontier.pop()
            for s in acting:
                y = perms[s][x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        members = sorted(seen)
        for x in members:
            orbit_of[x] = len(orbits)
        orbits.append(members)
    return orbits, orbit_of


def conjugation_action(group: FiniteGroupTable):
    """The group acting on its own element list by conjugation."""
    points = list(group.elements)
    perms = []
    for s in range(len(group)):
        perms.append(tuple(group.op(group.op(s, x), group.inv(s)) for x in range(len(group))))
    return points, perms


def transfer(group: FiniteGroupTable, subgroup, points, action, coset_reps=None) -> LinearMap:
    """Coset-sum transfer from whole-group coinvariants to subgroup coinvariants.

    Sends the class of a point x to the sum over coset representatives h of
    the subgroup class of h.x.  Representatives default to the smallest index
    in each coset; any choice yields the same map.
    """
    sub = _check_subgroup(group, subgroup)
    perms = _validate_action(group, points, action)
    big_orbits, _ = _orbits(points, perms, range(len(group)))
    sub_orbits, sub_orbit_of = _orbits(points, perms, sub)

    if coset_reps is None:
        seen = set()
        coset_reps = []
        for h in range(len(group)):
            coset = frozenset(group.op(g, h) for g in sub)
            if coset not in seen:
                seen.add(coset)
                coset_reps.append(min(coset))
    else:
        coset_reps = [group.index(r) if not isinstance(r, int) else r for r in coset_reps]
        if len({frozenset(group.op(g, h) for g in sub) for h in coset_reps}) != len(coset_reps) or len(
            coset_reps
        ) * len(sub) != len(group):
            raise GroupTableError("supplied coset representatives do not cover the cosets")

    source = GradedBasis(("[%s]" % points[orbit[0]], 0) for orbit in big_orbits)
    target = GradedBasis(("[%s]" % points[orbit[0]], 0) for orbit in sub_orbits)
    columns = {}
    for orbit in big_orbits:
        x = orbit[0]
        terms = {}
        for h in coset_reps:
            image = sub_orbit_of[perms[h][x]]
            label = "[%s]" % points[sub_orbits[image][0]]
            terms[label] = terms.get(label, Fraction(0)) + 1
        columns["[%s]" % points[x]] = GradedElement(target, terms)
    return LinearMap(source, target, columns)


def coinvariant_projection(group: FiniteGroupTable, subgroup, points, action) -> LinearMap:
    """Natural projection from subgroup coinvariants to whole-group coinvariants."""
    sub = _check_subgroup(group, subgroup)
    perms = _validate_action(group, points, action)
    big_orbits, big_orbit_of = _orbits(points, perms, range(len(group)))
    sub_orbits, _ = _orbits(points, perms, sub)
    source = GradedBasis(("[%s]" % points[orbit[0]], 0) for orbit in sub_orbits)
    target = GradedBasis(("[%s]" % points[orbit[0]], 0) for orbit in big_orbits)
    columns = {}
    for orbit in sub_orbits:
        x = orbit[0]
        big = big_orbit_of[x]
        columns["[%s]" % points[x]] = GradedElement(
            target, {"[%s]" % points[big_orbits[big][0]]: ONE}
        )
    return LinearMap(source, target, columns)


# ---------------------------------------------------------------------------
# commuting-tuple counts


def commuting_tuple_count(group: FiniteGroupTable, genus: int) -> Fraction:
    """Number of 2g-tuples with vanishing product of commutators, over |G|.

    Exhaustive: the genus-one commutator distribution is enumerated over all
    pairs, then convolved with itself through the partial products.
    """
    if genus < 1:
        raise PreconditionError("genus must be at least 1; use the surface evaluator for genus 0")
    n = len(group)
    single = [0] * n
    for a in range(n):
        for b in range(n):
            c = group.op(group.op(group.op(a, b), group.inv(a)), group.inv(b))
            single[c] += 1
    current = list(single)
    for _ in range(genus - 1):
        nxt = [0] * n
        for x in range(n):
            if not current[x]:
                continue
            for y in range(n):
                if single[y]:
                    nxt[group.op(x, y)] += current[x] * single[y]
        current = nxt
    return Fraction(current[group.identity], n)
