"""Batch front end: build algebras, run check suites, evaluate surfaces.

One command per invocation.  Exit status 0 when every requested check
passes, 1 when at least one algebraic check fails (the report is still
written), 2 on malformed input.  All output is exact and deterministic.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import grading, groups, liegroup, sphere, tqft
from .core import (
    FrobeniusData,
    PreconditionError,
    UnsupportedStructure,
    basis_vector,
    check_associativity,
    check_coassociativity,
    check_cocommutativity,
    check_cocycle,
    check_frobenius,
    check_graded_commutativity,
    check_morphism,
    check_snake,
    twist_product,
)
from .serialize import FormatError, dumps_algebra, dumps_tensor_terms, loads_algebra


class InputError(ValueError):
    """Bad command input; the message names the offending field."""


PRODUCT_CHECKS = [
    ("associativity", check_associativity),
    ("commutativity", check_graded_commutativity),
]
COPRODUCT_CHECKS = [
    ("coassociativity", check_coassociativity),
    ("cocommutativity", check_cocommutativity),
    ("frobenius", check_frobenius),
]
CHECK_BY_NAME = dict(PRODUCT_CHECKS + COPRODUCT_CHECKS + [("snake", check_snake)])


def run_checks(algebra: FrobeniusData, requested) -> tuple[list[str], bool]:
    lines = []
    all_ok = True
    for name in requested:
        if name == "snake" and (algebra.unit is None or algebra.counit is None):
            lines.append("check snake: SKIPPED (no unit/counit)")
            continue
        report = CHECK_BY_NAME[name](algebra)
        lines.extend(report.lines())
        all_ok = all_ok and report.ok
    return lines, all_ok


def expand_suite(name: str, algebra: FrobeniusData) -> list[str]:
    if name != "all":
        if name not in CHECK_BY_NAME:
            raise InputError("field --check: unknown suite %r" % name)
        return [name]
    suite = [n for n, _ in PRODUCT_CHECKS + COPRODUCT_CHECKS]
    if algebra.unit is not None and algebra.counit is not None:
        suite.append("snake")
    return suite


def _write_artifact(path, text, out):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        out.append("wrote %s" % path)
    else:
        out.append(text.rstrip("\n"))


def _load_group(args):
    if args.group:
        try:
            return groups.builtin_group(args.group)
        except groups.GroupTableError as exc:
            raise InputError("field --group: %s" % exc) from None
    if args.table:
        try:
            with open(args.table, encoding="utf-8") as handle:
                rows = [line.split() for line in handle if line.strip()]
        except OSError as exc:
            raise InputError("field --table: %s" % exc) from None
        if not rows:
            raise InputError("field --table: empty file")
        try:
            return groups.group_from_table(rows[0], rows[1:])
        except groups.GroupTableError as exc:
            raise InputError("field --table: %s" % exc) from None
    if args.perms:
        if args.degree is None:
            raise InputError("field --degree: required with --perms")
        try:
            return groups.group_from_permutations(args.degree, args.perms.split(";"))
        except groups.GroupTableError as exc:
            raise InputError("field --perms: %s" % exc) from None
    raise InputError("field --group: one of --group/--table/--perms is required")


def _load_algebra_file(path) -> FrobeniusData:
    try:
        with open(path, encoding="utf-8") as handle:
            return loads_algebra(handle.read())
    except OSError as exc:
        raise InputError("field --algebra: %s" % exc) from None
    except FormatError as exc:
        raise InputError("field --algebra: %s" % exc) from None


def cmd_dw(args, out):
    group = _load_group(args)
    algebra = groups.dw_algebra(group)
    lines, ok = run_checks(algebra, expand_suite(args.check, algebra)) if args.check else ([], True)
    out.extend(lines)
    _write_artifact(args.out, dumps_algebra(algebra), out)
    return 0 if ok else 1


def cmd_sphere(args, out):
    if args.n is None or args.n < 0:
        raise InputError("field --n: a nonnegative integer is required")
    if args.truncate is not None:
        if args.truncate < 1:
            raise InputError("field --truncate: must be at least 1")
        try:
            algebra = sphere.sphere_loop_algebra(args.n, args.truncate)
        except ValueError as exc:
            raise InputError("field --n: %s" % exc) from None
    else:
        algebra = sphere.sphere_string_algebra(args.n)
    lines, ok = run_checks(algebra, expand_suite(args.check, algebra)) if args.check else ([], True)
    out.extend(lines)
    _write_artifact(args.out, dumps_algebra(algebra), out)
    return 0 if ok else 1


def cmd_check(args, out):
    algebra = _load_algebra_file(args.algebra)
    lines, ok = run_checks(algebra, expand_suite(args.check or "all", algebra))
    out.extend(lines)
    return 0 if ok else 1


def _parse_cocycle_file(path):
    weights = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if not line.strip():
                    continue
                fields = line.split("\t")
                if len(fields) != 3:
                    raise InputError(
                        "field --cocycle: line %d needs left, right, value" % number
                    )
                try:
                    weights[(fields[0], fields[1])] = Fraction(fields[2])
                except (ValueError, ZeroDivisionError):
                    raise InputError(
                        "field --cocycle: line %d has a bad rational %r" % (number, fields[2])
                    ) from None
    except OSError as exc:
        raise InputError("field --cocycle: %s" % exc) from None
    return weights


def cmd_twist(args, out):
    if args.algebra:
        algebra = _load_algebra_file(args.algebra)
    else:
        algebra = groups.dw_algebra(_load_group(args))
    weights = _parse_cocycle_file(args.cocycle)
    try:
        report = check_cocycle(algebra, weights)
    except UnsupportedStructure as exc:
        raise InputError("field --algebra: %s" % exc) from None
    out.extend(report.lines())
    if not report.ok:
        return 1
    twisted = twist_product(algebra, weights)
    lines, ok = run_checks(twisted, expand_suite(args.check, twisted)) if args.check else ([], True)
    out.extend(lines)
    _write_artifact(args.out, dumps_algebra(twisted), out)
    return 0 if ok else 1


def cmd_tqft(args, out):
    if args.algebra:
        algebra = _load_algebra_file(args.algebra)
    else:
        algebra = groups.dw_algebra(_load_group(args))
    try:
        sig = tqft.SurfaceSignature(args.inputs, args.outputs, args.genus)
    except ValueError as exc:
        raise InputError("field --inputs/--outputs/--genus: %s" % exc) from None
    labels = [token for token in (args.args.split(";") if args.args else []) if token]
    if len(labels) != sig.inputs:
        raise InputError(
            "field --args: expected %d basis labels separated by ';', got %d"
            % (sig.inputs, len(labels))
        )
    elements = []
    for label in labels:
        if label not in algebra.basis:
            raise InputError("field --args: %r is not a basis label" % label)
        elements.append(basis_vector(algebra, label))
    try:
        result = tqft.surface_operation(algebra, sig, elements)
    except PreconditionError as exc:
        raise InputError("field --inputs/--outputs: %s" % exc) from None
    if sig.outputs == 0:
        tag = algebra.tags.get("counit", "calibrated, not canonical")
        out.append("closed invariant (counit %s): %s" % (tag, result.terms.get((), Fraction(0))))
    _write_artifact(args.out, dumps_tensor_terms(result.terms, result.arity), out)
    return 0


def cmd_phi(args, out):
    if args.n is None or args.n < 1:
        raise InputError("field --n: a positive integer is required")
    truncation = args.truncate if args.truncate is not None else 2
    if truncation < 1:
        raise InputError("field --truncate: must be at least 1")
    comparison = sphere.phi_map(args.n, truncation)
    string_algebra = sphere.sphere_string_algebra(args.n)
    loop_algebra = sphere.sphere_loop_algebra(args.n, truncation)
    report = check_morphism(comparison, string_algebra, loop_algebra)
    out.extend(report.lines())
    lines = []
    for label in comparison.source.labels():
        column = comparison.columns.get(label)
        image = "0" if column is None else " + ".join(
            "%s*%s" % (c, l) for l, c in sorted(column.terms.items())
        )
        lines.append("phi\t%s\t%s" % (label, image))
    _write_artifact(args.out, "\n".join(lines) + "\n", out)
    return 0 if report.ok else 1


def cmd_lie(args, out):
    try:
        if args.lie_name:
            profile = liegroup.builtin_profile(args.lie_name)
        elif args.exponents:
            profile = liegroup.profile_from_exponents(
                [int(tok) for tok in args.exponents.split(",")]
            )
        else:
            raise InputError("field --lie-name: one of --lie-name/--exponents is required")
    except ValueError as exc:
        raise InputError("field --lie-name/--exponents: %s" % exc) from None
    bound = args.max_degree
    keys = liegroup.monomial_basis(profile, bound)
    out.append(
        "profile rank %d exponents %s dimension %d, %d monomials up to degree %d"
        % (profile.rank, ",".join(map(str, profile.exponents)), profile.dimension, len(keys), bound)
    )
    ok = True
    failures = 0
    unit = liegroup.unit_monomial(profile)
    for key in keys:
        mono = {key: Fraction(1)}
        if liegroup.dual_string_product(profile, unit, mono) != mono:
            failures += 1
    out.append("check unit: %s (%d cases)" % ("PASS" if not failures else "FAIL", len(keys)))
    ok = ok and not failures
    failures = 0
    for ka in keys:
        ma = {ka: Fraction(1)}
        for kb in keys:
            mb = {kb: Fraction(1)}
            forward = liegroup.dual_string_product(profile, ma, mb)
            backward = liegroup.dual_string_product(profile, mb, ma)
            if forward != backward:
                failures += 1
            factored = liegroup.m_shriek(
                profile, liegroup.delta_star(profile, liegroup.pair_element(profile, ma, mb))
            )
            if forward != factored:
                failures += 1
    out.append(
        "check symmetry and factorization: %s (%d pairs)"
        % ("PASS" if not failures else "FAIL", len(keys) ** 2)
    )
    ok = ok and not failures
    failures = 0
    for ka in keys:
        ma = {ka: Fraction(1)}
        for kb in keys:
            mb = {kb: Fraction(1)}
            ab = liegroup.dual_string_product(profile, ma, mb)
            for kc in keys:
                mc = {kc: Fraction(1)}
                left = liegroup.dual_string_product(profile, ab, mc)
                right = liegroup.dual_string_product(
                    profile, ma, liegroup.dual_string_product(profile, mb, mc)
                )
                if left != right:
                    failures += 1
    out.append(
        "check associativity: %s (%d triples)"
        % ("PASS" if not failures else "FAIL", len(keys) ** 3)
    )
    ok = ok and not failures
    if args.out:
        lines = []
        for ka in keys:
            for kb in keys:
                result = liegroup.dual_string_product(
                    profile, {ka: Fraction(1)}, {kb: Fraction(1)}
                )
                lines.append(
                    "product\t%s\t%s\t%s"
                    % (
                        liegroup.render_monomial(profile, ka),
                        liegroup.render_monomial(profile, kb),
                        liegroup.render_element(profile, result),
                    )
                )
        _write_artifact(args.out, "\n".join(lines) + "\n", out)
    return 0 if ok else 1


def cmd_grading(args, out):
    try:
        orders = [int(tok) for tok in args.orders.split(",")]
        weight_rows = [
            [int(tok) for tok in row.split(",")] for row in args.weights.split(";")
        ]
    except ValueError:
        raise InputError("field --orders/--weights: integers required") from None
    if any(m < 1 for m in orders):
        raise InputError("field --orders: orders must be positive")
    if len(weight_rows) != len(orders):
        raise InputError("field --weights: one weight row per cyclic factor")
    elements = [()]
    for m in orders:
        elements = [prefix + (t,) for prefix in elements for t in range(m)]
    ok = True
    table = []
    for element in elements:
        try:
            eigen = grading.eigen_from_action(orders, weight_rows, element)
        except ValueError as exc:
            raise InputError("field --weights: %s" % exc) from None
        report = grading.check_age_dimension(eigen)
        ok = ok and report.ok
        table.append(
            "sector\t%s\tage\t%s\tdim\t%d\torbdeg-offset\t%s%s"
            % (
                ",".join(map(str, element)),
                grading.age(eigen),
                grading.sector_dimension(eigen),
                2 * grading.age(eigen),
                "" if report.ok else "\tAGE-DIMENSION-FAIL",
            )
        )
    out.extend(table)
    out.append("check age-dimension: %s (%d sectors)" % ("PASS" if ok else "FAIL", len(elements)))
    if args.out:
        _write_artifact(args.out, "\n".join(table) + "\n", out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringtop",
        description="exact Frobenius/BV algebra tables, checks, and surface operations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_flags(p):
        p.add_argument("--group", help="built-in group name, e.g. S3 or Z/4")
        p.add_argument("--table", help="multiplication table file")
        p.add_argument("--perms", help="semicolon-separated permutation generators")
        p.add_argument("--degree", type=int, help="permutation degree for --perms")

    p = sub.add_parser("dw", help="class algebra of a finite group")
    add_group_flags(p)
    p.add_argument("--check", help="suite name or 'all'")
    p.add_argument("--out", help="write the algebra file here")

    p = sub.add_parser("sphere", help="reflection-sphere string or loop table")
    p.add_argument("--n", type=int)
    p.add_argument("--truncate", type=int, help="build the loop table with this u bound")
    p.add_argument("--check", help="suite name or 'all'")
    p.add_argument("--out")

    p = sub.add_parser("check", help="run checks on a serialized algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--check", default="all")

    p = sub.add_parser("twist", help="twist a product by a weight function")
    add_group_flags(p)
    p.add_argument("--algebra", help="serialized algebra instead of a group")
    p.add_argument("--cocycle", required=True, help="tab-separated left, right, value")
    p.add_argument("--check", help="suite to run on the twisted algebra")
    p.add_argument("--out")

    p = sub.add_parser("tqft", help="evaluate a surface operation")
    add_group_flags(p)
    p.add_argument("--algebra")
    p.add_argument("--inputs", type=int, required=True)
    p.add_argument("--outputs", type=int, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--args", help="semicolon-separated input basis labels")
    p.add_argument("--out")

    p = sub.add_parser("phi", help="constant-loop comparison map for the reflection sphere")
    p.add_argument("--n", type=int)
    p.add_argument("--truncate", type=int)
    p.add_argument("--out")

    p = sub.add_parser("lie", help="dual product suite for a compact group profile")
    p.add_argument("--lie-name", dest="lie_name")
    p.add_argument("--exponents", help="comma-separated exponent list")
    p.add_argument("--max-degree", dest="max_degree", type=int, default=10)
    p.add_argument("--out")

    p = sub.add_parser("grading", help="sector table for a diagonal abelian action")
    p.add_argument("--orders", required=True, help="comma-separated cyclic orders")
    p.add_argument("--weights", required=True, help="semicolon-separated weight rows")
    p.add_argument("--out")
    return parser


COMMANDS = {
    "dw": cmd_dw,
    "sphere": cmd_sphere,
    "check": cmd_check,
    "twist": cmd_twist,
    "tqft": cmd_tqft,
    "phi": cmd_phi,
    "lie": cmd_lie,
    "grading": cmd_grading,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    out: list[str] = []
    try:
        status = COMMANDS[args.command](args, out)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    for line in out:
        print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
