"""Verification suites: every claim the library makes, checked at desk scale.

Each check function covers one acceptance-grade property and returns a list
of CheckResult lines, one per field/context sub-case, with a counterexample
in the detail on failure.  run_all flattens the full battery; the CLI's
verify subcommand and the acceptance tests are both thin wrappers around
this module, so they cannot drift apart.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .curve import WittClass, enumerate_classes, reduce_word, signed_discriminant_class
from .fields import SquareClass, canonical_nonsquare, make_field, minus_one_class
from .forms import (
    DiagonalForm,
    find_isotropic_vector,
    orthogonal_sum,
    square_class,
    witt_decompose,
    witt_equal,
    witt_invariants,
)
from .groupring import verify_isomorphism
from .pic2 import Pic2Group
from .wittk import WittK, from_concrete_form, verify_bullets

_ONE, _NS = SquareClass.ONE, SquareClass.NONSQUARE

BULLET_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (3, 3)]
COUNT_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]
ISOTROPY_PRIMES = [3, 5, 7, 11]
COMPLETENESS_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  ({self.detail})"


def base_ring_identities() -> list[CheckResult]:
    """The four defining identities of the base Witt ring, per sample field."""
    out = []
    for p, e in BULLET_FIELDS:
        field = make_field(p, e)
        report = verify_bullets(field.q % 4, field)
        ok = all(passed for _, passed, _ in report)
        bad = [name for name, passed, _ in report if not passed]
        out.append(
            CheckResult(
                f"base ring identities over F_{field.q}",
                ok,
                "all four hold" if ok else f"failed: {', '.join(bad)}",
            )
        )
    return out


def base_ring_size() -> list[CheckResult]:
    """Anisotropic forms of rank <= 2 fall into exactly 4 classes."""
    out = []
    for p, e in COUNT_FIELDS:
        field = make_field(p, e)
        forms = [DiagonalForm(field, ())]
        forms += [DiagonalForm(field, (a,)) for a in field.nonzero_elements()]
        for a in field.nonzero_elements():
            for b in field.nonzero_elements():
                f = DiagonalForm(field, (a, b))
                if find_isotropic_vector(f) is None:
                    forms.append(f)
        reps: list[DiagonalForm] = []
        for f in forms:
            if not any(witt_equal(f, rep) for rep in reps):
                reps.append(f)
        out.append(
            CheckResult(
                f"class count over F_{field.q}",
                len(reps) == 4,
                f"{len(forms)} anisotropic forms, {len(reps)} classes",
            )
        )
    return out


def base_ring_additive_structure() -> list[CheckResult]:
    """Additive exponent 2 when q = 1 mod 4; <1> of order 4 when q = 3 mod 4."""
    out = []
    exp2 = all((a + a).is_zero() for a in WittK.elements(1))
    out.append(CheckResult("additive exponent 2 in the q = 1 context", exp2, "all four elements"))
    one = WittK.one(3)
    two, three, four = one + one, one + one + one, one + one + one + one
    order4 = (
        not two.is_zero()
        and two == WittK.even(3)
        and three == WittK.s(3)
        and four.is_zero()
    )
    out.append(
        CheckResult(
            "<1> has additive order 4 in the q = 3 context",
            order4,
            f"multiples: {one}, {two}, {three}, {four}",
        )
    )
    # concrete counterparts through forms
    f5 = make_field(5)
    doubled_ok = all(
        witt_decompose(orthogonal_sum(a.to_form(f5), a.to_form(f5)))[1].rank == 0
        for a in WittK.elements(1)
    )
    out.append(CheckResult("doubling vanishes over F_5", doubled_ok, "all four representatives"))
    f7 = make_field(7)
    ones = DiagonalForm(f7, (f7.one,) * 3)
    concrete_ok = witt_equal(ones, DiagonalForm(f7, (canonical_nonsquare(f7),)))
    concrete_ok = concrete_ok and witt_decompose(DiagonalForm(f7, (f7.one,) * 4))[1].rank == 0
    out.append(CheckResult("order-4 behavior over F_7", concrete_ok, "<1,1,1> = <s>, <1,1,1,1> = 0"))
    return out


def finite_field_isotropy() -> list[CheckResult]:
    """Rank 3 and 4 forms are isotropic; decomposition kernels have rank <= 2.

    Entry tuples range over square-class representatives {1, s}, which is
    exhaustive because isotropy is invariant under scaling entries by
    squares.
    """
    out = []
    for p in ISOTROPY_PRIMES:
        field = make_field(p)
        units = (field.one, canonical_nonsquare(field))
        bad = None
        checked = 0
        for n in (3, 4):
            for tup in itertools.product(units, repeat=n):
                checked += 1
                if find_isotropic_vector(DiagonalForm(field, tup)) is None:
                    bad = tup
        out.append(
            CheckResult(
                f"rank 3 and 4 isotropy over F_{p}",
                bad is None,
                f"{checked} forms" if bad is None else f"anisotropic: {bad}",
            )
        )
        bad_kernel = None
        checked = 0
        for n in range(1, 5):
            for tup in itertools.product(units, repeat=n):
                checked += 1
                _, kernel = witt_decompose(DiagonalForm(field, tup))
                if kernel.rank > 2 or (kernel.rank and find_isotropic_vector(kernel) is not None):
                    bad_kernel = tup
        out.append(
            CheckResult(
                f"kernel rank <= 2 over F_{p}",
                bad_kernel is None,
                f"{checked} forms" if bad_kernel is None else f"bad kernel for {bad_kernel}",
            )
        )
    return out


def field_invariant_completeness() -> list[CheckResult]:
    """witt_equal(f, g) iff equal rank parity and signed discriminant.

    Exhaustive for rank <= 4 in two stages that compose by transitivity:
    every form is equivalent (with equal invariants) to its square-class
    pattern, and all pattern pairs satisfy the biconditional directly.
    """
    out = []
    for p, e in COMPLETENESS_FIELDS:
        field = make_field(p, e)
        one, s = field.one, canonical_nonsquare(field)

        def pattern(f: DiagonalForm) -> DiagonalForm:
            return DiagonalForm(
                field, tuple(one if square_class(a) is _ONE else s for a in f.entries)
            )

        bad = None
        total = 0
        nonzero = list(field.nonzero_elements())
        for n in range(5):
            for tup in itertools.product(nonzero, repeat=n):
                total += 1
                f = DiagonalForm(field, tup)
                g = pattern(f)
                if witt_invariants(f) != witt_invariants(g) or not witt_equal(f, g):
                    bad = f
                    break
            if bad is not None:
                break
        out.append(
            CheckResult(
                f"forms match their square-class pattern over F_{field.q}",
                bad is None,
                f"{total} forms" if bad is None else f"counterexample: {bad!r}",
            )
        )

        patterns = [DiagonalForm(field, ())]
        for n in range(1, 5):
            patterns += [
                DiagonalForm(field, tup) for tup in itertools.product((one, s), repeat=n)
            ]
        bad_pair = None
        for f in patterns:
            for g in patterns:
                if witt_equal(f, g) != (witt_invariants(f) == witt_invariants(g)):
                    bad_pair = (f, g)
        out.append(
            CheckResult(
                f"pattern pairs satisfy the biconditional over F_{field.q}",
                bad_pair is None,
                f"{len(patterns)}^2 pairs"
                if bad_pair is None
                else f"counterexample: {bad_pair[0]!r} vs {bad_pair[1]!r}",
            )
        )
    return out


def curve_table_cells() -> list[CheckResult]:
    """Every cell of the two symbolic arithmetic tables, plus the four
    doubling identities, over all parameters with r <= 3 and both contexts."""
    out = []
    for context in (1, 3):
        sigma = minus_one_class(context)
        bad = None
        cells = 0
        for r in range(4):
            group = Pic2Group(r)
            O = group.identity
            odd_params = [(u, L) for u in (_ONE, _NS) for L in group]
            for (u, L), (v, M) in itertools.product(odd_params, repeat=2):
                a = WittClass.odd(u, L, context)
                b = WittClass.odd(v, M, context)
                e_b = WittClass.even(v, M, context)
                e_a = WittClass.even(u, L, context)
                checks = [
                    # multiplication cells
                    (b * a, WittClass.odd(u * v, L * M, context)),
                    (b * e_a, e_a),
                    (e_b * a, e_b),
                    (e_b * e_a, WittClass.zero(context, group)),
                    # addition cells
                    (b + a, WittClass.even(sigma * u * v, L * M, context)),
                    (b + e_a, WittClass.odd(v * u, M * L, context)),
                    (e_b + a, WittClass.odd(v * u, M * L, context)),
                    (e_b + e_a, WittClass.even(v * u, M * L, context)),
                ]
                cells += len(checks)
                for got, expected in checks:
                    if got != expected:
                        bad = (got, expected)
            # the four doubling identities on a single rank-1 class
            for u, L in odd_params:
                a = WittClass.odd(u, L, context)
                checks = [
                    (a + a, WittClass.even(sigma, O, context)),
                    (a + WittClass.odd(_NS * u, L, context), WittClass.even(sigma * _NS, O, context)),
                    (a * a, WittClass.one(context, group)),
                    (a * WittClass.odd(_NS * u, L, context), WittClass.odd(_NS, O, context)),
                ]
                cells += len(checks)
                for got, expected in checks:
                    if got != expected:
                        bad = (got, expected)
        out.append(
            CheckResult(
                f"table cells in the q = {context} context",
                bad is None,
                f"{cells} instantiated cells"
                if bad is None
                else f"got {bad[0]}, expected {bad[1]}",
            )
        )
    return out


def curve_ring_axioms(seed: int = 2024) -> list[CheckResult]:
    """Commutative ring axioms: exhaustive r <= 2, randomized at r = 8."""
    out = []

    def axioms_hold(a: WittClass, b: WittClass, c: WittClass) -> bool:
        return (
            (a + b) + c == a + (b + c)
            and a + b == b + a
            and (a * b) * c == a * (b * c)
            and a * b == b * a
            and a * (b + c) == a * b + a * c
        )

    for context in (1, 3):
        bad = None
        triples = 0
        for r in range(3):
            classes = enumerate_classes(context, Pic2Group(r))
            for a, b, c in itertools.product(classes, repeat=3):
                triples += 1
                if not axioms_hold(a, b, c):
                    bad = (a, b, c)
        out.append(
            CheckResult(
                f"exhaustive ring axioms, r <= 2, q = {context} context",
                bad is None,
                f"{triples} triples" if bad is None else f"counterexample: {bad}",
            )
        )

        rng = random.Random(seed + context)
        group = Pic2Group(8)
        bad = None
        n_random = 60000
        for _ in range(n_random):
            a, b, c = (
                WittClass(
                    rng.choice(("odd", "even")),
                    rng.choice((_ONE, _NS)),
                    group.element(rng.randrange(group.n)),
                    context,
                )
                for _ in range(3)
            )
            if not axioms_hold(a, b, c):
                bad = (a, b, c)
        out.append(
            CheckResult(
                f"randomized ring axioms, r = 8, q = {context} context",
                bad is None,
                f"{n_random} triples" if bad is None else f"counterexample: {bad}",
            )
        )
    return out


def curve_classification() -> list[CheckResult]:
    """Parity plus signed discriminant pair is injective; short words cover."""
    out = []
    for context in (1, 3):
        inj_ok = True
        detail = []
        for r in range(4):
            classes = enumerate_classes(context, Pic2Group(r))
            keys = {(c.parity, signed_discriminant_class(c)) for c in classes}
            if len(keys) != len(classes):
                inj_ok = False
            detail.append(f"r={r}: {len(keys)}/{len(classes)}")
        out.append(
            CheckResult(
                f"invariant pair injective, q = {context} context",
                inj_ok,
                "; ".join(detail),
            )
        )
        words_ok = True
        for r in range(4):
            group = Pic2Group(r)
            letters = [(u, L) for u in (_ONE, _NS) for L in group]
            reached = {reduce_word([], context, group)}
            reached |= {reduce_word([x], context, group) for x in letters}
            reached |= {
                reduce_word([x, y], context, group) for x in letters for y in letters
            }
            if reached != set(enumerate_classes(context, group)):
                words_ok = False
        out.append(
            CheckResult(
                f"words of length <= 2 reach every class, q = {context} context",
                words_ok,
                "r <= 3",
            )
        )
    return out


def presentation_isomorphism() -> list[CheckResult]:
    """The quotient presentation, exhaustive for r <= 2, cardinality at r = 3."""
    out = []
    for context in (1, 3):
        for r in range(4):
            report = verify_isomorphism(context, Pic2Group(r))
            for name, passed, detail in report:
                out.append(
                    CheckResult(f"r = {r}, q = {context} context: {name}", passed, detail)
                )
    return out


def rank_zero_degeneration() -> list[CheckResult]:
    """The r = 0 tables coincide with the base ring under the evident bijection."""
    out = []
    group = Pic2Group(0)
    for context in (1, 3):

        def phi(c: WittClass) -> WittK:
            if c.parity == "odd":
                return WittK.of_unit(c.u, context)
            return WittK.zero(context) if c.u is _ONE else WittK.even(context)

        classes = enumerate_classes(context, group)
        ok = len({phi(c) for c in classes}) == 4
        bad = None
        for a, b in itertools.product(classes, repeat=2):
            if phi(a + b) != phi(a) + phi(b) or phi(a * b) != phi(a) * phi(b):
                ok = False
                bad = (a, b)
        out.append(
            CheckResult(
                f"r = 0 degeneration, q = {context} context",
                ok,
                "bijective and operation-preserving" if ok else f"counterexample: {bad}",
            )
        )
    return out


CRITERIA: list[tuple[str, object]] = [
    ("base ring identities", base_ring_identities),
    ("base ring has four classes", base_ring_size),
    ("additive structure split by q mod 4", base_ring_additive_structure),
    ("finite field isotropy", finite_field_isotropy),
    ("field invariant completeness", field_invariant_completeness),
    ("curve table cells", curve_table_cells),
    ("curve ring axioms", curve_ring_axioms),
    ("curve classification", curve_classification),
    ("presentation isomorphism", presentation_isomorphism),
    ("rank zero degeneration", rank_zero_degeneration),
]


def run_all() -> list[CheckResult]:
    results = []
    for _, fn in CRITERIA:
        results.extend(fn())
    return results
