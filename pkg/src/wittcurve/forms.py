"""Symmetric bilinear forms over F_q: diagonalization, invariants, isotropy,
and Witt decomposition.

Forms come in two shapes: GramForm wraps an arbitrary symmetric matrix,
DiagonalForm wraps a nondegenerate diagonal <a_1,...,a_n>.  diagonalize
bridges the two with a deterministic congruence reduction and reports the
radical dimension when the input is degenerate.

Witt decomposition peels hyperbolic planes off a diagonal form until the
anisotropic kernel remains (rank <= 2 over a finite field).  Rather than
scanning the full q^n space for an isotropic vector at every step, the
splitter first cancels any entry pair <a, b> with -ab a square (such a pair
is already a hyperbolic plane), and only then scans the leading rank-3
subform, which is always isotropic over a finite field.  This keeps every
scan within q^3 regardless of the rank of the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .fields import (
    TABLE_LIMIT,
    FieldElement,
    FiniteField,
    SquareClass,
    square_class,
)

DEFAULT_MAX_SEARCH = 10**7


class DegenerateFormError(ValueError):
    """Raised when an operation requires a nondegenerate form.

    radical_dim is the dimension of the radical (kernel of the Gram matrix).
    """

    def __init__(self, radical_dim: int):
        self.radical_dim = radical_dim
        super().__init__(f"degenerate form: radical has dimension {radical_dim}")


class GramForm:
    """A symmetric bilinear form given by its Gram matrix, possibly degenerate."""

    __slots__ = ("field", "matrix")

    def __init__(self, field: FiniteField, matrix: Sequence[Sequence[FieldElement]]):
        rows = tuple(tuple(row) for row in matrix)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for x in row:
                if not isinstance(x, FieldElement) or x.field != field:
                    raise ValueError("Gram entries must be elements of the given field")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")
        self.field = field
        self.matrix = rows

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GramForm):
            return NotImplemented
        return self.field == other.field and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.field, self.matrix))

    def __repr__(self) -> str:
        body = "; ".join(",".join(str(x) for x in row) for row in self.matrix)
        return f"GramForm({self.field!r}, [{body}])"


class DiagonalForm:
    """A nondegenerate diagonal form <a_1,...,a_n>; every entry nonzero."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FiniteField, entries: Sequence[FieldElement]):
        entries = tuple(entries)
        for a in entries:
            if not isinstance(a, FieldElement) or a.field != field:
                raise ValueError("entries must be elements of the given field")
            if not a:
                raise ValueError("diagonal entries must be nonzero (nondegenerate)")
        self.field = field
        self.entries = entries

    @property
    def rank(self) -> int:
        return len(self.entries)

    def negate(self) -> "DiagonalForm":
        return DiagonalForm(self.field, tuple(-a for a in self.entries))

    def bilinear(self, v: Sequence[FieldElement], w: Sequence[FieldElement]) -> FieldElement:
        total = self.field.zero
        for a, x, y in zip(self.entries, v, w):
            total = total + a * x * y
        return total

    def value(self, v: Sequence[FieldElement]) -> FieldElement:
        return self.bilinear(v, v)

    def gram(self) -> GramForm:
        n = self.rank
        z = self.field.zero
        rows = [[self.entries[i] if i == j else z for j in range(n)] for i in range(n)]
        return GramForm(self.field, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagonalForm):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.field, self.entries))

    def __repr__(self) -> str:
        return f"<{','.join(str(a) for a in self.entries)}> over {self.field!r}"


@dataclass(frozen=True)
class WittInvariants:
    """The complete pair of Witt-class invariants over a finite field."""

    rank_parity: int
    signed_disc: SquareClass


def orthogonal_sum(f: DiagonalForm, g: DiagonalForm) -> DiagonalForm:
    _same_field(f, g)
    return DiagonalForm(f.field, f.entries + g.entries)


def tensor_product(f: DiagonalForm, g: DiagonalForm) -> DiagonalForm:
    _same_field(f, g)
    return DiagonalForm(f.field, tuple(a * b for a in f.entries for b in g.entries))


def hyperbolic_plane(field: FiniteField) -> DiagonalForm:
    return DiagonalForm(field, (field.one, -field.one))


def _same_field(f, g) -> None:
    if f.field != g.field:
        raise ValueError(f"forms over distinct fields: {f.field!r} vs {g.field!r}")


def determinant_class(f: DiagonalForm) -> SquareClass:
    prod = f.field.one
    for a in f.entries:
        prod = prod * a
    return square_class(prod) if f.rank else SquareClass.ONE


def signed_discriminant(f: DiagonalForm) -> SquareClass:
    """Square class of (-1)^(n(n+1)/2) times the determinant."""
    n = f.rank
    if n == 0:
        return SquareClass.ONE
    prod = f.field.one
    for a in f.entries:
        prod = prod * a
    if (n * (n + 1) // 2) % 2:
        prod = -prod
    return square_class(prod)


def witt_invariants(f: DiagonalForm) -> WittInvariants:
    return WittInvariants(f.rank % 2, signed_discriminant(f))


def diagonalize(g: GramForm) -> DiagonalForm:
    return diagonalize_with_basis(g)[0]


def diagonalize_with_basis(g: GramForm) -> tuple[DiagonalForm, tuple[tuple[FieldElement, ...], ...]]:
    """Congruence-reduce g to diagonal shape, returning (form, T) with TᵀgT diagonal.

    Pivot rule: at each step take the first index with nonzero diagonal in the
    remaining block; if the whole remaining diagonal is zero, add basis vector
    j to basis vector i for the first off-diagonal nonzero (i, j), which makes
    the (i, i) entry 2g[i][j], nonzero away from characteristic 2.
    Degenerate input raises DegenerateFormError naming the radical dimension.
    """
    field = g.field
    n = g.rank
    m = [list(row) for row in g.matrix]
    t = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

    def add_basis(i: int, j: int, c: FieldElement) -> None:
        # basis_i <- basis_i + c * basis_j, i.e. row/col i gain c * row/col j
        for k in range(n):
            m[i][k] = m[i][k] + c * m[j][k]
        for k in range(n):
            m[k][i] = m[k][i] + c * m[k][j]
        for k in range(n):
            t[k][i] = t[k][i] + c * t[k][j]

    def swap_basis(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][i]), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]), None)
            if off is None:
                break  # remaining block is zero: the radical
            add_basis(off[0], off[1], field.one)
            piv = off[0]
        if piv != k:
            swap_basis(k, piv)
        inv = m[k][k].inverse()
        for i in range(k + 1, n):
            if m[i][k]:
                add_basis(i, k, -(m[i][k] * inv))

    diag = [m[i][i] for i in range(n)]
    radical = sum(1 for d in diag if not d)
    if radical:
        raise DegenerateFormError(radical)
    return DiagonalForm(field, diag), tuple(tuple(row) for row in t)


def find_isotropic_vector(
    f: DiagonalForm, max_search: int = DEFAULT_MAX_SEARCH
) -> Optional[tuple[FieldElement, ...]]:
    """First nonzero v with f(v, v) = 0 in the deterministic scan order, or None.

    One representative per projective point is visited: vectors grouped by the
    position of their first nonzero coordinate (from last position to first),
    that coordinate normalized to 1, later coordinates in ascending
    lexicographic order.  Scans with q^rank beyond max_search are rejected.
    """
    field = f.field
    n = f.rank
    if field.q**n > max_search:
        raise ValueError(f"scan size {field.q}^{n} exceeds max_search = {max_search}")
    if n == 0:
        return None
    if field.q <= TABLE_LIMIT:
        add, mul = field.op_tables()
        codes = np.array([a.index for a in f.entries], dtype=np.int64)
        hit = _kernels.first_isotropic(codes, add, mul)
        if hit is None:
            return None
        v = tuple(field.element_from_index(int(i)) for i in hit)
    else:
        v = _scan_python(f)
        if v is None:
            return None
    assert f.value(v) == field.zero
    return v


def _scan_python(f: DiagonalForm) -> Optional[tuple[FieldElement, ...]]:
    # mirrors the kernel enumeration exactly, for fields too large to table
    field = f.field
    n = f.rank
    elems = None if field.q > TABLE_LIMIT else list(field.elements())

    def elem(i: int) -> FieldElement:
        return elems[i] if elems is not None else field.element_from_index(i)

    for lead in range(n - 1, -1, -1):
        m = n - 1 - lead
        tail_entries = f.entries[lead + 1 :]
        base = f.entries[lead]
        digits = [0] * m
        while True:
            total = base
            for a, d in zip(tail_entries, digits):
                x = elem(d)
                total = total + a * x * x
            if not total:
                v = [field.zero] * n
                v[lead] = field.one
                for i, d in enumerate(digits):
                    v[lead + 1 + i] = elem(d)
                return tuple(v)
            k = m - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] < field.q:
                    break
                digits[k] = 0
                k -= 1
            if k < 0:
                break
    return None


def _nullspace_vector(
    rows: Sequence[Sequence[FieldElement]], n: int, field: FiniteField
) -> Optional[list[FieldElement]]:
    """Some nonzero w with row · w = 0 for every row, or None if only w = 0."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        hit = next((i for i in range(r, len(work)) if work[i][c]), None)
        if hit is None:
            continue
        work[r], work[hit] = work[hit], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                coef = work[i][c]
                work[i] = [x - coef * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(n) if c not in pivots), None)
    if free is None:
        return None
    w = [field.zero] * n
    w[free] = field.one
    for row, pc in zip(work, pivots):
        w[pc] = -row[free]
    return w


def _split_leading_triple(
    field: FiniteField, entries: list[FieldElement], max_search: int
) -> FieldElement:
    """Split a hyperbolic plane off <e0,e1,e2> and return the rank-1 residual.

    The leading rank-3 subform is isotropic over any finite field; an
    isotropic v is completed to a hyperbolic pair (v, u) with B(v, u) = 1,
    and the orthogonal complement of the pair inside the subform carries the
    residual entry.
    """
    sub = DiagonalForm(field, tuple(entries[:3]))
    v = find_isotropic_vector(sub, max_search)
    assert v is not None, "rank-3 forms over finite fields are isotropic"
    i0 = next(i for i in range(3) if v[i])
    scale = (sub.entries[i0] * v[i0]).inverse()  # B(v, e_i0) inverted
    u = [field.zero] * 3
    u[i0] = scale
    row_v = [sub.entries[j] * v[j] for j in range(3)]
    row_u = [sub.entries[j] * u[j] for j in range(3)]
    w = _nullspace_vector([row_v, row_u], 3, field)
    assert w is not None
    c = sub.value(w)
    assert c, "complement of a hyperbolic plane in a nondegenerate space is nondegenerate"
    return c


def witt_decompose(
    f: DiagonalForm, max_search: int = DEFAULT_MAX_SEARCH
) -> tuple[int, DiagonalForm]:
    """Witt decomposition: (number of hyperbolic planes, anisotropic kernel).

    Entry pairs <a, b> with -ab a square split off directly; once no such
    pair remains and rank >= 3, a hyperbolic plane is split out of the
    leading rank-3 subform.  The kernel always ends with rank <= 2.
    """
    field = f.field
    entries = list(f.entries)
    hyper = 0
    while True:
        # cancel pairs that already form hyperbolic planes, first pair in
        # row-major order each round
        cancelled = True
        while cancelled:
            cancelled = False
            for i in range(len(entries)):
                for j in range(i + 1, len(entries)):
                    if square_class(-(entries[i] * entries[j])) is SquareClass.ONE:
                        del entries[j], entries[i]
                        hyper += 1
                        cancelled = True
                        break
                if cancelled:
                    break
        if len(entries) < 3:
            break
        c = _split_leading_triple(field, entries, max_search)
        entries = [c] + entries[3:]
        hyper += 1
    kernel = DiagonalForm(field, tuple(entries))
    assert 2 * hyper + kernel.rank == f.rank
    return hyper, kernel


def witt_equal(f: DiagonalForm, g: DiagonalForm, max_search: int = DEFAULT_MAX_SEARCH) -> bool:
    """Whether f and g represent the same Witt class: f ⊥ -g is hyperbolic."""
    _same_field(f, g)
    _, kernel = witt_decompose(orthogonal_sum(f, g.negate()), max_search)
    return kernel.rank == 0


def isometric_by_invariants(f: DiagonalForm, g: DiagonalForm) -> bool:
    """Isometry test by the classification over finite fields: rank and det class."""
    _same_field(f, g)
    return f.rank == g.rank and determinant_class(f) == determinant_class(g)


def isometric_bruteforce(f: DiagonalForm, g: DiagonalForm) -> bool:
    """Isometry by explicit change-of-basis search, for tiny instances.

    For q <= 5 and rank <= 3 this searches basis images column by column,
    pruning with the Gram conditions B(t_i, t_j) = g_ij; a full match is an
    invertible T with TᵀfT = g since the target Gram is nondegenerate.
    Larger instances fall back to rank comparison plus witt_equal, which
    classifies isometry over finite fields by Witt cancellation.
    """
    _same_field(f, g)
    if f.rank != g.rank:
        return False
    n = f.rank
    field = f.field
    if field.q > 5 or n > 3:
        return witt_equal(f, g)
    vectors = list(_all_vectors(field, n))

    def extend(cols: list[tuple[FieldElement, ...]]) -> bool:
        i = len(cols)
        if i == n:
            return True
        for v in vectors:
            if f.value(v) != g.entries[i]:
                continue
            if any(f.bilinear(v, c) != field.zero for c in cols):
                continue
            if extend(cols + [v]):
                return True
        return False

    return extend([])


def _all_vectors(field: FiniteField, n: int):
    for tup in itertools.product(range(field.q), repeat=n):
        if any(tup):
            yield tuple(field.element_from_index(i) for i in tup)
