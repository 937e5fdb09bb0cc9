"""
Exact dense linear algebra over any FieldCtx.

Matrices are lists of rows. Products and sums stay on the field's own scalars;
rank, kernels, solving, determinants and inverses run on sympy's DomainMatrix
over QQ, GF(p) or QQ<sqrt(d)>, converting at the boundary.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

from sympy import GF, QQ, sqrt
from sympy import Rational as SympyRational
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError, DMNonSquareMatrixError

from src.domain.scalars.fields import (
    FieldCtx,
    FieldKind,
    ModElement,
    QuadElement,
    rational_sqrt,
    squarefree_part,
)
from src.shared.exceptions import PreconditionError

Matrix = List[List[Any]]
Vector = List[Any]


def identity(ctx: FieldCtx, n: int) -> Matrix:
    zero, one = ctx.zero(), ctx.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(ctx: FieldCtx, rows: int, cols: int) -> Matrix:
    zero = ctx.zero()
    return [[zero] * cols for _ in range(rows)]


def diagonal(ctx: FieldCtx, entries: Sequence[Any]) -> Matrix:
    n = len(entries)
    m = zeros(ctx, n, n)
    for i, e in enumerate(entries):
        m[i][i] = ctx.coerce(e)
    return m


def block(top_left: Matrix, top_right: Matrix, bottom_left: Matrix, bottom_right: Matrix) -> Matrix:
    """Assemble [[A, B], [C, D]] from square blocks."""
    top = [list(a) + list(b) for a, b in zip(top_left, top_right)]
    bottom = [list(c) + list(d) for c, d in zip(bottom_left, bottom_right)]
    return top + bottom


def to_matrix(ctx: FieldCtx, rows: Sequence[Sequence[Any]]) -> Matrix:
    return [[ctx.coerce(x) for x in row] for row in rows]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    result = []
    for row in a:
        new_row = []
        for col in bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                if x and y:
                    acc = acc + x * y
            new_row.append(acc)
        result.append(new_row)
    return result


def mat_vec(m: Matrix, v: Sequence[Any]) -> Vector:
    result = []
    for row in m:
        acc = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            acc = acc + x * y
        result.append(acc)
    return result


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Any, m: Matrix) -> Matrix:
    return [[c * x for x in row] for row in m]


def dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def bilinear(u: Sequence[Any], m: Matrix, v: Sequence[Any]) -> Any:
    """u^t M v."""
    return dot(u, mat_vec(m, v))


def trace(m: Matrix) -> Any:
    acc = m[0][0]
    for i in range(1, len(m)):
        acc = acc + m[i][i]
    return acc


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def scalar_of(m: Matrix) -> Optional[Any]:
    """Return c if m = c*I, else None."""
    n = len(m)
    c = m[0][0]
    for i in range(n):
        for j in range(n):
            expected = c if i == j else 0
            if m[i][j] != expected:
                return None
    return c


class _Ground:
    """A sympy ground domain standing in for one FieldCtx, with scalar conversions both ways."""

    def __init__(self, kind: FieldKind, p: Optional[int], d: Optional[Fraction]):
        self.kind = kind
        self.p = p
        self.d = d
        if kind == FieldKind.PRIME_FIELD:
            self.domain = GF(p)
        elif kind == FieldKind.QUAD_EXT:
            self.core = squarefree_part(d)
            # sqrt(d) = scale * sqrt(core)
            self.scale = rational_sqrt(Fraction(d) / self.core)
            self.domain = QQ.algebraic_field(sqrt(self.core))
            self.root = self.domain.from_sympy(sqrt(self.core))
        else:
            self.domain = QQ

    def to_domain(self, x: Any) -> Any:
        if self.kind == FieldKind.PRIME_FIELD:
            return self.domain(x.value)
        if self.kind == FieldKind.QUAD_EXT:
            if x == 0:
                return self.domain.zero
            v = x.b * self.scale
            expr = SympyRational(x.a.numerator, x.a.denominator)
            return self.domain.from_sympy(expr + SympyRational(v.numerator, v.denominator) * sqrt(self.core))
        return QQ(x.numerator, x.denominator)

    def from_domain(self, e: Any) -> Any:
        if self.kind == FieldKind.PRIME_FIELD:
            return ModElement(int(self.domain.to_int(e)), self.p)
        if self.kind == FieldKind.QUAD_EXT:
            # coordinates are taken against the generator sympy chose for the field
            lead, tail = _padded(self.root.to_list())
            hi, lo = _padded(e.to_list())
            v = hi / lead
            return QuadElement(lo - v * tail, v / self.scale, self.d)
        return _fraction(e)


def _fraction(q: Any) -> Fraction:
    return Fraction(int(QQ.numer(q)), int(QQ.denom(q)))


def _padded(coeffs: List[Any]) -> Tuple[Fraction, Fraction]:
    values = [_fraction(c) for c in coeffs]
    values = [Fraction(0)] * (2 - len(values)) + values
    return values[0], values[1]


@lru_cache(maxsize=None)
def _ground(kind: FieldKind, p: Optional[int], d: Optional[Fraction]) -> _Ground:
    return _Ground(kind, p, d)


def _to_domain_matrix(ctx: FieldCtx, m: Matrix) -> Tuple[DomainMatrix, _Ground]:
    ground = _ground(ctx.kind, ctx.p, None if ctx.d is None else Fraction(ctx.d))
    rows = [[ground.to_domain(ctx.coerce(x)) for x in row] for row in m]
    return DomainMatrix(rows, matrix_shape(m), ground.domain), ground


def _from_domain_rows(ground: _Ground, dm: DomainMatrix) -> Matrix:
    return [[ground.from_domain(e) for e in row] for row in dm.to_list()]


def rank(ctx: FieldCtx, m: Matrix) -> int:
    if not m:
        return 0
    dm, _ = _to_domain_matrix(ctx, m)
    return dm.rank()


def nullspace(ctx: FieldCtx, m: Matrix) -> List[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    dm, ground = _to_domain_matrix(ctx, m)
    return _from_domain_rows(ground, dm.nullspace())


def solve(ctx: FieldCtx, m: Matrix, b: Vector) -> Optional[Vector]:
    """Some solution of m x = b (free variables set to 0), or None."""
    augmented = [list(row) + [bi] for row, bi in zip(m, b)]
    n_cols = len(augmented[0]) - 1
    dm, ground = _to_domain_matrix(ctx, augmented)
    reduced, pivots = dm.rref()
    if n_cols in pivots:
        return None
    rows = _from_domain_rows(ground, reduced)
    sol = [ctx.zero()] * n_cols
    for r, c in enumerate(pivots):
        sol[c] = rows[r][n_cols]
    return sol


def determinant(ctx: FieldCtx, m: Matrix) -> Any:
    dm, ground = _to_domain_matrix(ctx, m)
    return ground.from_domain(dm.det())


def inverse(ctx: FieldCtx, m: Matrix) -> Matrix:
    """Inverse over the field; raises PreconditionError for singular input."""
    dm, ground = _to_domain_matrix(ctx, m)
    try:
        inv = dm.inv()
    except (DMNonInvertibleMatrixError, DMNonSquareMatrixError, ZeroDivisionError) as e:
        raise PreconditionError(f"Matrix is singular: {e}") from e
    return _from_domain_rows(ground, inv)


def express_in_basis(ctx: FieldCtx, basis: List[Vector], target: Vector) -> Optional[Vector]:
    """Coordinates of target in the span of basis vectors, or None if outside."""
    columns = transpose(basis) if basis else [[] for _ in target]
    return solve(ctx, columns, target)


def matrix_shape(m: Matrix) -> Tuple[int, int]:
    return len(m), len(m[0]) if m else 0
