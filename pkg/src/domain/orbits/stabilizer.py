"""
Lie algebra stabilizers of points of the trivector space and the quaternion
norm form read off their Killing form.
"""
import logging
from typing import Any, List

from pydantic import BaseModel, ConfigDict

from src.domain.qforms.forms import diagonalize_gram
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import (
    Matrix,
    Vector,
    express_in_basis,
    identity,
    mat_mul,
    mat_sub,
    nullspace,
    zeros,
)
from src.domain.wedge.contraction import derivation_action, split_components
from src.domain.wedge.trivector import TriVector
from src.shared.exceptions import ClassificationError, InternalCheckError

logger = logging.getLogger(__name__)


class LieStabilizer(BaseModel):
    """
    A basis of the stabilizer subalgebra inside sp6, its structure constants
    and its Killing form.

    ``structure[a][b][c]`` is the coefficient of basis[c] in [basis[a], basis[b]].
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    basis: List[Matrix]
    structure: List[List[List[Any]]]
    killing: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)


class ExtendedStabilizer(BaseModel):
    """Stabilizer in gsp6 + gl1 + gl1: triples (xi, s, t) with xi.x + s x = 0 and xi v + t v = 0."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    generators: List[Any]

    @property
    def dim(self) -> int:
        return len(self.generators)


def sp6_basis(ctx: FieldCtx) -> List[Matrix]:
    """The 21 matrices [[A, B], [C, -A^t]] with B, C symmetric, one unit entry each."""
    basis: List[Matrix] = []
    one = ctx.one()
    for r in range(3):
        for c in range(3):
            m = zeros(ctx, 6, 6)
            m[r][c] = one
            m[c + 3][r + 3] = -one
            basis.append(m)
    for offset_row, offset_col in ((0, 3), (3, 0)):
        for r in range(3):
            for c in range(r, 3):
                m = zeros(ctx, 6, 6)
                m[offset_row + r][offset_col + c] = one
                m[offset_row + c][offset_col + r] = one
                basis.append(m)
    return basis


def _flatten(m: Matrix) -> Vector:
    return [x for row in m for x in row]


def _combine(ctx: FieldCtx, coeffs: Vector, mats: List[Matrix]) -> Matrix:
    out = zeros(ctx, 6, 6)
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        out = [[out[r][k] + c * m[r][k] for k in range(6)] for r in range(6)]
    return out


def _bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def _structure_constants(ctx: FieldCtx, basis: List[Matrix]) -> List[List[List[Any]]]:
    flat = [_flatten(m) for m in basis]
    table = []
    for a in basis:
        row = []
        for b in basis:
            coeffs = express_in_basis(ctx, flat, _flatten(_bracket(a, b)))
            if coeffs is None:
                raise InternalCheckError("Stabilizer is not closed under the bracket")
            row.append(coeffs)
        table.append(row)
    return table


def _killing(ctx: FieldCtx, structure: List[List[List[Any]]]) -> Matrix:
    n = len(structure)
    # ad(a)[c][b] = structure[a][b][c]
    ads = [[[structure[a][b][c] for b in range(n)] for c in range(n)] for a in range(n)]
    out = zeros(ctx, n, n)
    for a in range(n):
        for b in range(a, n):
            prod = mat_mul(ads[a], ads[b])
            value = sum((prod[k][k] for k in range(n)), ctx.zero())
            out[a][b] = value
            out[b][a] = value
    return out


def stabilizer_from_basis(ctx: FieldCtx, basis: List[Matrix]) -> LieStabilizer:
    """Bracket table and Killing form of the subalgebra spanned by basis."""
    structure = _structure_constants(ctx, basis)
    return LieStabilizer(ctx=ctx, basis=basis, structure=structure, killing=_killing(ctx, structure))


def lie_stabilizer(t: TriVector) -> LieStabilizer:
    """
    Solve xi.T = 0 for xi in sp6 and return the solution space with its
    bracket table and Killing form.
    """
    ctx = t.ctx
    basis = sp6_basis(ctx)
    columns = [derivation_action(xi, t).coords for xi in basis]
    system = [[columns[k][r] for k in range(len(basis))] for r in range(20)]
    stab = [_combine(ctx, coeffs, basis) for coeffs in nullspace(ctx, system)]
    logger.debug(f"Stabilizer of {t!r} has dimension {len(stab)}")
    return stabilizer_from_basis(ctx, stab)


def lie_stabilizer_gsp(t: TriVector) -> ExtendedStabilizer:
    """
    Stabilizer for the action of gsp6 + gl1 + gl1, where (xi, s, t) sends
    x + iota(v) to (xi.x + s x) + iota(xi v + t v).

    Generic semistable points have a 4-dimensional solution space
    containing the central direction (I6, -3, -1).
    """
    ctx = t.ctx
    x, v = split_components(t)
    basis = sp6_basis(ctx) + [identity(ctx, 6)]
    columns: List[Vector] = []
    for xi in basis:
        moved = derivation_action(xi, x)
        moved_v = [sum((xi[r][k] * v[k] for k in range(6)), ctx.zero()) for r in range(6)]
        columns.append(list(moved.coords) + moved_v)
    columns.append(list(x.coords) + [ctx.zero()] * 6)
    columns.append([ctx.zero()] * 20 + list(v))
    n = len(columns)
    system = [[columns[k][r] for k in range(n)] for r in range(26)]
    generators = []
    for coeffs in nullspace(ctx, system):
        xi = _combine(ctx, coeffs[: len(basis)], basis)
        generators.append((xi, coeffs[-2], coeffs[-1]))
    return ExtendedStabilizer(ctx=ctx, generators=generators)


def quaternion_norm_from_stabilizer(stab: LieStabilizer) -> QForm:
    """
    <1> + diag(-kappa/8) for a 3-dimensional stabilizer with Killing form kappa.

    For sl2 with h = diag(1, -1) the Killing value is 8, so -kappa/8 is the
    reduced norm on trace-zero elements.

    Raises:
        ClassificationError: If the stabilizer is not 3-dimensional
        DegenerateFormError: If the Killing form is degenerate
    """
    if stab.dim != 3:
        raise ClassificationError(f"Expected a 3-dimensional stabilizer, got {stab.dim}")
    ctx = stab.ctx
    scale = -ctx.one() / 8
    gram = [[scale * entry for entry in row] for row in stab.killing]
    form, _ = diagonalize_gram(ctx, gram)
    return QForm(ctx=ctx, diag=[ctx.one()] + list(form.diag))
