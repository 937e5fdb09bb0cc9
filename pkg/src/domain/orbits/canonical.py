"""
Reduction of (split x, v) to (split x, (q(v), 0, 0, 1, 0, 0)) inside the
SL3 stabilizer of the split point.
"""
import logging
from typing import Any, List, Sequence

from pydantic import BaseModel, ConfigDict

from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import Matrix, identity, inverse, mat_vec, to_matrix, transpose
from src.domain.wedge.contraction import act_wedge3, join_components
from src.domain.wedge.symplectic import SympElement, sl3_block
from src.domain.wedge.trivector import TriVector
from src.domain.orbits.normal_form import split_x
from src.shared.exceptions import InternalCheckError, NotSemistableError, ZeroInputError

logger = logging.getLogger(__name__)

_SWAPS = {
    2: [[0, -1, 0], [1, 0, 0], [0, 0, 1]],
    3: [[0, 0, -1], [0, 1, 0], [1, 0, 0]],
}


class Canonicalization(BaseModel):
    """The reducing element g, the canonical point and the applied steps."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    g: SympElement
    source: TriVector
    canonical: TriVector
    q: Any
    pivot: int
    steps: List[str]


def hyperbolic_q(v: Sequence[Any]) -> Any:
    """q(v) = v1 v4 + v2 v5 + v3 v6."""
    return v[0] * v[3] + v[1] * v[4] + v[2] * v[5]


def _dual_block(ctx: FieldCtx, b: Matrix) -> SympElement:
    """diag((B^t)^-1, B), built as the SL3 block of (B^t)^-1."""
    return sl3_block(ctx, inverse(ctx, transpose(b)))


def canonicalize_v(ctx: FieldCtx, y0: Any, v: Sequence[Any]) -> Canonicalization:
    """
    Move v to (q(v), 0, 0, 1, 0, 0) by elements fixing -e123 - y0 e456.

    The smallest m with v_m v_{m+3} != 0 is moved into the slots (1, 4).

    Raises:
        ZeroInputError: If y0 is zero
        NotSemistableError: If q(v) = 0, i.e. f2 vanishes on the split point
    """
    y0 = ctx.coerce(y0)
    if y0 == 0:
        raise ZeroInputError("The split point needs y0 != 0")
    v = [ctx.coerce(c) for c in v]
    q = hyperbolic_q(v)
    if q == 0:
        raise NotSemistableError("q(v) = 0: the point is not semistable over this split form")

    x = split_x(ctx, y0)
    source = join_components(x, v)
    pivot = next(m for m in (1, 2, 3) if v[m - 1] != 0 and v[m + 2] != 0)
    g = sl3_block(ctx, identity(ctx, 3))
    steps: List[str] = []

    if pivot != 1:
        swap = sl3_block(ctx, to_matrix(ctx, _SWAPS[pivot]))
        g = swap @ g
        v = mat_vec(swap.g, v)
        steps.append(f"swap pair {pivot} into slots (1, 4)")

    v1, v2, v3 = v[0], v[1], v[2]
    inv1 = ctx.one() / v1
    zero, one = ctx.zero(), ctx.one()
    g1 = sl3_block(ctx, [[inv1, zero, zero], [-v2, v1, zero], [-v3 * inv1, zero, one]])
    g = g1 @ g
    v = mat_vec(g1.g, v)
    steps.append("clear v2, v3 and normalize v1 to 1")

    w4, w5, w6 = v[3], v[4], v[5]
    inv4 = ctx.one() / w4
    g2 = _dual_block(ctx, [[inv4, zero, zero], [-w5, w4, zero], [-w6 * inv4, zero, one]])
    g = g2 @ g
    v = mat_vec(g2.g, v)
    steps.append("clear v5, v6 and move q(v) into slot 1")
    logger.debug(f"Canonicalization steps for y0={y0}: {steps}")

    canonical = join_components(x, [q, zero, zero, one, zero, zero])
    if act_wedge3(g, source) != canonical:
        raise InternalCheckError("Canonicalizing element does not reach (q(v), 0, 0, 1, 0, 0)")
    return Canonicalization(g=g, source=source, canonical=canonical, q=q, pivot=pivot, steps=steps)
