"""
Relative invariants f1 and f2 and the semistability predicate.

For T = x + iota(v):
    f1(T) = -f(x) / 4
    f2(T) = -(1/2) v^t M_J phi(x) v
"""
import logging
from typing import Any, Sequence

from pydantic import BaseModel, ConfigDict

from src.domain.invariants.phi import phi_matrix, quartic_f
from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import Matrix, bilinear, is_symmetric, mat_mul, transpose
from src.domain.wedge.contraction import split_components
from src.domain.wedge.symplectic import symplectic_matrix
from src.domain.wedge.trivector import TriVector

logger = logging.getLogger(__name__)


class InvariantReport(BaseModel):
    """Values of f, f1, f2 at a point and whether the point is semistable."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    f: Any
    f1: Any
    f2: Any
    semistable: bool


def mj_phi(x: TriVector) -> Matrix:
    return mat_mul(symplectic_matrix(x.ctx), phi_matrix(x).entries)


def f2_gram(x: TriVector) -> Matrix:
    """
    Symmetric G with f2(x + iota(v)) = v^t G v, i.e. G = -(1/2) sym(M_J phi(x)).

    An asymmetric M_J phi(x) is logged and symmetrized; f2 is unchanged.
    """
    ctx = x.ctx
    m = mj_phi(x)
    if not is_symmetric(m):
        logger.warning(f"M_J phi(x) is not symmetric for x = {x!r}")
    quarter = -ctx.one() / 4
    mt = transpose(m)
    return [[quarter * (m[r][c] + mt[r][c]) for c in range(6)] for r in range(6)]


def f1_value(t: TriVector) -> Any:
    x, _ = split_components(t)
    return -quartic_f(x) / 4


def f2_value(t: TriVector) -> Any:
    x, v = split_components(t)
    return bilinear(v, f2_gram(x), v)


def f1_f2_semistable(t: TriVector) -> InvariantReport:
    x, v = split_components(t)
    f = quartic_f(t)
    f1 = -quartic_f(x) / 4
    f2 = bilinear(v, f2_gram(x), v)
    return InvariantReport(f=f, f1=f1, f2=f2, semistable=(f1 != 0 and f2 != 0))


def f2_normal_form_polynomial(
    ctx: FieldCtx, y: Sequence[Any], v: Sequence[Any]
) -> Any:
    """
    f2 on the normal-form family in closed form:

    -(y2 y3 v1^2 + y3 y1 v2^2 + y1 y2 v3^2 + y1 v4^2 + y2 v5^2 + y3 v6^2
      + y0 (v1 v4 + v2 v5 + v3 v6))
    """
    y0, y1, y2, y3 = (ctx.coerce(c) for c in y)
    v1, v2, v3, v4, v5, v6 = (ctx.coerce(c) for c in v)
    return -(
        y2 * y3 * v1 * v1
        + y3 * y1 * v2 * v2
        + y1 * y2 * v3 * v3
        + y1 * v4 * v4
        + y2 * v5 * v5
        + y3 * v6 * v6
        + y0 * (v1 * v4 + v2 * v5 + v3 * v6)
    )


def f1_normal_form_polynomial(ctx: FieldCtx, y: Sequence[Any]) -> Any:
    """y1 y2 y3 - y0^2 / 4."""
    y0, y1, y2, y3 = (ctx.coerce(c) for c in y)
    return y1 * y2 * y3 - y0 * y0 / 4
