"""
Maximal flags k < K < Q < C realized as one Cayley-Dickson tower.
"""
import logging
from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict

from src.domain.composition.cayley_dickson import CDTower
from src.domain.qforms.forms import hyperbolic, qform_equivalent
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx, FieldKind, rationals
from src.shared.exceptions import ClassificationError, FieldError, InternalCheckError, ZeroInputError

logger = logging.getLogger(__name__)


class OctonionClass(str, Enum):
    """Isomorphism classes of octonion algebras over Q."""
    SPLIT = "split"
    DIVISION = "division"


class FlagTower(BaseModel):
    """The quadratic, quaternion and octonion members of a maximal flag."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    K: CDTower
    Q: CDTower
    C: CDTower

    def members(self) -> List[CDTower]:
        return [self.C.truncated(0), self.K, self.Q, self.C]


def octonion_norm_of_class(ctx: FieldCtx, octonion_class: OctonionClass) -> QForm:
    if octonion_class == OctonionClass.SPLIT:
        return hyperbolic(ctx, 4)
    return QForm(ctx=ctx, diag=[1] * 8)


def build_flag_tower(
    i: Any, y1: Any, octonion_class: OctonionClass, ctx: Optional[FieldCtx] = None
) -> FlagTower:
    """
    Build K = CD(k, -i), Q = CD(K, -y1) and C = CD(Q, l3).

    l3 is 1 for the split octonions and -1 for the division octonions, which
    exist over Q only when the quaternion norm <1, i, y1, i*y1> is definite.

    Raises:
        ZeroInputError: If i or y1 is zero
        ClassificationError: If a division octonion is requested over an indefinite quaternion
    """
    ctx = ctx or rationals()
    if ctx.kind != FieldKind.RATIONALS:
        raise FieldError(f"Flag towers are classified over Q, not {ctx.label}")
    i, y1 = ctx.coerce(i), ctx.coerce(y1)
    if i == 0 or y1 == 0:
        raise ZeroInputError("Flag towers need nonzero i and y1")
    octonion_class = OctonionClass(octonion_class)

    if octonion_class == OctonionClass.DIVISION:
        if i < 0 or y1 < 0:
            raise ClassificationError(
                f"No division octonion contains the indefinite quaternion <<{-i}, {-y1}>>"
            )
        lam3 = -1
    else:
        lam3 = 1

    tower = FlagTower(
        K=CDTower(ctx=ctx, lambdas=[-i]),
        Q=CDTower(ctx=ctx, lambdas=[-i, -y1]),
        C=CDTower(ctx=ctx, lambdas=[-i, -y1, lam3]),
    )
    logger.debug(f"Flag tower for i={i}, y1={y1}: lambdas {tower.C.lambdas}")

    if not qform_equivalent(tower.C.norm_form(), octonion_norm_of_class(ctx, octonion_class)):
        raise InternalCheckError(f"Tower {tower.C.label} does not carry a {octonion_class.value} norm")
    return tower
