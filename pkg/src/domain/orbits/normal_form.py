"""
The normal-form family

    x = -e123 - y0 e456 + y1 e156 + y2 e426 + y3 e453,   f1(x) = y1 y2 y3 - y0^2 / 4

and the split points -e123 - y0 e456.
"""
import logging
from typing import Any, List, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from src.domain.invariants.relative import f1_normal_form_polynomial, f1_value
from src.domain.scalars.fields import FieldCtx
from src.domain.wedge.contraction import join_components
from src.domain.wedge.trivector import TriVector
from src.shared.exceptions import InternalCheckError, PreconditionError, ZeroInputError

logger = logging.getLogger(__name__)


def split_x(ctx: FieldCtx, y0: Any) -> TriVector:
    """-e123 - y0 e456."""
    return TriVector.from_terms(ctx, {(1, 2, 3): -ctx.one(), (4, 5, 6): -ctx.coerce(y0)})


class NormalFormX(BaseModel):
    """Normal-form data (y0, y1, y2, y3) with y1, y2, y3 nonzero."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    y0: Any
    y1: Any
    y2: Any
    y3: Any

    @model_validator(mode="after")
    def _check(self) -> "NormalFormX":
        self.y0, self.y1, self.y2, self.y3 = (
            self.ctx.coerce(c) for c in (self.y0, self.y1, self.y2, self.y3)
        )
        if self.y1 == 0 or self.y2 == 0 or self.y3 == 0:
            raise ZeroInputError("Normal forms need nonzero y1, y2, y3")
        if f1_value(self.x_part()) != self.f1:
            raise InternalCheckError(f"f1 of {self.ys} disagrees with y1 y2 y3 - y0^2/4")
        return self

    @classmethod
    def from_values(cls, ctx: FieldCtx, values: Sequence[Any]) -> "NormalFormX":
        if len(values) != 4:
            raise PreconditionError("A normal form needs exactly (y0, y1, y2, y3)")
        y0, y1, y2, y3 = values
        return cls(ctx=ctx, y0=y0, y1=y1, y2=y2, y3=y3)

    @property
    def ys(self) -> List[Any]:
        return [self.y0, self.y1, self.y2, self.y3]

    @property
    def f1(self) -> Any:
        return f1_normal_form_polynomial(self.ctx, self.ys)

    def y(self, m: int) -> Any:
        return self.ys[m]

    def x_part(self) -> TriVector:
        one = self.ctx.one()
        return TriVector.from_terms(
            self.ctx,
            {
                (1, 2, 3): -one,
                (4, 5, 6): -self.y0,
                (1, 5, 6): self.y1,
                (4, 2, 6): self.y2,
                (4, 5, 3): self.y3,
            },
        )

    def pattern_vector(self, m: int) -> List[Any]:
        """The v-pattern with 2 in slot m and -y0/y_m in slot m+3."""
        if m not in (1, 2, 3):
            raise PreconditionError(f"Pattern index must be 1, 2 or 3, got {m}")
        v = [self.ctx.zero()] * 6
        v[m - 1] = self.ctx.coerce(2)
        v[m + 2] = -self.y0 / self.y(m)
        return v


def normal_form_point(nf: NormalFormX, v: Sequence[Any]) -> TriVector:
    """x + iota(v) for the normal form x; a vanishing f1 is logged, not rejected."""
    if nf.f1 == 0:
        logger.warning(f"Normal form {nf.ys} has f1 = 0 and is not semistable")
    return join_components(nf.x_part(), [nf.ctx.coerce(c) for c in v])
