"""
Identification of the trivector space with k + k + M3(k) + M3(k).

x0 = -x_123 and y0 = -x_456. a_ij is the coordinate of (1, 2, 3) with the
j-th slot replaced by 3 + i; b_ij is the coordinate of (4, 5, 6) with the
j-th slot replaced by i. For instance a_11 = x_423 and b_11 = x_156.
"""
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict

from src.domain.scalars.fields import FieldCtx
from src.domain.wedge.trivector import Triple, TriVector


def _a_slot(i: int, j: int) -> Triple:
    slots = [1, 2, 3]
    slots[j - 1] = 3 + i
    return tuple(slots)


def _b_slot(i: int, j: int) -> Triple:
    slots = [4, 5, 6]
    slots[j - 1] = i
    return tuple(slots)


class ZCoords(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    x0: Any
    y0: Any
    a: List[List[Any]]
    b: List[List[Any]]


def z_identify(t: TriVector) -> ZCoords:
    return ZCoords(
        x0=-t.coord(1, 2, 3),
        y0=-t.coord(4, 5, 6),
        a=[[t.coord(*_a_slot(i, j)) for j in range(1, 4)] for i in range(1, 4)],
        b=[[t.coord(*_b_slot(i, j)) for j in range(1, 4)] for i in range(1, 4)],
    )


def z_to_trivector(z: ZCoords, ctx: FieldCtx) -> TriVector:
    terms: Dict[Triple, Any] = {(1, 2, 3): -ctx.coerce(z.x0), (4, 5, 6): -ctx.coerce(z.y0)}
    for i in range(1, 4):
        for j in range(1, 4):
            terms[_a_slot(i, j)] = z.a[i - 1][j - 1]
            terms[_b_slot(i, j)] = z.b[i - 1][j - 1]
    return TriVector.from_terms(ctx, terms)
