"""
The symplectic space (V6, J) and membership tests for Sp6 and GSp6.

J(u, v) = u^t M_J v with M_J = [[0, I3], [-I3, 0]], so J(e_i, e_{i+3}) = 1.
"""
import logging
import random
from enum import Enum
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import (
    Matrix,
    bilinear,
    block,
    determinant,
    diagonal,
    identity,
    inverse,
    mat_mul,
    mat_scale,
    matrices_equal,
    to_matrix,
    transpose,
    zeros,
)
from src.shared.config import settings
from src.shared.exceptions import NotASimilitudeError, PreconditionError, ZeroInputError

logger = logging.getLogger(__name__)

BASIS_LABELS = ["e1", "e2", "e3", "e4", "e5", "e6"]


def symplectic_matrix(ctx: FieldCtx) -> Matrix:
    one = identity(ctx, 3)
    zero = zeros(ctx, 3, 3)
    return block(zero, one, mat_scale(-ctx.one(), one), zero)


class SymplecticSpace(BaseModel):
    """V6 with the standard alternating form and orientation e1 ^ ... ^ e6."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ctx: FieldCtx

    @property
    def m_j(self) -> Matrix:
        return symplectic_matrix(self.ctx)

    @property
    def basis_labels(self) -> List[str]:
        return list(BASIS_LABELS)

    def pairing(self, u: Sequence[Any], v: Sequence[Any]) -> Any:
        return bilinear(list(u), self.m_j, list(v))


class GroupKind(str, Enum):
    """Where a 6x6 matrix lives."""
    SP6 = "Sp6"
    GSP6 = "GSp6"


class SympElement(BaseModel):
    """A certified symplectic similitude g with g M_J g^t = similitude_factor * M_J."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    g: Matrix
    similitude_factor: Any
    kind: GroupKind

    def __matmul__(self, other: "SympElement") -> "SympElement":
        return SympElement(
            ctx=self.ctx,
            g=mat_mul(self.g, other.g),
            similitude_factor=self.similitude_factor * other.similitude_factor,
            kind=_kind(self.similitude_factor * other.similitude_factor),
        )

    def inverse(self) -> "SympElement":
        factor = self.ctx.one() / self.similitude_factor
        return SympElement(
            ctx=self.ctx, g=inverse(self.ctx, self.g), similitude_factor=factor, kind=_kind(factor)
        )


def _kind(factor: Any) -> GroupKind:
    return GroupKind.SP6 if factor == 1 else GroupKind.GSP6


def check_symplectic(ctx: FieldCtx, g: Sequence[Sequence[Any]]) -> SympElement:
    """
    Certify g as an element of GSp6 and read off its similitude factor.

    Raises:
        NotASimilitudeError: If g M_J g^t is not a nonzero multiple of M_J
    """
    if len(g) != 6 or any(len(row) != 6 for row in g):
        raise PreconditionError("Symplectic elements are 6x6 matrices")
    mat = to_matrix(ctx, g)
    m_j = symplectic_matrix(ctx)
    product = mat_mul(mat_mul(mat, m_j), transpose(mat))
    factor = product[0][3]
    if factor == 0 or not matrices_equal(product, mat_scale(factor, m_j)):
        raise NotASimilitudeError("g M_J g^t is not a multiple of M_J")
    return SympElement(ctx=ctx, g=mat, similitude_factor=factor, kind=_kind(factor))


def h_a(ctx: FieldCtx, a: Any) -> SympElement:
    """diag(a I3, I3), the similitude with factor a."""
    a = ctx.coerce(a)
    if a == 0:
        raise ZeroInputError("h_a needs a nonzero a")
    return check_symplectic(ctx, diagonal(ctx, [a, a, a, 1, 1, 1]))


def sl3_block(ctx: FieldCtx, a: Sequence[Sequence[Any]]) -> SympElement:
    """diag(A, (A^t)^-1); symplectic for every invertible A."""
    mat = to_matrix(ctx, a)
    if len(mat) != 3:
        raise PreconditionError("The block must be 3x3")
    return check_symplectic(ctx, block(mat, zeros(ctx, 3, 3), zeros(ctx, 3, 3), inverse(ctx, transpose(mat))))


def sl2_pair_block(ctx: FieldCtx, c: Sequence[Sequence[Any]], m: int = 1) -> SympElement:
    """A 2x2 block acting on the coordinate pair (e_m, e_{m+3}), identity elsewhere."""
    mat = to_matrix(ctx, c)
    if len(mat) != 2 or determinant(ctx, mat) != 1:
        raise PreconditionError("The pair block must be a 2x2 matrix of determinant 1")
    g = identity(ctx, 6)
    i, j = m - 1, m + 2
    g[i][i], g[i][j], g[j][i], g[j][j] = mat[0][0], mat[0][1], mat[1][0], mat[1][1]
    return check_symplectic(ctx, g)


def _symmetric_unipotent(ctx: FieldCtx, rng: random.Random, lower: bool) -> Matrix:
    i, j = rng.randrange(3), rng.randrange(3)
    t = ctx.random_scalar(rng, 3, nonzero=True)
    s = zeros(ctx, 3, 3)
    s[i][j] = t
    s[j][i] = t
    one, zero = identity(ctx, 3), zeros(ctx, 3, 3)
    return block(one, zero, s, one) if lower else block(one, s, zero, one)


def _elementary_block(ctx: FieldCtx, rng: random.Random) -> Matrix:
    i, j = rng.sample(range(3), 2)
    t = ctx.random_scalar(rng, 3, nonzero=True)
    upper, lower = identity(ctx, 3), identity(ctx, 3)
    upper[i][j] = t
    lower[j][i] = -t
    return block(upper, zeros(ctx, 3, 3), zeros(ctx, 3, 3), lower)


def _pair_rotation(ctx: FieldCtx, rng: random.Random) -> Matrix:
    m = rng.randrange(3)
    g = identity(ctx, 6)
    g[m][m], g[m][m + 3], g[m + 3][m], g[m + 3][m + 3] = ctx.zero(), ctx.one(), -ctx.one(), ctx.zero()
    return g


def random_symplectic(
    ctx: FieldCtx, rng: random.Random, length: Optional[int] = None
) -> SympElement:
    """
    A random word in SL3-block, symmetric-unipotent and SL2-pair generators.

    Args:
        ctx: Field of the entries
        rng: Seeded random source
        length: Word length, defaults to ``RANDOM_WORD_LENGTH``
    """
    length = length if length is not None else settings.RANDOM_WORD_LENGTH
    g = identity(ctx, 6)
    for _ in range(length):
        choice = rng.randrange(4)
        if choice == 0:
            step = _elementary_block(ctx, rng)
        elif choice == 1:
            step = _symmetric_unipotent(ctx, rng, lower=False)
        elif choice == 2:
            step = _symmetric_unipotent(ctx, rng, lower=True)
        else:
            step = _pair_rotation(ctx, rng)
        g = mat_mul(g, step)
    return SympElement(ctx=ctx, g=g, similitude_factor=ctx.one(), kind=GroupKind.SP6)


def random_similitude(
    ctx: FieldCtx, rng: random.Random, length: Optional[int] = None
) -> SympElement:
    """A random symplectic word multiplied by h_a for a random nonzero a."""
    a = ctx.random_scalar(rng, 5, nonzero=True)
    return random_symplectic(ctx, rng, length) @ h_a(ctx, a)
