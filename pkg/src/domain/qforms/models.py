"""
Domain models for quadratic and hermitian forms.
"""
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.scalars.fields import FieldCtx, FieldKind
from src.domain.scalars.linalg import Matrix, diagonal
from src.shared.exceptions import ContextMismatchError, ZeroInputError


class QForm(BaseModel):
    """Non-degenerate diagonal quadratic form <a1, ..., an>."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    diag: List[Any] = Field(default_factory=list)

    @model_validator(mode="after")
    def _normalize_entries(self) -> "QForm":
        entries = [self.ctx.coerce(a) for a in self.diag]
        if any(a == 0 for a in entries):
            raise ZeroInputError("Quadratic form entries must be nonzero")
        self.diag = entries
        return self

    @property
    def dim(self) -> int:
        return len(self.diag)

    def gram(self) -> Matrix:
        return diagonal(self.ctx, self.diag)

    def evaluate(self, v: List[Any]) -> Any:
        acc = self.ctx.zero()
        for a, x in zip(self.diag, v):
            acc = acc + a * x * x
        return acc

    def determinant(self) -> Any:
        acc = self.ctx.one()
        for a in self.diag:
            acc = acc * a
        return acc

    def _check_ctx(self, other: "QForm") -> None:
        if other.ctx != self.ctx:
            raise ContextMismatchError(
                f"Forms over {self.ctx.label} and {other.ctx.label} cannot be combined"
            )

    def orthogonal_sum(self, other: "QForm") -> "QForm":
        self._check_ctx(other)
        return QForm(ctx=self.ctx, diag=self.diag + other.diag)

    def tensor(self, other: "QForm") -> "QForm":
        self._check_ctx(other)
        return QForm(ctx=self.ctx, diag=[a * b for a in self.diag for b in other.diag])

    def scaled(self, c: Any) -> "QForm":
        c = self.ctx.coerce(c)
        return QForm(ctx=self.ctx, diag=[c * a for a in self.diag])

    def signature(self) -> Tuple[int, int]:
        if self.ctx.kind != FieldKind.RATIONALS:
            raise ContextMismatchError("Signature is only defined over Q")
        positives = sum(1 for a in self.diag if a > 0)
        return positives, self.dim - positives


class QFormInvariants(BaseModel):
    """Hasse-Minkowski invariants of a rational quadratic form."""
    dim: int
    disc_class: int
    signature: Tuple[int, int]
    hasse: Dict[str, int] = Field(default_factory=dict)


class HermitianForm(BaseModel):
    """
    Diagonal hermitian form over k(sqrt(-d)) with entries in k.

    ``split`` is set when -d is a square in k, i.e. k(sqrt(-d)) is k x k.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    d: Any
    diag: List[Any] = Field(default_factory=list)
    split: bool = False

    @model_validator(mode="after")
    def _normalize(self) -> "HermitianForm":
        self.d = self.ctx.coerce(self.d)
        if self.d == 0:
            raise ZeroInputError("Hermitian forms need a nonzero d")
        entries = [self.ctx.coerce(a) for a in self.diag]
        if any(a == 0 for a in entries):
            raise ZeroInputError("Hermitian form entries must be nonzero")
        self.diag = entries
        self.split = self.ctx.is_square(-self.d)
        return self

    @property
    def rank(self) -> int:
        return len(self.diag)
