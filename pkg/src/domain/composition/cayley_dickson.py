"""
Cayley-Dickson towers over a field context.

A tower with doubling constants (l1, ..., ln) realizes the algebra
CD(...CD(CD(k, l1), l2)..., ln) on 2^n coordinates. Doubling follows

    (x, y)(u, v) = (xu + l * conj(v) y, v x + y conj(u))
    N((x, y)) = N(x) - l * N(y)

so the norm form of the tower is the Pfister form <<l1, ..., ln>>.
"""
import random
from typing import Any, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.qforms.forms import pfister
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx
from src.shared.exceptions import ContextMismatchError, PreconditionError, ZeroInputError

Coords = Tuple[Any, ...]


def _add(u: Coords, v: Coords) -> Coords:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Coords, v: Coords) -> Coords:
    return tuple(a - b for a, b in zip(u, v))


def _scale(c: Any, u: Coords) -> Coords:
    return tuple(c * a for a in u)


def _conj(u: Coords) -> Coords:
    return (u[0],) + tuple(-a for a in u[1:])


def _mul(u: Coords, v: Coords, lambdas: Sequence[Any]) -> Coords:
    if not lambdas:
        return (u[0] * v[0],)
    half = len(u) // 2
    x, y = u[:half], u[half:]
    a, b = v[:half], v[half:]
    lam, inner = lambdas[-1], lambdas[:-1]
    first = _add(_mul(x, a, inner), _scale(lam, _mul(_conj(b), y, inner)))
    second = _add(_mul(b, x, inner), _mul(y, _conj(a), inner))
    return first + second


def _norm(u: Coords, lambdas: Sequence[Any]) -> Any:
    if not lambdas:
        return u[0] * u[0]
    half = len(u) // 2
    return _norm(u[:half], lambdas[:-1]) - lambdas[-1] * _norm(u[half:], lambdas[:-1])


class CDTower(BaseModel):
    """Doubling constants of a composition algebra of dimension 1, 2, 4 or 8."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ctx: FieldCtx
    lambdas: List[Any] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_lambdas(self) -> "CDTower":
        if len(self.lambdas) > 3:
            raise PreconditionError("Composition algebras stop at dimension 8")
        values = [self.ctx.coerce(lam) for lam in self.lambdas]
        if any(lam == 0 for lam in values):
            raise ZeroInputError("Doubling constants must be nonzero")
        self.lambdas = values
        return self

    @property
    def dim(self) -> int:
        return 2 ** len(self.lambdas)

    @property
    def label(self) -> str:
        slots = ", ".join(str(lam) for lam in self.lambdas)
        return f"CD({self.ctx.label}; {slots})" if slots else self.ctx.label

    def element(self, coords: Sequence[Any]) -> "CDElement":
        return CDElement(self, coords)

    def zero(self) -> "CDElement":
        return CDElement(self, [self.ctx.zero()] * self.dim)

    def one(self) -> "CDElement":
        return self.scalar(self.ctx.one())

    def scalar(self, c: Any) -> "CDElement":
        return CDElement(self, [c] + [self.ctx.zero()] * (self.dim - 1))

    def basis(self) -> List["CDElement"]:
        zero, one = self.ctx.zero(), self.ctx.one()
        return [
            CDElement(self, [one if j == i else zero for j in range(self.dim)])
            for i in range(self.dim)
        ]

    def random_element(self, rng: random.Random, bound: int = 9) -> "CDElement":
        return CDElement(self, [self.ctx.random_scalar(rng, bound) for _ in range(self.dim)])

    def norm_form(self) -> QForm:
        """Diagonal norm form <<l1, ..., ln>> in coordinate order."""
        return pfister(self.ctx, self.lambdas)

    def truncated(self, levels: int) -> "CDTower":
        """The subalgebra generated by the first ``levels`` doublings."""
        return CDTower(ctx=self.ctx, lambdas=self.lambdas[:levels])

    def embed(self, u: "CDElement") -> "CDElement":
        """Include an element of a truncated tower by padding with zeros."""
        if u.tower.ctx != self.ctx or u.tower.lambdas != self.lambdas[: len(u.tower.lambdas)]:
            raise ContextMismatchError(f"{u.tower.label} is not a subalgebra of {self.label}")
        return CDElement(self, list(u.coords) + [self.ctx.zero()] * (self.dim - u.tower.dim))


class CDElement:
    """Element of a Cayley-Dickson tower, stored as 2^n coordinates."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: CDTower, coords: Sequence[Any]):
        if len(coords) != tower.dim:
            raise PreconditionError(
                f"{tower.label} needs {tower.dim} coordinates, got {len(coords)}"
            )
        self.tower = tower
        self.coords: Coords = tuple(tower.ctx.coerce(c) for c in coords)

    def _same(self, other: "CDElement") -> None:
        if other.tower.ctx != self.tower.ctx or other.tower.lambdas != self.tower.lambdas:
            raise ContextMismatchError(
                f"Cannot combine elements of {self.tower.label} and {other.tower.label}"
            )

    def _wrap(self, coords: Coords) -> "CDElement":
        return CDElement(self.tower, coords)

    def __add__(self, other: "CDElement") -> "CDElement":
        self._same(other)
        return self._wrap(_add(self.coords, other.coords))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._same(other)
        return self._wrap(_sub(self.coords, other.coords))

    def __neg__(self) -> "CDElement":
        return self._wrap(tuple(-a for a in self.coords))

    def __mul__(self, other: Any) -> "CDElement":
        if isinstance(other, CDElement):
            return cd_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "CDElement":
        return self.scale(other)

    def scale(self, c: Any) -> "CDElement":
        return self._wrap(_scale(self.tower.ctx.coerce(c), self.coords))

    def conj(self) -> "CDElement":
        return self._wrap(_conj(self.coords))

    def norm(self) -> Any:
        return _norm(self.coords, self.tower.lambdas)

    def trace(self) -> Any:
        """u + conj(u) as a scalar."""
        return 2 * self.coords[0]

    def polar(self, other: "CDElement") -> Any:
        """b_N(u, v) = N(u + v) - N(u) - N(v)."""
        return (self + other).norm() - self.norm() - other.norm()

    def is_scalar(self) -> bool:
        return all(a == 0 for a in self.coords[1:])

    def scalar_value(self) -> Any:
        return self.coords[0]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CDElement):
            return NotImplemented
        return self.tower.lambdas == other.tower.lambdas and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"CDElement({self.tower.label}, {list(self.coords)})"


def cd_mul(u: CDElement, v: CDElement) -> CDElement:
    """Product by the recursive doubling rule; both factors must share a tower."""
    u._same(v)
    return CDElement(u.tower, _mul(u.coords, v.coords, u.tower.lambdas))


def cd_norm_conj(u: CDElement) -> Tuple[Any, CDElement]:
    return u.norm(), u.conj()
