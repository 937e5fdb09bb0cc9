"""
Zorn vector matrices: the split octonions on k + k^3 + k^3 + k.

An element [[a, x], [y, b]] multiplies as

    [[a a' + x.y',            a x' + b' x - y cross y'],
     [a' y + b y' + x cross x',  b b' + y.x'           ]]

with norm N = ab - x.y and conjugate [[b, -x], [-y, a]].
"""
import random
from typing import Any, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.domain.qforms.forms import hyperbolic
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx
from src.shared.exceptions import ContextMismatchError, PreconditionError

Vec3 = Tuple[Any, Any, Any]


def _dot(x: Vec3, y: Vec3) -> Any:
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]


def _cross(x: Vec3, y: Vec3) -> Vec3:
    return (
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    )


def _lin(*terms: Tuple[Any, Vec3]) -> Vec3:
    out = [terms[0][0] * t for t in terms[0][1]]
    for c, vec in terms[1:]:
        out = [o + c * t for o, t in zip(out, vec)]
    return tuple(out)


class ZornAlgebra(BaseModel):
    """The split octonion algebra Zorn(k) over a field context."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ctx: FieldCtx

    @property
    def dim(self) -> int:
        return 8

    @property
    def label(self) -> str:
        return f"Zorn({self.ctx.label})"

    def element(self, coords: Sequence[Any]) -> "ZornElement":
        """Build from 8 coordinates ordered (a, x1, x2, x3, y1, y2, y3, b)."""
        if len(coords) != 8:
            raise PreconditionError(f"Zorn elements need 8 coordinates, got {len(coords)}")
        return ZornElement(self, coords[0], coords[7], coords[1:4], coords[4:7])

    def zero(self) -> "ZornElement":
        return self.scalar(self.ctx.zero())

    def one(self) -> "ZornElement":
        return self.scalar(self.ctx.one())

    def scalar(self, c: Any) -> "ZornElement":
        zero = self.ctx.zero()
        return ZornElement(self, c, c, (zero,) * 3, (zero,) * 3)

    def basis(self) -> List["ZornElement"]:
        zero, one = self.ctx.zero(), self.ctx.one()
        return [self.element([one if j == i else zero for j in range(8)]) for i in range(8)]

    def random_element(self, rng: random.Random, bound: int = 9) -> "ZornElement":
        return self.element([self.ctx.random_scalar(rng, bound) for _ in range(8)])

    def norm_form(self) -> QForm:
        return zorn_norm_form(self.ctx)


class ZornElement:
    """[[a, x], [y, b]] with a, b scalars and x, y in k^3."""

    __slots__ = ("algebra", "a", "b", "x", "y")

    def __init__(self, algebra: ZornAlgebra, a: Any, b: Any, x: Sequence[Any], y: Sequence[Any]):
        ctx = algebra.ctx
        if len(x) != 3 or len(y) != 3:
            raise PreconditionError("Zorn vector parts must have length 3")
        self.algebra = algebra
        self.a = ctx.coerce(a)
        self.b = ctx.coerce(b)
        self.x: Vec3 = tuple(ctx.coerce(t) for t in x)
        self.y: Vec3 = tuple(ctx.coerce(t) for t in y)

    @property
    def coords(self) -> Tuple[Any, ...]:
        return (self.a,) + self.x + self.y + (self.b,)

    def _same(self, other: "ZornElement") -> None:
        if other.algebra.ctx != self.algebra.ctx:
            raise ContextMismatchError(
                f"Cannot combine {self.algebra.label} and {other.algebra.label}"
            )

    def _new(self, a: Any, b: Any, x: Sequence[Any], y: Sequence[Any]) -> "ZornElement":
        return ZornElement(self.algebra, a, b, x, y)

    def __add__(self, other: "ZornElement") -> "ZornElement":
        self._same(other)
        return self.algebra.element([s + o for s, o in zip(self.coords, other.coords)])

    def __sub__(self, other: "ZornElement") -> "ZornElement":
        self._same(other)
        return self.algebra.element([s - o for s, o in zip(self.coords, other.coords)])

    def __neg__(self) -> "ZornElement":
        return self.algebra.element([-s for s in self.coords])

    def __mul__(self, other: Any) -> "ZornElement":
        if isinstance(other, ZornElement):
            return zorn_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "ZornElement":
        return self.scale(other)

    def scale(self, c: Any) -> "ZornElement":
        c = self.algebra.ctx.coerce(c)
        return self.algebra.element([c * s for s in self.coords])

    def conj(self) -> "ZornElement":
        return self._new(self.b, self.a, [-t for t in self.x], [-t for t in self.y])

    def norm(self) -> Any:
        return self.a * self.b - _dot(self.x, self.y)

    def trace(self) -> Any:
        return self.a + self.b

    def polar(self, other: "ZornElement") -> Any:
        return (self + other).norm() - self.norm() - other.norm()

    def is_scalar(self) -> bool:
        return self.a == self.b and all(t == 0 for t in self.x + self.y)

    def scalar_value(self) -> Any:
        return self.a

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ZornElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"ZornElement(a={self.a}, x={list(self.x)}, y={list(self.y)}, b={self.b})"


def zorn_mul(u: ZornElement, v: ZornElement) -> ZornElement:
    u._same(v)
    one = u.algebra.ctx.one()
    a = u.a * v.a + _dot(u.x, v.y)
    x = _lin((u.a, v.x), (v.b, u.x), (-one, _cross(u.y, v.y)))
    y = _lin((v.a, u.y), (u.b, v.y), (one, _cross(u.x, v.x)))
    b = u.b * v.b + _dot(u.y, v.x)
    return ZornElement(u.algebra, a, b, x, y)


def zorn_ops(u: ZornElement, v: ZornElement) -> Tuple[ZornElement, Any]:
    """Product u*v together with N(u)."""
    return zorn_mul(u, v), u.norm()


def zorn_norm_form(ctx: FieldCtx) -> QForm:
    """ab - x.y is a sum of four hyperbolic planes."""
    return hyperbolic(ctx, 4)
