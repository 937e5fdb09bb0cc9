"""
Exact fields: the rationals, quadratic extensions Q(sqrt(d)) and prime fields F_p.

Rationals are plain ``fractions.Fraction`` values. Elements of Q(sqrt(d)) and
F_p are small immutable classes with operator overloading, so the generic
linear algebra and the algebra modules can treat every scalar the same way.
"""
import math
import random
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import factorint, isprime, sqrt_mod

from src.shared.config import settings
from src.shared.exceptions import (
    ContextMismatchError,
    FactorizationBoundError,
    FieldError,
    MissingSquareRootError,
    ZeroInputError,
)

Rational = Union[int, Fraction]


def _as_fraction(value: Any) -> Optional[Fraction]:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return None


def squarefree_part(value: Rational, bit_bound: Optional[int] = None) -> int:
    """
    Signed squarefree representative of the square class of a nonzero rational.

    Args:
        value: Nonzero rational number
        bit_bound: Optional bound on numerator/denominator bit length

    Returns:
        The squarefree integer s with value = s * (square)

    Raises:
        ZeroInputError: If value is zero
        FactorizationBoundError: If the input exceeds the bit bound
    """
    r = Fraction(value)
    if r == 0:
        raise ZeroInputError("Square class of 0 is undefined")
    bound = bit_bound if bit_bound is not None else settings.FACTOR_BIT_BOUND
    if r.numerator.bit_length() > bound or r.denominator.bit_length() > bound:
        raise FactorizationBoundError(
            f"Input {r} exceeds the factorization bound of {bound} bits"
        )
    n = abs(r.numerator * r.denominator)
    part = 1
    for prime, exponent in factorint(n).items():
        if exponent % 2:
            part *= prime
    return part if r > 0 else -part


def square_class_product(values: Iterable[Rational], bit_bound: Optional[int] = None) -> int:
    """
    Squarefree representative of the product of nonzero rationals.

    Each factor is reduced on its own and the running class is combined
    through gcds, so only the individual entries are factored.
    """
    part = 1
    for value in values:
        s = squarefree_part(value, bit_bound)
        g = math.gcd(part, s)
        part = (part // g) * (s // g)
    return part


def rational_sqrt(value: Rational) -> Optional[Fraction]:
    """Return the nonnegative rational square root, or None."""
    r = Fraction(value)
    if r < 0:
        return None
    num_root = math.isqrt(r.numerator)
    den_root = math.isqrt(r.denominator)
    if num_root * num_root == r.numerator and den_root * den_root == r.denominator:
        return Fraction(num_root, den_root)
    return None


class QuadElement:
    """Element a + b*sqrt(d) of Q(sqrt(d)) with d fixed by the context."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational, b: Rational, d: Rational):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)

    def _coerce(self, other: Any) -> Optional["QuadElement"]:
        if isinstance(other, QuadElement):
            if other.d != self.d:
                raise ContextMismatchError(
                    f"Cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))"
                )
            return other
        r = _as_fraction(other)
        if r is None:
            return None
        return QuadElement(r, 0, self.d)

    def __add__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QuadElement":
        return QuadElement(-self.a, -self.b, self.d)

    def __mul__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElement":
        norm = self.a * self.a - self.d * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("QuadElement division by zero")
        return QuadElement(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "QuadElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadElement(1, 0, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, QuadElement):
            return self.a == other.a and self.b == other.b and self.d == other.d
        r = _as_fraction(other)
        if r is None:
            return NotImplemented
        return self.b == 0 and self.a == r

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __repr__(self) -> str:
        return f"QuadElement({self.a}, {self.b}, d={self.d})"


class ModElement:
    """Residue class modulo an odd prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other: Any) -> Optional["ModElement"]:
        if isinstance(other, ModElement):
            if other.p != self.p:
                raise ContextMismatchError(f"Cannot combine F_{self.p} with F_{other.p}")
            return other
        r = _as_fraction(other)
        if r is None:
            return None
        if r.denominator % self.p == 0:
            raise ZeroDivisionError(f"{r} has no image in F_{self.p}")
        return ModElement(r.numerator * pow(r.denominator, -1, self.p), self.p)

    def __add__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModElement(self.value - o.value, self.p)

    def __rsub__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModElement(o.value - self.value, self.p)

    def __neg__(self) -> "ModElement":
        return ModElement(-self.value, self.p)

    def __mul__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "ModElement":
        if self.value == 0:
            raise ZeroDivisionError(f"Division by zero in F_{self.p}")
        return ModElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "ModElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "ModElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModElement(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ModElement):
            return self.value == other.value and self.p == other.p
        r = _as_fraction(other)
        if r is None:
            return NotImplemented
        if r.denominator % self.p == 0:
            return False
        return (r.numerator - self.value * r.denominator) % self.p == 0

    def __hash__(self) -> int:
        # agrees with the hash of the canonical residue in [0, p)
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"ModElement({self.value}, p={self.p})"


Scalar = Union[Fraction, QuadElement, ModElement]


class FieldKind(str, Enum):
    """Supported base fields."""
    RATIONALS = "rationals"
    QUAD_EXT = "quad_ext"
    PRIME_FIELD = "prime_field"


class FieldCtx(BaseModel):
    """A field context: Q, Q(sqrt(d)) with d a non-square, or F_p with p an odd prime."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: FieldKind
    d: Optional[Fraction] = None
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_parameters(self) -> "FieldCtx":
        if self.kind == FieldKind.QUAD_EXT:
            if self.d is None or self.d == 0:
                raise FieldError("Q(sqrt(d)) needs a nonzero d")
            if self.d > 0 and squarefree_part(self.d) == 1:
                raise FieldError(f"d = {self.d} is a square in Q")
        elif self.kind == FieldKind.PRIME_FIELD:
            if self.p is None or self.p == 2 or not isprime(self.p):
                raise FieldError(f"p = {self.p} is not an odd prime")
        return self

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == FieldKind.PRIME_FIELD else 0

    @property
    def label(self) -> str:
        if self.kind == FieldKind.QUAD_EXT:
            return f"Q(sqrt:{self.d})"
        if self.kind == FieldKind.PRIME_FIELD:
            return f"F:{self.p}"
        return "Q"

    def coerce(self, value: Any) -> Scalar:
        """Map an int, Fraction or element of this field into canonical form."""
        if self.kind == FieldKind.RATIONALS:
            r = _as_fraction(value)
            if r is None:
                raise ContextMismatchError(f"{value!r} is not a rational")
            return r
        if self.kind == FieldKind.QUAD_EXT:
            if isinstance(value, QuadElement):
                if value.d != self.d:
                    raise ContextMismatchError(f"{value!r} does not lie in {self.label}")
                return value
            r = _as_fraction(value)
            if r is None:
                raise ContextMismatchError(f"{value!r} does not lie in {self.label}")
            return QuadElement(r, 0, self.d)
        if isinstance(value, ModElement):
            if value.p != self.p:
                raise ContextMismatchError(f"{value!r} does not lie in {self.label}")
            return value
        r = _as_fraction(value)
        if r is None:
            raise ContextMismatchError(f"{value!r} does not lie in {self.label}")
        return ModElement(0, self.p) + r

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def generator(self) -> QuadElement:
        """The adjoined root sqrt(d)."""
        if self.kind != FieldKind.QUAD_EXT:
            raise FieldError(f"{self.label} has no adjoined square root")
        return QuadElement(0, 1, self.d)

    def contains(self, value: Any) -> bool:
        try:
            self.coerce(value)
        except (ContextMismatchError, ZeroDivisionError):
            return False
        return True

    def random_scalar(self, rng: random.Random, bound: int = 9, nonzero: bool = False) -> Scalar:
        """Random element with small integer parts in [-bound, bound]."""
        while True:
            if self.kind == FieldKind.QUAD_EXT:
                value = QuadElement(rng.randint(-bound, bound), rng.randint(-bound, bound), self.d)
            else:
                value = self.coerce(rng.randint(-bound, bound))
            if not nonzero or value != 0:
                return value

    def is_square(self, a: Any) -> bool:
        """
        Decide whether a nonzero scalar is a square in this field.

        Raises:
            ZeroInputError: If a is zero
            FactorizationBoundError: For rationals beyond the bit bound
        """
        value = self.coerce(a)
        if value == 0:
            raise ZeroInputError("Square class of 0 is undefined")
        if self.kind == FieldKind.RATIONALS:
            return squarefree_part(value) == 1
        if self.kind == FieldKind.PRIME_FIELD:
            return pow(value.value, (self.p - 1) // 2, self.p) == 1
        return self.sqrt(value) is not None

    def sqrt(self, a: Any) -> Optional[Scalar]:
        """Return some square root of a in this field, or None."""
        value = self.coerce(a)
        if value == 0:
            return self.zero()
        if self.kind == FieldKind.RATIONALS:
            return rational_sqrt(value)
        if self.kind == FieldKind.PRIME_FIELD:
            root = sqrt_mod(value.value, self.p)
            return None if root is None else ModElement(root, self.p)
        if value.b == 0:
            root = rational_sqrt(value.a)
            if root is not None:
                return QuadElement(root, 0, self.d)
            root = rational_sqrt(value.a / self.d)
            if root is not None:
                return QuadElement(0, root, self.d)
            return None
        disc_root = rational_sqrt(value.a * value.a - self.d * value.b * value.b)
        if disc_root is None:
            return None
        for sign in (1, -1):
            x = rational_sqrt((value.a + sign * disc_root) / 2)
            if x:
                return QuadElement(x, value.b / (2 * x), self.d)
        return None

    def square_root(self, a: Any) -> Scalar:
        """Like ``sqrt`` but raises when the root is not in the field."""
        root = self.sqrt(a)
        if root is None:
            raise MissingSquareRootError(f"{a} has no square root in {self.label}")
        return root

    def fourth_root(self, a: Any) -> Scalar:
        """Return c with c^4 = a, trying both square roots of a."""
        root = self.square_root(a)
        for candidate in (root, -root):
            c = self.sqrt(candidate)
            if c is not None:
                return c
        raise MissingSquareRootError(f"{a} has no fourth root in {self.label}")


def rationals() -> FieldCtx:
    return FieldCtx(kind=FieldKind.RATIONALS)


def quad_ext(d: Rational) -> FieldCtx:
    return FieldCtx(kind=FieldKind.QUAD_EXT, d=Fraction(d))


def prime_field(p: int) -> FieldCtx:
    return FieldCtx(kind=FieldKind.PRIME_FIELD, p=p)


def quad_norm_conj(d: Rational, alpha: Any):
    """
    Norm and conjugate of alpha = x + y*sqrt(-d) in Q(sqrt(-d)).

    The norm convention is N(x + y*sqrt(-d)) = x^2 + d*y^2.

    Returns:
        Tuple (norm as a Fraction, conjugate as a QuadElement)
    """
    ctx = quad_ext(-Fraction(d))
    element = ctx.coerce(alpha)
    return element.norm(), element.conjugate()
