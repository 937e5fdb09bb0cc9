"""
Text grammar for field specs and scalars.

Field specs: ``Q``, ``Q(sqrt:-1)``, ``F:3``.
Scalars: ``INT``, ``INT/INT``, ``a+b*sqrt(D)``, ``r mod p``.
Matrices: rows separated by ``;``, entries by ``,``, e.g. ``1,2;0,1``.
"""
import re
from fractions import Fraction
from typing import Any, List

from src.domain.scalars.fields import (
    FieldCtx,
    FieldKind,
    ModElement,
    QuadElement,
    prime_field,
    quad_ext,
    rationals,
)
from src.shared.exceptions import ContextMismatchError, InputParseError

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^{_RATIONAL}$")
_MOD_RE = re.compile(r"^(?P<r>[+-]?\d+)mod(?P<p>\d+)$")
_QUAD_RE = re.compile(
    rf"^(?:(?P<a>{_RATIONAL})(?=[+-]))?(?P<sign>[+-])?"
    rf"(?:(?P<b>\d+(?:/\d+)?)\*)?sqrt\((?P<d>{_RATIONAL})\)$"
)
_FIELD_QUAD_RE = re.compile(rf"^Q\(sqrt:(?P<d>{_RATIONAL})\)$")
_FIELD_PRIME_RE = re.compile(r"^F:(?P<p>\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse ``INT`` or ``INT/INT``."""
    compact = text.replace(" ", "")
    if not _RATIONAL_RE.match(compact):
        raise InputParseError(f"Not a rational number: {text!r}")
    try:
        return Fraction(compact)
    except ZeroDivisionError:
        raise InputParseError(f"Zero denominator in {text!r}")


def parse_field_spec(text: str) -> FieldCtx:
    """Parse a ``--field`` value into a FieldCtx."""
    compact = text.replace(" ", "")
    if compact == "Q":
        return rationals()
    match = _FIELD_QUAD_RE.match(compact)
    if match:
        return quad_ext(parse_rational(match.group("d")))
    match = _FIELD_PRIME_RE.match(compact)
    if match:
        return prime_field(int(match.group("p")))
    raise InputParseError(f"Unknown field spec {text!r}; expected Q, Q(sqrt:D) or F:p")


def parse_scalar(text: str, ctx: FieldCtx) -> Any:
    """
    Parse a scalar in the given field.

    Raises:
        InputParseError: If the text does not match the grammar
        ContextMismatchError: If the text names another field
    """
    compact = str(text).replace(" ", "")
    match = _MOD_RE.match(compact)
    if match:
        p = int(match.group("p"))
        if ctx.kind != FieldKind.PRIME_FIELD or ctx.p != p:
            raise ContextMismatchError(f"{text!r} is not an element of {ctx.label}")
        return ModElement(int(match.group("r")), p)
    match = _QUAD_RE.match(compact)
    if match:
        d = parse_rational(match.group("d"))
        if ctx.kind != FieldKind.QUAD_EXT or ctx.d != d:
            raise ContextMismatchError(f"{text!r} is not an element of {ctx.label}")
        a = parse_rational(match.group("a")) if match.group("a") else Fraction(0)
        b = parse_rational(match.group("b")) if match.group("b") else Fraction(1)
        if match.group("sign") == "-":
            b = -b
        return QuadElement(a, b, d)
    try:
        return ctx.coerce(parse_rational(compact))
    except ZeroDivisionError:
        raise InputParseError(f"{text!r} has no image in {ctx.label}")


def parse_scalar_list(text: str, ctx: FieldCtx) -> List[Any]:
    """Parse a comma-separated list of scalars."""
    return [parse_scalar(part, ctx) for part in text.split(",") if part.strip()]


def format_scalar(value: Any) -> str:
    """Render a scalar so that ``parse_scalar`` reads it back."""
    if isinstance(value, ModElement):
        return f"{value.value} mod {value.p}"
    if isinstance(value, QuadElement):
        if value.b == 0:
            return str(value.a)
        if value.a == 0:
            return f"{value.b}*sqrt({value.d})"
        sign = "+" if value.b > 0 else "-"
        return f"{value.a}{sign}{abs(value.b)}*sqrt({value.d})"
    return str(Fraction(value))


def parse_matrix(text: str, ctx: FieldCtx) -> List[List[Any]]:
    """
    Parse ``a,b;c,d`` into a list of rows.

    Raises:
        InputParseError: On empty or ragged input
    """
    rows = [parse_scalar_list(row, ctx) for row in text.split(";") if row.strip()]
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise InputParseError(f"Malformed matrix {text!r}; expected rows like 1,2;3,4")
    return rows


def format_matrix(rows: List[List[Any]]) -> str:
    return ";".join(",".join(format_scalar(x) for x in row) for row in rows)
