"""
Trivectors in the 20-dimensional space of alternating 3-forms on V6.

Coordinates are indexed by the sorted triples (i, j, l), 1 <= i < j < l <= 6,
in lexicographic order. Unsorted triples are read by antisymmetry.
"""
import re
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from src.domain.scalars.fields import FieldCtx, ModElement, QuadElement
from src.domain.scalars.parsing import format_scalar, parse_scalar
from src.shared.exceptions import ContextMismatchError, InputParseError, PreconditionError

Triple = Tuple[int, int, int]

TRIPLES: List[Triple] = [tuple(t) for t in combinations(range(1, 7), 3)]
TRIPLE_INDEX: Dict[Triple, int] = {t: k for k, t in enumerate(TRIPLES)}

_TERM_RE = re.compile(r"^(?:(?P<coef>.+?)\*)?e(?P<idx>[1-6]{3})$")


def sort_triple(i: int, j: int, l: int) -> Tuple[int, Triple]:
    """Sign of the sorting permutation and the sorted triple; sign 0 on repeats."""
    items = [i, j, l]
    if len(set(items)) < 3:
        return 0, (i, j, l)
    sign = 1
    for a in range(3):
        for b in range(2 - a):
            if items[b] > items[b + 1]:
                items[b], items[b + 1] = items[b + 1], items[b]
                sign = -sign
    return sign, tuple(items)


class TriVector:
    """An element of the third exterior power of V6 over a field context."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, coords: Sequence[Any]):
        if len(coords) != 20:
            raise PreconditionError(f"Trivectors have 20 coordinates, got {len(coords)}")
        self.ctx = ctx
        self.coords: Tuple[Any, ...] = tuple(ctx.coerce(c) for c in coords)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "TriVector":
        return cls(ctx, [ctx.zero()] * 20)

    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms: Dict[Triple, Any]) -> "TriVector":
        """Sum of c * e_i e_j e_l over the given (possibly unsorted) triples."""
        coords = [ctx.zero()] * 20
        for triple, c in terms.items():
            sign, key = sort_triple(*triple)
            if sign:
                k = TRIPLE_INDEX[key]
                coords[k] = coords[k] + sign * ctx.coerce(c)
        return cls(ctx, coords)

    @classmethod
    def basis_vector(cls, ctx: FieldCtx, i: int, j: int, l: int) -> "TriVector":
        return cls.from_terms(ctx, {(i, j, l): ctx.one()})

    def coord(self, i: int, j: int, l: int) -> Any:
        """x_{ijl}, extended antisymmetrically to unsorted triples."""
        sign, key = sort_triple(i, j, l)
        if sign == 0:
            return self.ctx.zero()
        value = self.coords[TRIPLE_INDEX[key]]
        return value if sign > 0 else -value

    def terms(self) -> Iterator[Tuple[Triple, Any]]:
        for triple, c in zip(TRIPLES, self.coords):
            if c != 0:
                yield triple, c

    def _same(self, other: "TriVector") -> None:
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"Trivectors over {self.ctx.label} and {other.ctx.label}")

    def __add__(self, other: "TriVector") -> "TriVector":
        self._same(other)
        return TriVector(self.ctx, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "TriVector") -> "TriVector":
        self._same(other)
        return TriVector(self.ctx, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "TriVector":
        return TriVector(self.ctx, [-a for a in self.coords])

    def scale(self, c: Any) -> "TriVector":
        c = self.ctx.coerce(c)
        return TriVector(self.ctx, [c * a for a in self.coords])

    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TriVector):
            return NotImplemented
        return self.ctx == other.ctx and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"TriVector({format_trivector(self)})"


def _coef_text(c: Any) -> Tuple[str, str]:
    """Sign and magnitude text for a coefficient."""
    if isinstance(c, ModElement):
        return "+", str(c.value)
    if isinstance(c, QuadElement) and not c.is_rational():
        return "+", f"({format_scalar(c)})"
    r = c.a if isinstance(c, QuadElement) else Fraction(c)
    return ("-" if r < 0 else "+"), str(abs(r))


def format_trivector(t: TriVector) -> str:
    """Render as signed terms ``c*e{ijl}``, e.g. ``-1*e123 - 2*e456``."""
    parts: List[str] = []
    for (i, j, l), c in t.terms():
        sign, text = _coef_text(c)
        term = f"{text}*e{i}{j}{l}"
        if not parts:
            parts.append(term if sign == "+" else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts) if parts else "0"


def _split_terms(text: str) -> List[str]:
    """Split at top-level + and - signs, keeping the sign with its term."""
    terms: List[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and current and not current.endswith("*"):
            terms.append(current)
            current = ch
        else:
            current += ch
    if current:
        terms.append(current)
    return terms


def parse_trivector(text: str, ctx: FieldCtx) -> TriVector:
    """
    Parse signed terms ``c*e{ijl}``; unsorted triples are sign-normalized.

    Coefficients that are not plain rationals go in parentheses, e.g.
    ``(1+2*sqrt(-1))*e123``.

    Raises:
        InputParseError: On malformed terms
    """
    compact = text.replace(" ", "")
    if compact in ("", "0"):
        return TriVector.zero(ctx)
    terms: Dict[Triple, Any] = {}
    for raw in _split_terms(compact):
        sign = -1 if raw.startswith("-") else 1
        body = raw.lstrip("+-")
        match = _TERM_RE.match(body)
        if not match:
            raise InputParseError(f"Malformed trivector term {raw!r}")
        coef_text = match.group("coef") or "1"
        if coef_text.startswith("(") and coef_text.endswith(")"):
            coef_text = coef_text[1:-1]
        coef = ctx.coerce(parse_scalar(coef_text, ctx)) * sign
        idx = tuple(int(ch) for ch in match.group("idx"))
        s, key = sort_triple(*idx)
        if s == 0:
            raise InputParseError(f"Repeated index in term {raw!r}")
        terms[key] = terms.get(key, ctx.zero()) + s * coef
    return TriVector.from_terms(ctx, terms)


def trivector_to_json(t: TriVector) -> Dict[str, str]:
    """Map from "ijl" to scalar strings, nonzero coordinates only."""
    return {f"{i}{j}{l}": format_scalar(c) for (i, j, l), c in t.terms()}


def trivector_from_json(data: Dict[str, Any], ctx: FieldCtx) -> TriVector:
    terms: Dict[Triple, Any] = {}
    for key, value in data.items():
        if len(key) != 3 or not key.isdigit() or not set(key) <= set("123456"):
            raise InputParseError(f"Bad trivector key {key!r}")
        idx = tuple(int(ch) for ch in key)
        if sort_triple(*idx)[0] == 0:
            raise InputParseError(f"Repeated index in key {key!r}")
        terms[idx] = terms.get(idx, ctx.zero()) + ctx.coerce(parse_scalar(str(value), ctx))
    return TriVector.from_terms(ctx, terms)
