"""
Reduced Freudenthal algebras H3(C, Gamma) = {X in M3(C) : Gamma^-1 conj(X)^t Gamma = X}
with the Jordan product X.Y = (XY + YX) / 2.
"""
import logging
import random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from src.domain.composition.cayley_dickson import CDTower
from src.domain.composition.zorn import ZornAlgebra
from src.domain.qforms.forms import diagonalize_gram, qform_equivalent
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldKind
from src.domain.scalars.linalg import Matrix
from src.shared.exceptions import (
    ContextMismatchError,
    FieldError,
    HermitianViolationError,
    InternalCheckError,
    PreconditionError,
    ZeroInputError,
)

logger = logging.getLogger(__name__)

_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2))


class FreudenthalAlgebra(BaseModel):
    """H3(C, Gamma) for a composition algebra C and Gamma = diag(gamma1, gamma2, gamma3)."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    coordinate: Any
    gamma: List[Any]

    @model_validator(mode="after")
    def _check(self) -> "FreudenthalAlgebra":
        if not isinstance(self.coordinate, (CDTower, ZornAlgebra)):
            raise PreconditionError("The coordinate algebra must be a CD tower or Zorn algebra")
        ctx = self.coordinate.ctx
        if ctx.characteristic == 3:
            raise FieldError("Freudenthal algebras need characteristic other than 2 and 3")
        if len(self.gamma) != 3:
            raise PreconditionError("Gamma needs three diagonal entries")
        values = [ctx.coerce(g) for g in self.gamma]
        if any(g == 0 for g in values):
            raise ZeroInputError("Gamma entries must be nonzero")
        self.gamma = values
        return self

    @property
    def ctx(self):
        return self.coordinate.ctx

    @property
    def dim(self) -> int:
        return 3 * (self.coordinate.dim + 1)

    @property
    def label(self) -> str:
        gammas = ", ".join(str(g) for g in self.gamma)
        return f"H3({self.coordinate.label}; {gammas})"

    def lower_from_upper(self, i: int, j: int, u: Any) -> Any:
        """Entry (j, i) forced by entry (i, j) = u: (gamma_i / gamma_j) conj(u)."""
        return u.conj().scale(self.gamma[i] / self.gamma[j])

    def from_parts(
        self, diag: Sequence[Any], upper: Optional[Dict[Tuple[int, int], Any]] = None
    ) -> "FreudenthalElement":
        """Build from three diagonal scalars and the entries above the diagonal (0-based keys)."""
        c = self.coordinate
        rows = [[c.zero() for _ in range(3)] for _ in range(3)]
        for k in range(3):
            rows[k][k] = c.scalar(self.ctx.coerce(diag[k]))
        for (i, j), u in (upper or {}).items():
            if (i, j) not in _PAIRS:
                raise PreconditionError(f"Upper entries are indexed by {_PAIRS}, got {(i, j)}")
            rows[i][j] = u
            rows[j][i] = self.lower_from_upper(i, j, u)
        return FreudenthalElement(self, rows)

    def identity(self) -> "FreudenthalElement":
        return self.from_parts([1, 1, 1])

    def scalar(self, c: Any) -> "FreudenthalElement":
        return self.from_parts([c, c, c])

    def basis(self) -> List["FreudenthalElement"]:
        zero = self.ctx.zero()
        out = []
        for k in range(3):
            diag = [zero] * 3
            diag[k] = self.ctx.one()
            out.append(self.from_parts(diag))
        for pair in _PAIRS:
            for u in self.coordinate.basis():
                out.append(self.from_parts([zero] * 3, {pair: u}))
        return out

    def random_element(self, rng: random.Random, bound: int = 5) -> "FreudenthalElement":
        diag = [self.ctx.random_scalar(rng, bound) for _ in range(3)]
        upper = {pair: self.coordinate.random_element(rng, bound) for pair in _PAIRS}
        return self.from_parts(diag, upper)


class FreudenthalElement:
    """A Gamma-hermitian 3x3 matrix over the coordinate algebra."""

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra: FreudenthalAlgebra, entries: Sequence[Sequence[Any]]):
        self.algebra = algebra
        self.entries = tuple(tuple(row) for row in entries)

    def _same(self, other: "FreudenthalElement") -> None:
        if other.algebra.label != self.algebra.label:
            raise ContextMismatchError(
                f"Cannot combine elements of {self.algebra.label} and {other.algebra.label}"
            )

    def __add__(self, other: "FreudenthalElement") -> "FreudenthalElement":
        self._same(other)
        return FreudenthalElement(
            self.algebra,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "FreudenthalElement") -> "FreudenthalElement":
        self._same(other)
        return FreudenthalElement(
            self.algebra,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def scale(self, c: Any) -> "FreudenthalElement":
        return FreudenthalElement(self.algebra, [[a.scale(c) for a in row] for row in self.entries])

    def matmul(self, other: "FreudenthalElement") -> List[List[Any]]:
        """The plain matrix product over C; not hermitian in general."""
        self._same(other)
        x, y = self.entries, other.entries
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = x[i][0] * y[0][j]
                for k in (1, 2):
                    acc = acc + x[i][k] * y[k][j]
                row.append(acc)
            out.append(row)
        return out

    def diagonal(self) -> List[Any]:
        return [self.entries[k][k].scalar_value() for k in range(3)]

    def trace(self) -> Any:
        d = self.diagonal()
        return d[0] + d[1] + d[2]

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FreudenthalElement):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"FreudenthalElement({self.algebra.label}, {[list(r) for r in self.entries]})"


def hermitian_violation(alg: FreudenthalAlgebra, entries: Sequence[Sequence[Any]]) -> Optional[Tuple[int, int]]:
    """First entry (1-based) breaking X = Gamma^-1 conj(X)^t Gamma, or None."""
    for i in range(3):
        if not entries[i][i].is_scalar():
            return (i + 1, i + 1)
        for j in range(i + 1, 3):
            if entries[j][i] != alg.lower_from_upper(i, j, entries[i][j]):
                return (j + 1, i + 1)
    return None


def make_hermitian_element(alg: FreudenthalAlgebra, entries: Sequence[Sequence[Any]]) -> FreudenthalElement:
    """
    Validate a 3x3 matrix over the coordinate algebra as an element of H3(C, Gamma).

    Raises:
        HermitianViolationError: Naming the first offending entry
    """
    if len(entries) != 3 or any(len(row) != 3 for row in entries):
        raise PreconditionError("Freudenthal elements are 3x3 matrices")
    bad = hermitian_violation(alg, entries)
    if bad is not None:
        raise HermitianViolationError("Matrix is not Gamma-hermitian", entry=bad)
    return FreudenthalElement(alg, entries)


def jordan_mul(x: FreudenthalElement, y: FreudenthalElement) -> FreudenthalElement:
    """X.Y = (XY + YX) / 2."""
    xy, yx = x.matmul(y), y.matmul(x)
    half = x.algebra.ctx.one() / 2
    entries = [[(a + b).scale(half) for a, b in zip(r, s)] for r, s in zip(xy, yx)]
    bad = hermitian_violation(x.algebra, entries)
    if bad is not None:
        raise InternalCheckError(f"Jordan product left H3 at entry {bad}")
    return FreudenthalElement(x.algebra, entries)


class CubicData(BaseModel):
    """Generic trace, spur and norm of X with its Freudenthal adjoint."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    trace: Any
    spur: Any
    norm: Any
    adjoint: Any


def cubic_data(x: FreudenthalElement) -> CubicData:
    """
    T, S, N from the traces of the Jordan powers, and X# = X^2 - T X + S I.

    The cubic identity X^3 - T X^2 + S X - N I = 0 and X.X# = N I are
    checked on every call.
    """
    alg = x.algebra
    x2 = jordan_mul(x, x)
    x3 = jordan_mul(x, x2)
    t1, t2, t3 = x.trace(), x2.trace(), x3.trace()
    spur = (t1 * t1 - t2) / 2
    norm = (t1 * t1 * t1 - 3 * t1 * t2 + 2 * t3) / 6
    sharp = x2 - x.scale(t1) + alg.scalar(spur)

    residual = x3 - x2.scale(t1) + x.scale(spur) - alg.scalar(norm)
    if residual != alg.scalar(0):
        raise InternalCheckError(f"Cubic identity fails in {alg.label}")
    if jordan_mul(x, sharp) != alg.scalar(norm):
        raise InternalCheckError(f"X.X# != N(X) I in {alg.label}")
    return CubicData(trace=t1, spur=spur, norm=norm, adjoint=sharp)


def adjoint(x: FreudenthalElement) -> FreudenthalElement:
    return cubic_data(x).adjoint


def cross(x: FreudenthalElement, y: FreudenthalElement) -> FreudenthalElement:
    """X x Y = (X + Y)# - X# - Y#."""
    return adjoint(x + y) - adjoint(x) - adjoint(y)


def trace_bilinear(x: FreudenthalElement, y: FreudenthalElement) -> Any:
    """T(X.Y), read off the diagonal of XY + YX."""
    ex, ey = x.entries, y.entries
    acc = x.algebra.ctx.zero()
    for i in range(3):
        s = ex[i][0] * ey[0][i] + ey[i][0] * ex[0][i]
        for k in (1, 2):
            s = s + ex[i][k] * ey[k][i] + ey[i][k] * ex[k][i]
        # s = 2 (X.Y)_ii as an element of C; its trace is 4 (X.Y)_ii
        acc = acc + s.trace() / 4
    return acc


def expected_trace_form(alg: FreudenthalAlgebra) -> QForm:
    """<1,1,1> + sum over i < j of <2 gamma_i / gamma_j> x N_C."""
    ctx = alg.ctx
    form = QForm(ctx=ctx, diag=[1, 1, 1])
    norm = alg.coordinate.norm_form()
    for i, j in _PAIRS:
        form = form.orthogonal_sum(norm.scaled(2 * alg.gamma[i] / alg.gamma[j]))
    return form


class TraceFormReport(BaseModel):
    """Gram matrix of T(X.Y) on the standard basis, its diagonalization and the closed form."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    gram: Matrix
    form: QForm
    expected: QForm
    certified: bool


def algebra_trace_form(alg: FreudenthalAlgebra) -> TraceFormReport:
    """
    Diagonalize T(X.Y) and compare it with the closed form.

    Raises:
        InternalCheckError: If the two forms are not equivalent
    """
    basis = alg.basis()
    n = len(basis)
    if n != alg.dim:
        raise InternalCheckError(f"Basis of {alg.label} has {n} elements, expected {alg.dim}")
    gram = [[alg.ctx.zero()] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            value = trace_bilinear(basis[a], basis[b])
            gram[a][b] = value
            gram[b][a] = value
    form, _ = diagonalize_gram(alg.ctx, gram)
    expected = expected_trace_form(alg)
    if alg.ctx.kind in (FieldKind.RATIONALS, FieldKind.PRIME_FIELD):
        certified = qform_equivalent(form, expected)
        if not certified:
            raise InternalCheckError(f"Trace form of {alg.label} disagrees with the closed form")
    else:
        logger.warning(f"Trace form equivalence is not decided over {alg.ctx.label}")
        certified = False
    return TraceFormReport(gram=gram, form=form, expected=expected, certified=certified)


def embed_element(target: FreudenthalAlgebra, x: FreudenthalElement) -> FreudenthalElement:
    """Entrywise inclusion H3(C', Gamma) -> H3(C, Gamma) for a truncation C' of the tower C."""
    if not isinstance(target.coordinate, CDTower):
        raise PreconditionError("Entrywise inclusions are defined between CD towers")
    if target.gamma != x.algebra.gamma:
        raise ContextMismatchError("Inclusions need the same Gamma")
    entries = [[target.coordinate.embed(u) for u in row] for row in x.entries]
    return FreudenthalElement(target, entries)
