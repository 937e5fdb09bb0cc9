"""
Quadratic form operations: congruence diagonalization, Hasse-Minkowski
invariants, equivalence, isotropy and Pfister forms.
"""
import logging
from typing import Any, List, Sequence, Tuple

from src.domain.qforms.hilbert import (
    INFINITY,
    Place,
    hilbert_symbol,
    is_local_square,
    place_key,
    relevant_places,
)
from src.domain.qforms.models import QForm, QFormInvariants
from src.domain.scalars.fields import FieldCtx, FieldKind, square_class_product
from src.domain.scalars.linalg import Matrix, identity, is_symmetric
from src.shared.exceptions import (
    ContextMismatchError,
    DegenerateFormError,
    FieldError,
    PreconditionError,
    ZeroInputError,
)

logger = logging.getLogger(__name__)


def _congruence_reduce(ctx: FieldCtx, gram: Matrix) -> Tuple[List[Any], Matrix]:
    """
    Symmetric Gaussian elimination.

    Returns the diagonal (zeros mark radical directions) and P with
    P^t G P = diag. Columns of P are the new basis vectors.
    """
    if not is_symmetric(gram):
        raise PreconditionError("Gram matrix must be symmetric")
    n = len(gram)
    a = [[ctx.coerce(x) for x in row] for row in gram]
    p = identity(ctx, n)

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    def add_into(target: int, source: int, c: Any) -> None:
        # basis[target] += c * basis[source]
        a[target] = [x + c * y for x, y in zip(a[target], a[source])]
        for row in a:
            row[target] = row[target] + c * row[source]
        for row in p:
            row[target] = row[target] + c * row[source]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                add_into(k, j, ctx.one())
        pivot = a[k][k]
        for j in range(k + 1, n):
            if a[k][j] != 0:
                add_into(j, k, -(a[k][j] / pivot))
    return [a[i][i] for i in range(n)], p


def diagonalize_gram(ctx: FieldCtx, gram: Matrix) -> Tuple[QForm, Matrix]:
    """
    Diagonalize a non-degenerate symmetric Gram matrix.

    Args:
        ctx: Field of the entries
        gram: Symmetric square matrix

    Returns:
        Tuple of the diagonal QForm and the certificate P with P^t G P diagonal

    Raises:
        DegenerateFormError: If the form has a radical
    """
    entries, p = _congruence_reduce(ctx, gram)
    radical = sum(1 for e in entries if e == 0)
    if radical:
        raise DegenerateFormError("Degenerate Gram matrix", radical_dim=radical)
    return QForm(ctx=ctx, diag=entries), p


def radical_split(ctx: FieldCtx, gram: Matrix) -> Tuple[List[Any], int]:
    """Nonzero diagonal entries of a possibly degenerate form and its radical dimension."""
    entries, _ = _congruence_reduce(ctx, gram)
    nonzero = [e for e in entries if e != 0]
    return nonzero, len(entries) - len(nonzero)


def hyperbolic(ctx: FieldCtx, planes: int) -> QForm:
    return QForm(ctx=ctx, diag=[1, -1] * planes)


def pfister(ctx: FieldCtx, slots: Sequence[Any]) -> QForm:
    """<<a1,...,an>> = <1,-a1> x ... x <1,-an>."""
    diag = [ctx.one()]
    for a in slots:
        a = ctx.coerce(a)
        if a == 0:
            raise ZeroInputError("Pfister slots must be nonzero")
        diag = diag + [-a * x for x in diag]
    return QForm(ctx=ctx, diag=diag)


def _require_rationals(q: QForm) -> None:
    if q.ctx.kind != FieldKind.RATIONALS:
        raise FieldError(f"Operation needs forms over Q, got {q.ctx.label}")


def hasse_invariant(q: QForm, place: Place) -> int:
    """Product of (a_i, a_j)_v over i < j."""
    result = 1
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            result *= hilbert_symbol(q.diag[i], q.diag[j], place)
    return result


def discriminant_class(q: QForm) -> int:
    """Squarefree class of the determinant of a form over Q, 1 for the zero form."""
    _require_rationals(q)
    return square_class_product(q.diag)


def qform_invariants(q: QForm) -> QFormInvariants:
    """Dimension, squarefree discriminant, signature and Hasse symbols of a form over Q."""
    _require_rationals(q)
    disc = discriminant_class(q)
    hasse = {place_key(v): hasse_invariant(q, v) for v in relevant_places(q.diag)}
    return QFormInvariants(dim=q.dim, disc_class=disc, signature=q.signature(), hasse=hasse)


def qform_equivalent(q1: QForm, q2: QForm) -> bool:
    """
    Isometry test: Hasse-Minkowski over Q, dimension and discriminant over F_p.

    Raises:
        ContextMismatchError: If the forms live over different fields
        FieldError: For fields other than Q and F_p
    """
    if q1.ctx != q2.ctx:
        raise ContextMismatchError(
            f"Cannot compare forms over {q1.ctx.label} and {q2.ctx.label}"
        )
    if q1.dim != q2.dim:
        return False
    if q1.dim == 0:
        return True
    ctx = q1.ctx
    if ctx.kind == FieldKind.PRIME_FIELD:
        return ctx.is_square(q1.determinant() * q2.determinant())
    _require_rationals(q1)
    if q1.signature() != q2.signature():
        return False
    if discriminant_class(q1) != discriminant_class(q2):
        return False
    for place in relevant_places(q1.diag + q2.diag):
        if hasse_invariant(q1, place) != hasse_invariant(q2, place):
            return False
    return True


def is_locally_isotropic(q: QForm, place: Place) -> bool:
    """Isotropy of a rational form over the completion at place."""
    _require_rationals(q)
    n = q.dim
    if place == INFINITY:
        positives, negatives = q.signature()
        return positives > 0 and negatives > 0
    if n <= 1:
        return False
    d = discriminant_class(q)
    if n == 2:
        return is_local_square(-d, place)
    if n == 3:
        return hilbert_symbol(-1, -d, place) == hasse_invariant(q, place)
    if n == 4:
        return (not is_local_square(d, place)) or (
            hasse_invariant(q, place) == hilbert_symbol(-1, -1, place)
        )
    return True


def anisotropic_places(q: QForm) -> List[str]:
    """Places (as strings) where the rational form is anisotropic."""
    _require_rationals(q)
    places = relevant_places(q.diag + [-1])
    return [place_key(v) for v in places if not is_locally_isotropic(q, v)]


def is_isotropic(q: QForm) -> bool:
    """Global isotropy: over Q by Hasse-Minkowski, over F_p by dimension and discriminant."""
    n = q.dim
    if n <= 1:
        return False
    if q.ctx.kind == FieldKind.PRIME_FIELD:
        return n >= 3 or q.ctx.is_square(-q.determinant())
    if n == 2:
        return discriminant_class(q) == -1
    return not anisotropic_places(q)


def represents(q: QForm, c: Any) -> bool:
    """Whether q represents the nonzero scalar c."""
    return is_isotropic(q.orthogonal_sum(QForm(ctx=q.ctx, diag=[-q.ctx.coerce(c)])))


def is_hyperbolic_pfister(q: QForm) -> bool:
    """Over Q a Pfister form is hyperbolic exactly when it is isotropic."""
    _require_rationals(q)
    if q.dim < 2 or q.dim & (q.dim - 1):
        raise PreconditionError(f"Dimension {q.dim} is not that of a Pfister form")
    return is_isotropic(q)


def two_fold_split_by_symbols(a: Any, b: Any) -> bool:
    """<<a, b>> is split iff (a, b)_v = +1 at every place."""
    return all(hilbert_symbol(a, b, v) == 1 for v in relevant_places([a, b]))
