"""
Hermitian forms over quadratic extensions, reduced to quadratic forms over k.
"""
from typing import Any

from src.domain.qforms.forms import hyperbolic, qform_equivalent
from src.domain.qforms.hilbert import hilbert_symbol, relevant_places
from src.domain.qforms.models import HermitianForm, QForm
from src.domain.scalars.fields import FieldCtx, FieldKind, square_class_product
from src.shared.exceptions import ContextMismatchError, FieldError, ZeroInputError


def hermitian_trace_form(h: HermitianForm) -> QForm:
    """
    Trace form x -> h(x, x) over k.

    <y> over k(sqrt(-d)) has trace form <y, d*y>; the split case is hyperbolic.
    """
    if h.split:
        return hyperbolic(h.ctx, h.rank)
    diag = []
    for y in h.diag:
        diag.extend([y, h.d * y])
    return QForm(ctx=h.ctx, diag=diag)


def is_norm(ctx: FieldCtx, c: Any, d: Any) -> bool:
    """Whether c is a norm from k(sqrt(-d)), i.e. c = x^2 + d*y^2 has a solution."""
    c, d = ctx.coerce(c), ctx.coerce(d)
    if c == 0 or d == 0:
        raise ZeroInputError("Norm test needs nonzero c and d")
    if ctx.kind == FieldKind.PRIME_FIELD or ctx.is_square(-d):
        return True
    if ctx.kind != FieldKind.RATIONALS:
        raise FieldError(f"Norm test is not available over {ctx.label}")
    return all(hilbert_symbol(c, -d, v) == 1 for v in relevant_places([c, -d]))


def hermitian_determinant(h: HermitianForm) -> Any:
    acc = h.ctx.one()
    for y in h.diag:
        acc = acc * y
    return acc


def hermitian_discriminant(h: HermitianForm) -> Any:
    """Representative (-1)^(n(n-1)/2) * det of the discriminant class modulo norms."""
    n = h.rank
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * hermitian_determinant(h)


def has_trivial_discriminant(h: HermitianForm) -> bool:
    """det(h) is a norm from the quadratic extension."""
    if h.ctx.kind == FieldKind.RATIONALS:
        return is_norm(h.ctx, square_class_product(h.diag), h.d)
    return is_norm(h.ctx, hermitian_determinant(h), h.d)


def hermitian_equivalent(h1: HermitianForm, h2: HermitianForm) -> bool:
    """Isometry over the same extension via trace forms (Jacobson)."""
    if h1.ctx != h2.ctx or h1.d != h2.d:
        raise ContextMismatchError("Hermitian forms over different extensions")
    if h1.rank != h2.rank:
        return False
    return qform_equivalent(hermitian_trace_form(h1), hermitian_trace_form(h2))
