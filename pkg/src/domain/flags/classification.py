"""
Classification of composition algebras over Q by their norm forms.
"""
import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from src.domain.qforms.forms import (
    anisotropic_places,
    discriminant_class,
    hyperbolic,
    qform_equivalent,
    represents,
)
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldKind
from src.shared.exceptions import ClassificationError, FieldError

logger = logging.getLogger(__name__)


class CompositionKind(str, Enum):
    """Composition algebra dimensions above k."""
    QUADRATIC = "quadratic"
    QUATERNION = "quaternion"
    OCTONION = "octonion"


class CompositionClass(BaseModel):
    """Isomorphism class of a composition algebra read off its norm."""

    kind: CompositionKind
    split: bool
    disc_class: Optional[int] = None
    ramification: List[str] = Field(default_factory=list)
    label: str


def _quadratic(q: QForm) -> CompositionClass:
    disc_class = discriminant_class(q)
    if not qform_equivalent(q, QForm(ctx=q.ctx, diag=[1, disc_class])):
        raise ClassificationError(f"{q.diag} is not a quadratic norm form <1, d>")
    split = disc_class == -1
    label = "Q x Q" if split else f"Q(sqrt({-disc_class}))"
    return CompositionClass(kind=CompositionKind.QUADRATIC, split=split, disc_class=disc_class, label=label)


def _quaternion(q: QForm) -> CompositionClass:
    if discriminant_class(q) != 1 or not represents(q, 1):
        raise ClassificationError(f"{q.diag} is not a 2-fold Pfister form")
    ramified = anisotropic_places(q)
    if not ramified:
        return CompositionClass(kind=CompositionKind.QUATERNION, split=True, label="M2(Q)")
    places = ", ".join(ramified)
    return CompositionClass(
        kind=CompositionKind.QUATERNION,
        split=False,
        ramification=ramified,
        label=f"quaternion division algebra ramified at {{{places}}}",
    )


def _octonion(q: QForm) -> CompositionClass:
    if qform_equivalent(q, hyperbolic(q.ctx, 4)):
        return CompositionClass(kind=CompositionKind.OCTONION, split=True, label="Zorn(Q)")
    if qform_equivalent(q, QForm(ctx=q.ctx, diag=[1] * 8)):
        return CompositionClass(
            kind=CompositionKind.OCTONION, split=False, ramification=["inf"], label="division octonions"
        )
    raise ClassificationError(f"{q.diag} is not a 3-fold Pfister form")


def classify_composition_form(q: QForm) -> CompositionClass:
    """
    Classify a norm form of dimension 2, 4 or 8 over Q.

    Raises:
        FieldError: If the form is not over Q
        ClassificationError: For other dimensions or forms of non-Pfister shape
    """
    if q.ctx.kind != FieldKind.RATIONALS:
        raise FieldError(f"Composition algebras are classified over Q, not {q.ctx.label}")
    if q.dim == 2:
        return _quadratic(q)
    if q.dim == 4:
        return _quaternion(q)
    if q.dim == 8:
        return _octonion(q)
    raise ClassificationError(f"No composition algebra has a norm of dimension {q.dim}")
