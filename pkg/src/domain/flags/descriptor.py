"""
Maximal flags k < K < Q < C attached to semistable orbits of normal-form points.
"""
import logging
from typing import Any, List

from pydantic import BaseModel, ConfigDict

from src.domain.composition.towers import FlagTower, OctonionClass, build_flag_tower
from src.domain.flags.classification import CompositionClass, classify_composition_form
from src.domain.invariants.relative import f2_normal_form_polynomial
from src.domain.orbits.normal_form import NormalFormX, normal_form_point
from src.domain.orbits.stabilizer import lie_stabilizer, quaternion_norm_from_stabilizer
from src.domain.qforms.forms import qform_equivalent
from src.domain.qforms.hermitian import has_trivial_discriminant, hermitian_equivalent, hermitian_trace_form
from src.domain.qforms.models import HermitianForm, QForm
from src.domain.scalars.fields import FieldKind, squarefree_part
from src.shared.exceptions import FieldError, InternalCheckError, NotSemistableError

logger = logging.getLogger(__name__)


class FlagDescriptor(BaseModel):
    """Classifying data of the flag of an orbit; K = Q(sqrt(-i))."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    i: Any
    i_class: int
    split: bool
    pattern: int
    y: List[Any]
    h: HermitianForm
    quadratic_class: CompositionClass
    quaternion_norm: QForm
    octonion_norm: QForm
    quaternion_class: CompositionClass
    octonion_class: OctonionClass
    tower: FlagTower

    @property
    def octonion_label(self) -> str:
        return "Zorn(Q)" if self.octonion_class == OctonionClass.SPLIT else "division octonions"


def flag_of_point(nf: NormalFormX, m: int = 1, cross_check: bool = True) -> FlagDescriptor:
    """
    The flag of the orbit of (x(y), v_m) with v_m the m-th canonical pattern.

    The quaternion member has norm the trace form of diag(1, y_m) over K and
    the octonion member the trace form of diag(1, y1, y2, y3).

    Raises:
        FieldError: Outside Q
        NotSemistableError: If f1 or f2 vanishes
        InternalCheckError: If the stabilizer or the tower disagree with the trace forms
    """
    ctx = nf.ctx
    if ctx.kind != FieldKind.RATIONALS:
        raise FieldError(f"Flags are classified over Q, not {ctx.label}")
    i = nf.f1
    if i == 0:
        raise NotSemistableError(f"f1 vanishes on the normal form {nf.ys}")
    v = nf.pattern_vector(m)
    if f2_normal_form_polynomial(ctx, nf.ys, v) == 0:
        raise NotSemistableError(f"f2 vanishes on pattern {m} of {nf.ys}")

    y_m = nf.y(m)
    h = HermitianForm(ctx=ctx, d=i, diag=[nf.y1, nf.y2, nf.y3])
    if not has_trivial_discriminant(h):
        raise InternalCheckError(f"y1 y2 y3 is not a norm from Q(sqrt({-i}))")
    quaternion_norm = hermitian_trace_form(HermitianForm(ctx=ctx, d=i, diag=[1, y_m]))
    octonion_norm = hermitian_trace_form(HermitianForm(ctx=ctx, d=i, diag=[1, nf.y1, nf.y2, nf.y3]))
    quaternion_class = classify_composition_form(quaternion_norm)
    octonion_cls = classify_composition_form(octonion_norm)
    octonion_class = OctonionClass.SPLIT if octonion_cls.split else OctonionClass.DIVISION

    tower = build_flag_tower(i, y_m, octonion_class, ctx)
    if not qform_equivalent(tower.Q.norm_form(), quaternion_norm):
        raise InternalCheckError(f"Quaternion tower {tower.Q.label} disagrees with the trace form")
    if not qform_equivalent(tower.C.norm_form(), octonion_norm):
        raise InternalCheckError(f"Octonion tower {tower.C.label} disagrees with the trace form")

    if cross_check:
        stab = lie_stabilizer(normal_form_point(nf, v))
        if not qform_equivalent(quaternion_norm_from_stabilizer(stab), quaternion_norm):
            raise InternalCheckError(f"Stabilizer quaternion disagrees with the trace form for {nf.ys}")

    logger.info(
        f"Flag of {nf.ys} (pattern {m}): K class {squarefree_part(i)}, "
        f"{quaternion_class.label}, {octonion_class.value} octonions"
    )
    return FlagDescriptor(
        i=i,
        i_class=squarefree_part(i),
        split=h.split,
        pattern=m,
        y=nf.ys,
        h=h,
        quadratic_class=classify_composition_form(tower.K.norm_form()),
        quaternion_norm=quaternion_norm,
        octonion_norm=octonion_norm,
        quaternion_class=quaternion_class,
        octonion_class=octonion_class,
        tower=tower,
    )


def flags_equal(f1: FlagDescriptor, f2: FlagDescriptor) -> bool:
    """Isomorphism of flags decided on K, the hermitian form, Q and C."""
    if f1.i_class != f2.i_class or f1.split != f2.split:
        return False
    h2 = HermitianForm(ctx=f1.h.ctx, d=f1.h.d, diag=f2.h.diag)
    if not hermitian_equivalent(f1.h, h2):
        return False
    if sorted(f1.quaternion_class.ramification) != sorted(f2.quaternion_class.ramification):
        return False
    return f1.octonion_class == f2.octonion_class
