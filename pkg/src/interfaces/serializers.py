"""
Domain objects to JSON-friendly response models.
"""
from typing import Any, List, Optional, Sequence

from src.domain.flags.classification import CompositionClass
from src.domain.flags.descriptor import FlagDescriptor
from src.domain.freudenthal.maps import FreudenthalFlagReport
from src.domain.invariants.relative import InvariantReport
from src.domain.orbits.canonical import Canonicalization
from src.domain.orbits.stabilizer import ExtendedStabilizer, LieStabilizer
from src.domain.orbits.witnesses import WitnessReport
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.parsing import format_scalar
from src.domain.wedge.contraction import split_components
from src.domain.wedge.trivector import TriVector, format_trivector
from src.interfaces.models import (
    AlgebraModel,
    CanonicalizeResponse,
    CompositionClassModel,
    FlagResponse,
    FreudenthalResponse,
    InvariantResponse,
    MatrixText,
    StabilizerResponse,
    WitnessResponse,
)


def scalars_text(values: Sequence[Any]) -> List[str]:
    return [format_scalar(v) for v in values]


def matrix_text(rows: Sequence[Sequence[Any]]) -> MatrixText:
    return [scalars_text(row) for row in rows]


def form_text(q: QForm) -> List[str]:
    return scalars_text(q.diag)


def serialize_invariants(t: TriVector, report: InvariantReport) -> InvariantResponse:
    x, v = split_components(t)
    return InvariantResponse(
        field=t.ctx.label,
        trivector=format_trivector(t),
        x_part=format_trivector(x),
        v=scalars_text(v),
        f=format_scalar(report.f),
        f1=format_scalar(report.f1),
        f2=format_scalar(report.f2),
        semistable=report.semistable,
    )


def serialize_canonicalization(ctx: FieldCtx, result: Canonicalization) -> CanonicalizeResponse:
    return CanonicalizeResponse(
        field=ctx.label,
        g=matrix_text(result.g.g),
        source=format_trivector(result.source),
        canonical=format_trivector(result.canonical),
        q=format_scalar(result.q),
        pivot=result.pivot,
        steps=result.steps,
    )


def serialize_stabilizer(
    stab: LieStabilizer,
    quaternion_norm: Optional[QForm] = None,
    extended: Optional[ExtendedStabilizer] = None,
) -> StabilizerResponse:
    return StabilizerResponse(
        field=stab.ctx.label,
        dim=stab.dim,
        basis=[matrix_text(b) for b in stab.basis],
        killing=matrix_text(stab.killing),
        quaternion_norm=form_text(quaternion_norm) if quaternion_norm is not None else None,
        extended_dim=extended.dim if extended is not None else None,
    )


def _composition_class(c: CompositionClass) -> CompositionClassModel:
    return CompositionClassModel(
        kind=c.kind.value,
        split=c.split,
        disc_class=c.disc_class,
        ramification=c.ramification,
        label=c.label,
    )


def serialize_flag(flag: FlagDescriptor) -> FlagResponse:
    return FlagResponse(
        field=flag.h.ctx.label,
        i=format_scalar(flag.i),
        i_class=flag.i_class,
        split=flag.split,
        pattern=flag.pattern,
        y=scalars_text(flag.y),
        hermitian_form=scalars_text(flag.h.diag),
        quadratic=_composition_class(flag.quadratic_class),
        quaternion=_composition_class(flag.quaternion_class),
        quaternion_norm=form_text(flag.quaternion_norm),
        octonion=flag.octonion_label,
        octonion_norm=form_text(flag.octonion_norm),
        tower=[member.label for member in flag.tower.members()],
    )


def serialize_freudenthal(flag: FlagDescriptor, report: FreudenthalFlagReport) -> FreudenthalResponse:
    return FreudenthalResponse(
        flag=serialize_flag(flag),
        dim6=form_text(report.dim6),
        dim6_gamma=scalars_text(report.dim6_gamma),
        dim9=form_text(report.dim9),
        dim9_gamma=scalars_text(report.dim9_gamma),
        tower=[AlgebraModel(label=a.label, dim=a.dim) for a in report.tower],
        inclusions_verified=report.inclusions_verified,
    )


def serialize_witness(ctx: FieldCtx, report: WitnessReport) -> WitnessResponse:
    return WitnessResponse(
        case=report.case.value,
        field=ctx.label,
        verified=report.verified,
        matrices={name: matrix_text(m) for name, m in report.matrices.items()},
        scalars={name: format_scalar(c) for name, c in report.scalars.items()},
        source=format_trivector(report.source),
        target=format_trivector(report.target),
    )
