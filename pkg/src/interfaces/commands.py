"""
Request handlers shared by the CLI and the HTTP router.

Each handler parses its request in the requested field, calls the domain
and returns the response model.
"""
import logging
from typing import Any, Dict

from src.domain.flags.descriptor import FlagDescriptor, flag_of_point
from src.domain.freudenthal.maps import orbit_to_freudenthal
from src.domain.invariants.relative import f1_f2_semistable
from src.domain.orbits.canonical import canonicalize_v
from src.domain.orbits.normal_form import NormalFormX
from src.domain.orbits.stabilizer import (
    lie_stabilizer,
    lie_stabilizer_gsp,
    quaternion_norm_from_stabilizer,
)
from src.domain.orbits.witnesses import verify_witness
from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.parsing import parse_field_spec, parse_matrix, parse_scalar
from src.domain.wedge.trivector import parse_trivector
from src.interfaces.models import (
    CanonicalizeRequest,
    CanonicalizeResponse,
    EvalRequest,
    FlagRequest,
    FlagResponse,
    FreudenthalRequest,
    FreudenthalResponse,
    InvariantResponse,
    StabilizerRequest,
    StabilizerResponse,
    WitnessRequest,
    WitnessResponse,
)
from src.interfaces.serializers import (
    serialize_canonicalization,
    serialize_flag,
    serialize_freudenthal,
    serialize_invariants,
    serialize_stabilizer,
    serialize_witness,
)

logger = logging.getLogger(__name__)


def _witness_param(value: Any, ctx: FieldCtx) -> Any:
    if isinstance(value, list):
        return [[parse_scalar(entry, ctx) for entry in row] for row in value]
    if ";" in str(value):
        return parse_matrix(str(value), ctx)
    return parse_scalar(value, ctx)


def _flag(req: FlagRequest) -> FlagDescriptor:
    ctx = parse_field_spec(req.field)
    nf = NormalFormX.from_values(ctx, [parse_scalar(y, ctx) for y in req.nf])
    return flag_of_point(nf, req.pattern, cross_check=req.cross_check)


def evaluate(req: EvalRequest) -> InvariantResponse:
    ctx = parse_field_spec(req.field)
    t = parse_trivector(req.trivector, ctx)
    logger.info(f"Evaluating invariants over {ctx.label}")
    return serialize_invariants(t, f1_f2_semistable(t))


def canonicalize(req: CanonicalizeRequest) -> CanonicalizeResponse:
    ctx = parse_field_spec(req.field)
    y0 = parse_scalar(req.y0, ctx)
    v = [parse_scalar(c, ctx) for c in req.v]
    return serialize_canonicalization(ctx, canonicalize_v(ctx, y0, v))


def stabilizer(req: StabilizerRequest) -> StabilizerResponse:
    ctx = parse_field_spec(req.field)
    t = parse_trivector(req.trivector, ctx)
    stab = lie_stabilizer(t)
    quaternion = quaternion_norm_from_stabilizer(stab) if stab.dim == 3 else None
    extended = lie_stabilizer_gsp(t) if req.extended else None
    logger.info(f"Stabilizer over {ctx.label} has dimension {stab.dim}")
    return serialize_stabilizer(stab, quaternion, extended)


def flag(req: FlagRequest) -> FlagResponse:
    return serialize_flag(_flag(req))


def freudenthal(req: FreudenthalRequest) -> FreudenthalResponse:
    descriptor = _flag(req)
    ctx = descriptor.h.ctx
    gamma = [parse_scalar(g, ctx) for g in req.gamma] if req.gamma else None
    report = orbit_to_freudenthal(descriptor, gamma=gamma, seed=req.seed, samples=req.samples)
    return serialize_freudenthal(descriptor, report)


def witness(req: WitnessRequest) -> WitnessResponse:
    ctx = parse_field_spec(req.field)
    params: Dict[str, Any] = {name: _witness_param(value, ctx) for name, value in req.params.items()}
    logger.info(f"Building witness {req.case} over {ctx.label}")
    return serialize_witness(ctx, verify_witness(req.case, params, ctx))
