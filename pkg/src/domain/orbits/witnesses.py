"""
Explicit group elements relating orbit representatives, built exactly and
checked against the mapping they are supposed to realize.
"""
import logging
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional

from pydantic import BaseModel, ConfigDict

from src.domain.invariants.relative import f1_normal_form_polynomial
from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import Matrix, block, determinant, diagonal, to_matrix
from src.domain.wedge.contraction import act_product, act_wedge3, join_components
from src.domain.wedge.symplectic import check_symplectic, sl3_block
from src.domain.wedge.trivector import TriVector
from src.domain.orbits.normal_form import NormalFormX, split_x
from src.shared.exceptions import PreconditionError, ZeroInputError

logger = logging.getLogger(__name__)


class WitnessCase(str, Enum):
    """Available witness constructions."""
    NORMAL_FORM = "normal_form"
    SPLIT_CHAIN = "split_chain"
    SL2_EMBED = "sl2_embed"
    SL3_EMBED = "sl3_embed"
    GL1_SCALING = "gl1_scaling"
    GSP_SCALING = "gsp_scaling"


# Published ids accepted for the two constructions with descriptive names
CASE_ALIASES: Dict[str, WitnessCase] = {
    "thmCD_g": WitnessCase.NORMAL_FORM,
    "spPV_chain": WitnessCase.SPLIT_CHAIN,
}


class WitnessReport(BaseModel):
    """The constructed matrices, the source and target points and the verdict."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    case: WitnessCase
    matrices: Dict[str, Matrix]
    scalars: Dict[str, Any]
    source: TriVector
    target: TriVector
    verified: bool


def _param(ctx: FieldCtx, params: Mapping[str, Any], name: str, default: Any = None) -> Any:
    if name not in params:
        if default is None:
            raise PreconditionError(f"Witness parameter {name!r} is required")
        return ctx.coerce(default)
    return ctx.coerce(params[name])


def _nonzero(value: Any, name: str) -> Any:
    if value == 0:
        raise ZeroInputError(f"Witness parameter {name} must be nonzero")
    return value


def _ys(ctx: FieldCtx, params: Mapping[str, Any]) -> List[Any]:
    return [_param(ctx, params, f"y{k}") for k in range(4)]


def _normal_form_map(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """
    Block-diagonal g = [[alpha, beta], [gamma, delta]] sending
    (-e123 - 2s e456, (4s/(y0+2s), 0, 0, -(y0+2s)/(2 y1), 0, 0)) to
    (normal form, (2, 0, 0, -y0/y1, 0, 0)), where s^2 = -i.
    """
    i = _nonzero(_param(ctx, params, "i"), "i")
    y0, y1, y2, y3 = _ys(ctx, params)
    nf = NormalFormX(ctx=ctx, y0=y0, y1=y1, y2=y2, y3=y3)
    if f1_normal_form_polynomial(ctx, nf.ys) != i:
        raise PreconditionError("The normal form must satisfy y1 y2 y3 - y0^2/4 = i")
    s = ctx.square_root(-i)
    if y0 + 2 * s == 0:
        raise PreconditionError("y0 + 2 sqrt(-i) vanishes for this choice of root")
    one = ctx.one()
    u = (y0 + 2 * s) / (4 * s)
    w = y0 - 2 * s
    alpha = diagonal(ctx, [u, one, one])
    beta = diagonal(ctx, [-2 * y1 / (y0 + 2 * s), -y2 / (2 * s), -y3 / (2 * s)])
    gamma = diagonal(
        ctx, [-(y0 * y0 + 4 * i) / (8 * s * y1), -w / (2 * y2), -w / (2 * y3)]
    )
    delta = diagonal(ctx, [one, u, u])
    g = check_symplectic(ctx, block(alpha, beta, gamma, delta))

    zero = ctx.zero()
    source = join_components(
        split_x(ctx, 2 * s),
        [4 * s / (y0 + 2 * s), zero, zero, -(y0 + 2 * s) / (2 * y1), zero, zero],
    )
    target = join_components(nf.x_part(), nf.pattern_vector(1))
    verified = g.similitude_factor == 1 and act_wedge3(g, source) == target
    return WitnessReport(
        case=WitnessCase.NORMAL_FORM,
        matrices={"g": g.g},
        scalars={"sqrt_minus_i": s},
        source=source,
        target=target,
        verified=verified,
    )


def _split_chain(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """
    Three steps taking (-e123 - 2s e456, (a, 0, 0, 1, 0, 0)) to
    (-e123 - 2 e456, (1, 0, 0, 1, 0, 0)) with c^4 = -i and s = c^2.
    """
    a = _nonzero(_param(ctx, params, "a"), "a")
    i = _nonzero(_param(ctx, params, "i"), "i")
    r = ctx.square_root(a)
    c = ctx.fourth_root(-i)
    s = c * c
    zero, one = ctx.zero(), ctx.one()
    source = join_components(split_x(ctx, 2 * s), [a, zero, zero, one, zero, zero])

    g = check_symplectic(ctx, diagonal(ctx, [one / r, r, one, r, one / r, one]))
    step = act_product(g, one, one / r, source)
    g2 = check_symplectic(ctx, diagonal(ctx, [one, one, c, one, one, one / c]))
    end = act_product(g2, one / c, one, step)

    target = join_components(split_x(ctx, 2), [one, zero, zero, one, zero, zero])
    logger.debug(f"Split chain with a={a}, i={i}: intermediate {step!r}")
    return WitnessReport(
        case=WitnessCase.SPLIT_CHAIN,
        matrices={"g": g.g, "g2": g2.g},
        scalars={"sqrt_a": r, "fourth_root_minus_i": c, "v_scaling": one / r, "x_scaling": one / c},
        source=source,
        target=target,
        verified=end == target,
    )


def _sl2_embed(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """diag(C, (C^t)^-1) with C = diag(1, C1) fixes the canonical point (split x, (q,0,0,1,0,0))."""
    if "block" not in params:
        raise PreconditionError("sl2_embed needs a 2x2 'block'")
    c1 = to_matrix(ctx, params["block"])
    if len(c1) != 2 or any(len(row) != 2 for row in c1):
        raise PreconditionError("sl2_embed needs a 2x2 block")
    if c1[0][0] * c1[1][1] - c1[0][1] * c1[1][0] != 1:
        raise PreconditionError("sl2_embed needs a block of determinant 1")
    y0 = _nonzero(_param(ctx, params, "y0", 2), "y0")
    q = _nonzero(_param(ctx, params, "q", 1), "q")
    zero, one = ctx.zero(), ctx.one()
    c = [[one, zero, zero], [zero, c1[0][0], c1[0][1]], [zero, c1[1][0], c1[1][1]]]
    g = sl3_block(ctx, c)
    point = join_components(split_x(ctx, y0), [q, zero, zero, one, zero, zero])
    return WitnessReport(
        case=WitnessCase.SL2_EMBED,
        matrices={"g": g.g},
        scalars={"y0": y0, "q": q},
        source=point,
        target=point,
        verified=act_wedge3(g, point) == point,
    )


def _sl3_embed(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """diag(A, (A^t)^-1) with det A = 1 fixes -e123 - y0 e456."""
    if "block" not in params:
        raise PreconditionError("sl3_embed needs a 3x3 'block'")
    a = to_matrix(ctx, params["block"])
    if len(a) != 3 or any(len(row) != 3 for row in a):
        raise PreconditionError("sl3_embed needs a 3x3 block")
    if determinant(ctx, a) != 1:
        raise PreconditionError("sl3_embed needs a block of determinant 1")
    y0 = _nonzero(_param(ctx, params, "y0", 2), "y0")
    g = sl3_block(ctx, a)
    x = split_x(ctx, y0)
    return WitnessReport(
        case=WitnessCase.SL3_EMBED,
        matrices={"g": g.g},
        scalars={"y0": y0},
        source=x,
        target=x,
        verified=act_wedge3(g, x) == x,
    )


def _scaled_normal_forms(
    ctx: FieldCtx, params: Mapping[str, Any], scale: Callable[[Any, List[Any]], List[Any]]
):
    a = _nonzero(_param(ctx, params, "a"), "a")
    ys = _ys(ctx, params)
    nf = NormalFormX.from_values(ctx, ys)
    moved = NormalFormX.from_values(ctx, scale(a, ys))
    source = join_components(nf.x_part(), nf.pattern_vector(1))
    target = join_components(moved.x_part(), moved.pattern_vector(1))
    return a, source, target


def _gl1_scaling(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """(diag(a^-1,1,1,a,1,1), a, a) takes y to (a^2 y0, y1, a^2 y2, a^2 y3)."""
    a, source, target = _scaled_normal_forms(
        ctx, params, lambda a, y: [a * a * y[0], y[1], a * a * y[2], a * a * y[3]]
    )
    one = ctx.one()
    g = check_symplectic(ctx, diagonal(ctx, [one / a, one, one, a, one, one]))
    return WitnessReport(
        case=WitnessCase.GL1_SCALING,
        matrices={"g": g.g},
        scalars={"x_scaling": a, "v_scaling": a},
        source=source,
        target=target,
        verified=act_product(g, a, a, source) == target,
    )


def _gsp_scaling(ctx: FieldCtx, params: Mapping[str, Any]) -> WitnessReport:
    """(diag(a^-2,a,a,a^3,1,1), 1, a^2) with similitude factor a takes y to (a^3 y0, a^-2 y1, a^4 y2, a^4 y3)."""
    a, source, target = _scaled_normal_forms(
        ctx,
        params,
        lambda a, y: [a ** 3 * y[0], y[1] / (a * a), a ** 4 * y[2], a ** 4 * y[3]],
    )
    one = ctx.one()
    g = check_symplectic(ctx, diagonal(ctx, [one / (a * a), a, a, a ** 3, one, one]))
    verified = g.similitude_factor == a and act_product(g, one, a * a, source) == target
    return WitnessReport(
        case=WitnessCase.GSP_SCALING,
        matrices={"g": g.g},
        scalars={"similitude_factor": g.similitude_factor, "x_scaling": one, "v_scaling": a * a},
        source=source,
        target=target,
        verified=verified,
    )


_BUILDERS: Dict[WitnessCase, Callable[[FieldCtx, Mapping[str, Any]], WitnessReport]] = {
    WitnessCase.NORMAL_FORM: _normal_form_map,
    WitnessCase.SPLIT_CHAIN: _split_chain,
    WitnessCase.SL2_EMBED: _sl2_embed,
    WitnessCase.SL3_EMBED: _sl3_embed,
    WitnessCase.GL1_SCALING: _gl1_scaling,
    WitnessCase.GSP_SCALING: _gsp_scaling,
}


def verify_witness(
    case_id: str, params: Optional[Mapping[str, Any]], ctx: FieldCtx
) -> WitnessReport:
    """
    Build the named witness and check it.

    Args:
        case_id: A ``WitnessCase`` value or a key of ``CASE_ALIASES``
        params: Case parameters; scalars are coerced into ``ctx``
        ctx: Field containing every root the construction needs

    Raises:
        PreconditionError: For an unknown case or missing parameters
        MissingSquareRootError: If a required root is not in ``ctx``
    """
    try:
        case = CASE_ALIASES.get(case_id) or WitnessCase(case_id)
    except ValueError:
        known = ", ".join([c.value for c in WitnessCase] + list(CASE_ALIASES))
        raise PreconditionError(f"Unknown witness case {case_id!r}; expected one of {known}")
    report = _BUILDERS[case](ctx, params or {})
    if not report.verified:
        logger.warning(f"Witness {case.value} failed to verify over {ctx.label}")
    return report
