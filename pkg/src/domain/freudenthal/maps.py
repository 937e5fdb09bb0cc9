"""
From the flag of an orbit to Freudenthal algebras: the 6- and 9-dimensional
trace forms and the tower H3(k) < H3(K) < H3(Q) < H3(C).
"""
import logging
import random
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from src.domain.composition.cayley_dickson import CDTower
from src.domain.flags.descriptor import FlagDescriptor
from src.domain.freudenthal.algebra import (
    FreudenthalAlgebra,
    algebra_trace_form,
    embed_element,
    jordan_mul,
)
from src.domain.qforms.forms import pfister, qform_equivalent
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx
from src.shared.config import settings
from src.shared.exceptions import InternalCheckError

logger = logging.getLogger(__name__)


class AlgebraDescriptor(BaseModel):
    label: str
    dim: int


class FreudenthalFlagReport(BaseModel):
    """Trace forms of the 6- and 9-dimensional algebras and the Freudenthal tower of a flag."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim6: QForm
    dim6_gamma: List[Any]
    dim9: QForm
    dim9_gamma: List[Any]
    tower: List[AlgebraDescriptor]
    inclusions_verified: bool


def dim6_form(ctx: FieldCtx, c: Any, d: Any) -> QForm:
    """
    <1,1,1> + <2> x <-c, -d, cd>.

    The off-diagonal slots carry the polar form b_N = 2N of the coordinate
    norm, so the Hamilton flag gives <1,1,1,2,2,2> and not <1,1,1,1,1,1>;
    this is the Gram of the trace form of H3(k, Gamma) that ``_certify`` checks.
    """
    return QForm(ctx=ctx, diag=[1, 1, 1, -2 * c, -2 * d, 2 * c * d])


def dim9_form(norm_k: QForm, b1: Any, c1: Any) -> QForm:
    """<1,1,1> + N_K x <2> x <-b1, -c1, b1 c1>."""
    ctx = norm_k.ctx
    slots = QForm(ctx=ctx, diag=[-2 * b1, -2 * c1, 2 * b1 * c1])
    return QForm(ctx=ctx, diag=[1, 1, 1]).orthogonal_sum(norm_k.tensor(slots))


def _certify(alg: FreudenthalAlgebra, closed: QForm, name: str) -> None:
    report = algebra_trace_form(alg)
    if not qform_equivalent(report.form, closed):
        raise InternalCheckError(f"{name} trace form of {alg.label} disagrees with {closed.diag}")


def verify_inclusions(
    algebras: Sequence[FreudenthalAlgebra], rng: random.Random, samples: int
) -> bool:
    """Each entrywise inclusion preserves the Jordan product on random pairs."""
    for small, big in zip(algebras, algebras[1:]):
        for _ in range(samples):
            x, y = small.random_element(rng, 3), small.random_element(rng, 3)
            lhs = embed_element(big, jordan_mul(x, y))
            rhs = jordan_mul(embed_element(big, x), embed_element(big, y))
            if lhs != rhs:
                logger.error(f"Inclusion {small.label} -> {big.label} is not a Jordan map")
                return False
    return True


def orbit_to_freudenthal(
    flag: FlagDescriptor,
    gamma: Optional[Sequence[Any]] = None,
    seed: Optional[int] = None,
    samples: int = 5,
) -> FreudenthalFlagReport:
    """
    Trace forms and tower attached to a flag over Q.

    The quaternion member is <<c, d>> and the octonion member is
    N_K x <<b1, c1>>, with the slots read off the flag's Cayley-Dickson tower.
    Both closed forms are certified against the Gram matrix of the realized
    algebras H3(k, diag(-1/d, -c, 1)) and H3(K, diag(-1/c1, -b1, 1)).
    """
    tower = flag.tower
    ctx = tower.C.ctx
    lam1, lam2, lam3 = tower.C.lambdas
    c, d = lam1, lam2
    if not qform_equivalent(pfister(ctx, [c, d]), flag.quaternion_norm):
        raise InternalCheckError(f"<<{c}, {d}>> is not the quaternion norm of the flag")
    b1, c1 = lam2, lam3

    one = ctx.one()
    gamma6 = [-one / d, -c, one]
    closed6 = dim6_form(ctx, c, d)
    _certify(FreudenthalAlgebra(coordinate=CDTower(ctx=ctx), gamma=gamma6), closed6, "dim 6")

    gamma9 = [-one / c1, -b1, one]
    closed9 = dim9_form(tower.K.norm_form(), b1, c1)
    _certify(FreudenthalAlgebra(coordinate=tower.K, gamma=gamma9), closed9, "dim 9")

    gamma = list(gamma) if gamma is not None else [1, 1, 1]
    algebras = [FreudenthalAlgebra(coordinate=member, gamma=gamma) for member in tower.members()]
    rng = random.Random(settings.DEFAULT_SEED if seed is None else seed)
    verified = verify_inclusions(algebras, rng, samples)
    logger.info(f"Freudenthal tower for flag with i={flag.i}: inclusions verified={verified}")
    return FreudenthalFlagReport(
        dim6=closed6,
        dim6_gamma=gamma6,
        dim9=closed9,
        dim9_gamma=gamma9,
        tower=[AlgebraDescriptor(label=a.label, dim=a.dim) for a in algebras],
        inclusions_verified=verified,
    )
