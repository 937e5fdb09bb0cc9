"""
Randomized self-checks of the exact identities the library relies on.
"""
import logging
import random
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, Field

from src.application.census.predictions import predicted_orbit_counts
from src.application.census.runner import CensusRunner
from src.application.census.scanner import CensusLevel
from src.domain.composition.cayley_dickson import CDTower
from src.domain.composition.zorn import ZornAlgebra
from src.domain.flags.descriptor import flag_of_point, flags_equal
from src.domain.freudenthal.algebra import FreudenthalAlgebra, cross, cubic_data, jordan_mul
from src.domain.invariants.phi import quartic_f
from src.domain.invariants.relative import f1_value, f2_value
from src.domain.orbits.canonical import canonicalize_v
from src.domain.orbits.normal_form import NormalFormX
from src.domain.orbits.witnesses import verify_witness
from src.domain.qforms.forms import diagonalize_gram, qform_equivalent
from src.domain.qforms.models import QForm
from src.domain.scalars.fields import FieldCtx, prime_field, quad_ext, rationals
from src.domain.scalars.linalg import mat_mul, mat_vec, transpose
from src.domain.wedge.contraction import act_wedge3, contract_psi
from src.domain.wedge.symplectic import random_symplectic
from src.domain.wedge.trivector import TriVector
from src.shared.config import settings
from src.shared.exceptions import PreconditionError, Sp6FlagsError

logger = logging.getLogger(__name__)

Failures = List[str]
Suite = Callable[[random.Random, int], Failures]


class SuiteResult(BaseModel):
    name: str
    passed: bool
    checks: int
    failures: List[str] = Field(default_factory=list)
    elapsed: float


class VerificationReport(BaseModel):
    """Outcome of every requested suite."""

    seed: int
    trials: int
    suites: List[SuiteResult]
    passed: bool


def _contexts() -> List[FieldCtx]:
    return [rationals(), quad_ext(-1), prime_field(7)]


def _random_trivector(ctx: FieldCtx, rng: random.Random) -> TriVector:
    return TriVector(ctx, [ctx.random_scalar(rng, 3) for _ in range(20)])


def check_scalars(rng: random.Random, trials: int) -> Failures:
    failures = []
    for _ in range(trials):
        for ctx in _contexts():
            a = ctx.random_scalar(rng, nonzero=True)
            b = ctx.random_scalar(rng)
            if (a * b) / a != b:
                failures.append(f"division fails in {ctx.label} for {a!r}, {b!r}")
            root = ctx.sqrt(a * a)
            if root is None or root * root != a * a:
                failures.append(f"square root of {a!r}^2 missing in {ctx.label}")
    return failures


def check_qforms(rng: random.Random, trials: int) -> Failures:
    failures = []
    ctx = rationals()
    for _ in range(trials):
        diag = [ctx.random_scalar(rng, 7, nonzero=True) for _ in range(4)]
        q = QForm(ctx=ctx, diag=diag)
        p = [[ctx.random_scalar(rng, 2) for _ in range(4)] for _ in range(4)]
        for k in range(4):
            p[k][k] = p[k][k] + 10
        gram = mat_mul(mat_mul(transpose(p), q.gram()), p)
        try:
            moved, _ = diagonalize_gram(ctx, gram)
        except Sp6FlagsError:
            continue
        if not qform_equivalent(q, moved):
            failures.append(f"congruent forms {diag} judged inequivalent")
        c = ctx.random_scalar(rng, 5, nonzero=True)
        if not qform_equivalent(q, q.scaled(c * c)):
            failures.append(f"{diag} not equivalent to its square scaling")
    return failures


def check_composition(rng: random.Random, trials: int) -> Failures:
    failures = []
    ctx = rationals()
    algebras = [
        CDTower(ctx=ctx, lambdas=[-1]),
        CDTower(ctx=ctx, lambdas=[-1, -1]),
        CDTower(ctx=ctx, lambdas=[-1, -1, -1]),
        CDTower(ctx=ctx, lambdas=[2, -3, 1]),
        ZornAlgebra(ctx=ctx),
    ]
    for _ in range(trials):
        for alg in algebras:
            u, v = alg.random_element(rng, 4), alg.random_element(rng, 4)
            if (u * v).norm() != u.norm() * v.norm():
                failures.append(f"norm is not multiplicative in {alg.label}")
            if u * u.conj() != alg.scalar(u.norm()):
                failures.append(f"u conj(u) != N(u) in {alg.label}")
    return failures


def check_wedge(rng: random.Random, trials: int) -> Failures:
    failures = []
    for _ in range(max(1, trials // 4)):
        for ctx in (rationals(), prime_field(5)):
            g = random_symplectic(ctx, rng, 6)
            t = _random_trivector(ctx, rng)
            if contract_psi(act_wedge3(g, t)) != mat_vec(g.g, contract_psi(t)):
                failures.append(f"psi is not equivariant over {ctx.label}")
    return failures


def check_invariants(rng: random.Random, trials: int) -> Failures:
    failures = []
    for _ in range(max(1, trials // 4)):
        for ctx in (rationals(), prime_field(7)):
            t = _random_trivector(ctx, rng)
            g = random_symplectic(ctx, rng, 6)
            moved = act_wedge3(g, t)
            if quartic_f(moved) != quartic_f(t):
                failures.append(f"f is not invariant over {ctx.label}")
            if f1_value(moved) != f1_value(t) or f2_value(moved) != f2_value(t):
                failures.append(f"f1 or f2 is not invariant over {ctx.label}")
    return failures


def check_orbits(rng: random.Random, trials: int) -> Failures:
    failures = []
    ctx = rationals()
    for _ in range(max(1, trials // 4)):
        y0 = ctx.random_scalar(rng, 5, nonzero=True)
        v = [ctx.random_scalar(rng, 4) for _ in range(6)]
        if v[0] * v[3] + v[1] * v[4] + v[2] * v[5] == 0:
            continue
        try:
            canonicalize_v(ctx, y0, v)
        except Sp6FlagsError as e:
            failures.append(f"canonicalization of {v} failed: {e.message}")
    k = quad_ext(-1)
    for y0 in (0, 2, 4):
        y3 = Fraction(4 + y0 * y0, 4)
        report = verify_witness("normal_form", {"i": 1, "y0": y0, "y1": 1, "y2": 1, "y3": y3}, k)
        if not report.verified:
            failures.append(f"normal-form witness fails for y0 = {y0}")
    for a in (4, 9):
        if not verify_witness("split_chain", {"a": a, "i": -1}, ctx).verified:
            failures.append(f"split chain fails for a = {a}")
    return failures


def check_flags(rng: random.Random, trials: int) -> Failures:
    failures = []
    ctx = rationals()
    for _ in range(max(1, trials // 20)):
        ys = [ctx.random_scalar(rng, 4)] + [ctx.random_scalar(rng, 4, nonzero=True) for _ in range(3)]
        a = ctx.random_scalar(rng, 3, nonzero=True)
        try:
            nf = NormalFormX.from_values(ctx, ys)
            base = flag_of_point(nf)
            scaled = flag_of_point(
                NormalFormX.from_values(ctx, [a * a * ys[0], ys[1], a * a * ys[2], a * a * ys[3]])
            )
        except Sp6FlagsError as e:
            logger.debug(f"Skipping normal form {ys}: {e.message}")
            continue
        if not flags_equal(base, scaled):
            failures.append(f"flag of {ys} changes under scaling by {a}")
    return failures


def check_freudenthal(rng: random.Random, trials: int) -> Failures:
    failures = []
    ctx = rationals()
    coordinates = [
        CDTower(ctx=ctx),
        CDTower(ctx=ctx, lambdas=[1]),
        CDTower(ctx=ctx, lambdas=[-1, -1]),
        ZornAlgebra(ctx=ctx),
    ]
    for _ in range(max(1, trials // 10)):
        for c in coordinates:
            gamma = [ctx.random_scalar(rng, 3, nonzero=True) for _ in range(3)]
            alg = FreudenthalAlgebra(coordinate=c, gamma=gamma)
            x, y = alg.random_element(rng, 3), alg.random_element(rng, 3)
            try:
                data = cubic_data(x)
            except Sp6FlagsError as e:
                failures.append(f"cubic identity fails in {alg.label}: {e.message}")
                continue
            if jordan_mul(x, y) != jordan_mul(y, x):
                failures.append(f"Jordan product is not commutative in {alg.label}")
            if cross(x, x) != data.adjoint.scale(2):
                failures.append(f"X x X != 2 X# in {alg.label}")
    return failures


def check_census(rng: random.Random, trials: int) -> Failures:
    failures = []
    table = predicted_orbit_counts(3)
    if sum(table.x_fibers.values()) != 3_149_280:
        failures.append("X-level predictions at p = 3 do not add up")
    runner = CensusRunner(workers=1, chunk_size=4096)
    stop = 3 ** 9
    whole = runner.scan(3, CensusLevel.X, stop=stop)
    halves = CensusRunner(workers=2, chunk_size=4096).scan(3, CensusLevel.X, stop=stop)
    if whole != halves:
        failures.append("census counters depend on the partition")
    return failures


SUITES: Dict[str, Suite] = {
    "scalars": check_scalars,
    "qforms": check_qforms,
    "composition": check_composition,
    "wedge": check_wedge,
    "invariants": check_invariants,
    "orbits": check_orbits,
    "flags": check_flags,
    "freudenthal": check_freudenthal,
    "census": check_census,
}


def run_verification(
    names: Optional[List[str]] = None, seed: Optional[int] = None, trials: Optional[int] = None
) -> VerificationReport:
    """
    Run the named suites (all by default) with a seeded random source.

    Raises:
        PreconditionError: For an unknown suite name
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    selected = names or list(SUITES)
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise PreconditionError(f"Unknown suites {unknown}; available: {sorted(SUITES)}")
    results = []
    for name in selected:
        rng = random.Random(f"{seed}:{name}")
        started = time.monotonic()
        failures = SUITES[name](rng, trials)
        results.append(
            SuiteResult(
                name=name,
                passed=not failures,
                checks=trials,
                failures=failures,
                elapsed=round(time.monotonic() - started, 3),
            )
        )
        logger.info(f"Suite {name}: {'passed' if not failures else f'{len(failures)} failures'}")
    return VerificationReport(
        seed=seed, trials=trials, suites=results, passed=all(r.passed for r in results)
    )
