"""
HTTP routes mirroring the CLI commands.

Domain errors propagate to the application's exception handler, which
turns them into ``{"error", "type"}`` bodies with the error's status code.
"""
import logging

from fastapi import APIRouter

from src.interfaces import commands
from src.interfaces.models import (
    CanonicalizeRequest,
    CanonicalizeResponse,
    EvalRequest,
    FlagRequest,
    FlagResponse,
    FreudenthalRequest,
    FreudenthalResponse,
    HealthResponse,
    InvariantResponse,
    StabilizerRequest,
    StabilizerResponse,
    WitnessRequest,
    WitnessResponse,
)

logger = logging.getLogger(__name__)

router = APIRouter()


@router.get("/health", response_model=HealthResponse)
async def health_check() -> HealthResponse:
    """Health check endpoint."""
    return HealthResponse(service="sp6flags", status="healthy", message="sp6flags API is operating normally")


@router.post("/eval", response_model=InvariantResponse)
def evaluate(req: EvalRequest) -> InvariantResponse:
    return commands.evaluate(req)


@router.post("/canonicalize", response_model=CanonicalizeResponse)
def canonicalize(req: CanonicalizeRequest) -> CanonicalizeResponse:
    return commands.canonicalize(req)


@router.post("/stabilizer", response_model=StabilizerResponse)
def stabilizer(req: StabilizerRequest) -> StabilizerResponse:
    """Lie stabilizer of a trivector; the 21-unknown solve runs in the threadpool."""
    return commands.stabilizer(req)


@router.post("/flag", response_model=FlagResponse)
def flag(req: FlagRequest) -> FlagResponse:
    return commands.flag(req)


@router.post("/freudenthal", response_model=FreudenthalResponse)
def freudenthal(req: FreudenthalRequest) -> FreudenthalResponse:
    return commands.freudenthal(req)


@router.post("/witness", response_model=WitnessResponse)
def witness(req: WitnessRequest) -> WitnessResponse:
    return commands.witness(req)
