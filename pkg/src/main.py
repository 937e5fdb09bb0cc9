"""
sp6flags API main application entry point.
"""
import logging

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from src.interfaces.api.router import router
from src.shared.config import get_settings
from src.shared.exceptions import InputParseError, Sp6FlagsError
from src.shared.logging import setup_logging

# Set up logging
setup_logging()
logger = logging.getLogger(__name__)

# Load settings
settings = get_settings()

# Create FastAPI application
app = FastAPI(
    title="sp6flags API",
    description="Invariants, orbits and flags of Sp6 x GL1^2 on the 14+6 representation",
    version="0.1.0",
    debug=settings.DEBUG,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(router)


@app.exception_handler(Sp6FlagsError)
async def sp6flags_exception_handler(request: Request, exc: Sp6FlagsError):
    logger.info(f"{request.url.path}: {exc.__class__.__name__}: {exc.message}")
    return JSONResponse(
        status_code=exc.status_code,
        content={"error": exc.message, "type": exc.__class__.__name__},
    )


@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=400,
        content={"error": str(exc.errors()[0].get("msg", "Invalid request")), "type": InputParseError.__name__},
    )


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """Global exception handler for all unhandled exceptions."""
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={"error": "An unexpected error occurred.", "type": "InternalError"},
    )


@app.get("/", tags=["Root"])
async def get_root():
    return {
        "message": "Welcome to the sp6flags API",
        "version": "0.1.0",
        "endpoints": ["/health", "/eval", "/canonicalize", "/stabilizer", "/flag", "/freudenthal", "/witness"],
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "src.main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
        log_level="debug" if settings.DEBUG else "info",
    )
