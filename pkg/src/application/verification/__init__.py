from src.application.verification.suites import (
    SUITES,
    SuiteResult,
    VerificationReport,
    run_verification,
)

__all__ = ["SUITES", "SuiteResult", "VerificationReport", "run_verification"]
