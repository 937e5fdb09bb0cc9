"""
Orbit-stabilizer predictions for the fiber counts over F_p.
"""
from typing import Dict

from pydantic import BaseModel
from sympy import isprime, legendre_symbol

from src.shared.exceptions import FieldError, InternalCheckError


def sp6_order(q: int) -> int:
    return q ** 9 * (q ** 2 - 1) * (q ** 4 - 1) * (q ** 6 - 1)


def sl3_order(q: int) -> int:
    return q ** 3 * (q ** 2 - 1) * (q ** 3 - 1)


def su3_order(q: int) -> int:
    return q ** 3 * (q ** 2 - 1) * (q ** 3 + 1)


def sl2_order(q: int) -> int:
    return q * (q ** 2 - 1)


class PredictionTable(BaseModel):
    """Group orders and the predicted size of every semistable fiber."""

    p: int
    sp6: int
    sl3: int
    su3: int
    sl2: int
    x_fibers: Dict[str, int]
    v_fibers: Dict[str, int]
    v_orbits: int


def _exact(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InternalCheckError(f"{denominator} does not divide {numerator}")
    return quotient


def fiber_key(*values: int) -> str:
    return ",".join(str(v) for v in values)


def predicted_orbit_counts(p: int) -> PredictionTable:
    """
    Each f1-fiber over F_p is one orbit with stabilizer SL3 (when -i is a
    square) or SU3, and each (f1, f2)-fiber is one orbit with stabilizer SL2.

    Raises:
        FieldError: If p is not an odd prime
    """
    if p == 2 or not isprime(p):
        raise FieldError(f"p = {p} is not an odd prime")
    sp6, sl3, su3, sl2 = sp6_order(p), sl3_order(p), su3_order(p), sl2_order(p)
    x_fibers = {}
    for i in range(1, p):
        split = legendre_symbol(-i % p, p) == 1
        x_fibers[fiber_key(i)] = _exact(sp6, sl3 if split else su3)
    v_size = _exact(sp6, sl2)
    v_fibers = {fiber_key(i, j): v_size for i in range(1, p) for j in range(1, p)}
    return PredictionTable(
        p=p,
        sp6=sp6,
        sl3=sl3,
        su3=su3,
        sl2=sl2,
        x_fibers=x_fibers,
        v_fibers=v_fibers,
        v_orbits=(p - 1) ** 2,
    )
