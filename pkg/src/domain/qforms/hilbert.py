"""
Hilbert symbols and local square classes over Q, by residue formulas.
"""
from fractions import Fraction
from typing import Iterable, List, Set, Tuple, Union

from sympy import factorint, isprime, legendre_symbol

from src.domain.scalars.fields import squarefree_part
from src.shared.exceptions import InputParseError, PreconditionError, ZeroInputError

INFINITY = "inf"
Place = Union[int, str]


def normalize_place(place: Place) -> Place:
    """Return an int prime or INFINITY; raise for anything else."""
    if isinstance(place, str):
        text = place.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return INFINITY
        if not text.isdigit():
            raise InputParseError(f"Unknown place {place!r}")
        place = int(text)
    if not isprime(place):
        raise PreconditionError(f"Place {place} is neither prime nor infinity")
    return place


def _integral(a) -> int:
    """Nonzero integer in the same square class as the rational a."""
    r = Fraction(a)
    if r == 0:
        raise ZeroInputError("Hilbert symbols need nonzero arguments")
    return r.numerator * r.denominator


def _split_valuation(n: int, p: int) -> Tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a, b, place: Place) -> int:
    """
    Hilbert symbol (a, b)_v for nonzero rationals a, b.

    Args:
        a: Nonzero rational
        b: Nonzero rational
        place: A prime number or "inf"

    Returns:
        +1 or -1
    """
    place = normalize_place(place)
    x, y = _integral(a), _integral(b)
    if place == INFINITY:
        return -1 if x < 0 and y < 0 else 1
    p = int(place)
    alpha, u = _split_valuation(x, p)
    beta, v = _split_valuation(y, p)
    if p == 2:
        exponent = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre_symbol(u % p, p) ** beta * legendre_symbol(v % p, p) ** alpha


def is_local_square(a, place: Place) -> bool:
    """Whether the nonzero rational a is a square in the completion at place."""
    place = normalize_place(place)
    x = _integral(a)
    if place == INFINITY:
        return x > 0
    p = int(place)
    v, u = _split_valuation(x, p)
    if v % 2:
        return False
    if p == 2:
        return u % 8 == 1
    return legendre_symbol(u % p, p) == 1


def prime_divisors(values: Iterable) -> Set[int]:
    """Primes dividing the squarefree part of some value (bounded factorization)."""
    primes: Set[int] = set()
    for a in values:
        s = abs(squarefree_part(a))
        primes.update(factorint(s).keys())
    return primes


def relevant_places(values: Iterable) -> List[Place]:
    """{2, inf} together with the odd primes dividing some squarefree part."""
    primes = prime_divisors(values) | {2}
    return sorted(primes) + [INFINITY]


def place_key(place: Place) -> str:
    return INFINITY if place == INFINITY else str(place)


def product_formula(a, b) -> int:
    """Product of (a, b)_v over every place (Hilbert reciprocity gives +1)."""
    result = 1
    for place in relevant_places([a, b]):
        result *= hilbert_symbol(a, b, place)
    return result
