"""
Closed formulas for the number of solutions of Q(v) = c over F_p.
"""
from typing import Sequence

from sympy import legendre_symbol


def _chi(a: int, p: int) -> int:
    return legendre_symbol(a % p, p)


def nondegenerate_count(rank: int, discriminant: int, c: int, p: int) -> int:
    """
    Solutions of a non-degenerate rank-r diagonal form with determinant
    ``discriminant`` taking the value c, as integers mod p.
    """
    c %= p
    if rank == 0:
        return 1 if c == 0 else 0
    m = rank // 2
    sign = -1 if m % 2 else 1
    if rank % 2 == 0:
        eta = _chi(sign * discriminant, p)
        nu = p - 1 if c == 0 else -1
        return p ** (rank - 1) + nu * p ** (m - 1) * eta
    if c == 0:
        return p ** (rank - 1)
    return p ** (rank - 1) + p ** m * _chi(sign * c * discriminant, p)


def count_representations(diag: Sequence[int], radical_dim: int, c: int, p: int) -> int:
    """
    Number of v in F_p^(r + radical_dim) with sum(a_i v_i^2) = c.

    Args:
        diag: Nonzero diagonal entries (as integers) of the non-degenerate part
        radical_dim: Dimension of the radical
        c: Target value
        p: Odd prime
    """
    discriminant = 1
    for a in diag:
        discriminant = discriminant * int(a) % p
    return p ** radical_dim * nondegenerate_count(len(diag), discriminant, c, p)
