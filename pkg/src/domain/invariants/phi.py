"""
The quadratic matrix phi(T) defined by T ^ d_i(T) ^ e_j = phi_ij(T) * e123456.

d_m is the interior derivative:
d_m(e_r e_s e_t) = delta_mr e_s e_t - delta_ms e_r e_t + delta_mt e_r e_s.

Every phi_ij is a fixed integer combination of products x_A x_B of
trivector coordinates. The table of those combinations is computed once
and shared with the vectorized census kernels.
"""
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.domain.scalars.linalg import Matrix, mat_mul, scalar_of
from src.domain.wedge.trivector import TRIPLES, TriVector
from src.shared.exceptions import InternalCheckError

PhiTable = Dict[Tuple[int, int], List[Tuple[int, int, int]]]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq; 0 if an entry repeats."""
    items = list(seq)
    if len(set(items)) < len(items):
        return 0
    sign = 1
    for a in range(len(items)):
        for b in range(len(items) - 1 - a):
            if items[b] > items[b + 1]:
                items[b], items[b + 1] = items[b + 1], items[b]
                sign = -sign
    return sign


def _interior(m: int, triple: Tuple[int, int, int]) -> List[Tuple[int, Tuple[int, int]]]:
    r, s, t = triple
    out = []
    if m == r:
        out.append((1, (s, t)))
    if m == s:
        out.append((-1, (r, t)))
    if m == t:
        out.append((1, (r, s)))
    return out


def _build_table() -> PhiTable:
    table: PhiTable = {}
    for i in range(1, 7):
        for j in range(1, 7):
            acc: Dict[Tuple[int, int], int] = {}
            for b_idx, b_triple in enumerate(TRIPLES):
                for sign, pair in _interior(i, b_triple):
                    for a_idx, a_triple in enumerate(TRIPLES):
                        s = permutation_sign(a_triple + pair + (j,))
                        if s:
                            key = (a_idx, b_idx)
                            acc[key] = acc.get(key, 0) + sign * s
            table[(i, j)] = [(a, b, c) for (a, b), c in sorted(acc.items()) if c]
    return table


PHI_TABLE: PhiTable = _build_table()


class PhiMatrix(BaseModel):
    """phi(T) as a 6x6 matrix."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    entries: Matrix

    def squared(self) -> Matrix:
        return mat_mul(self.entries, self.entries)


def phi_matrix(t: TriVector) -> PhiMatrix:
    ctx = t.ctx
    x = t.coords
    entries = []
    for i in range(1, 7):
        row = []
        for j in range(1, 7):
            acc = ctx.zero()
            for a, b, c in PHI_TABLE[(i, j)]:
                if x[a] != 0 and x[b] != 0:
                    acc = acc + c * x[a] * x[b]
            row.append(acc)
        entries.append(row)
    return PhiMatrix(entries=entries)


def quartic_f(t: TriVector) -> Any:
    """
    The scalar f with phi(T)^2 = f * I6.

    Raises:
        InternalCheckError: If phi(T)^2 is not a scalar matrix
    """
    f = scalar_of(phi_matrix(t).squared())
    if f is None:
        raise InternalCheckError(f"phi^2 is not scalar for {t!r}")
    return f
