"""
The contraction psi onto V6, the splitting of the trivector space into
ker(psi) + V6, and the induced group and Lie algebra actions.
"""
from typing import Any, List, Sequence, Tuple

from src.domain.scalars.fields import FieldCtx
from src.domain.scalars.linalg import Matrix, Vector, mat_vec, nullspace, to_matrix
from src.domain.wedge.symplectic import SympElement, symplectic_matrix
from src.domain.wedge.trivector import TRIPLE_INDEX, TRIPLES, TriVector, sort_triple


def psi_matrix(ctx: FieldCtx) -> Matrix:
    """6x20 matrix of psi(e_i e_j e_l) = J(e_j,e_l) e_i - J(e_i,e_l) e_j + J(e_i,e_j) e_l."""
    m_j = symplectic_matrix(ctx)
    cols = []
    for i, j, l in TRIPLES:
        col = [ctx.zero()] * 6
        col[i - 1] = col[i - 1] + m_j[j - 1][l - 1]
        col[j - 1] = col[j - 1] - m_j[i - 1][l - 1]
        col[l - 1] = col[l - 1] + m_j[i - 1][j - 1]
        cols.append(col)
    return [[cols[k][r] for k in range(20)] for r in range(6)]


def contract_psi(t: TriVector) -> Vector:
    return mat_vec(psi_matrix(t.ctx), list(t.coords))


def spanning_vector(ctx: FieldCtx, m: int) -> TriVector:
    """e_m ^ (sum of e_k e_{k+3} over the two pairs not containing e_m); psi of it is 2 e_m."""
    pair = (m - 1) % 3 + 1
    terms = {(m, k, k + 3): ctx.one() for k in (1, 2, 3) if k != pair}
    return TriVector.from_terms(ctx, terms)


def iota(ctx: FieldCtx, v: Sequence[Any]) -> TriVector:
    """The section V6 -> trivectors with psi(iota(v)) = v."""
    half = ctx.one() / 2
    result = TriVector.zero(ctx)
    for m in range(1, 7):
        c = ctx.coerce(v[m - 1])
        if c != 0:
            result = result + spanning_vector(ctx, m).scale(half * c)
    return result


def split_components(t: TriVector) -> Tuple[TriVector, Vector]:
    """(x, v) with v = psi(t), x = t - iota(v) in ker(psi)."""
    v = contract_psi(t)
    return t - iota(t.ctx, v), v


def join_components(x: TriVector, v: Sequence[Any]) -> TriVector:
    return x + iota(x.ctx, v)


def _det3(m: Matrix, rows: Tuple[int, int, int], cols: Tuple[int, int, int]) -> Any:
    a, b, c = (m[r - 1] for r in rows)
    i, j, l = (k - 1 for k in cols)
    return (
        a[i] * (b[j] * c[l] - b[l] * c[j])
        - a[j] * (b[i] * c[l] - b[l] * c[i])
        + a[l] * (b[i] * c[j] - b[j] * c[i])
    )


def compound3(ctx: FieldCtx, g: Matrix) -> Matrix:
    """Third compound matrix: the 3x3 minors of g indexed by sorted triples."""
    return [[_det3(g, rows, cols) for cols in TRIPLES] for rows in TRIPLES]


def act_wedge3(g: SympElement, t: TriVector) -> TriVector:
    """e_i e_j e_l -> (g e_i)(g e_j)(g e_l), extended linearly."""
    return TriVector(t.ctx, mat_vec(compound3(t.ctx, g.g), list(t.coords)))


def act_matrix(ctx: FieldCtx, g: Sequence[Sequence[Any]], t: TriVector) -> TriVector:
    """The induced action of an arbitrary 6x6 matrix."""
    return TriVector(ctx, mat_vec(compound3(ctx, to_matrix(ctx, g)), list(t.coords)))


def act_product(g: SympElement, a: Any, b: Any, t: TriVector) -> TriVector:
    """
    Action of (g, a, b) in GSp6 x GL1 x GL1 on x + iota(v): a * g.x + iota(b * g v).

    g acts on the V6 summand by the standard representation, so for a
    similitude this differs from ``act_wedge3`` by the factor on the V6 part.
    """
    ctx = t.ctx
    x, v = split_components(t)
    gx = act_wedge3(g, x).scale(a)
    gv = [ctx.coerce(b) * c for c in mat_vec(g.g, v)]
    return gx + iota(ctx, gv)


def derivation_action(xi: Sequence[Sequence[Any]], t: TriVector) -> TriVector:
    """Lie algebra action: xi(e_i e_j e_l) = (xi e_i) e_j e_l + e_i (xi e_j) e_l + e_i e_j (xi e_l)."""
    ctx = t.ctx
    coords = [ctx.zero()] * 20
    for (i, j, l), c in t.terms():
        slots = [i, j, l]
        for pos in range(3):
            for k in range(1, 7):
                entry = ctx.coerce(xi[k - 1][slots[pos] - 1])
                if entry == 0:
                    continue
                new = list(slots)
                new[pos] = k
                sign, key = sort_triple(*new)
                if sign:
                    idx = TRIPLE_INDEX[key]
                    coords[idx] = coords[idx] + sign * entry * c
    return TriVector(ctx, coords)


def kernel_basis(ctx: FieldCtx) -> List[Vector]:
    """A basis of ker(psi) as 20-coordinate vectors."""
    return nullspace(ctx, psi_matrix(ctx))
