"""
Tests for the explicit witness constructions.
"""
from fractions import Fraction

import pytest

from src.domain.orbits.witnesses import WitnessCase, verify_witness
from src.domain.scalars.fields import quad_ext, rationals
from src.shared.exceptions import MissingSquareRootError, PreconditionError, ZeroInputError


@pytest.mark.parametrize("y0,y3", [(0, 1), (2, 2), (4, 5)])
def test_normal_form_witness_over_gaussian_rationals(y0, y3):
    ctx = quad_ext(-1)
    report = verify_witness("normal_form", {"i": 1, "y0": y0, "y1": 1, "y2": 1, "y3": y3}, ctx)
    assert report.case == WitnessCase.NORMAL_FORM
    assert report.verified


def test_normal_form_witness_needs_the_root():
    with pytest.raises(MissingSquareRootError):
        verify_witness("normal_form", {"i": 1, "y0": 0, "y1": 1, "y2": 1, "y3": 1}, rationals())


def test_normal_form_witness_checks_f1():
    with pytest.raises(PreconditionError):
        verify_witness("normal_form", {"i": 2, "y0": 0, "y1": 1, "y2": 1, "y3": 1}, quad_ext(-1))


@pytest.mark.parametrize("a", [4, 9, Fraction(1, 4)])
def test_split_chain(a):
    report = verify_witness("split_chain", {"a": a, "i": -1}, rationals())
    assert report.verified
    assert report.scalars["sqrt_a"] ** 2 == a


def test_embedding_witnesses():
    ctx = rationals()
    assert verify_witness("sl2_embed", {"block": [[2, 1], [1, 1]]}, ctx).verified
    assert verify_witness("sl3_embed", {"block": [[1, 2, 0], [0, 1, 0], [3, 0, 1]], "y0": 3}, ctx).verified
    with pytest.raises(PreconditionError):
        verify_witness("sl2_embed", {"block": [[2, 0], [0, 1]]}, ctx)


def test_scaling_witnesses():
    ctx = rationals()
    params = {"a": 2, "y0": 1, "y1": 1, "y2": 3, "y3": 1}
    gl1 = verify_witness("gl1_scaling", params, ctx)
    assert gl1.verified
    gsp = verify_witness("gsp_scaling", params, ctx)
    assert gsp.verified
    assert gsp.scalars["similitude_factor"] == 2


def test_unknown_case_and_missing_parameters():
    ctx = rationals()
    with pytest.raises(PreconditionError):
        verify_witness("no_such_case", {}, ctx)
    with pytest.raises(PreconditionError):
        verify_witness("split_chain", {"a": 4}, ctx)
    with pytest.raises(ZeroInputError):
        verify_witness("split_chain", {"a": 0, "i": -1}, ctx)


@pytest.mark.parametrize("y0", [0, 2, 4])
@pytest.mark.parametrize("y1", [1, 2, -1])
def test_published_block_matrix_id(y0, y1):
    """thmCD_g names the block-diagonal normal-form map over Q(sqrt(-i))."""
    ctx = quad_ext(-1)
    y3 = Fraction(1 + Fraction(y0 * y0, 4), y1)
    report = verify_witness("thmCD_g", {"i": 1, "y0": y0, "y1": y1, "y2": 1, "y3": y3}, ctx)
    assert report.case == WitnessCase.NORMAL_FORM
    assert report.verified


@pytest.mark.parametrize("a", [4, 9])
def test_published_chain_id(a):
    report = verify_witness("spPV_chain", {"a": a, "i": -1}, rationals())
    assert report.case == WitnessCase.SPLIT_CHAIN
    assert report.verified


def test_unknown_case_lists_published_ids():
    with pytest.raises(PreconditionError) as info:
        verify_witness("thm_g", {}, rationals())
    assert "thmCD_g" in info.value.message
    assert "spPV_chain" in info.value.message
