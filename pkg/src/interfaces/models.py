"""
Pydantic request and response models shared by the CLI and the HTTP API.

Scalars travel as strings in the grammar of ``parse_scalar``; trivectors in
the ``c*e{ijl}`` grammar; matrices as lists of rows of scalar strings.
"""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

ScalarText = str
MatrixText = List[List[ScalarText]]


class FieldRequest(BaseModel):
    field: str = Field("Q", description="Field spec: Q, Q(sqrt:D) or F:p")


class EvalRequest(FieldRequest):
    """Evaluate f, f1, f2 at a trivector."""
    trivector: str = Field(..., description="Signed terms such as -1*e123 - 2*e456")


class CanonicalizeRequest(FieldRequest):
    """Reduce (split x, v) to (split x, (q,0,0,1,0,0))."""
    y0: ScalarText = Field(..., description="The split point is -e123 - y0 e456")
    v: List[ScalarText] = Field(..., min_length=6, max_length=6, description="The V6 component")


class StabilizerRequest(FieldRequest):
    trivector: str = Field(..., description="Point whose Lie stabilizer is computed")
    extended: bool = Field(False, description="Also solve in gsp6 + gl1 + gl1")


class FlagRequest(FieldRequest):
    """Flag of the orbit of a normal form with a canonical v-pattern."""
    nf: List[ScalarText] = Field(..., min_length=4, max_length=4, description="(y0, y1, y2, y3)")
    pattern: int = Field(1, ge=1, le=3, description="Index m of the canonical v-pattern")
    cross_check: bool = Field(True, description="Compare with the Killing-form quaternion norm")


class FreudenthalRequest(FlagRequest):
    gamma: Optional[List[ScalarText]] = Field(None, description="Gamma of the Freudenthal tower, default (1, 1, 1)")
    seed: Optional[int] = Field(None, description="Seed for the inclusion samples")
    samples: int = Field(5, ge=1, le=100, description="Random elements per inclusion check")


class WitnessRequest(FieldRequest):
    case: str = Field(
        ...,
        description="normal_form (alias thmCD_g), split_chain (alias spPV_chain), sl2_embed, sl3_embed, gl1_scaling or gsp_scaling",
    )
    params: Dict[str, Union[ScalarText, MatrixText]] = Field(
        default_factory=dict, description="Case parameters; 'block' is a matrix"
    )


class InvariantResponse(BaseModel):
    field: str
    trivector: str
    x_part: str
    v: List[ScalarText]
    f: ScalarText
    f1: ScalarText
    f2: ScalarText
    semistable: bool


class CanonicalizeResponse(BaseModel):
    field: str
    g: MatrixText
    source: str
    canonical: str
    q: ScalarText
    pivot: int
    steps: List[str]


class StabilizerResponse(BaseModel):
    field: str
    dim: int
    basis: List[MatrixText]
    killing: MatrixText
    quaternion_norm: Optional[List[ScalarText]] = None
    extended_dim: Optional[int] = None


class CompositionClassModel(BaseModel):
    kind: str
    split: bool
    disc_class: Optional[int] = None
    ramification: List[str] = Field(default_factory=list)
    label: str


class FlagResponse(BaseModel):
    field: str
    i: ScalarText
    i_class: int
    split: bool
    pattern: int
    y: List[ScalarText]
    hermitian_form: List[ScalarText]
    quadratic: CompositionClassModel
    quaternion: CompositionClassModel
    quaternion_norm: List[ScalarText]
    octonion: str
    octonion_norm: List[ScalarText]
    tower: List[str]


class AlgebraModel(BaseModel):
    label: str
    dim: int


class FreudenthalResponse(BaseModel):
    flag: FlagResponse
    dim6: List[ScalarText]
    dim6_gamma: List[ScalarText]
    dim9: List[ScalarText]
    dim9_gamma: List[ScalarText]
    tower: List[AlgebraModel]
    inclusions_verified: bool


class WitnessResponse(BaseModel):
    case: str
    field: str
    verified: bool
    matrices: Dict[str, MatrixText]
    scalars: Dict[str, ScalarText]
    source: str
    target: str


class HealthResponse(BaseModel):
    """Response for the health check endpoint."""
    service: str = Field(..., description="Service name")
    status: str = Field(..., description="Health status")
    message: str = Field(..., description="Health message")


class ErrorResponse(BaseModel):
    error: str
    type: str
