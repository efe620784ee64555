"""
Domain models for Index Pairing Hub.

This module defines the JSON-facing data structures used throughout the
application: catalog group descriptions, user supplied Γ-data, queries
and the structured report returned by every computation.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from index_pairing_hub.domain.conventions import (
    BernoulliConvention,
    ElementKind,
    NormReading,
    QueryMode,
    SignConvention,
    SubscriptVariant,
)


class Violation(BaseModel):
    """A single structural problem found while validating a root datum."""

    code: str = Field(description="Machine-readable violation kind")
    message: str = Field(description="Human-readable explanation")
    roots: List[List[str]] = Field(
        default_factory=list, description="Root vectors involved in the violation"
    )


class LeviSpec(BaseModel):
    """
    A θ-stable Levi subgroup M ⊆ G sharing the compact torus T.

    The roots of M are given by indices into the group's ordered positive
    roots; their negatives are implied.
    """

    name: str = Field(description="Levi label used on the command line")
    m_root_indices: List[int] = Field(
        default_factory=list, description="Indices into the positive roots of G"
    )
    maximal: bool = Field(default=True, description="Whether M is a maximal Levi")
    note: Optional[str] = Field(default=None, description="Free-form remark")


class RankOneSpec(BaseModel):
    """Real rank one data needed by the non-semisimple terms."""

    dim_n_lambda: int = Field(ge=0, description="Dimension of the λ root space")
    dim_n_2lambda: int = Field(ge=0, description="Dimension of the 2λ root space")
    lambda_res_norm: str = Field(default="1", description="Norm of the restricted root")
    su_n: Optional[int] = Field(
        default=None, description="n when G is of type SU(2n,1), else null"
    )
    z0: Optional[List[str]] = Field(
        default=None, description="Coordinates of Z0 ∈ 𝔱 paired against roots"
    )
    zvec: List[str] = Field(description="Coordinates of X̃ − θX̃ ∈ 𝔱 defining k(μ)")
    rplus0: Optional[List[List[str]]] = Field(
        default=None, description="Positive system used for ε(λ+ρ_c); defaults to R+(G)"
    )
    m_simple_roots: List[List[str]] = Field(
        default_factory=list, description="Simple roots of the compact group M"
    )
    real_hyperbolic_dim: Optional[int] = Field(
        default=None, description="N when G/K is real hyperbolic N-space"
    )


class GroupSpec(BaseModel):
    """A catalog entry or a user supplied group file."""

    name: str = Field(description="Group identifier, e.g. 'su21'")
    rank: int = Field(ge=1, description="Rank of the compact torus")
    gram: List[List[str]] = Field(description="Gram matrix of the invariant form")
    simple_roots: List[List[str]] = Field(description="Simple roots of G")
    compact_roots: List[int] = Field(
        default_factory=list, description="Indices of compact positive roots"
    )
    equal_rank: bool = Field(default=True, description="rank G == rank K")
    rank_one: Optional[RankOneSpec] = None
    levis: List[LeviSpec] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "name": "su11",
                "rank": 1,
                "gram": [["1"]],
                "simple_roots": [["1"]],
                "compact_roots": [],
            }
        }
    )

    @model_validator(mode="after")
    def check_shapes(self) -> "GroupSpec":
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise ValueError("gram must be a rank × rank matrix")
        if any(len(r) != self.rank for r in self.simple_roots):
            raise ValueError("every simple root needs rank coordinates")
        return self


class ElementSpec(BaseModel):
    """A semisimple element as supplied by the user."""

    type: ElementKind = Field(description="central, elliptic or hyperbolic")
    X: Optional[List[str]] = Field(
        default=None, description="Torus coordinates with γ = exp(2πiX)"
    )

    model_config = ConfigDict(
        json_schema_extra={"example": {"type": "elliptic", "X": ["1/3", "0", "-1/3"]}}
    )


class SsClassSpec(BaseModel):
    element: ElementSpec
    vol: float = Field(ge=0, description="Volume of Γ_γ\\G_γ")


class GammaData(BaseModel):
    """
    Data about the lattice Γ that the calculator takes as given.

    Anything not supplied defaults to a neutral value; terms that need a
    field which is absent raise ``MissingGammaData``.
    """

    l: int = Field(default=0, ge=0, description="Number of cusps")
    cusp_volume_ratios: Optional[List[float]] = Field(
        default=None, description="vol(Γ_P∩N \\ N_P) per cusp"
    )
    C_lambda: float = Field(default=0.0, description="Coefficient C_λ")
    C_2lambda: float = Field(default=0.0, description="Coefficient C_2λ")
    ss_classes: List[SsClassSpec] = Field(default_factory=list)
    residual_traces: Optional[List[float]] = Field(
        default=None, description="tr σ(π_λ,−1(W)) over residual components"
    )

    @field_validator("cusp_volume_ratios")
    def non_negative_ratios(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is not None and any(r < 0 for r in v):
            raise ValueError("cusp volume ratios must be non-negative")
        return v

    @classmethod
    def zero(cls) -> "GammaData":
        """No classes, no cusps, every constant 0."""
        return cls(cusp_volume_ratios=[], residual_traces=[])


class DecompositionEntry(BaseModel):
    """One K∩M-type λ_U with multiplicity m_U."""

    weight: List[str]
    multiplicity: int


class CosetDiagnostic(BaseModel):
    """Per-coset summand of the elliptic orbital integral."""

    coset_rep: List[List[str]] = Field(description="Matrix of the representative w")
    length: int
    det: int
    value: Tuple[float, float]


class ContributionTerm(BaseModel):
    """A single weighted term of the reported quantity."""

    label: str
    coefficient: float = 1.0
    value: Tuple[float, float] = Field(description="(re, im) of the raw term")
    weighted: Tuple[float, float] = Field(description="(re, im) of coefficient·value")
    note: Optional[str] = None


class IndexReport(BaseModel):
    """Structured result of a query."""

    model_config = ConfigDict(populate_by_name=True)

    group: str
    lambda_: List[str] = Field(alias="lambda")
    mode: QueryMode
    sign_convention: SignConvention
    bernoulli: BernoulliConvention
    terms: List[ContributionTerm] = Field(default_factory=list)
    total: Tuple[float, float] = (0.0, 0.0)
    assembled_index: Optional[float] = None
    near_integer: Optional[bool] = None
    deviation: Optional[float] = None
    decomposition: Optional[List[DecompositionEntry]] = None
    diagnostics: Optional[List[CosetDiagnostic]] = None
    warnings: List[str] = Field(default_factory=list)


class QuerySpec(BaseModel):
    """A computation request, shared by the CLI and the HTTP API."""

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "group": "su11",
                "lambda": ["1/2"],
                "element": {"type": "central", "X": ["0"]},
                "mode": "orbital",
            }
        },
    )

    group: Optional[str] = Field(default=None, description="Catalog name")
    group_spec: Optional[GroupSpec] = Field(
        default=None, description="Inline group description, overrides 'group'"
    )
    lambda_: List[str] = Field(alias="lambda", min_length=1)
    element: Optional[ElementSpec] = None
    gamma: Optional[GammaData] = None
    mode: QueryMode = QueryMode.ORBITAL
    levi: Optional[str] = None
    diagnostics: bool = False
    sign_convention: Optional[SignConvention] = None
    bernoulli: Optional[BernoulliConvention] = None
    subscript_variant: Optional[SubscriptVariant] = None
    norm_reading: Optional[NormReading] = None

    @model_validator(mode="after")
    def check_group_source(self) -> "QuerySpec":
        if self.group is None and self.group_spec is None:
            raise ValueError("either 'group' or 'group_spec' is required")
        return self
