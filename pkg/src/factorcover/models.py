"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .verify import DEFAULT_TOLERANCE


class FamilySpec(BaseModel):
    family: Literal["H", "G-empty", "G-nonempty"]
    n: int
    k: int
    s: int


class SpectrumRequest(BaseModel):
    graph6: Optional[str] = None
    family: Optional[FamilySpec] = None
    alphas: list[Literal[0, 1]] = Field(default=[0, 1])

    @model_validator(mode="after")
    def _one_input(self):
        if (self.graph6 is None) == (self.family is None):
            raise ValueError("provide exactly one of graph6 or family")
        return self


class SpectrumValue(BaseModel):
    alpha: int
    value: float
    residual: float
    method: str


class QuotientValue(BaseModel):
    kind: Literal["A", "Q"]
    value: float
    transcribed_value: Optional[float] = None


class SpectrumResponse(BaseModel):
    n: int
    graph6: str
    values: list[SpectrumValue]
    quotient: list[QuotientValue] = Field(default_factory=list)


class CheckRequest(BaseModel):
    graph6: str
    property: Literal["matching-cover", "star-cover"]
    k: int
    criterion: Literal["direct", "lemma"] = "direct"


class MatchingModel(BaseModel):
    kind: Literal["matching"] = "matching"
    edges: list[tuple[int, int]]


class StarForestModel(BaseModel):
    kind: Literal["star-forest"] = "star-forest"
    stars: list[tuple[int, list[int]]]


class WitnessModel(BaseModel):
    vertices: Optional[list[int]] = None
    edge: Optional[tuple[int, int]] = None
    detail: str = ""


class CheckResponse(BaseModel):
    holds: bool
    certificate: Optional[MatchingModel | StarForestModel] = None
    witness: Optional[WitnessModel] = None


class SweepRequest(BaseModel):
    target: str
    n: Optional[int] = None
    k: Optional[int] = None
    mode: Literal["exhaustive", "sampled"] = "exhaustive"
    sample_count: int = 100_000
    rng_seed: int = 0
    tolerance: float = DEFAULT_TOLERANCE
    n_max: int = 7
    k_set: Optional[list[int]] = None
    trials: int = 1000


class SweepResponse(BaseModel):
    config: dict
    graphs_checked: int
    condition_hits: int
    violations: list[dict]
    extremal_confirmed: Optional[bool]
    errata: list[dict]
    evidence: str
    notes: list[str]
    passed: bool


class ScanRequest(BaseModel):
    which: Literal["h1", "h2", "h3", "h4", "h5", "h6"]
    n: int
    k: int


class ScanResponse(BaseModel):
    which: str
    n: int
    k: int
    s_values: list[int]
    values: list[float]
    maximizer: int
    claimed: int
    gap: float
    confirmed: bool
