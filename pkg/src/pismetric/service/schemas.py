"""Request and response models for the solver service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class GraphDoc(BaseModel):
    """Wire form of a graph; mirrors the JSON file schema."""

    ring: list[int] | None = None
    vertices: list
    edges: list[list[int]]
    labels: list[str] | None = None


class RingInput(BaseModel):
    """Exactly one of ``ring`` (text form) or ``components`` (ideal counts)."""

    ring: str | None = None
    components: list[int] | None = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.ring is None) == (self.components is None):
            raise ValueError("provide exactly one of 'ring' or 'components'")
        return self


class BuildRequest(RingInput):
    format: Literal["json", "dot"] = "json"


class BuildResponse(BaseModel):
    components: list[int]
    vertex_count: int
    edge_count: int
    labels: list[str]
    graph: GraphDoc


class DimRequest(BaseModel):
    """Ring by text or counts, or an explicit graph document."""

    ring: str | None = None
    components: list[int] | None = None
    graph: GraphDoc | None = None
    budget_seconds: float = Field(default=600.0, gt=0)

    @model_validator(mode="after")
    def _one_source(self):
        given = sum(x is not None for x in (self.ring, self.components, self.graph))
        if given != 1:
            raise ValueError("provide exactly one of 'ring', 'components' or 'graph'")
        return self


class Bounds(BaseModel):
    twin: int
    info: int


class DimResponse(BaseModel):
    set: list[str]
    size: int | None
    status: Literal["exact", "upper_bound", "infeasible_budget"]
    bounds: Bounds
    millis: float


class FormulaRequest(RingInput):
    pass


class FormulaResponse(BaseModel):
    value: int
    theorem_id: str
    hypothesis_note: str


class ConstructRequest(RingInput):
    pass


class ConstructResponse(BaseModel):
    set: list[str]
    size: int
    theorem_id: str
    resolving: bool


class VerifyRequest(BaseModel):
    family: Literal["reduced", "three", "chain", "custom"]
    params: str | None = None
    budget_seconds: float = Field(default=600.0, gt=0)
    exact_cap: int = 100
    workers: int = Field(default=1, ge=1)
    format: Literal["json", "csv", "markdown", "md"] = "json"


class CounterexamplesRequest(BaseModel):
    budget_seconds: float = Field(default=600.0, gt=0)
    format: Literal["json", "csv", "markdown", "md"] = "json"


class ErrorResponse(BaseModel):
    error: str
    detail: str
