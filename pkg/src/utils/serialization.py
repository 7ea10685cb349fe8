"""
Pydantic models for every JSON document minorforge reads or writes.

The models validate shape only; semantic checks (vertex ranges, Ω orders,
path structure) stay with the domain classes. Validation errors surface as
MalformedInputError.
"""

import json
import logging
import sys
from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.configurations.certificate import Certificate
from src.decomposition.intrusions import Intrusion
from src.decomposition.wars import War
from src.graph.graph import Graph
from src.graph.minors import MinorModel
from src.planarity.embedding import Embedding
from src.society.society import Society, TruncationWitness
from src.targets.target import Target
from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class GraphModel(BaseModel):
    """Graph JSON: ``{"n": int, "edges": [[u, v], ...]}``."""

    model_config = ConfigDict(extra="allow")

    n: int = Field(..., description="Size of the vertex id space", ge=0)
    edges: List[List[int]] = Field(default_factory=list, description="Edge list; loops and repeats allowed")
    vertices: Optional[List[int]] = Field(None, description="Vertex subset when not every id in 0..n-1 is used")

    def to_graph(self) -> Graph:
        return Graph.from_dict(self.model_dump(exclude_none=True))


class SocietyModel(GraphModel):
    """Graph JSON plus the cyclic order Ω."""

    omega: List[int] = Field(..., description="Vertices of Ω in clockwise order")

    def to_society(self) -> Society:
        return Society.from_dict(self.model_dump(exclude_none=True))


class EmbeddingModel(BaseModel):
    rotation: Dict[str, List[int]] = Field(..., description="Clockwise neighbour list of every vertex")
    outer: Optional[List[int]] = Field(None, description="Boundary walk of the outer face")

    def to_embedding(self) -> Embedding:
        return Embedding.from_dict(self.model_dump())


class MinorModelModel(BaseModel):
    branch_sets: List[List[int]] = Field(..., description="Six branch sets realizing K6", min_length=6, max_length=6)

    def to_model(self) -> MinorModel:
        return MinorModel.of(self.branch_sets)


class CertificateModel(BaseModel):
    kind: str = Field(..., description="Certificate kind, e.g. 'turtle' or 'leap'")
    parts: Dict[str, List[int]] = Field(default_factory=dict, description="Named paths (P1, Q2, L, ...)")
    anchors: Dict[str, int] = Field(default_factory=dict, description="Named vertices (u1, v1, x, ...)")

    def to_certificate(self) -> Certificate:
        return Certificate.from_dict(self.model_dump())


class IntrusionModel(BaseModel):
    A: List[int] = Field(..., description="Side of the separation containing X")
    B: List[int] = Field(..., description="Side of the separation containing Y")
    X: List[int] = Field(..., description="Base arc X of Ω")
    Y: List[int] = Field(..., description="Base arc Y of Ω")
    longitudes: List[List[int]] = Field(default_factory=list, description="Disjoint X-to-Y paths in B")

    def to_intrusion(self) -> Intrusion:
        return Intrusion.from_dict(self.model_dump())


class InvasionModel(IntrusionModel):
    meridian: List[int] = Field(..., description="Meridian path of the invasion")


class WarModel(BaseModel):
    invasions: List[InvasionModel] = Field(..., description="Invasions with their meridians")

    def to_war(self) -> War:
        return War.from_dict(self.model_dump())


class TargetModel(BaseModel):
    edges: List[List[int]] = Field(..., description="Forest edge list")
    vertices: List[int] = Field(default_factory=list, description="Forest vertices, isolated ones included")
    host: SocietyModel = Field(..., description="Host society")

    def to_target(self) -> Target:
        return Target.from_dict(self.model_dump(exclude_none=True))


class NeighborhoodModel(GraphModel):
    omega: List[int] = Field(..., description="Outer cyclic order Ω")
    omega0: List[int] = Field(..., description="Inner cyclic order Ω0")


class TruncationWitnessModel(BaseModel):
    inner: SocietyModel = Field(..., description="Inner society (G0, Ω0)")
    neighborhood: NeighborhoodModel = Field(..., description="Rural neighborhood (G1, Ω, Ω0)")
    embedding: Optional[EmbeddingModel] = Field(None, description="Drawing of the neighborhood")

    def to_witness(self) -> TruncationWitness:
        return TruncationWitness.from_dict(self.model_dump(exclude_none=True))


def parse(model: Type[M], data: Any) -> M:
    """
    Validate data against a model.

    Raises:
        MalformedInputError: data does not fit the model
    """
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ())) or model.__name__
        raise MalformedInputError(f"{model.__name__}: {where}: {first.get('msg')}") from e


def read_json(path: str) -> Any:
    """Read a JSON document from a file, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"{path}: not valid JSON ({e})") from e


def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False)


def load_graph(data: Any) -> Graph:
    return parse(GraphModel, data).to_graph()


def load_society(data: Any) -> Society:
    return parse(SocietyModel, data).to_society()


def load_certificate(data: Any) -> Certificate:
    return parse(CertificateModel, data).to_certificate()


def load_minor_model(data: Any) -> MinorModel:
    return parse(MinorModelModel, data).to_model()


def load_war(data: Any) -> War:
    return parse(WarModel, data).to_war()


def load_target(data: Any) -> Target:
    return parse(TargetModel, data).to_target()


def load_truncation_witness(data: Any) -> TruncationWitness:
    return parse(TruncationWitnessModel, data).to_witness()
