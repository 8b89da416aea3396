"""Pydantic модели для данных."""

from .descriptors import (
    Descriptor,
    EcDescriptorModel,
    TableDescriptor,
    parse_descriptor,
)
from .responses import (
    CubicResponse,
    DecisionResponse,
    ErrorResponse,
    FlagResponse,
    G1EntryResponse,
    G1ReportResponse,
    G2Response,
    MatrixResponse,
    NormalFormResponse,
    PointListResponse,
    PointResponse,
    RelationSetResponse,
    ValueResponse,
    Witness,
)

__all__ = [
    "Descriptor",
    "EcDescriptorModel",
    "TableDescriptor",
    "parse_descriptor",
    "CubicResponse",
    "DecisionResponse",
    "ErrorResponse",
    "FlagResponse",
    "G1EntryResponse",
    "G1ReportResponse",
    "G2Response",
    "MatrixResponse",
    "NormalFormResponse",
    "PointListResponse",
    "PointResponse",
    "RelationSetResponse",
    "ValueResponse",
    "Witness",
]
