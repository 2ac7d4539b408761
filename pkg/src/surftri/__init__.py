"""Triangulations of closed surfaces: surgeries, censuses, cycle topology."""

from .errors import InvalidTriangulation, SearchExhausted, TriangulationError
from .surface import SurfaceDescriptor, euler_genus, v_max_lower_bound, v_min
from .triangulation import Triangulation, format_record, parse_record
from .canon import are_equivalent, canonical_code, canonical_form

__all__ = [
    "InvalidTriangulation",
    "SearchExhausted",
    "TriangulationError",
    "SurfaceDescriptor",
    "euler_genus",
    "v_max_lower_bound",
    "v_min",
    "Triangulation",
    "format_record",
    "parse_record",
    "are_equivalent",
    "canonical_code",
    "canonical_form",
]

__version__ = "0.1.0"
