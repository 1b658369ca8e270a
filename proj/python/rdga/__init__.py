"""Identity checks and quantization of Riemannian geometry as a deformed DGA."""

from ._rdga import (
    CheckResult,
    Error,
    Geometry,
    InvalidMetric,
    ParseError,
    Report,
    UsageError,
    builtin_geometry_names,
    load_geometry,
    parse_geometry,
    quantize_report,
    ricci_report,
    spacetime_report,
    verify,
    z2_report,
)

__all__ = [
    "CheckResult",
    "Error",
    "Geometry",
    "InvalidMetric",
    "ParseError",
    "Report",
    "UsageError",
    "builtin_geometry_names",
    "load_geometry",
    "parse_geometry",
    "quantize_report",
    "ricci_report",
    "spacetime_report",
    "verify",
    "z2_report",
]
