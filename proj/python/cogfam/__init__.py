"""Cohort assessment with the GPA index and center-of-gravity fuzzy models.

Exact values are returned as :class:`fractions.Fraction`.
"""

from ._core import (
    InputError,
    InvariantViolation,
    ModelError,
    assess,
    compare,
    frequencies_from_counts,
    gpa_from_counts,
    gpa_from_frequencies,
    integration_centroid,
    landmark_points,
    composite_centroid,
    parse_counts,
    parse_scores,
    rank,
    render_report,
    rfam_cog,
    variation_cog,
    verify_closed_form,
)

MODELS = ("GPA", "RFAM", "GRFAM", "TFAM", "TpFAM")

__all__ = [
    "InputError",
    "InvariantViolation",
    "ModelError",
    "MODELS",
    "assess",
    "compare",
    "composite_centroid",
    "frequencies_from_counts",
    "gpa_from_counts",
    "gpa_from_frequencies",
    "integration_centroid",
    "landmark_points",
    "parse_counts",
    "parse_scores",
    "rank",
    "render_report",
    "rfam_cog",
    "variation_cog",
    "verify_closed_form",
]
