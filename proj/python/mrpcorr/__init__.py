"""Correspondents of Sahlqvist modal reduction principles.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Frames are passed around as JSON strings in the format described
in the project README.
"""

from mrpcorr._core import (  # noqa: F401
    FormulaParseError,
    FrameFormatError,
    alba,
    catalogue,
    catalogue_diff,
    check_inequality,
    classify,
    classify_space,
    correspondent,
    frame_valid,
    is_inductive,
    lattice,
    lattice_dot,
    lift_frame,
    shift_frame,
    validate_frame,
    verify_correspondence,
    verify_lifting,
    verify_shifting,
)

__all__ = [
    "FormulaParseError",
    "FrameFormatError",
    "alba",
    "catalogue",
    "catalogue_diff",
    "check_inequality",
    "classify",
    "classify_space",
    "correspondent",
    "frame_valid",
    "is_inductive",
    "lattice",
    "lattice_dot",
    "lift_frame",
    "shift_frame",
    "validate_frame",
    "verify_correspondence",
    "verify_lifting",
    "verify_shifting",
]
