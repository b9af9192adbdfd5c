"""Strategy improvement and strictness witnesses."""

from .steps import ImprovementStep, NormalizationTrace, normalize, reassign_letter
from .witnesses import binary_deficit_witness, merge_entry, strictness_witness

__all__ = [
    "ImprovementStep",
    "NormalizationTrace",
    "normalize",
    "reassign_letter",
    "binary_deficit_witness",
    "merge_entry",
    "strictness_witness",
]
