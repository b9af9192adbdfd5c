"""Game parameters, words, decoding matrices and encodings."""

from .params import GameParams
from .words import Word, sim, iterate_words, majority_encode
from .strategy import (
    DecodingMatrix,
    RandomizedStrategy,
    apply_column_permutations,
    best_response_encode,
    column_permutations,
    compose_permutations,
    majority_strategy,
)
from .encoding import BestResponse, ExplicitEncoding, EncodingFunction

__all__ = [
    "GameParams",
    "Word",
    "sim",
    "iterate_words",
    "majority_encode",
    "DecodingMatrix",
    "RandomizedStrategy",
    "apply_column_permutations",
    "best_response_encode",
    "column_permutations",
    "compose_permutations",
    "majority_strategy",
    "BestResponse",
    "ExplicitEncoding",
    "EncodingFunction",
]
