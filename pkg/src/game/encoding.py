"""Alice's encoding functions."""

from dataclasses import dataclass, field
from typing import Dict, Mapping, Union

from ..utils.errors import InvalidInputError
from .params import GameParams
from .strategy import DecodingMatrix, best_response_encode
from .words import Word, iterate_words, validate_word


@dataclass(frozen=True)
class BestResponse:
    """Implicit encoding: send the row that best approximates the word."""

    def encode(self, f: DecodingMatrix, x: Word) -> int:
        return best_response_encode(f, x)


@dataclass(frozen=True)
class ExplicitEncoding:
    """A total table from words to letters."""

    params: GameParams
    table: Mapping[Word, int] = field(repr=False)

    def __post_init__(self):
        table: Dict[Word, int] = {}
        for word, letter in self.table.items():
            word = validate_word(self.params, word)
            if isinstance(letter, bool) or not isinstance(letter, int) or not 0 <= letter < self.params.d:
                raise InvalidInputError(f"word {word} maps to invalid letter {letter!r}")
            table[word] = letter
        if len(table) != self.params.word_count:
            raise InvalidInputError(
                f"explicit encoding covers {len(table)} of {self.params.word_count} words"
            )
        object.__setattr__(self, "table", table)

    @classmethod
    def constant(cls, params: GameParams, letter: int) -> "ExplicitEncoding":
        return cls(params, {word: letter for word in iterate_words(params)})

    def encode(self, f: DecodingMatrix, x: Word) -> int:
        return self.table[tuple(x)]


EncodingFunction = Union[BestResponse, ExplicitEncoding]
