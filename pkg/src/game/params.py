"""Game parameters."""

from dataclasses import dataclass

from ..utils.errors import InvalidInputError


@dataclass(frozen=True)
class GameParams:
    """The n→1 game over a d-letter alphabet: words of length n, messages of d letters."""

    n: int
    d: int

    def __post_init__(self):
        for name in ("n", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidInputError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InvalidInputError(f"{name} must be at least 1, got {value}")

    @property
    def word_count(self) -> int:
        """Size of the word space, d^n."""
        return self.d ** self.n

    @property
    def matrix_count(self) -> int:
        """Number of decoding matrices, d^(d·n)."""
        return self.d ** (self.d * self.n)

    @property
    def is_degenerate(self) -> bool:
        return self.n == 1 or self.d == 1

    def __str__(self) -> str:
        return f"(n={self.n}, d={self.d})"
