"""Flat-file storage of strategies."""

import json
from pathlib import Path
from typing import Any, Dict, Union

from ..game.params import GameParams
from ..game.strategy import DecodingMatrix, RandomizedStrategy
from ..utils.errors import InvalidInputError
from ..utils.rationals import format_rational, parse_rational

Strategy = Union[DecodingMatrix, RandomizedStrategy]


def matrix_to_dict(f: DecodingMatrix) -> Dict[str, Any]:
    """JSON form of a matrix: 0-based letters."""
    return {"n": f.n, "d": f.d, "rows": [list(row) for row in f.rows]}


def matrix_from_dict(data: Any) -> DecodingMatrix:
    """
    Parse the JSON form of a matrix.

    Raises:
        InvalidInputError: missing keys, wrong types or out-of-range letters
    """
    if not isinstance(data, dict):
        raise InvalidInputError("a decoding matrix must be a JSON object")
    missing = [key for key in ("n", "d", "rows") if key not in data]
    if missing:
        raise InvalidInputError(f"decoding matrix is missing {', '.join(missing)}")
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidInputError("'rows' must be an array of arrays of integers")
    return DecodingMatrix(GameParams(n=data["n"], d=data["d"]), tuple(tuple(row) for row in rows))


def strategy_to_dict(strategy: Strategy) -> Dict[str, Any]:
    if isinstance(strategy, DecodingMatrix):
        return matrix_to_dict(strategy)
    return {
        "components": [
            {"weight": format_rational(weight), "matrix": matrix_to_dict(f)}
            for weight, f in strategy.components
        ]
    }


def strategy_from_dict(data: Any) -> Strategy:
    """Parse a matrix, or a randomized strategy {"components": [...]}."""
    if isinstance(data, dict) and "components" in data:
        components = data["components"]
        if not isinstance(components, list):
            raise InvalidInputError("'components' must be an array")
        parsed = []
        for item in components:
            if not isinstance(item, dict) or "weight" not in item or "matrix" not in item:
                raise InvalidInputError("each component needs 'weight' and 'matrix'")
            parsed.append((parse_rational(item["weight"]), matrix_from_dict(item["matrix"])))
        return RandomizedStrategy(tuple(parsed))
    return matrix_from_dict(data)


def load_strategy(path: Path) -> Strategy:
    """
    Read a strategy file.

    Args:
        path: JSON file holding a matrix or a randomized strategy

    Returns:
        DecodingMatrix or RandomizedStrategy
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InvalidInputError(f"{path} is not valid UTF-8 JSON: {e}") from e
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e}") from e
    return strategy_from_dict(data)


def load_matrix(path: Path) -> DecodingMatrix:
    strategy = load_strategy(path)
    if not isinstance(strategy, DecodingMatrix):
        raise InvalidInputError(f"{path} holds a randomized strategy, a single matrix is needed")
    return strategy


def save_strategy(strategy: Strategy, path: Path) -> Path:
    """Write a strategy file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(strategy_to_dict(strategy), f, indent=2)
        f.write("\n")
    return path
