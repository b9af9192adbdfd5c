"""Serialization of reports to JSON-ready dicts and CSV."""

from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple

import pandas as pd

from ..improve.steps import NormalizationTrace
from ..optimality.certificate import Certification
from ..optimality.oracle import OracleResult
from ..optimality.properties import OptimalCount
from ..utils.rationals import format_rational, to_decimal_string
from ..value.report import ValueReport
from .files import matrix_to_dict


def _rational(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def value_report_to_dict(report: ValueReport, digits: int = 12) -> Dict[str, Any]:
    return {
        "n": report.params.n,
        "d": report.params.d,
        "value": format_rational(report.value),
        "decimal": to_decimal_string(report.value, digits),
        "method": report.method.value,
    }


def trace_to_dict(trace: NormalizationTrace) -> Dict[str, Any]:
    return {
        "initial": matrix_to_dict(trace.initial),
        "final": matrix_to_dict(trace.final),
        "steps": [
            {"j": s.column, "y": s.row, "from": s.from_letter, "to": s.to_letter}
            for s in trace.steps
        ],
        "values": None if trace.values is None else [format_rational(v) for v in trace.values],
    }


def oracle_to_dict(result: OracleResult) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": result.params.n,
        "d": result.params.d,
        "max_value": _rational(result.max_value),
        "count": str(result.optimizer_count),
    }
    optimizers = result.optimizers
    if optimizers is not None:
        data["optimizers"] = [matrix_to_dict(g) for g in optimizers]
    return data


def count_to_dict(count: OptimalCount, oracle: Optional[OracleResult] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": count.params.n,
        "d": count.params.d,
        "count": str(count.count),
        "basis": count.basis.value,
    }
    if oracle is not None:
        data["oracle_count"] = str(oracle.optimizer_count)
        data["oracle_max_value"] = _rational(oracle.max_value)
        data["verdict"] = "AGREE" if oracle.optimizer_count == count.count else "DISAGREE"
    return data


def certification_to_dict(cert: Certification, digits: int = 12) -> Dict[str, Any]:
    return {
        "n": cert.params.n,
        "d": cert.params.d,
        "regime": cert.regime.value,
        "permutation_columns": cert.permutation_columns,
        "one_free_column": cert.one_free_column,
        "optimal": cert.optimal,
        "optimal_value": format_rational(cert.optimal_value),
        "value": _rational(cert.value),
        "gap": _rational(cert.gap),
        "gap_decimal": None if cert.gap is None else to_decimal_string(cert.gap, digits),
    }


def table_frame(values: Mapping[Tuple[int, int], Fraction]) -> pd.DataFrame:
    """Grid of exact values: index n, columns d, cells "p/q"."""
    frame = pd.Series({key: format_rational(v) for key, v in values.items()}).unstack()
    frame.index.name = "n"
    frame.columns.name = None
    return frame.sort_index().sort_index(axis=1)


def table_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index_label="n", lineterminator="\n")


def table_to_dict(frame: pd.DataFrame, digits: int = 12) -> Dict[str, Any]:
    cells = []
    for n, row in frame.iterrows():
        for d, cell in row.items():
            cells.append(
                {
                    "n": int(n),
                    "d": int(d),
                    "value": cell,
                    "decimal": to_decimal_string(Fraction(cell), digits),
                }
            )
    return {"n_max": int(frame.index.max()), "d_max": int(frame.columns.max()), "cells": cells}
