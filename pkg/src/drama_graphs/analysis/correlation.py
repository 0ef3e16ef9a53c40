# ABOUTME: Spearman correlations between rankings and corpus-level residual matrices.
# ABOUTME: Residuals subtract the elementwise corpus mean from each play's matrix.

import warnings
from collections.abc import Mapping, Sequence
from typing import Any

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from drama_graphs.analysis.ranking import AnalysisError, RankTable

log = structlog.get_logger()


class CorrMatrix(BaseModel):
    """Square matrix of correlation coefficients with row and column labels."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    @classmethod
    def from_array(cls, labels: Sequence[str], array: np.ndarray) -> "CorrMatrix":
        values = tuple(tuple(float(v) for v in row) for row in array)
        return cls(labels=tuple(labels), values=values)

    def to_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def value(self, row: str, column: str) -> float:
        return self.values[self.labels.index(row)][self.labels.index(column)]


def spearman(first: RankTable, second: RankTable) -> float:
    """Pearson correlation of the two fractional-rank vectors.

    Returns nan when either ranking is constant.

    Raises:
        AnalysisError: If the character sets differ or fewer than two characters are ranked.
    """
    if first.nodes != second.nodes:
        difference = sorted(first.nodes ^ second.nodes)
        raise AnalysisError(f"rankings cover different characters: {difference}")
    if len(first.nodes) < 2:
        raise AnalysisError("spearman correlation needs at least two characters")

    nodes = sorted(first.nodes)
    x = first.fractional_ranks(nodes)
    y = second.fractional_ranks(nodes)
    if np.all(x == x[0]) or np.all(y == y[0]):
        log.warning(
            "constant_ranking",
            first=first.representation,
            second=second.representation,
        )
        return float("nan")

    rho = float(np.corrcoef(x, y)[0, 1])
    return min(1.0, max(-1.0, rho))


def correlation_matrix(rankings: Mapping[str, RankTable]) -> CorrMatrix:
    """Pairwise Spearman correlations; unit diagonal, symmetric by construction."""
    labels = list(rankings)
    size = len(labels)
    array = np.eye(size)
    for i in range(size):
        for j in range(i + 1, size):
            rho = spearman(rankings[labels[i]], rankings[labels[j]])
            array[i, j] = array[j, i] = rho
    return CorrMatrix.from_array(labels, array)


def corpus_residuals(matrices: Mapping[str, CorrMatrix]) -> dict[str, CorrMatrix]:
    """Subtract the elementwise mean over all plays from each play's matrix.

    Raises:
        AnalysisError: On an empty corpus or when plays use different labels.
    """
    if not matrices:
        raise AnalysisError("cannot compute residuals of an empty corpus")

    labels = next(iter(matrices.values())).labels
    mismatched = sorted(play for play, m in matrices.items() if m.labels != labels)
    if mismatched:
        raise AnalysisError(f"correlation labels differ for plays: {mismatched}")

    stack = np.stack([m.to_array() for m in matrices.values()])
    with warnings.catch_warnings():
        # all-nan cells stay nan
        warnings.simplefilter("ignore", category=RuntimeWarning)
        mean = np.nanmean(stack, axis=0)

    residuals = {}
    for play, matrix in matrices.items():
        residual = matrix.to_array() - mean
        np.fill_diagonal(residual, 0.0)
        residuals[play] = CorrMatrix.from_array(labels, residual)
    return residuals


def corr_matrix_rows(matrix: CorrMatrix) -> list[dict[str, Any]]:
    return [
        {"representation": label} | dict(zip(matrix.labels, row, strict=True))
        for label, row in zip(matrix.labels, matrix.values, strict=True)
    ]
