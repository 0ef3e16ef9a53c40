# ABOUTME: Representation-robustness analyses over the built representations of a corpus.
# ABOUTME: Degree rankings, Spearman correlations, prominence time series, corpus summary.

from drama_graphs.analysis.correlation import (
    CorrMatrix,
    corpus_residuals,
    corr_matrix_rows,
    correlation_matrix,
    spearman,
)
from drama_graphs.analysis.prominence import (
    ProminenceSample,
    ProminenceSeries,
    act_starts,
    prominence_timeseries,
    timeseries_rows,
)
from drama_graphs.analysis.ranking import (
    AnalysisError,
    CardinalityFilter,
    FilterMode,
    RankEntry,
    RankTable,
    degree_ranking,
    filtered_hg_ranking,
    load_allowlist,
    named_character_filter,
    rank_table_rows,
)
from drama_graphs.analysis.summary import PlaySummary, corpus_summary

__all__ = [
    "AnalysisError",
    "CardinalityFilter",
    "CorrMatrix",
    "FilterMode",
    "PlaySummary",
    "ProminenceSample",
    "ProminenceSeries",
    "RankEntry",
    "RankTable",
    "act_starts",
    "corpus_residuals",
    "corpus_summary",
    "corr_matrix_rows",
    "correlation_matrix",
    "degree_ranking",
    "filtered_hg_ranking",
    "load_allowlist",
    "named_character_filter",
    "prominence_timeseries",
    "rank_table_rows",
    "spearman",
    "timeseries_rows",
]
