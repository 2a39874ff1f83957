"""Clustering of variable-length discrete sequences under edit distance."""
from .cluster import (ClusterConfig, Clustering, TiePolicy, assign, compute_centroid, init_centroids, run,
                      sum_of_squares)
from .costs import GAP, CostModel, make_matrix_cost_model, make_unit_cost_model
from .datagen import GenSpec, LabeledDataset, generate
from .editdist import (DpMatrix, EditSequence, align, backtrack, distance, distance_sym, dp_matrix,
                       expanded_target, score_edit_sequence)
from .errors import (ConfigurationError, DataError, EditClustError, GenerationError, InvariantError,
                     PreconditionError, UnsupportedError)
from .evaluate import EvalReport, batch_experiment, evaluate, mismatch_count

__all__ = [
    "ClusterConfig", "Clustering", "TiePolicy", "assign", "compute_centroid", "init_centroids", "run",
    "sum_of_squares", "GAP", "CostModel", "make_matrix_cost_model", "make_unit_cost_model", "GenSpec",
    "LabeledDataset", "generate", "DpMatrix", "EditSequence", "align", "backtrack", "distance",
    "distance_sym", "dp_matrix", "expanded_target", "score_edit_sequence", "ConfigurationError",
    "DataError", "EditClustError", "GenerationError", "InvariantError", "PreconditionError",
    "UnsupportedError", "EvalReport", "batch_experiment", "evaluate", "mismatch_count",
]
__version__ = "0.1.0"
