"""Gene regulatory network inference with stability-selected least angle
regression, plus the evaluation and error-analysis tooling around it."""

__version__ = "0.1.0"

from .data import (
    ExpressionMatrix,
    GoldStandard,
    RegulatorSet,
    load_expression,
    load_gold_standard,
    load_tf_list,
    save_expression,
    standardize,
)
from .error_analysis import (
    COUPLE,
    DISTANCE_CLASSES,
    GRANDPARENT_AB,
    GRANDPARENT_BA,
    SIBLING,
    DistanceReport,
    GoldGraph,
    classify_distance2,
    fp_distance_profile,
    hypergeom_ci,
    shortest_distance,
)
from .evaluation import (
    EvaluationReport,
    evaluate,
    overall_score,
    permutation_pvalues,
)
from .exceptions import (
    EvaluationError,
    FormatError,
    GrnlarsError,
    InputError,
    ParameterError,
)
from .lars import LarsPath, lars_path
from .network import EdgeList, infer_network, read_edge_list, write_edge_list
from .stability import (
    FrequencyTable,
    ScoreVector,
    StabilityParams,
    run_stability,
    score_area,
    score_original,
)
from .synthetic import SyntheticBenchmark, generate_benchmark, write_benchmark

__all__ = [
    "__version__",
    "ExpressionMatrix", "GoldStandard", "RegulatorSet",
    "load_expression", "load_gold_standard", "load_tf_list",
    "save_expression", "standardize",
    "LarsPath", "lars_path",
    "StabilityParams", "FrequencyTable", "ScoreVector",
    "run_stability", "score_area", "score_original",
    "EdgeList", "infer_network", "read_edge_list", "write_edge_list",
    "EvaluationReport", "evaluate", "overall_score", "permutation_pvalues",
    "GoldGraph", "DistanceReport", "DISTANCE_CLASSES",
    "SIBLING", "COUPLE", "GRANDPARENT_AB", "GRANDPARENT_BA",
    "classify_distance2", "fp_distance_profile", "hypergeom_ci", "shortest_distance",
    "SyntheticBenchmark", "generate_benchmark", "write_benchmark",
    "GrnlarsError", "FormatError", "ParameterError", "InputError", "EvaluationError",
]
