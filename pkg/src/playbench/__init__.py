"""playbench: a deterministic workbench for tiny threshold networks and
one-pass clustering, with stepping sessions, byte-replayable traces, a CLI,
and an HTTP/SSE service.
"""

from .dataset import (
    DEFAULT_BOUNDS,
    GateSample,
    Rng64,
    StageBounds,
    TruthTable,
    gen_mass_centers,
    gen_point_cloud,
    rng_next,
    truth_table,
    uniform_int,
    uniform_signed_unit,
)
from .errors import (
    NotFoundError,
    PlaybenchError,
    StateError,
    UnsupportedError,
    ValidationError,
)
from .kmeans import (
    PALETTE,
    Assignment,
    ColouredCloud,
    assign_clusters,
    colour_points,
    squared_distance,
)
from .mlp321 import MlpEval, MlpState, representable
from .perceptron import PerceptronEval, PerceptronState
from .session import (
    CONVERGED,
    EXHAUSTED,
    RUNNING,
    Session,
    SessionConfig,
    TrainingTrace,
    config_from_dict,
    config_to_dict,
    normalize_config,
    replay_trace,
    trace_from_json,
)
from .trace import IterationRecord, canonical_json
from .training import TrainOutcome

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BOUNDS",
    "GateSample",
    "Rng64",
    "StageBounds",
    "TruthTable",
    "gen_mass_centers",
    "gen_point_cloud",
    "rng_next",
    "truth_table",
    "uniform_int",
    "uniform_signed_unit",
    "NotFoundError",
    "PlaybenchError",
    "StateError",
    "UnsupportedError",
    "ValidationError",
    "PALETTE",
    "Assignment",
    "ColouredCloud",
    "assign_clusters",
    "colour_points",
    "squared_distance",
    "MlpEval",
    "MlpState",
    "representable",
    "PerceptronEval",
    "PerceptronState",
    "CONVERGED",
    "EXHAUSTED",
    "RUNNING",
    "Session",
    "SessionConfig",
    "TrainingTrace",
    "config_from_dict",
    "config_to_dict",
    "normalize_config",
    "replay_trace",
    "trace_from_json",
    "IterationRecord",
    "canonical_json",
    "TrainOutcome",
    "__version__",
]
