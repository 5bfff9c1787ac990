"""Matrix-based process model analysis.

Turns a process model (activities plus input/output and control arrows)
into a design structure matrix and an interface structure matrix, extracts
activity levels by triangulation and sub-processes by clustering, and
joins both into a mixed matrix model with feedback diagnostics.
"""

from mmm.cda import (
    InterdependentPair,
    SubProcess,
    cluster_reduced_ism,
    detect_interdependencies,
    isolated_activities,
)
from mmm.dsm import (
    Dsm,
    FeedbackClass,
    FeedbackEntry,
    build_dsm,
    classify_feedback,
    feedback_entries,
)
from mmm.ingest import ParseError, ValidationError, parse_model, serialize_model
from mmm.ism import Ism, IsmMark, build_ism, reduce_ism
from mmm.mixed import (
    ActivityRecord,
    FeedbackLink,
    FeedbackSpace,
    MixedMatrixModel,
    assemble_mmm,
    feedback_metrics,
)
from mmm.model import (
    Dependency,
    DependencyKind,
    ProcessModel,
    Violation,
    case_study_fixture,
    validate_model,
)
from mmm.triangulation import (
    CycleGroup,
    LevelAssignment,
    TriangulationResult,
    assign_levels,
    find_destination_activities,
    find_original_activities,
    triangulate,
)

__version__ = "0.1.0"

__all__ = [
    "ActivityRecord",
    "CycleGroup",
    "Dependency",
    "DependencyKind",
    "Dsm",
    "FeedbackClass",
    "FeedbackEntry",
    "FeedbackLink",
    "FeedbackSpace",
    "InterdependentPair",
    "Ism",
    "IsmMark",
    "LevelAssignment",
    "MixedMatrixModel",
    "ParseError",
    "ProcessModel",
    "SubProcess",
    "TriangulationResult",
    "ValidationError",
    "Violation",
    "assemble_mmm",
    "assign_levels",
    "build_dsm",
    "build_ism",
    "case_study_fixture",
    "classify_feedback",
    "cluster_reduced_ism",
    "detect_interdependencies",
    "feedback_entries",
    "feedback_metrics",
    "find_destination_activities",
    "find_original_activities",
    "isolated_activities",
    "parse_model",
    "reduce_ism",
    "serialize_model",
    "triangulate",
    "validate_model",
]
