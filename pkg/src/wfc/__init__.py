"""Workflow-net complexity measures, block compositions and property checks."""

from .compose import Operator, compose, is_permutation, relabel, reverse
from .errors import WfcError
from .generators import RandomNetSpec, build_family, build_fixture, random_block_net
from .graphs import (
    LanguageBounds,
    PathBudget,
    articulation_points,
    bounded_language,
    longest_trail,
    max_product_values,
    nodes_on_cycles,
    simple_paths,
)
from .metrics import MEASURE_IDS, MEASURES, MetricConfig, MetricValue, compute, compute_all
from .net import TAU, WorkflowNet, classify_connectors, validate
from .properties import (
    HarnessConfig,
    PROPERTY_IDS,
    PropertyVerdict,
    Report,
    check,
    compare_to_expected,
    full_report,
    load_expected_table,
)

__version__ = "0.1.0"

__all__ = [
    "Operator", "compose", "is_permutation", "relabel", "reverse",
    "WfcError",
    "RandomNetSpec", "build_family", "build_fixture", "random_block_net",
    "LanguageBounds", "PathBudget", "articulation_points", "bounded_language",
    "longest_trail", "max_product_values", "nodes_on_cycles", "simple_paths",
    "MEASURE_IDS", "MEASURES", "MetricConfig", "MetricValue", "compute", "compute_all",
    "TAU", "WorkflowNet", "classify_connectors", "validate",
    "HarnessConfig", "PROPERTY_IDS", "PropertyVerdict", "Report", "check",
    "compare_to_expected", "full_report", "load_expected_table",
    "__version__",
]
