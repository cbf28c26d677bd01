"""Exact disconnection distributions of simple graphs viewed as random K-out-of-M systems."""
from __future__ import annotations

__version__ = "0.1.0"

from .cutsets import (
    SubsetCountTable,
    count_disconnected_k,
    count_table,
    count_uv_separations,
    is_cut_set,
    is_disconnected_set,
    is_uv_cut_set,
    is_uv_disconnected_set,
)
from .graph import (
    Chord,
    ConstructionScript,
    Graph,
    Leaf,
    apply_step,
    bridges,
    connected_components,
    derive_script,
    is_connected,
    validate,
)
from .montecarlo import McEstimate, estimate_failure, estimate_pk
from .recurrence import (
    KDistribution,
    base_distribution,
    build_distribution,
    closed_form,
    step_chord,
    step_leaf,
)
from .reliability import (
    ConstantP,
    Exponential,
    FailureCurve,
    Weibull,
    edge_cdf,
    failure_curve,
    pmf,
    system_failure_prob,
)
