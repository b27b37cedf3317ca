"""Independent graph of Z_n: oracle, closed forms, claims, and audit.

Two elements of Z_n are joined exactly when their additive orders
differ, which makes the graph complete multipartite on the order
classes. `oracle` computes invariants directly, `closed_form` computes
them from the divisor structure, `claims` transcribes the audited
formulas verbatim, and `audit` compares all three.
"""

from indegraph.audit import (
    AuditConfig,
    Status,
    SweepReport,
    TheoremId,
    TheoremVerdict,
    audit_n,
    render_report,
    sweep,
)
from indegraph.invariants import INFINITE, InvariantSet
from indegraph.oracle import CapacityError, IndependentGraph, build

__version__ = "0.1.0"

__all__ = [
    "AuditConfig",
    "CapacityError",
    "INFINITE",
    "IndependentGraph",
    "InvariantSet",
    "Status",
    "SweepReport",
    "TheoremId",
    "TheoremVerdict",
    "audit_n",
    "build",
    "render_report",
    "sweep",
    "__version__",
]
