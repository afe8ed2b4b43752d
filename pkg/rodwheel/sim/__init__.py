from .audit import (
    EnergyAudit,
    TrajectorySummary,
    audit_constraints,
    audit_energy,
    audit_ground_work,
    summarize,
)
from .integrator import rk2_step
from .simulate import FREE_INITIAL_STATE, Scenario, simulate
from .trajectory import (
    CSV_COLUMNS,
    FallEvent,
    Sample,
    Trajectory,
    read_trajectory_csv,
    write_trajectory_csv,
)


__all__ = [
    "CSV_COLUMNS",
    "EnergyAudit",
    "FallEvent",
    "FREE_INITIAL_STATE",
    "Sample",
    "Scenario",
    "Trajectory",
    "TrajectorySummary",
    "audit_constraints",
    "audit_energy",
    "audit_ground_work",
    "read_trajectory_csv",
    "rk2_step",
    "simulate",
    "summarize",
    "write_trajectory_csv",
]
