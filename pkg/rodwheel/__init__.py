from .ad import AD2
from .eom import forward_dynamics, ground_reaction, mass_matrix, rhs_vector
from .kinematics import Params
from .lagrangian import lagrangian, lagrangian_partials, total_energy
from .sim import Scenario, Trajectory, rk2_step, simulate


__version__ = "0.1.0"

__all__ = [
    "AD2",
    "Params",
    "Scenario",
    "Trajectory",
    "forward_dynamics",
    "ground_reaction",
    "lagrangian",
    "lagrangian_partials",
    "mass_matrix",
    "rhs_vector",
    "rk2_step",
    "simulate",
    "total_energy",
]
