import logging

import numpy as np

from .. import serializer
from ..eom import full_rates
from ..kinematics import Params
from ..lagrangian import lagrangian
from ..oracle import FDConfig, audit_state, paper_lagrangian_closed_form, random_states
from ..settings import get_audit_settings
from ..sim import audit_constraints, audit_energy, audit_ground_work, simulate
from .base import EXIT_ERROR, EXIT_OK, BaseCommand
from .simulate import add_scenario_overrides, scenario_from_options


logger = logging.getLogger(__name__)


def closed_form_error(x: np.ndarray, params: Params) -> float:
    """
    Relative gap between `lagrangian` and its closed-form expansion at a state.
    """

    dq = full_rates(x[:6], x[6:], params)
    engine = float(lagrangian(x[:6], dq, params))
    closed_form = paper_lagrangian_closed_form(x[:6], dq, params)

    return abs(engine - closed_form) / max(abs(closed_form), 1.0)


class Command(BaseCommand):
    help = "Checks the dynamics against the finite-difference oracle and audits a run"

    def add_arguments(self, parser):
        add_scenario_overrides(parser)
        parser.add_argument(
            "--states", type=int, help="Number of random states (default from settings)"
        )
        parser.add_argument("--seed", type=int, help="Seed of the random states")
        parser.add_argument(
            "--json", action="store_true", help="Print the report as JSON"
        )

    def handle(self, *args, **options):
        scenario = scenario_from_options(options)
        params = scenario.params
        audit_settings = get_audit_settings()
        cfg = FDConfig.from_settings()

        count = options.get("states")
        count = audit_settings["RANDOM_STATES"] if count is None else count
        states = np.vstack(
            (
                np.array(scenario.x0),
                random_states(count, seed=options.get("seed")).reshape(-1, 10),
            )
        )

        oracle_error = 0.0
        closed_form = 0.0

        for x in states:
            oracle_error = max(oracle_error, audit_state(x, params, cfg).worst)
            closed_form = max(closed_form, closed_form_error(x, params))

        traj = simulate(scenario)
        energy = audit_energy(traj)
        constraint_residual = audit_constraints(traj)
        ground_work = audit_ground_work(traj)

        checks = {
            "oracle": (oracle_error, cfg.tolerance),
            "closed_form": (closed_form, 1e-10),
            "work_balance": (
                energy.relative_balance_residual,
                audit_settings["WORK_BALANCE_TOLERANCE"],
            ),
            "constraints": (
                constraint_residual,
                audit_settings["CONSTRAINT_TOLERANCE"],
            ),
        }

        if scenario.controller.kind == "none":
            checks["energy_drift"] = (
                energy.drift,
                audit_settings["ENERGY_DRIFT_TOLERANCE"],
            )

        if not scenario.audit_energy:
            checks.pop("work_balance")
            checks.pop("energy_drift", None)

        if not scenario.audit_constraints:
            checks.pop("constraints")

        passed = all(value <= tolerance for (value, tolerance) in checks.values())

        report = {
            "scenario": scenario.name,
            "states": len(states),
            "fell": traj.fell,
            "energy_drift": energy.drift,
            "balance_residual": energy.balance_residual,
            "ground_work": ground_work,
            "checks": {
                name: {"value": value, "tolerance": tolerance, "ok": value <= tolerance}
                for (name, (value, tolerance)) in checks.items()
            },
            "passed": passed,
        }

        if options.get("json"):
            self.stdout.write(serializer.dumps(report))
        else:
            self.stdout.write(
                f"audit of '{scenario.name}' over {len(states)} states "
                f"and {len(traj)} samples"
            )

            for (name, (value, tolerance)) in checks.items():
                status = "ok" if value <= tolerance else "FAILED"
                self.stdout.write(
                    f"  {name:<14} {value:.3e} (tolerance {tolerance:.1e}) {status}"
                )

            self.stdout.write(f"  {'ground_work':<14} {ground_work:.3e}")

            if traj.fell:
                self.stdout.write(f"  run fell at t={traj.fall.t:.4f}s")

        if not passed:
            logger.warning(f"Audit of '{scenario.name}' failed")

        return EXIT_OK if passed else EXIT_ERROR
