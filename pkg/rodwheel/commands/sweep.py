import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Tuple

from .. import serializer
from ..control import with_overrides
from ..control.parser import parse_values
from ..errors import InvalidSweepParameterError
from ..settings import configure, get_settings, get_sweep_workers
from ..sim import Scenario, TrajectorySummary, simulate, summarize
from ..state import THETA
from .base import EXIT_OK, BaseCommand
from .simulate import add_scenario_overrides, scenario_from_options


logger = logging.getLogger(__name__)

SWEEP_PARAMETERS = ("theta0", "dt", "v_ref", "k_p", "k_d", "k_theta")
CONTROLLER_PARAMETERS = ("v_ref", "k_p", "k_d", "k_theta")


def apply_sweep_value(scenario: Scenario, parameter: str, value: float) -> Scenario:
    """
    Copy of `scenario` with one parameter replaced.

    Raises:
        InvalidSweepParameterError: `parameter` cannot be swept.
    """

    if parameter == "theta0":
        x0 = list(scenario.x0)
        x0[THETA] = value

        return scenario.with_changes(
            x0=tuple(x0), name=f"{scenario.name}[theta0={value}]"
        )
    elif parameter == "dt":
        return scenario.with_changes(dt=value, name=f"{scenario.name}[dt={value}]")
    elif parameter in CONTROLLER_PARAMETERS:
        controller = with_overrides(scenario.controller, **{parameter: value})

        return scenario.with_changes(
            controller=controller, name=f"{scenario.name}[{parameter}={value}]"
        )

    raise InvalidSweepParameterError(
        f"'{parameter}' cannot be swept. "
        f"Choose one of: {', '.join(SWEEP_PARAMETERS)}."
    )


def run_sweep_point(
    scenario: Scenario, rodwheel_settings: Dict[str, Any] = None
) -> TrajectorySummary:
    # Worker processes start with default settings
    if rodwheel_settings:
        configure(rodwheel_settings)

    return summarize(simulate(scenario))


def run_sweep(
    scenario: Scenario, parameter: str, values: Tuple[float, ...], workers: int = None
) -> List[Tuple[float, TrajectorySummary]]:
    """
    Simulates one scenario per value, in worker processes unless `workers` is 1. Results come
    back in the order of `values`.
    """

    if not values:
        raise InvalidSweepParameterError("At least one sweep value is required")

    scenarios = [apply_sweep_value(scenario, parameter, value) for value in values]

    if workers is None:
        workers = get_sweep_workers()

    if workers == 1 or len(scenarios) == 1:
        summaries = [run_sweep_point(sc) for sc in scenarios]
    else:
        rodwheel_settings = get_settings()

        with ProcessPoolExecutor(max_workers=workers) as executor:
            summaries = list(
                executor.map(
                    run_sweep_point, scenarios, [rodwheel_settings] * len(scenarios)
                )
            )

    return list(zip(values, summaries))


class Command(BaseCommand):
    help = "Runs one scenario per parameter value and prints a summary row for each"

    def add_arguments(self, parser):
        add_scenario_overrides(parser)
        parser.add_argument(
            "--param",
            required=True,
            type=str,
            help=f"One of {', '.join(SWEEP_PARAMETERS)}",
        )
        parser.add_argument(
            "--values",
            required=True,
            type=str,
            help="Comma-separated values, e.g. 0,1e-12,0.01",
        )
        parser.add_argument(
            "--workers", type=int, help="Worker processes (1 runs in-process)"
        )
        parser.add_argument(
            "--json", action="store_true", help="Print the rows as JSON"
        )

    def handle(self, *args, **options):
        parameter = options["param"]

        if parameter not in SWEEP_PARAMETERS:
            raise InvalidSweepParameterError(
                f"'{parameter}' cannot be swept. "
                f"Choose one of: {', '.join(SWEEP_PARAMETERS)}."
            )

        values = parse_values(options["values"])
        scenario = scenario_from_options(options)

        rows = [
            {
                parameter: value,
                "fell": summary.fell,
                "t_fall": summary.t_fall,
                "final_dphi": summary.final_dphi,
                "max_abs_theta": summary.max_abs_theta,
                "energy_drift": summary.energy_drift,
            }
            for (value, summary) in run_sweep(
                scenario, parameter, values, workers=options.get("workers")
            )
        ]

        if options.get("json"):
            self.stdout.write(serializer.dumps(rows))
        else:
            self.stdout.write(
                f"{parameter:>12} {'fell':>5} {'t_fall':>9} {'final_dphi':>11} "
                f"{'max|theta|':>11} {'drift':>10}"
            )

            for row in rows:
                t_fall = "-" if row["t_fall"] is None else f"{row['t_fall']:.3f}"
                self.stdout.write(
                    f"{row[parameter]:>12.6g} {str(row['fell']):>5} {t_fall:>9} "
                    f"{row['final_dphi']:>11.5f} {row['max_abs_theta']:>11.4g} "
                    f"{row['energy_drift']:>10.3e}"
                )

        return EXIT_OK
