import logging
from pathlib import Path

from .. import serializer
from ..control.parser import parse_controller
from ..scenario import load_scenario
from ..sim import simulate, summarize, write_trajectory_csv
from ..state import STATE_FIELDS
from .base import EXIT_FALL, EXIT_OK, BaseCommand


logger = logging.getLogger(__name__)


def add_scenario_overrides(parser) -> None:
    parser.add_argument("scenario", type=str, help="Bundled scenario name or TOML file")
    parser.add_argument("--dt", type=float, help="Step size in seconds")
    parser.add_argument("--duration", type=float, help="Horizon in seconds")
    parser.add_argument(
        "--controller",
        type=str,
        help=(
            "none, case1, case2 or e.g. "
            "'custom(k_p=5, k_d=5, k_theta=20, a=0.2, v_ref=10)'"
        ),
    )


def scenario_from_options(options):
    scenario = load_scenario(options["scenario"])
    overrides = {
        "dt": options.get("dt"),
        "duration": options.get("duration"),
    }

    if options.get("controller"):
        overrides["controller"] = parse_controller(
            options["controller"], base=scenario.controller
        )

    return scenario.with_changes(
        **{key: value for key, value in overrides.items() if value is not None}
    )


class Command(BaseCommand):
    help = "Simulates a scenario and exports the trajectory as CSV"

    def add_arguments(self, parser):
        add_scenario_overrides(parser)
        parser.add_argument("--out", type=Path, help="CSV output path")
        parser.add_argument(
            "--stride", type=int, help="Export every n-th sample (default 1)"
        )
        parser.add_argument(
            "--json", action="store_true", help="Print the summary as JSON"
        )

    def handle(self, *args, **options):
        scenario = scenario_from_options(options)

        if options.get("stride") is not None:
            scenario = scenario.with_changes(sample_stride=options["stride"])

        output_path = options.get("out") or scenario.output_path

        traj = simulate(scenario)

        if output_path:
            write_trajectory_csv(
                traj, output_path, sample_stride=scenario.sample_stride
            )

        summary = summarize(traj)

        if options.get("json"):
            self.stdout.write(
                serializer.dumps(
                    {
                        "summary": summary,
                        "scenario_checksum": scenario.checksum(),
                        "output": output_path,
                    }
                )
            )
        else:
            self.stdout.write(f"scenario: {summary.scenario} ({scenario.checksum()})")
            self.stdout.write(
                f"samples: {summary.samples}, t_final: {summary.final_time:.4f}s"
            )

            final_state = ", ".join(
                f"{name}={value:.6g}"
                for (name, value) in zip(STATE_FIELDS, summary.final_state)
            )
            self.stdout.write(f"final state: {final_state}")
            self.stdout.write(f"max |theta|: {summary.max_abs_theta:.6g}")
            self.stdout.write(f"energy drift: {summary.energy_drift:.3e}")

            if traj.fall:
                self.stdout.write(
                    f"FALL at t={traj.fall.t:.4f}s "
                    f"({traj.fall.reason}): {traj.fall.message}"
                )

            if output_path:
                self.stdout.write(f"trajectory: {output_path}")

        return EXIT_FALL if traj.fell else EXIT_OK
