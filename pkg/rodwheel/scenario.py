"""
Scenario files: TOML documents describing one simulation, validated with pydantic.

```toml
name = "case1"
initial_state = [4, 0, 0, 0, 0, 3.141592653589793, 0, 0, 0, 0]

[params]
m = 5.0

[controller]
kind = "case1"

[integration]
dt = 0.01
duration = 30.0
```
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    Extra,
    PositiveFloat,
    ValidationError,
    conint,
    conlist,
    root_validator,
)

from .control import ControllerSpec, with_overrides
from .control.controllers import CONTROLLER_KINDS, PRESETS
from .errors import (
    InvalidControllerError,
    ScenarioNotFoundError,
    ScenarioValidationError,
)
from .kinematics import Params
from .sim.simulate import DEFAULT_DT, DEFAULT_DURATION, Scenario


try:
    import tomllib
except ImportError:
    import tomli as tomllib

try:
    from cachetools.lru import LRUCache
except ImportError:
    from cachetools import LRUCache


logger = logging.getLogger(__name__)

SCENARIOS_DIRECTORY = Path(__file__).parent / "scenarios"
SCENARIO_SUFFIX = ".toml"

# Parsed documents keyed by `(path, mtime)`
document_cache = LRUCache(maxsize=100)


class _Section(BaseModel):
    class Config:
        extra = Extra.forbid


class ParamsSection(_Section):
    m: PositiveFloat = 5.0
    g: PositiveFloat = 9.81
    r: PositiveFloat = 1.0
    mu: PositiveFloat = 1.0
    ell: PositiveFloat = 2.0
    legacy_potential: bool = False

    def to_params(self) -> Params:
        return Params(**self.dict())


GAIN_FIELDS = ("k_p", "k_d", "k_theta", "a", "v_ref", "clamp")


class ControllerSection(_Section):
    kind: str = "none"
    k_p: Optional[float] = None
    k_d: Optional[float] = None
    k_theta: Optional[float] = None
    a: Optional[float] = None
    v_ref: Optional[float] = None
    clamp: Optional[PositiveFloat] = None

    @root_validator(skip_on_failure=True)
    def check_kind(cls, values):
        if values.get("kind") not in CONTROLLER_KINDS:
            raise ValueError(f"kind must be one of: {', '.join(CONTROLLER_KINDS)}")

        gains = [key for key in GAIN_FIELDS if values.get(key) is not None]

        if values["kind"] == "none" and gains:
            raise ValueError(f"kind 'none' takes no gains, got {', '.join(gains)}")

        return values

    def to_spec(self) -> ControllerSpec:
        overrides = self.dict(exclude={"kind"}, exclude_none=True)

        if self.kind == "custom":
            return ControllerSpec(kind="custom", **overrides)

        return with_overrides(PRESETS[self.kind], **overrides)


class IntegrationSection(_Section):
    dt: PositiveFloat = DEFAULT_DT
    duration: PositiveFloat = DEFAULT_DURATION

    @root_validator(skip_on_failure=True)
    def check_duration(cls, values):
        if values["duration"] < values["dt"]:
            raise ValueError("duration must be at least dt")

        return values


class OutputSection(_Section):
    path: Optional[str] = None
    sample_stride: conint(ge=1) = 1  # type: ignore


class AuditSection(_Section):
    energy: bool = True
    constraints: bool = True


class ScenarioFile(_Section):
    name: Optional[str] = None
    description: str = ""
    initial_state: conlist(float, min_items=10, max_items=10)  # type: ignore
    params: ParamsSection = ParamsSection()
    controller: ControllerSection = ControllerSection()
    integration: IntegrationSection = IntegrationSection()
    output: OutputSection = OutputSection()
    audit: AuditSection = AuditSection()

    def to_scenario(self, default_name: str = "scenario") -> Scenario:
        return Scenario(
            name=self.name or default_name,
            description=self.description,
            params=self.params.to_params(),
            x0=tuple(self.initial_state),
            controller=self.controller.to_spec(),
            dt=self.integration.dt,
            duration=self.integration.duration,
            output_path=Path(self.output.path) if self.output.path else None,
            sample_stride=self.output.sample_stride,
            audit_energy=self.audit.energy,
            audit_constraints=self.audit.constraints,
        )


def bundled_scenario_names() -> List[str]:
    return sorted(path.stem for path in SCENARIOS_DIRECTORY.glob(f"*{SCENARIO_SUFFIX}"))


def get_locations(name_or_path: str, cwd: Path = None) -> List[Path]:
    """
    Candidate files for a scenario: the path itself, then the path with a `.toml` suffix,
    then the bundled scenario of that name. Relative paths are taken against `cwd`.
    """

    path = (cwd or Path.cwd()) / name_or_path
    locations = [path]

    if path.suffix != SCENARIO_SUFFIX:
        locations.append(path.with_name(f"{path.name}{SCENARIO_SUFFIX}"))

    if "/" not in name_or_path and "\\" not in name_or_path:
        bundled_name = f"{Path(name_or_path).stem}{SCENARIO_SUFFIX}"
        locations.append(SCENARIOS_DIRECTORY / bundled_name)

    return locations


@lru_cache(maxsize=128)
def find_scenario(name_or_path: str, cwd: Path) -> Path:
    """
    Raises:
        ScenarioNotFoundError: none of the locations exists; the error lists them.
    """

    locations = get_locations(name_or_path, cwd)

    for location in locations:
        if location.is_file():
            return location

    raise ScenarioNotFoundError(
        f"Scenario '{name_or_path}' could not be found", locations=locations
    )


def resolve_scenario_path(name_or_path: str) -> Path:
    return find_scenario(name_or_path, Path.cwd())


def _format_validation_error(e: ValidationError) -> str:
    problems = []

    for error in e.errors():
        location = ".".join(str(part) for part in error["loc"] if part != "__root__")
        problems.append(f"{location or 'scenario'}: {error['msg']}")

    return "; ".join(problems)


def parse_scenario_document(
    text: str, source: str = "<string>"
) -> ScenarioFile:
    """
    Raises:
        ScenarioValidationError: malformed TOML or a document that does not match the schema.
    """

    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ScenarioValidationError(f"{source} is not valid TOML: {e}") from e

    try:
        return ScenarioFile.parse_obj(document)
    except ValidationError as e:
        raise ScenarioValidationError(
            f"{source} is invalid: {_format_validation_error(e)}",
            locations=[source],
        ) from e


def read_scenario_file(path: Path) -> ScenarioFile:
    cache_key = (str(path.resolve()), path.stat().st_mtime_ns)
    scenario_file = document_cache.get(cache_key)

    if scenario_file is None:
        text = path.read_text(encoding="utf-8")
        scenario_file = parse_scenario_document(text, source=str(path))
        document_cache[cache_key] = scenario_file
    else:
        logger.debug(f"Retrieve {path} from document cache")

    return scenario_file


def load_scenario(
    name_or_path: Union[str, Path], overrides: Dict[str, Any] = None
) -> Scenario:
    """
    Resolves, parses and validates a scenario, then applies `overrides` (fields of `Scenario`,
    e.g. `dt` or `controller`).

    Raises:
        ScenarioNotFoundError: the scenario file cannot be found.
        ScenarioValidationError: the document or the overrides are invalid.
    """

    path = resolve_scenario_path(str(name_or_path))
    scenario_file = read_scenario_file(path)

    try:
        scenario = scenario_file.to_scenario(default_name=path.stem)
    except (ValueError, InvalidControllerError) as e:
        raise ScenarioValidationError(
            f"{path} is invalid: {e}", locations=[path]
        ) from e

    if overrides:
        scenario = scenario.with_changes(
            **{key: value for key, value in overrides.items() if value is not None}
        )

    return scenario


def describe_bundled_scenarios() -> List[Tuple[str, str]]:
    return [
        (name, read_scenario_file(resolve_scenario_path(name)).description)
        for name in bundled_scenario_names()
    ]
