from .controllers import (
    CASE1,
    CASE2,
    NO_CONTROL,
    PRESETS,
    ControllerSpec,
    control_case1,
    control_case2,
    control_custom,
    get_spec,
    make_controller,
    rod_reference,
    with_overrides,
)
from .parser import parse_controller


__all__ = [
    "CASE1",
    "CASE2",
    "NO_CONTROL",
    "PRESETS",
    "ControllerSpec",
    "control_case1",
    "control_case2",
    "control_custom",
    "get_spec",
    "make_controller",
    "parse_controller",
    "rod_reference",
    "with_overrides",
]
