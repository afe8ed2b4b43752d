import ast
import logging
import math
from dataclasses import replace
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Tuple

from ..errors import InvalidControllerError, InvalidSweepParameterError
from .controllers import ControllerSpec, get_spec, with_overrides


logger = logging.getLogger(__name__)


def _dotted_name(node: ast.expr) -> str:
    """
    Dotted name of a controller reference, e.g. `case2` or `presets.case2`. Any other node
    ends the walk and whatever was collected so far is returned.
    """

    parts = []

    while isinstance(node, ast.Attribute):
        parts.append(node.attr)
        node = node.value

    if isinstance(node, ast.Name):
        parts.append(node.id)

    return ".".join(reversed(parts))


@lru_cache(maxsize=128, typed=True)
def eval_value(value: str):
    """
    Uses `ast.literal_eval` to parse strings into an appropriate Python primitive. Also accepts
    `pi`, `-pi` and `None`.
    """

    try:
        return _literal(ast.parse(value.strip(), mode="eval").body)
    except SyntaxError:
        raise ValueError(f"'{value}' is not a literal value")


def _literal(node: ast.expr):
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    elif (
        isinstance(node, ast.UnaryOp)
        and isinstance(node.op, (ast.USub, ast.UAdd))
        and isinstance(node.operand, ast.Name)
    ):
        operand = _literal(node.operand)

        return -operand if isinstance(node.op, ast.USub) else operand

    return ast.literal_eval(node)


def _eval_node(node: ast.expr):
    try:
        return _literal(node)
    except ValueError:
        raise InvalidControllerError(
            f"'{_dotted_name(node) or type(node).__name__}' is not a literal value"
        )


@lru_cache(maxsize=128, typed=True)
def parse_call(expression: str) -> Tuple[str, Tuple[Any], Mapping[str, Any]]:
    """
    Parses a call expression into its parts.

    Example:
        `parse_call("custom(k_p=5)")` == `("custom", (), {"k_p": 5})`

    Args:
        param expression: String representation of a name with optional parameters,
            e.g. "case1" or "custom(k_p=5, k_d=5)"

    Returns:
        Tuple of name, a tuple of arguments and an immutable dict of keyword arguments
    """

    args: List[Any] = []
    kwargs: Dict[str, Any] = {}
    name = expression.strip()

    try:
        tree = ast.parse(name, mode="eval")
    except SyntaxError:
        raise InvalidControllerError(f"'{expression}' could not be parsed")

    statement = tree.body

    if isinstance(statement, ast.Call):
        name = _dotted_name(statement.func)
        args = [_eval_node(arg) for arg in statement.args]
        kwargs = {kw.arg: _eval_node(kw.value) for kw in statement.keywords}
    elif isinstance(statement, (ast.Name, ast.Attribute)):
        name = _dotted_name(statement)
    else:
        raise InvalidControllerError(f"'{expression}' is not a controller expression")

    if not name:
        raise InvalidControllerError(f"'{expression}' is not a controller expression")

    # conversion to immutable types - tuple and MappingProxyType
    return name, tuple(args), MappingProxyType(kwargs)


def parse_controller(expression: str, base: ControllerSpec = None) -> ControllerSpec:
    """
    Builds a `ControllerSpec` from a command-line expression.

    `none`, `case1` and `case2` select the presets; keyword arguments on a preset override its
    gains, e.g. `case2(k_theta=10)`. `custom(...)` starts from `base` (or zero gains).

    Raises:
        InvalidControllerError: unparseable expression, positional arguments or unknown names.
    """

    (name, args, kwargs) = parse_call(expression)

    if args:
        raise InvalidControllerError(
            f"Controller parameters must be keyword arguments, e.g. {name}(k_p=5)"
        )

    if name == "custom":
        spec = replace(base or ControllerSpec(), kind="custom")

        return with_overrides(spec, **dict(kwargs))

    return with_overrides(get_spec(name), **dict(kwargs))


def parse_values(values: str) -> Tuple[float, ...]:
    """
    Parses a comma-separated list of numbers, e.g. "0, 1e-12, 0.01".

    Raises:
        InvalidSweepParameterError: an empty list or a non-numeric entry.
    """

    parsed = []

    for raw in values.split(","):
        if not raw.strip():
            continue

        try:
            value = eval_value(raw)
        except ValueError as e:
            raise InvalidSweepParameterError(str(e)) from e

        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidSweepParameterError(f"'{raw.strip()}' is not a number")

        parsed.append(float(value))

    if not parsed:
        raise InvalidSweepParameterError("At least one sweep value is required")

    return tuple(parsed)
