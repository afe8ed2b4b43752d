import logging
from typing import Any

import orjson


logger = logging.getLogger(__name__)


class JSONDecodeError(Exception):
    pass


def _json_serializer(obj):
    """
    Handle the objects that `orjson` can't handle automatically.

    The types handled by `orjson` by default: dataclass, datetime, enum, float, int, numpy, str, uuid.
    The types handled here: numpy scalars that slipped through, `Path`-like objects, and any object
    with a `to_json` method.
    """

    try:
        if hasattr(obj, "to_json"):
            return obj.to_json()
        elif hasattr(obj, "item"):
            # numpy scalar types that orjson does not pick up, e.g. `np.bool_`
            return obj.item()
        elif hasattr(obj, "__fspath__"):
            return str(obj)
    except Exception as e:
        # Log this because the `TypeError` and resulting stacktrace lacks context
        logger.exception(e)

    raise TypeError


def dumps(data: Any, indent: bool = False) -> str:
    """
    Converts the passed-in data to a JSON string.

    Args:
        param indent: Pretty-print with two spaces. Defaults to `False`.

    Returns a `str` instead of `bytes` (which deviates from `orjson.dumps`), but seems more useful.
    """

    option = orjson.OPT_SERIALIZE_NUMPY

    if indent:
        option |= orjson.OPT_INDENT_2

    serialized_data = orjson.dumps(data, default=_json_serializer, option=option)

    return serialized_data.decode("utf-8")


def loads(str: str) -> Any:
    """
    Converts a string representation to Python objects.
    """

    try:
        return orjson.loads(str)
    except orjson.JSONDecodeError as e:
        raise JSONDecodeError from e
