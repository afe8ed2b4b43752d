import logging
import time

from decorator import decorator

from .settings import get_debug


@decorator
def timed(func, *args, **kwargs):
    """
    Decorator that logs the timing of a function when the `DEBUG` setting is enabled.
    """

    if not get_debug():
        return func(*args, **kwargs)

    logger = logging.getLogger("profile")
    start = time.perf_counter()
    result = func(*args, **kwargs)
    end = time.perf_counter()

    function_name = func.__name__
    arguments = ""

    if args:
        arguments = f"{args}, "

    for kwarg_key, kwarg_val in kwargs.items():
        if isinstance(kwarg_val, str):
            kwarg_val = f"'{kwarg_val}'"

        arguments = f"{arguments}{kwarg_key}={kwarg_val}, "

    if arguments.endswith(", "):
        arguments = arguments[:-2]

    ms = round((end - start) * 1000, 4)

    logger.debug(f"{function_name}({arguments}): {ms}ms")
    return result
