"""
Second-order forward-mode differentiation with hyper-dual numbers.

An `AD2` carries a value, two directional first derivatives and their mixed second
derivative. The derivative parts may be numpy arrays: one evaluation then differentiates
along many seed pairs at once, which is how the Lagrangian Hessian blocks are assembled.
"""

import logging
from typing import Callable, Sequence, Union

import numpy as np

from .errors import DomainError


logger = logging.getLogger(__name__)


class AD2:
    """
    Hyper-dual scalar `v + d1·ε1 + d2·ε2 + d12·ε1ε2` with `ε1² = ε2² = 0`.
    """

    __slots__ = ("v", "d1", "d2", "d12")

    def __init__(self, v, d1=0.0, d2=0.0, d12=0.0):
        self.v = v
        self.d1 = d1
        self.d2 = d2
        self.d12 = d12

    @classmethod
    def constant(cls, v) -> "AD2":
        return cls(v)

    @classmethod
    def variable(cls, v, direction: int = 1) -> "AD2":
        """
        Lift `v` as an input seeded along direction 1, direction 2, or both (`direction=12`).
        """

        if direction == 1:
            return cls(v, 1.0, 0.0, 0.0)
        elif direction == 2:
            return cls(v, 0.0, 1.0, 0.0)
        elif direction == 12:
            return cls(v, 1.0, 1.0, 0.0)

        raise ValueError(f"Unknown seed direction: {direction}")

    def __repr__(self):
        return f"AD2(v={self.v}, d1={self.d1}, d2={self.d2}, d12={self.d12})"

    def as_tuple(self):
        return (self.v, self.d1, self.d2, self.d12)

    def __add__(self, other):
        return ad_add(self, other)

    def __radd__(self, other):
        return ad_add(other, self)

    def __sub__(self, other):
        return ad_sub(self, other)

    def __rsub__(self, other):
        return ad_sub(other, self)

    def __mul__(self, other):
        return ad_mul(self, other)

    def __rmul__(self, other):
        return ad_mul(other, self)

    def __truediv__(self, other):
        return ad_div(self, other)

    def __rtruediv__(self, other):
        return ad_div(other, self)

    def __neg__(self):
        return ad_neg(self)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("AD2 only supports integer powers")

        if n == 0:
            return AD2(1.0)
        elif n == 1:
            return self
        elif n == 2:
            return ad_mul(self, self)

        if n < 0 and np.any(np.asarray(self.v) == 0):
            raise DomainError("Negative power of an AD2 whose value part is zero")

        return _chain(
            self,
            self.v**n,
            n * self.v ** (n - 1),
            n * (n - 1) * self.v ** (n - 2),
        )

    def sin(self):
        return ad_sin(self)

    def cos(self):
        return ad_cos(self)


Scalar = Union[float, AD2]


def _chain(a: AD2, f0, f1, f2) -> AD2:
    """
    Compose a scalar function with value `f0`, first derivative `f1` and second derivative `f2`
    (all evaluated at `a.v`) with the hyper-dual `a`.
    """

    return AD2(
        f0,
        f1 * a.d1,
        f1 * a.d2,
        f1 * a.d12 + f2 * a.d1 * a.d2,
    )


def ad_add(a, b):
    if not isinstance(b, AD2):
        if not isinstance(a, AD2):
            return a + b

        return AD2(a.v + b, a.d1, a.d2, a.d12)

    if not isinstance(a, AD2):
        return AD2(a + b.v, b.d1, b.d2, b.d12)

    return AD2(a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d12 + b.d12)


def ad_sub(a, b):
    if not isinstance(b, AD2):
        if not isinstance(a, AD2):
            return a - b

        return AD2(a.v - b, a.d1, a.d2, a.d12)

    if not isinstance(a, AD2):
        return AD2(a - b.v, -b.d1, -b.d2, -b.d12)

    return AD2(a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d12 - b.d12)


def ad_neg(a):
    if not isinstance(a, AD2):
        return -a

    return AD2(-a.v, -a.d1, -a.d2, -a.d12)


def ad_mul(a, b):
    if not isinstance(b, AD2):
        if not isinstance(a, AD2):
            return a * b

        return AD2(a.v * b, a.d1 * b, a.d2 * b, a.d12 * b)

    if not isinstance(a, AD2):
        return AD2(a * b.v, a * b.d1, a * b.d2, a * b.d12)

    return AD2(
        a.v * b.v,
        a.d1 * b.v + a.v * b.d1,
        a.d2 * b.v + a.v * b.d2,
        a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12,
    )


def ad_div(a, b):
    """
    Divide `a` by `b`.

    Raises:
        DomainError: the value part of `b` is zero.
    """

    b_value = b.v if isinstance(b, AD2) else b

    if np.any(np.asarray(b_value) == 0):
        raise DomainError("Division by an AD2 whose value part is zero")

    if not isinstance(b, AD2):
        if not isinstance(a, AD2):
            return a / b

        return AD2(a.v / b, a.d1 / b, a.d2 / b, a.d12 / b)

    if not isinstance(a, AD2):
        a = AD2(a)

    v = a.v / b.v
    d1 = (a.d1 - v * b.d1) / b.v
    d2 = (a.d2 - v * b.d2) / b.v
    d12 = (a.d12 - d1 * b.d2 - d2 * b.d1 - v * b.d12) / b.v

    return AD2(v, d1, d2, d12)


def ad_sin(a):
    if not isinstance(a, AD2):
        return np.sin(a)

    s = np.sin(a.v)
    c = np.cos(a.v)

    return _chain(a, s, c, -s)


def ad_cos(a):
    if not isinstance(a, AD2):
        return np.cos(a)

    s = np.sin(a.v)
    c = np.cos(a.v)

    return _chain(a, c, -s, -c)


# Generic entry points used by the kinematics: they accept floats, numpy arrays or AD2.
sin = ad_sin
cos = ad_cos


def first_derivative(x, direction: int = 1):
    if not isinstance(x, AD2):
        return 0.0

    return x.d1 if direction == 1 else x.d2


def time_derivative(fn: Callable, point: Sequence[float], rate: Sequence[float]):
    """
    Derivative of `fn` along the curve `point + t·rate` at `t = 0`.

    `fn` receives a list of AD2 inputs seeded in direction 1 by `rate` and may return a scalar
    or a sequence; the result has the same shape with plain floats.
    """

    seeded = [AD2(float(p), float(dp)) for (p, dp) in zip(point, rate)]
    result = fn(seeded)

    if isinstance(result, (list, tuple, np.ndarray)):
        return np.array([float(first_derivative(item)) for item in result])

    return float(first_derivative(result))
