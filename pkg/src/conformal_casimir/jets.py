"""Truncated univariate Taylor series ("jets").

A :class:`Jet` of length ``n`` stores normalized Taylor coefficients
``c[k] = f^(k)(x0) / k!`` for ``k < n``. Arithmetic propagates them exactly
up to truncation, which gives derivatives of composite expressions (metric
components, curvature scalars) without finite differences.
"""

from __future__ import annotations

import math
from numbers import Real

import numpy as np


class Jet:
    __slots__ = ("coeffs",)
    __array_priority__ = 100

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=float)
        if self.coeffs.ndim != 1 or self.coeffs.size == 0:
            raise ValueError("jet needs a non-empty 1-d coefficient array")

    @classmethod
    def variable(cls, x0: float, order: int) -> "Jet":
        """The identity function around ``x0``, carrying ``order`` derivatives."""
        c = np.zeros(order + 1)
        c[0] = x0
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value: float, order: int) -> "Jet":
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c)

    @classmethod
    def from_derivatives(cls, derivs) -> "Jet":
        d = np.asarray(derivs, dtype=float)
        fact = np.array([math.factorial(k) for k in range(d.size)], dtype=float)
        return cls(d / fact)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def value(self) -> float:
        return float(self.coeffs[0])

    def derivatives(self) -> np.ndarray:
        """Derivative values ``f, f', f'', ...`` at the expansion point."""
        fact = np.array([math.factorial(k) for k in range(self.coeffs.size)], dtype=float)
        return self.coeffs * fact

    def derivative(self, k: int = 1) -> float:
        return float(self.coeffs[k] * math.factorial(k))

    def deriv(self) -> "Jet":
        """Jet of f' (one order shorter)."""
        if self.coeffs.size == 1:
            return Jet([0.0])
        k = np.arange(1, self.coeffs.size)
        return Jet(self.coeffs[1:] * k)

    def __repr__(self):
        return f"Jet({self.coeffs.tolist()})"

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet):
            n = min(self.coeffs.size, other.coeffs.size)
            return self.coeffs[:n], other.coeffs[:n]
        if isinstance(other, Real):
            o = np.zeros_like(self.coeffs)
            o[0] = float(other)
            return self.coeffs, o
        return NotImplemented

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return Jet(pair[0] + pair[1])

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return Jet(pair[0] - pair[1])

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return Jet(pair[1] - pair[0])

    def __mul__(self, other):
        if isinstance(other, Real):
            return Jet(self.coeffs * float(other))
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Jet(np.convolve(a, b)[: a.size])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Jet(self.coeffs / float(other))
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return Jet(_series_div(*pair))

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return Jet(_series_div(pair[1], pair[0]))

    def __pow__(self, p):
        if isinstance(p, int) or (isinstance(p, Real) and float(p).is_integer()):
            p = int(p)
            if p < 0:
                return 1.0 / (self ** (-p))
            out = Jet.constant(1.0, self.order)
            base = self
            while p:
                if p & 1:
                    out = out * base
                base = base * base
                p >>= 1
            return out
        if isinstance(p, Real):
            if self.coeffs[0] <= 0:
                raise ValueError("non-integer power of a jet needs a positive value")
            return exp(float(p) * log(self))
        return NotImplemented

    def __abs__(self):
        if self.coeffs[0] == 0:
            raise ValueError("|x| is not differentiable at 0")
        return self if self.coeffs[0] > 0 else -self

    def __float__(self):
        return self.value


def _series_div(a, b):
    if b[0] == 0:
        raise ZeroDivisionError("jet division by a series with zero constant term")
    q = np.zeros_like(a)
    for k in range(a.size):
        q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
    return q


def exp(x):
    if not isinstance(x, Jet):
        return math.exp(x)
    a = x.coeffs
    e = np.zeros_like(a)
    e[0] = math.exp(a[0])
    for k in range(1, a.size):
        j = np.arange(1, k + 1)
        e[k] = np.dot(j * a[1 : k + 1], e[k - 1 :: -1][:k]) / k
    return Jet(e)


def log(x):
    if not isinstance(x, Jet):
        return math.log(x)
    a = x.coeffs
    if a[0] <= 0:
        raise ValueError("log of a jet needs a positive value")
    out = np.zeros_like(a)
    out[0] = math.log(a[0])
    for k in range(1, a.size):
        j = np.arange(1, k)
        out[k] = (a[k] - np.dot(j * out[1:k], a[k - 1 : 0 : -1]) / k) / a[0]
    return Jet(out)


def tanh(x):
    if not isinstance(x, Jet):
        return math.tanh(x)
    # stable for either sign of the constant term
    if x.value >= 0:
        e = exp(-2.0 * x)
        return (1.0 - e) / (1.0 + e)
    e = exp(2.0 * x)
    return (e - 1.0) / (e + 1.0)


def value(x) -> float:
    return x.value if isinstance(x, Jet) else float(x)
