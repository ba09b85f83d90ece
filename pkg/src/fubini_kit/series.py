"""Truncated formal power series with exact coefficients.

A :class:`Series` stores ``c_0 .. c_N`` for a single named variable.  The
coefficients may be Fractions or :class:`~fubini_kit.kernel.BiPoly` values;
arithmetic never looks past the truncation order and binary operations keep
the smaller of the two orders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .kernel import BiPoly, as_rational, factorial, is_zero


def _coerce(c):
    if isinstance(c, BiPoly):
        return c
    return as_rational(c)


def _zero_like(c):
    return BiPoly() if isinstance(c, BiPoly) else Fraction(0)


def _invert_scalar(c) -> Fraction:
    if isinstance(c, BiPoly):
        if not c.is_constant():
            raise ZeroDivisionError("constant term is not a unit in the coefficient ring")
        c = c.constant_term()
    if c == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    return 1 / Fraction(c)


class Series:
    """Coefficients ``c_0 .. c_order`` of a truncated power series."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence, order: Optional[int] = None, var: str = "t"):
        cs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        zero = _zero_like(cs[0]) if cs else Fraction(0)
        cs = cs[: order + 1] + [zero] * (order + 1 - len(cs))
        self.coeffs: List = cs
        self.var = var

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int):
        """``n! * [t^n]``."""
        return self[n] * factorial(n)

    def egf_coefficients(self) -> list:
        return [self.egf_coefficient(n) for n in range(self.order + 1)]

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[: order + 1], min(order, self.order), self.var)

    def map(self, fn: Callable) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.order, self.var)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"Series([{shown}{tail}], order={self.order}, var={self.var!r})"

    # -- ring operations ----------------------------------------------------
    def _check_var(self, other: "Series"):
        if other.var != self.var:
            raise ValueError(f"mixing series in {self.var!r} and {other.var!r}")

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.order, self.var)
        self._check_var(other)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(other, self.order, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_var(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = _zero_like(a[0]) + _zero_like(b[0])
            for i in range(k + 1):
                if is_zero(a[i]) or is_zero(b[k - i]):
                    continue
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n, self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Series":
        c = _coerce(c)
        return Series([c * v for v in self.coeffs], self.order, self.var)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = Series.one(self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "Series":
        """Termwise ``d/dt``; the order drops by one (minimum zero)."""
        if self.order == 0:
            return Series([_zero_like(self.coeffs[0])], 0, self.var)
        return Series([self.coeffs[k] * k for k in range(1, self.order + 1)], self.order - 1, self.var)

    def shift(self, k: int = 1) -> "Series":
        """Multiply by ``t**k`` keeping the same truncation order."""
        zero = _zero_like(self.coeffs[0])
        return Series([zero] * k + self.coeffs[: self.order + 1 - k], self.order, self.var)

    def euler_operator(self) -> "Series":
        """``t d/dt``: the k-th coefficient is multiplied by k."""
        return Series([c * k for k, c in enumerate(self.coeffs)], self.order, self.var)

    def reciprocal(self) -> "Series":
        inv0 = _invert_scalar(self.coeffs[0])
        a = self.coeffs
        out = [BiPoly.constant(inv0) if isinstance(a[0], BiPoly) else inv0]
        for k in range(1, self.order + 1):
            acc = _zero_like(a[0])
            for i in range(1, k + 1):
                if is_zero(a[i]):
                    continue
                acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out, self.order, self.var)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.reciprocal()
        return self.scale(_invert_scalar(_coerce(other)))

    def compose(self, inner: "Series") -> "Series":
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        if not is_zero(inner.coeffs[0]):
            raise ValueError("composition requires an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        # Horner from the top coefficient down.
        acc = Series.constant(self.coeffs[n], n, inner.var)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.var == other.var and self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def first_mismatch(self, other: "Series") -> Optional[int]:
        """Index of the first differing coefficient up to the common order."""
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c, order: int, var: str = "t") -> "Series":
        c = _coerce(c)
        return cls([c], order, var)

    @classmethod
    def one(cls, order: int, var: str = "t") -> "Series":
        return cls([Fraction(1)], order, var)

    @classmethod
    def variable(cls, order: int, var: str = "t") -> "Series":
        return cls([Fraction(0), Fraction(1)], order, var)

    @classmethod
    def from_egf(cls, values: Sequence, order: Optional[int] = None, var: str = "t") -> "Series":
        """Series whose n-th coefficient is ``values[n] / n!``."""
        cs = [_coerce(v) / factorial(n) for n, v in enumerate(values)]
        return cls(cs, order, var)


def exp_linear(c, order: int, var: str = "t") -> Series:
    """``exp(c t) = sum (c t)^n / n!`` for a Fraction or BiPoly ``c``."""
    c = _coerce(c)
    out = []
    power = BiPoly.constant(1) if isinstance(c, BiPoly) else Fraction(1)
    for n in range(order + 1):
        out.append(power / factorial(n))
        power = power * c
    return Series(out, order, var)


def log1p_series(order: int, var: str = "t") -> Series:
    """``ln(1 + t)``."""
    cs = [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]
    return Series(cs, order, var)


def log1p(s: Series) -> Series:
    """``ln(1 + s)`` for a series with zero constant term."""
    return log1p_series(s.order, s.var).compose(s)


def exp(s: Series) -> Series:
    """``exp(s)`` for a series with zero constant term."""
    cs = [Fraction(1, factorial(n)) for n in range(s.order + 1)]
    return Series(cs, s.order, s.var).compose(s)


def geometric(ratio, order: int, var: str = "t") -> Series:
    """``1 / (1 - ratio * t) = sum ratio^k t^k``."""
    ratio = _coerce(ratio)
    out = []
    power = BiPoly.constant(1) if isinstance(ratio, BiPoly) else Fraction(1)
    for _ in range(order + 1):
        out.append(power)
        power = power * ratio
    return Series(out, order, var)
