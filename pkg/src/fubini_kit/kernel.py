"""Exact scalars and sparse bivariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction` values (always reduced, denominator
positive, zero stored as ``0/1``).  :class:`BiPoly` is an immutable sparse
polynomial in the two indeterminates ``x`` and ``y``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, int]
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused so that exact pipelines never pick up binary
    rounding noise.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optionally signed) exactly."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}: expected p or p/q") from None
    if q == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(p, q)


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as a Fraction; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> int:
    return math.factorial(n)


def _graded_lex_key(mono: Monomial):
    # Higher total degree first, then higher x-degree first.
    return (-(mono[0] + mono[1]), -mono[0])


class BiPoly:
    """Sparse polynomial in ``x`` and ``y`` with Fraction coefficients.

    Instances are immutable and kept in canonical form (no stored zero
    coefficients), so ``==`` is structural.  Integers and Fractions mix
    freely with BiPoly operands.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Fraction]) -> "BiPoly":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return cls({(i, j): c})

    @staticmethod
    def lift(value) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        return BiPoly.constant(as_rational(value))

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in graded-lex order."""
        for mono in sorted(self._terms, key=_graded_lex_key):
            yield mono, self._terms[mono]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for i, j in self._terms)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (BiPoly, int, Fraction)):
            return NotImplemented
        other = BiPoly.lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BiPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (BiPoly, int, Fraction)):
            return NotImplemented
        return self + (-BiPoly.lift(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return BiPoly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return BiPoly()
            return BiPoly._from_clean({m: v * c for m, v in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly._from_clean({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Division only by nonzero scalars (or constant polynomials).
        if isinstance(other, BiPoly):
            if not other.is_constant():
                raise ZeroDivisionError("BiPoly supports division by scalars only")
            other = other.constant_term()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of BiPoly by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("BiPoly powers must be nonnegative integers")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.lift(other)._terms
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation -------------------------------------------------------
    def eval(self, x0, y0):
        """Substitute ``x = x0`` and ``y = y0``.

        With Fraction arguments the result is a Fraction; BiPoly arguments
        give a BiPoly (polynomial substitution).
        """
        if not isinstance(x0, BiPoly):
            x0 = as_rational(x0)
        if not isinstance(y0, BiPoly):
            y0 = as_rational(y0)
        total = BiPoly() if isinstance(x0, BiPoly) or isinstance(y0, BiPoly) else Fraction(0)
        xp: Dict[int, object] = {}
        yp: Dict[int, object] = {}
        for (i, j), c in self._terms.items():
            if i not in xp:
                xp[i] = x0 ** i
            if j not in yp:
                yp[j] = y0 ** j
            total = total + c * xp[i] * yp[j]
        return total

    __call__ = eval

    # -- rendering --------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self.items():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


ZERO = BiPoly()
ONE = BiPoly.constant(1)
X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def poly_add(a: BiPoly, b: BiPoly) -> BiPoly:
    return BiPoly.lift(a) + b


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return BiPoly.lift(a) * b


def poly_eval(p: BiPoly, x0, y0) -> Fraction:
    return BiPoly.lift(p).eval(x0, y0)


def evaluate(value, x0, y0):
    """Evaluate a ring element at a point; scalars pass through unchanged."""
    if isinstance(value, BiPoly):
        return value.eval(x0, y0)
    return as_rational(value)


def is_zero(value) -> bool:
    if isinstance(value, BiPoly):
        return value.is_zero()
    return value == 0
