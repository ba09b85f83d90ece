"""The generalized Fubini transform matrix ``M = (a[n, m])``.

The matrix is tied together by the three-term recurrence

    a[n+1, m] = x (m+1) a[n, m+1] + y m a[n, m].

From a finite initial row of length ``L`` (forward fill) or a final column of
length ``L`` (backward fill, which needs ``x != 0``) exactly the trapezoid
``n + m <= L - 1`` is determined.  Entries may be Fractions or BiPoly values;
``x`` and ``y`` may be rationals or the indeterminates ``X``/``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .kernel import BiPoly, as_rational, factorial, is_zero
from .stirling import stirling1, stirling2, stirling2_r

Ring = Union[Fraction, BiPoly]


def _ring(value) -> Ring:
    if isinstance(value, BiPoly):
        return value
    return as_rational(value)


@dataclass(frozen=True)
class SequenceWindow:
    """A finite stretch ``values[i] = seq[offset + i]`` of a sequence."""

    values: Tuple[Ring, ...]
    offset: int = 0

    def __post_init__(self):
        vals = tuple(_ring(v) for v in self.values)
        if not vals:
            raise ValueError("a sequence window needs at least one term")
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index: int) -> Ring:
        i = index - self.offset
        if i < 0 or i >= len(self.values):
            raise IndexError(f"term {index} is outside the stored window")
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    @classmethod
    def of(cls, seq) -> "SequenceWindow":
        if isinstance(seq, SequenceWindow):
            return seq
        return cls(tuple(seq))


def ones(length: int) -> SequenceWindow:
    """The all-ones initial row."""
    return SequenceWindow((Fraction(1),) * length)


def chen(length: int) -> SequenceWindow:
    """``a[0, m] = 1/(m+1)``, the initial row that produces Bernoulli numbers."""
    return SequenceWindow(tuple(Fraction(1, m + 1) for m in range(length)))


@dataclass(frozen=True)
class TransformGrid:
    """Trapezoidal slice ``{(n, m): n + m <= size - 1}`` of the matrix."""

    entries: Dict[Tuple[int, int], Ring] = field(repr=False)
    x: Ring
    y: Ring
    size: int

    def __getitem__(self, nm: Tuple[int, int]) -> Ring:
        n, m = nm
        if n < 0 or m < 0 or n + m > self.size - 1:
            raise IndexError(f"entry {nm} lies outside the trapezoid n + m <= {self.size - 1}")
        return self.entries[nm]

    def __contains__(self, nm) -> bool:
        return nm in self.entries

    def row(self, n: int) -> List[Ring]:
        return [self.entries[(n, m)] for m in range(self.size - n)]

    def column(self, m: int) -> List[Ring]:
        return [self.entries[(n, m)] for n in range(self.size - m)]

    def items(self):
        """Entries ordered by row then column."""
        for n in range(self.size):
            for m in range(self.size - n):
                yield (n, m), self.entries[(n, m)]


def _check_start(seq: SequenceWindow):
    if seq.offset != 0:
        raise ValueError("boundary sequences must start at index 0")


def forward_fill(initial, x, y) -> TransformGrid:
    """Fill the trapezoid downward from the initial row ``a[0, m]``."""
    initial = SequenceWindow.of(initial)
    _check_start(initial)
    x, y = _ring(x), _ring(y)
    size = len(initial)
    entries: Dict[Tuple[int, int], Ring] = {(0, m): v for m, v in enumerate(initial)}
    for n in range(size - 1):
        for m in range(size - 1 - n):
            entries[(n + 1, m)] = x * (m + 1) * entries[(n, m + 1)] + y * m * entries[(n, m)]
    return TransformGrid(entries, x, y, size)


def _require_invertible(value, name: str = "x") -> Fraction:
    if isinstance(value, BiPoly):
        if not value.is_constant():
            raise ValueError(f"{name} must be a nonzero rational here, got {value}")
        value = value.constant_term()
    if value == 0:
        raise ValueError(f"{name} = 0 is not invertible")
    return value


def backward_fill(final, x, y) -> TransformGrid:
    """Fill the trapezoid rightward from the final column ``a[n, 0]``.

    Uses ``a[n, m+1] = (a[n+1, m] - y m a[n, m]) / (x (m+1))``.
    """
    final = SequenceWindow.of(final)
    _check_start(final)
    y = _ring(y)
    x_inv = 1 / _require_invertible(_ring(x))
    size = len(final)
    entries: Dict[Tuple[int, int], Ring] = {(n, 0): v for n, v in enumerate(final)}
    for m in range(size - 1):
        scale = x_inv / (m + 1)
        for n in range(size - 1 - m):
            entries[(n, m + 1)] = (entries[(n + 1, m)] - y * m * entries[(n, m)]) * scale
    return TransformGrid(entries, _ring(x), y, size)


def entry_from_row(n: int, m: int, initial, x, y) -> Ring:
    """Closed form of ``a[n, m]`` in terms of the initial row.

    ``(1/m!) sum_k {n+m, k+m}_m (k+m)! y^(n-k) x^k a[0, m+k]``
    """
    initial = SequenceWindow.of(initial)
    _check_start(initial)
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if n + m > len(initial) - 1:
        raise ValueError(
            f"insufficient initial data: a[{n},{m}] needs {n + m + 1} terms, got {len(initial)}")
    x, y = _ring(x), _ring(y)
    total = Fraction(0)
    for k in range(n + 1):
        w = stirling2_r(n + m, k + m, m)
        if not w:
            continue
        total = total + w * factorial(k + m) * y ** (n - k) * x ** k * initial[m + k]
    return total / factorial(m)


def entry_from_column(n: int, m: int, final, x, y) -> Ring:
    """Closed form of ``a[n, m]`` in terms of the final column.

    ``(y^m / (x^m m!)) sum_k y^(-k) s(m, k) a[n+k, 0]``, written without
    negative powers as ``x^(-m)/m! sum_k s(m,k) y^(m-k) a[n+k, 0]``.  With
    ``y = 0`` only the ``k = m`` term survives, which agrees with the
    recurrence; :func:`backward_fill` remains the reference for that case.
    """
    final = SequenceWindow.of(final)
    _check_start(final)
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if n + m > len(final) - 1:
        raise ValueError(
            f"insufficient final data: a[{n},{m}] needs {n + m + 1} terms, got {len(final)}")
    x_val = _require_invertible(_ring(x))
    y = _ring(y)
    if is_zero(y):
        return backward_fill(final, x_val, y)[(n, m)]
    total = Fraction(0)
    for k in range(m + 1):
        total = total + stirling1(m, k) * y ** (m - k) * final[n + k]
    return total / (x_val ** m * factorial(m))


def row_column_sides(initial, x, y, n: int, m: int) -> Tuple[Ring, Ring]:
    """Both sides of the transform identity linking row and column closed forms.

    Left: ``sum_k {n+m,k+m}_m (k+m)! x^k y^(n-k) a[0,m+k]``.
    Right: ``sum_k s(m,k) x^(-m) y^(m-k) a[n+k,0]`` on the column that
    :func:`forward_fill` produces from the same initial row.
    """
    initial = SequenceWindow.of(initial)
    if n + m > len(initial) - 1:
        raise ValueError("n + m exceeds the data available in the initial row")
    x, y = _ring(x), _ring(y)
    x_val = _require_invertible(x)
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs = lhs + stirling2_r(n + m, k + m, m) * factorial(k + m) * x ** k * y ** (n - k) * initial[m + k]
    column = forward_fill(initial, x, y).column(0)
    rhs = Fraction(0)
    for k in range(m + 1):
        rhs = rhs + stirling1(m, k) * y ** (m - k) * column[n + k]
    rhs = rhs / x_val ** m
    return lhs, rhs


def row_column_check(initial, x, y, n: int, m: int) -> bool:
    lhs, rhs = row_column_sides(initial, x, y, n, m)
    return lhs == rhs


def fubini_transform(alpha, z) -> SequenceWindow:
    """``beta_n = sum_k k! {n k} z^k alpha_k``."""
    alpha = SequenceWindow.of(alpha)
    z = _ring(z)
    out = []
    for n in range(len(alpha)):
        acc = Fraction(0)
        for k in range(n + 1):
            w = stirling2(n, k)
            if w:
                acc = acc + factorial(k) * w * z ** k * alpha[k]
        out.append(acc)
    return SequenceWindow(tuple(out))


def fubini_inverse(beta, z) -> SequenceWindow:
    """``alpha_n = (1 / (n! z^n)) sum_k s(n, k) beta_k``."""
    beta = SequenceWindow.of(beta)
    z = _require_invertible(_ring(z), "z")
    out = []
    for n in range(len(beta)):
        acc = Fraction(0)
        for k in range(n + 1):
            acc = acc + stirling1(n, k) * beta[k]
        out.append(acc / (factorial(n) * z ** n))
    return SequenceWindow(tuple(out))


def bernoulli(n_max: int) -> SequenceWindow:
    """``B_0 .. B_{n_max}`` (with ``B_1 = -1/2``) from column 0 of the grid
    seeded with ``1/(m+1)`` at ``x = -1``, ``y = 1``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    grid = forward_fill(chen(n_max + 1), -1, 1)
    return SequenceWindow(tuple(grid.column(0)))
