"""The Fubini transform of a sequence and its Stirling-first-kind inverse,
plus the two closed forms for a matrix entry (from the first row and from
the first column)."""
from fractions import Fraction

from fubini_kit import (backward_fill, entry_from_column, entry_from_row, forward_fill,
                        fubini_inverse, fubini_transform)

alpha = [Fraction(1, k + 1) for k in range(8)]
beta = fubini_transform(alpha, 2)
print("alpha:", [str(a) for a in alpha])
print("beta: ", [str(b) for b in beta])
assert list(fubini_inverse(beta, 2)) == alpha

x, y = Fraction(3, 2), Fraction(-1, 3)
grid = forward_fill(alpha, x, y)
print("\na[2, 3] by recurrence:", grid[(2, 3)])
print("a[2, 3] from the row: ", entry_from_row(2, 3, alpha, x, y))
column = grid.column(0)
print("a[2, 3] from the column:", entry_from_column(2, 3, column, x, y))
assert backward_fill(column, x, y).row(0) == alpha
