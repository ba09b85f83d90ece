"""Generalized Fubini polynomials three ways: the matrix, the explicit sum
and the generating function.  They must agree coefficient by coefficient."""
from fubini_kit import X, Y, forward_fill, fubini_gen, gf_generalized_fubini, ones

N = 6
column = forward_fill(ones(N + 1), X, Y).column(0)
gf = gf_generalized_fubini(N)

for n in range(N + 1):
    print(f"F_{n}(x, y) = {fubini_gen(n)}")
    assert column[n] == fubini_gen(n) == gf.egf_coefficient(n)

# y = 1 gives the Fubini polynomials; x = y = 1 the ordered Bell numbers
print("ordered Bell numbers:", ", ".join(str(fubini_gen(n).eval(1, 1)) for n in range(N + 1)))
