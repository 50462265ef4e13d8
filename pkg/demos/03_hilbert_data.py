"""Hilbert series, functions, polynomials, and the reference polynomial of
a pair of codimension-two linear subspaces."""

from hilbcomp import (
    PolyRing,
    hilbert_function,
    hilbert_series,
    normal_form_ideal,
    pair_hilbert_polynomial,
)
from hilbcomp.ideals import Ideal, intersect

# Two skew lines in P^3.
R = PolyRing(4)
pair = intersect(Ideal(R, ["x0", "x1"]), Ideal(R, ["x2", "x3"]))
data = hilbert_series(pair)
print("ideal:", pair)
print("Hilbert polynomial:", data.hilbert_polynomial)
print("dimension:", data.dimension, "| degree:", data.degree)
print("series numerator over (1-T)^4:", data.series_numerator)
print("function agrees with the polynomial from m =", data.agreement_bound)
for m in range(5):
    print(f"  dim (S/I)_{m} = {hilbert_function(pair, m)}")

# The closed-form reference polynomial, for any ambient dimension.
for n in (3, 4, 5, 6):
    print(f"reference polynomial, P^{n}:", pair_hilbert_polynomial(n))

# All four normal forms share it: membership in the same Hilbert scheme.
for label in ("I", "II", "III", "IV"):
    hp = hilbert_series(normal_form_ideal(5, label)).hilbert_polynomial
    print(f"type ({label}) in P^5:", hp)
