"""Groebner bases, normal forms, elimination, and syzygies."""

from hilbcomp import PolyRing, buchberger, normal_form, parse, syzygies
from hilbcomp.ideals import Ideal, eliminate

R = PolyRing(4)
x0, x1, x2, x3 = (R.x(i) for i in range(4))

# The ideal of two codimension-two planes meeting a hyperplane: four
# quadrics whose reduced basis is the generators themselves.
gens = [x0 * x2, x0 * x3, x1 * x2, x1 * x3]
gb = buchberger(gens)
print("reduced basis:", [str(g) for g in gb.elements])
print("all S-pairs reduce to zero:", gb.spair_certificate())

# Membership is a zero normal form.
print("x0*x2*x3 in the ideal:", normal_form(x0 * x2 * x3, gb).is_zero())
print("x3^2 normal form:", normal_form(x3**2, gb))

# Each basis element knows its exact expression in the input generators.
gb2 = buchberger([x0 + x1, x0 - x1])
print("basis:", [str(g) for g in gb2.elements])
print("transform verifies:", gb2.transform_certificate())

# Elimination: intersect with a subring.  Killing t from (t*x0, (1-t)*x1)
# leaves exactly the product x0*x1.
Rt = PolyRing(2, has_param=True)
J = Ideal(Rt, [Rt.t * Rt.x(0), (Rt.one - Rt.t) * Rt.x(1)])
print("eliminating t:", eliminate(J, [Rt.param_index]))

# First syzygies: all relations among the generators, with exactness
# guaranteed (each row annihilates the generators identically).
module = syzygies(gens)
print("syzygy rows (degree shifts", module.shifts, "):")
for row in module.generators:
    print("  ", tuple(str(c) for c in row))
print("exact:", module.verify())
