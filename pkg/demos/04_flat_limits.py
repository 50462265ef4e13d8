"""Flat limits of one-parameter families: saturate out t, specialize,
saturate the irrelevant ideal."""

from hilbcomp import Family, PolyRing, fiber, flatness_probe, limit_ideal
from hilbcomp.ideals import Ideal, intersect

Rt = PolyRing(4, has_param=True)
x = [Rt.x(i) for i in range(4)]
t = Rt.t

# A pair of planes whose intersection drops dimension as t -> 0: the limit
# picks up an embedded component at the special locus.
fam = Family(intersect(Ideal(Rt, [x[0], x[1]]), Ideal(Rt, [x[0] + t * x[3], x[2]])))
print("limit at t=0:", limit_ideal(fam))
print("fiber at t=1:", fiber(fam, 1))

report = flatness_probe(fam)
print("flat:", report.flat, "| common polynomial:", report.limit_polynomial)
print("sampled at t =", [str(p) for p in report.sample_points])

# A pair collapsing onto its double structure.
fam2 = Family(
    intersect(Ideal(Rt, [x[0], x[1]]), Ideal(Rt, [x[0] + t * x[2], x[1] + t * x[3]]))
)
print("double-structure limit:", limit_ideal(fam2))

# The planar-double pencil, one affine chart of its parameter line.
pencil = Family(Ideal(Rt, [x[0] ** 2, x[0] * x[1], x[1] ** 2,
                           t * x[0] * x[3] - x[1] * x[2]]))
print("pencil at t=1:", fiber(pencil, 1))
print("pencil at t=0:", fiber(pencil, 0))
print("pencil probe:", flatness_probe(pencil).flat)

# A deliberately non-flat family: the t=1 fiber loses a generator.
bad = Family(Ideal(Rt, [(Rt.one - t) * x[0], x[1]]))
bad_report = flatness_probe(bad)
print("constructed jump is flat:", bad_report.flat,
      "| mismatching parameters:", [str(p) for p in bad_report.mismatched_points])
