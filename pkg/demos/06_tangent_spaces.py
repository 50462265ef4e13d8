"""Tangent-space dimensions at Hilbert-scheme points, by exact linear
algebra over syzygy constraints."""

from hilbcomp import PolyRing, explicit_basis_check, hom_degree_zero, normal_form_ideal
from hilbcomp.fixtures import (
    conic_plane_ideal,
    conic_space_ideal,
    lambda_generators,
    tangent_trivial_elements,
    tangent_versal_elements,
)
from hilbcomp.ideals import Ideal

# A single plane (a Grassmannian point) for scale: dimension 4 in P^3.
line = Ideal(PolyRing(4), ["x0", "x1"])
print("line in P^3:", hom_degree_zero(line).dimension)

# The planar-double point is the interesting one: 8n-12, strictly larger
# than the component dimension 4n-4, so the point is singular in the
# ambient Hilbert scheme (two components meet there).
for n in (3, 4, 5):
    report = hom_degree_zero(normal_form_ideal(n, "IV"))
    print(f"n={n}: tangent {report.dimension} = 8n-12, "
          f"component {4 * n - 4} = 4n-4, "
          f"({report.total_unknowns} unknowns, rank {report.constraint_rank})")

# The explicit assignments split into flag motions and versal directions,
# and every one of them satisfies the syzygy constraints.
n = 4
presented = Ideal(PolyRing(n + 1), lambda_generators(n))
trivial = tangent_trivial_elements(n)
versal = tangent_versal_elements(n)
print(f"explicit elements at n={n}: {len(trivial)} trivial + {len(versal)} versal "
      f"= {len(trivial) + len(versal)} = 8n-12")
print("all satisfy the constraints:",
      all(explicit_basis_check(presented, images) for _, images in trivial + versal))

# Two conic-with-embedded-point ideals: inside the plane the module Hom is
# 7; in 3-space it computes 10, reported against the sheaf count 11 (the
# degree-one hypothesis of the comparison between the two deformation
# problems fails there).
print("plane conic:", hom_degree_zero(conic_plane_ideal()).dimension)
space = hom_degree_zero(conic_space_ideal())
print("space conic:", space.dimension, "(sheaf-theoretic count: 11)")
