"""The integer Picard lattices: divisor relations solved from test-curve
pairings, the chamber decomposition, canonical classes, Fano ranges."""

from hilbcomp import (
    HN,
    WN,
    canonical_class,
    chamber_of,
    dimension_table,
    hn_lattice,
    is_fano,
    pairing,
    solve_relations,
    wn_lattice,
)

# Solve the named divisor classes from the stated pairing table alone.
rep = solve_relations(hn_lattice(4))
print("rank-2 classes:", {k: v.coords for k, v in rep.classes.items()})
print("derived entries:", rep.derived)

repw = solve_relations(wn_lattice(4))
print("rank-3 classes:", {k: v.coords for k, v in repw.classes.items()})
print("B6 . E' =", pairing(repw.curve("B6"), repw.classes["E'"]))

# Walk a few divisors through the chamber table.
lat = hn_lattice(5)
for coords in ((1, 1), (1, 0), (0, 1), (3, -2), (-1, 3), (-1, 2)):
    r = chamber_of(lat.divisor(coords), 5)
    print(f"D={coords}: chamber {r.chamber:7s} base locus {r.base_locus or '()'} "
          f"model {r.model}")

# Canonical classes and the Fano range: the anticanonical class leaves the
# ample cone at n=5 (it hits the nef boundary exactly there).
for n in range(3, 7):
    k = canonical_class(HN, n)
    print(f"n={n}: K = {k.coords},  Fano: {is_fano(HN, n)},  "
          f"rank-3 side Fano: {is_fano(WN, n)}")

# The dimension bookkeeping behind the transversality statement.
dt = dimension_table(4)
print("locus dimensions at n=4:", dt.loci)
print("other component:", dt.other_component,
      "| tangent at the planar double:", dt.tangent_at_planar_double)
print("(4n-4) + (7n-10) - (3n-2) == 8n-12:", dt.transverse_identity)
