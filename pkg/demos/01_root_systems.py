#!/usr/bin/env python3
"""Tour of the root-datum layer: exact roots, orbits, and dimensions.

Weights are integer vectors in fundamental-weight coordinates, so every
pairing below is a plain dot product and every printed number is exact.
"""

from parahoric import build_root_datum, chi_char, dim

for name in ["A2", "B2", "C2", "G2", "A1xA1+T1"]:
    rd = build_root_datum(name)
    print(f"{name}: rank {rd.n}, {len(rd.roots)} roots, "
          f"{len(rd.positive_roots)} positive")
    for comp in range(rd.num_components):
        hr = rd.highest_root(comp)
        print(f"  component {comp}: highest root {hr.coords} "
              f"= {hr.simple_coeffs} over the simple roots")
print()

a2 = build_root_datum("A2")
print("A2 Weyl orbit of the natural highest weight (1,0):")
for w in a2.weyl_orbit((1, 0)):
    print("   ", w)
print("regular orbit size (order of the Weyl group):", a2.orbit_size((1, 1)))
print()

print("Weyl degree formula vs Freudenthal multiplicities on A2:")
for lam in [(1, 0), (1, 1), (2, 0), (3, 1), (5, 0)]:
    ch = chi_char(a2, lam)
    print(f"  chi{lam}: degree formula {a2.weyl_dim(lam)}, "
          f"multiplicity total {dim(ch)}, dominant support {dict(ch.mult)}")

g2 = build_root_datum("G2")
print()
print("G2 fundamental representations:", g2.weyl_dim((1, 0)), "and", g2.weyl_dim((0, 1)))
print("G2 adjoint weight multiplicities:", dict(chi_char(g2, (0, 1)).mult))
