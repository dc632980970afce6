# Modular curves by coset enumeration
# -----------------------------------
# Indices, cusps, elliptic points and genus for the three level structures,
# computed from the permutation action of S and T on cosets.

from levelcubics import Kind, SubgroupSpec, curve_invariants

for kind in Kind:
    print(f"\n{kind.group_name}(N)")
    print(" N  index  cusps  e2  e3  genus")
    for N in range(2, 14):
        inv = curve_invariants(SubgroupSpec(kind, N))
        print(f"{N:2d}  {inv.index_psl2:5d}  {inv.cusp_count:5d}  {inv.e2:2d}  {inv.e3:2d}  {inv.genus:5d}")

# Irregular cusps only appear when -I is missing; Gamma1(4) has one at 1/2.
inv = curve_invariants(SubgroupSpec.gamma1(4))
for c in inv.cusp_classes:
    print(c.label, "width", c.width, "" if c.regular else "(irregular)")
