# Level structures as a branched cover of S^3 along the trefoil
# -------------------------------------------------------------
# The knot group B_3 acts on level-N structures through SL_2(Z/N).  Over a
# neighbourhood of K the cover splits into one piece per cusp; b is the
# branching along the meridian and d the degree along the core.

from levelcubics import BraidWord, Kind, SubgroupSpec, braid_to_sl2, cover_over_K, recognize, seifert_data

x = braid_to_sl2(BraidWord.parse("x"), 7)
y = braid_to_sl2(BraidWord.parse("y"), 7)
print("x^3 == y^2 mod 7:", x ** 3 == y ** 2)

for p in (5, 7):
    rep = cover_over_K(Kind.POINT, p)
    print(f"\nGamma1({p}): {rep.fiber_size} points over a generic fiber")
    for c in rep.components:
        print(f"  cusp {c.cusp.label:>5}: {c.size:3d} points  b={c.b}  d={c.d}")

print()
for spec in (SubgroupSpec.gamma1(4), SubgroupSpec.gamma1(9), SubgroupSpec.gamma0(3), SubgroupSpec.gamma0(13)):
    sd = seifert_data(spec)
    print(f"{spec}: fibers {sd.multiplicities}, euler {sd.euler} -> {recognize(sd).describe()}")
