# Is the surface smooth over the cusp point Q?
# --------------------------------------------
# Z' is the image of the zero section.  We resolve the quotient singularities
# along it, then try to blow the configuration down one (-1)-curve at a time.

from levelcubics import Kind, SubgroupSpec, smoothness_verdict
from levelcubics.report import render_table, table_rows

for spec in (SubgroupSpec.gamma1(3), SubgroupSpec.gamma1(4), SubgroupSpec.full(2), SubgroupSpec.gamma0(13)):
    rep = smoothness_verdict(spec)
    print(f"\n{spec}: Z'^2 = {rep.zprime_sq}, proper transform {rep.ztilde_sq}")
    for r in rep.singularities:
        print(f"  {r.location}: {r.type_label}, chain {list(r.hj_chain)}")
    print("  curves", rep.graph.names)
    for row in rep.graph.integer_matrix():
        print("   ", row)
    if rep.smooth_at_Q:
        print("  contracts:", " -> ".join(rep.contraction_sequence))
    else:
        print("  stuck:", rep.obstruction)

print()
print(render_table(table_rows(Kind.CYCLIC, 25)))
