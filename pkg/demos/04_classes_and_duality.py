"""Edge-connectivity classes with certificates, and what cc-minors look like through planar duality.

    python demos/04_classes_and_duality.py
"""

from ccminor import check_duality_lemma, classify, dual, planar_embed
from ccminor.gen import bond, cycle, fan, wheel
from ccminor.multigraph import Multigraph

# classify reports the largest k with g in F_k and a cc-minor showing g is not in F_{k+1}.
for name, g in [("C2", bond(2)), ("K2", Multigraph.from_pairs([(0, 1)])), ("B3", bond(3)),
                ("W5", wheel(5)), ("fan(4)", fan(4))]:
    v = classify(g, 6)
    ob = v.obstruction
    what = "none below the cap" if ob is None else f"{ob.kind} with {ob.graph.num_edges} edges"
    print(f"{name:7} max_k={v.max_k}  obstruction: {what}")

# Duals swap cycles and bonds.
for g in (cycle(4), bond(3), wheel(4)):
    gd, _ = dual(g, planar_embed(g))
    print(f"\ndual of |V|={g.num_vertices} |E|={g.num_edges}: |V|={gd.num_vertices} |E|={gd.num_edges}")

# 2-connected induced subgraphs correspond to 2-connected cc-minors of the dual.
for name, g in [("C5", cycle(5)), ("W4", wheel(4)), ("W5", wheel(5))]:
    rep = check_duality_lemma(g)
    print(f"\n{name}: {len(rep.induced_codes)} classes on each side, agree={rep.ok}")
