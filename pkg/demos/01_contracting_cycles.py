"""Contracting cycles, replaying traces, and asking whether one graph is a cc-minor of another.

    python demos/01_contracting_cycles.py
"""

from ccminor import Contractor, Multigraph, canonical_form, cc_minor_classes, is_cc_minor, replay
from ccminor.gen import bond, cycle, wheel
from ccminor.isomorph import is_isomorphic

# K4 on vertices 0..3; edges 0, 1, 3 form the triangle 0-1-2.
k4 = Multigraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

con = Contractor(k4)
con.contract({0, 1, 3})
print("K4 with a triangle contracted:", dict(con.graph.edges))
print("  is B3:", is_isomorphic(con.graph, bond(3)))

# The trace is a certificate: anyone holding K4 can replay it and get the same graph back.
trace = con.trace()
print("  trace:", trace.dumps())
print("  replays:", replay(k4, trace) == con.graph)

# Contracting the rim of a wheel leaves the hub joined to one vertex by every spoke.
w6 = wheel(6)
con = Contractor(w6)
con.contract([e for e, (a, b) in w6.edges.items() if 0 not in (a, b)])
print("\nW6 with its rim contracted is B6:", is_isomorphic(con.graph, bond(6)))

# A cycle has only one cycle to contract, so C5 has no C3 cc-minor.
print("\nC3 inside C5?", is_cc_minor(cycle(5), cycle(3)))
print("B3 inside K4?", is_cc_minor(k4, bond(3)) is not None)

# Every cc-minor class of the 5-wheel, smallest first.
classes = sorted(cc_minor_classes(wheel(5)).values(), key=lambda h: (h.num_edges, h.num_vertices))
print(f"\nW5 has {len(classes)} cc-minor classes:")
for h in classes:
    print(f"  |V|={h.num_vertices} |E|={h.num_edges} code={canonical_form(h).hex()[:16]}")
