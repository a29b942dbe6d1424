"""Two edges of a 3-connected graph always sit in a bond, a fan-type graph or a K4-like cc-minor.

    python demos/02_three_connected_taxonomy.py
"""

import itertools
from collections import Counter

from ccminor import extract_from_3connected, extract_large_3connected
from ccminor.gen import enumerate_simple_3connected, vk, wheel

g = vk(5)
print(f"V5: {g.num_vertices} vertices, {g.num_edges} edges")
kinds = Counter()
for e, f in itertools.combinations(sorted(g.edges), 2):
    res = extract_from_3connected(g, e, f)
    assert res.replays(g)
    kinds[res.kind] += 1
print("  kinds over all edge pairs:", dict(kinds))

res = extract_from_3connected(g, 0, 7)
print("\nedges 0 and 7:", res.kind, res.params)
print("  contracted cycles:", [sorted(s) for s in res.trace.steps])

# Across every simple 3-connected graph on at most 6 vertices.
total = Counter()
for h in enumerate_simple_3connected(6):
    for e, f in itertools.combinations(sorted(h.edges), 2):
        total[extract_from_3connected(h, e, f).kind] += 1
print("\nall 3-connected graphs on <= 6 vertices:", dict(total))

# Large 3-connected graphs give fan-type graphs with many spokes.
for t in (4, 8, 12):
    res = extract_large_3connected(wheel(10), t)
    print(f"\nW10 asked for spoke weight {t}: {res.kind} {res.params.get('ts', res.params.get('reason'))}")
