"""Finding a parallel-path extension of a long template inside a 2-connected graph.

    python demos/03_templates.py
"""

import random

from ccminor import extract_template, is_template, tutte_decomposition
from ccminor.decompose import TemplateSpec, build_template, is_parallel_path_extension
from ccminor.gen import fan, random_parallel_path_extension, wheel
from ccminor.io import graph_from_json

# A fan on n path vertices is already a template with 2n - 3 parts.
for n in range(2, 7):
    print(f"fan({n}) parts:", is_template(fan(n)).parts)

# Hide a template inside a random parallel-path extension, then look for it again.
rng = random.Random(7)
spec = TemplateSpec(("K3", "K4", "B3", "K4", "K3"))
g = random_parallel_path_extension(build_template(spec), rng, max_edges=45)
td = tutte_decomposition(g)
print(f"\nhidden {spec.parts} in a graph with {g.num_edges} edges and {len(td.nodes)} tree nodes")
res = extract_template(g, spec.r)
core = graph_from_json(res.params["core"])
print("  found:", res.kind, res.params["spec"]["parts"], "via", res.params["case"])
print("  replays:", res.replays(g), " extension of core:", is_parallel_path_extension(res.graph, core))

# One big 3-connected piece sends the search down the fan branch instead.
res = extract_template(wheel(14), 6)
print("\nW14:", res.kind, res.params["parts"], "parts via", res.params["case"])
