"""The tagged outcome every extractor returns."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..ccops import ContractionTrace, replay
from ..io import graph_to_json
from ..multigraph import Multigraph

BOND = "Bond"
FAN_TYPE = "FanType"
K4_EXT = "K4ParallelExtension"
PAR_CYCLES = "ParallelConnectionOfCycles"
TEMPLATE = "TemplateExtension"
FAILURE = "Failure"


@dataclass
class ExtractionResult:
    kind: str
    graph: Optional[Multigraph]
    trace: Optional[ContractionTrace]
    params: Dict[str, Any] = field(default_factory=dict)
    marked: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.kind != FAILURE

    def replays(self, source: Multigraph) -> bool:
        if self.trace is None or self.graph is None:
            return False
        return replay(source, self.trace) == self.graph

    def to_json(self) -> dict:
        doc: Dict[str, Any] = {"kind": self.kind, "params": _jsonable(self.params), "marked": dict(self.marked)}
        doc["graph"] = None if self.graph is None else graph_to_json(self.graph)
        doc["trace"] = None if self.trace is None else self.trace.to_json()
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_dot(self) -> str:
        lines = ["graph extraction {"]
        if self.graph is not None:
            marked = {e: name for name, e in self.marked.items()}
            for v in sorted(self.graph.vertices):
                lines.append(f"  {v};")
            for e, (a, b) in self.graph.edges.items():
                attr = f' [label="{marked[e]}", color=red, penwidth=2]' if e in marked else f' [label="{e}"]'
                lines.append(f"  {a} -- {b}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def failure(reason: str, **params) -> ExtractionResult:
    return ExtractionResult(FAILURE, None, None, {"reason": reason, **params})


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if hasattr(x, "to_json"):
        return x.to_json()
    return x
