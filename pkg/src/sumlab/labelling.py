"""Injective vertex labellings, induced edge labellings, and certificates.

An injective map f from vertices to integers induces two edge labellings:
the sum labelling uv -> f(u)+f(v) and the difference labelling
uv -> |f(u)-f(v)|.  A certificate packages a graph, a labelling, and a
claimed number of distinct edge values so that exhibited labellings can be
stored as data and re-verified mechanically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, emit_graph6, parse_graph6


class LabellingError(ValueError):
    """Labelling is not injective or does not match its graph."""


class LabelKind(str, Enum):
    SUM = "SUM"
    DIFF = "DIFF"


@dataclass(frozen=True)
class VertexLabelling:
    """Injective vertex -> integer map, stored as a sorted item tuple."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, values: dict[int, int]) -> "VertexLabelling":
        lab = cls(tuple(sorted(values.items())))
        lab.validate()
        return lab

    def validate(self) -> None:
        verts = [v for v, _ in self.items]
        vals = [x for _, x in self.items]
        if len(set(verts)) != len(verts):
            raise LabellingError("repeated vertex in labelling")
        if len(set(vals)) != len(vals):
            raise LabellingError("labelling is not injective")

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def value(self, v: int) -> int:
        for u, x in self.items:
            if u == v:
                return x
        raise LabellingError(f"vertex {v} not labelled")

    def translated(self, c: int) -> "VertexLabelling":
        return VertexLabelling(tuple((v, x + c) for v, x in self.items))

    def negated(self) -> "VertexLabelling":
        return VertexLabelling(tuple((v, -x) for v, x in self.items))

    def scaled(self, a: int) -> "VertexLabelling":
        if a == 0:
            raise LabellingError("scale factor must be nonzero")
        return VertexLabelling(tuple((v, a * x) for v, x in self.items))


@dataclass(frozen=True)
class EdgeLabelling:
    kind: LabelKind
    labels: tuple[tuple[tuple[int, int], int], ...]

    def values(self) -> tuple[int, ...]:
        return tuple(x for _, x in self.labels)


def derive_edge_labelling(g: Graph, f: VertexLabelling, kind: LabelKind) -> EdgeLabelling:
    """Induce the edge labelling of the requested kind from f.

    f must be injective and label exactly the vertices of g.
    """
    f.validate()
    values = f.as_dict()
    if set(values) != set(range(g.n)):
        raise LabellingError("labelling domain does not match the graph's vertices")
    out = []
    for u, v in g.edges:
        if kind is LabelKind.SUM:
            out.append(((u, v), values[u] + values[v]))
        else:
            out.append(((u, v), abs(values[u] - values[v])))
    return EdgeLabelling(kind, tuple(out))


def distinct_value_count(e: EdgeLabelling) -> int:
    return len(set(e.values()))


@dataclass(frozen=True)
class Certificate:
    """A graph, a labelling, and a claimed distinct-value count."""

    graph: Graph
    labelling: VertexLabelling
    claim_kind: LabelKind
    claimed_value: int

    def to_json_dict(self) -> dict:
        return {
            "graph6": emit_graph6(self.graph),
            "labelling": {str(v): x for v, x in self.labelling.items},
            "kind": self.claim_kind.value,
            "claimed": self.claimed_value,
        }

    @classmethod
    def from_json_dict(cls, record: dict) -> "Certificate":
        return cls(
            graph=parse_graph6(record["graph6"]),
            labelling=VertexLabelling.from_dict(
                {int(v): int(x) for v, x in record["labelling"].items()}
            ),
            claim_kind=LabelKind(record["kind"]),
            claimed_value=int(record["claimed"]),
        )


@dataclass(frozen=True)
class CertificateVerdict:
    passed: bool
    observed: int
    claimed: int


def verify_certificate(c: Certificate) -> CertificateVerdict:
    """Recompute the distinct-value count and compare with the claim."""
    observed = distinct_value_count(
        derive_edge_labelling(c.graph, c.labelling, c.claim_kind)
    )
    return CertificateVerdict(observed == c.claimed_value, observed, c.claimed_value)


# ---------------------------------------------------------------------------
# Text/JSON formats
# ---------------------------------------------------------------------------

def labelling_to_text(f: VertexLabelling) -> str:
    return "\n".join(f"{v} {x}" for v, x in f.items) + "\n"


def labelling_from_text(text: str) -> VertexLabelling:
    values: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise LabellingError(f"expected 'vertex value' on line {lineno}")
        try:
            values[int(tokens[0])] = int(tokens[1])
        except ValueError:
            raise LabellingError(f"bad integer on line {lineno}") from None
    return VertexLabelling.from_dict(values)


def certificates_to_json(certs: list[Certificate]) -> str:
    return json.dumps([c.to_json_dict() for c in certs], indent=2) + "\n"


def certificates_from_json(text: str) -> list[Certificate]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [Certificate.from_json_dict(rec) for rec in data]
