"""Central fibers of symplectic resolutions of 4-dimensional singularities as
labeled graphs.

Vertices are surfaces (projective plane, Hirzebruch surface, one-point blowup
of a quadric, or something named), edges record how two surfaces meet: in a
point, or along a curve whose class is named on each side.  Curve classes
are symbolic; there is no intersection theory here.

Flops are table driven.  Contracting a (-1)-curve on a neighbor of the flopped
plane rewrites that neighbor's label by a fixed table and turns the contact
into a point; anything the table does not cover is rejected.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Mapping

SURFACE_KINDS = ("ProjectivePlane", "Hirzebruch", "PointBlowupOfQuadric", "Other")
CURVE_KINDS = ("Line", "Conic", "NegativeSection", "Ruling", "MinusOneCurve", "Other")


class FiberError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Surface:
    kind: str
    param: int | str | None = None

    def __post_init__(self):
        if self.kind not in SURFACE_KINDS:
            raise FiberError(f"unknown surface label {self.kind!r}")
        if self.kind == "Hirzebruch":
            if not isinstance(self.param, int) or self.param < 0:
                raise FiberError(f"Hirzebruch surface needs an integer k >= 0, got {self.param!r}")
        elif self.kind == "Other":
            if not isinstance(self.param, str) or not self.param:
                raise FiberError("Other surface needs a name")
        elif self.param is not None:
            raise FiberError(f"{self.kind} takes no parameter")

    def __str__(self) -> str:
        return {"ProjectivePlane": "P2", "PointBlowupOfQuadric": "Bl_pt(P1xP1)"}.get(
            self.kind, f"Sigma_{self.param}" if self.kind == "Hirzebruch" else str(self.param))

    def allows(self, curve: "Curve") -> bool:
        if self.kind == "Other" or curve.kind == "Other":
            return True
        if self.kind == "ProjectivePlane":
            return curve.kind in ("Line", "Conic")
        if self.kind == "Hirzebruch":
            return curve.kind == "Ruling" or (curve.kind == "NegativeSection" and self.param >= 1)
        return curve.kind == "MinusOneCurve"

    def is_minus_one_curve(self, curve: "Curve") -> bool:
        if curve.kind == "MinusOneCurve":
            return True
        # the negative section of Sigma_1 has self-intersection -1
        return curve.kind == "NegativeSection" and self == Surface("Hirzebruch", 1)


PROJECTIVE_PLANE = Surface("ProjectivePlane")


@dataclass(frozen=True, order=True)
class Curve:
    kind: str
    name: str | None = None

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise FiberError(f"unknown curve class {self.kind!r}")
        if (self.kind == "Other") != (self.name is not None):
            raise FiberError("only Other curves carry a name")

    def __str__(self) -> str:
        return f"Other:{self.name}" if self.kind == "Other" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Curve":
        if text.startswith("Other:"):
            return cls("Other", text[len("Other:"):])
        return cls(text)


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    # None for a point contact, else (class in a, class in b)
    curves: tuple[Curve, Curve] | None = None
    notes: tuple[tuple[str, object], ...] = field(default=(), compare=False)

    @property
    def is_point(self) -> bool:
        return self.curves is None

    @property
    def pair(self) -> frozenset:
        return frozenset((self.a, self.b))

    def curve_on(self, cid: str) -> Curve | None:
        if self.curves is None:
            return None
        return self.curves[0] if cid == self.a else self.curves[1]

    def other(self, cid: str) -> str:
        return self.b if cid == self.a else self.a

    def label(self) -> str:
        return f"{self.a}--{self.b}"


@dataclass(frozen=True)
class FiberConfig:
    components: tuple[tuple[str, Surface], ...]
    edges: tuple[Edge, ...] = ()

    def __init__(self, components: Mapping[str, Surface] | Iterable[tuple[str, Surface]],
                 edges: Iterable[Edge] = ()):
        items = list(components.items() if isinstance(components, Mapping) else components)
        ids = [cid for cid, _ in items]
        if len(set(ids)) != len(ids):
            raise FiberError(f"duplicate component ids in {ids}")
        object.__setattr__(self, "components", tuple(sorted(items)))
        object.__setattr__(self, "edges", tuple(edges))
        self._validate()

    def _validate(self) -> None:
        labels = self.labels
        pairs = set()
        for e in self.edges:
            for cid in (e.a, e.b):
                if cid not in labels:
                    raise FiberError(f"edge {e.label()} references unknown component {cid!r}")
            if e.a == e.b:
                raise FiberError(f"edge {e.label()} is a loop")
            if e.pair in pairs:
                raise FiberError(f"more than one edge between {e.a} and {e.b}")
            pairs.add(e.pair)
            for cid in (e.a, e.b):
                curve = e.curve_on(cid)
                if curve is not None and not labels[cid].allows(curve):
                    raise FiberError(f"edge {e.label()}: curve class {curve} not allowed on {cid} ({labels[cid]})")

    @property
    def labels(self) -> dict[str, Surface]:
        return dict(self.components)

    def edges_at(self, cid: str) -> list[Edge]:
        return [e for e in self.edges if cid in (e.a, e.b)]

    def restrict(self, ids: Iterable[str]) -> "FiberConfig":
        keep = set(ids)
        return FiberConfig([(c, s) for c, s in self.components if c in keep],
                           [e for e in self.edges if e.a in keep and e.b in keep])

    def to_json(self) -> dict:
        comps = []
        for cid, s in self.components:
            item = {"id": cid, "label": s.kind}
            if s.param is not None:
                item["param"] = s.param
            comps.append(item)
        edges = []
        for e in self.edges:
            item = {"a": e.a, "b": e.b,
                    "contact": "point" if e.is_point else {"curveA": str(e.curves[0]), "curveB": str(e.curves[1])}}
            if e.notes:
                item["notes"] = dict(e.notes)
            edges.append(item)
        return {"components": comps, "edges": edges}

    @classmethod
    def from_json(cls, data: dict) -> "FiberConfig":
        try:
            comps = [(c["id"], Surface(c["label"], c.get("param"))) for c in data["components"]]
            edges = []
            for e in data.get("edges", []):
                contact = e["contact"]
                if contact == "point":
                    curves = None
                else:
                    curves = (Curve.parse(contact["curveA"]), Curve.parse(contact["curveB"]))
                edges.append(Edge(e["a"], e["b"], curves, tuple(sorted(e.get("notes", {}).items()))))
        except (KeyError, TypeError) as exc:
            raise FiberError(f"malformed fiber config: {exc}") from exc
        return cls(comps, edges)

    @classmethod
    def load(cls, path) -> "FiberConfig":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _edge_key(e: Edge, rename: Mapping[str, str]):
    ends = sorted([(rename[e.a], str(e.curve_on(e.a) or "")), (rename[e.b], str(e.curve_on(e.b) or ""))])
    return (tuple(ends), e.is_point)


def is_isomorphic(a: FiberConfig, b: FiberConfig) -> bool:
    """Label-preserving graph isomorphism, brute force over bijections that
    respect surface labels."""
    if sorted(s for _, s in a.components) != sorted(s for _, s in b.components):
        return False
    if len(a.edges) != len(b.edges):
        return False
    target = Counter(_edge_key(e, {c: c for c, _ in b.components}) for e in b.edges)
    groups_a: dict[Surface, list[str]] = {}
    groups_b: dict[Surface, list[str]] = {}
    for cid, s in a.components:
        groups_a.setdefault(s, []).append(cid)
    for cid, s in b.components:
        groups_b.setdefault(s, []).append(cid)
    labels = list(groups_a)
    for choice in product(*(permutations(groups_b[s]) for s in labels)):
        rename = {}
        for s, image in zip(labels, choice):
            rename.update(zip(groups_a[s], image))
        if Counter(_edge_key(e, rename) for e in a.edges) == target:
            return True
    return False


# flops

@dataclass(frozen=True)
class Action:
    kind: str  # "ContractMinusOneCurve" | "RelabelTo" | "Unchanged"
    curves: tuple[Curve, Curve] | None = None  # for RelabelTo, oriented as (a, b) of the edge

    def __post_init__(self):
        if self.kind not in ("ContractMinusOneCurve", "RelabelTo", "Unchanged"):
            raise FiberError(f"unknown flop action {self.kind!r}")


CONTRACT = Action("ContractMinusOneCurve")
UNCHANGED = Action("Unchanged")


def relabel_to(curve_a: Curve | None, curve_b: Curve | None = None) -> Action:
    if curve_a is None:
        return Action("RelabelTo", None)
    return Action("RelabelTo", (curve_a, curve_b))


# label of a surface after contracting one (-1)-curve on it
CONTRACTION_TABLE = {
    Surface("PointBlowupOfQuadric"): Surface("Hirzebruch", 1),
    Surface("Hirzebruch", 1): PROJECTIVE_PLANE,
}


@dataclass(frozen=True)
class FlopTransition:
    center: str
    # keyed by the unordered pair of endpoint ids
    actions: tuple[tuple[frozenset, Action], ...]

    def __init__(self, center: str, actions: Mapping[Iterable[str], Action]):
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "actions", tuple((frozenset(k), v) for k, v in actions.items()))

    def action_for(self, e: Edge) -> Action | None:
        return dict(self.actions).get(e.pair)


def default_transition(c: FiberConfig, center: str) -> FlopTransition:
    """Contract every (-1)-curve met by the center; leave other edges alone."""
    labels = c.labels
    actions = {}
    for e in c.edges_at(center):
        nb = e.other(center)
        curve = e.curve_on(nb)
        if curve is not None and labels[nb].is_minus_one_curve(curve):
            actions[e.pair] = CONTRACT
        else:
            actions[e.pair] = UNCHANGED
    return FlopTransition(center, actions)


def _primed(cid: str, taken: set[str]) -> str:
    new = cid + "'"
    while new in taken:
        new += "'"
    return new


def apply_flop(c: FiberConfig, t: FlopTransition) -> FiberConfig:
    labels = c.labels
    if t.center not in labels:
        raise FiberError(f"unknown center {t.center!r}")
    if labels[t.center] != PROJECTIVE_PLANE:
        raise FiberError(f"flop center {t.center} must be a projective plane, got {labels[t.center]}")
    by_pair = {e.pair: e for e in c.edges}
    for pair, _ in t.actions:
        if pair not in by_pair:
            raise FiberError(f"action given for missing edge {'--'.join(sorted(pair))}")
    for e in c.edges_at(t.center):
        if t.action_for(e) is None:
            raise FiberError(f"edge {e.label()} at the center has no action")

    new_labels = dict(labels)
    rewritten = {t.center}
    new_edges = []
    for e in c.edges:
        act = t.action_for(e) or UNCHANGED
        if act.kind == "Unchanged":
            new_edges.append(e)
        elif act.kind == "RelabelTo":
            new_edges.append(Edge(e.a, e.b, act.curves, e.notes))
        else:
            if t.center not in (e.a, e.b):
                raise FiberError(f"edge {e.label()}: can only contract curves on neighbors of the center")
            nb = e.other(t.center)
            curve = e.curve_on(nb)
            if curve is None:
                raise FiberError(f"edge {e.label()}: a point contact has no curve to contract")
            if not labels[nb].is_minus_one_curve(curve):
                raise FiberError(f"edge {e.label()}: {curve} on {nb} ({labels[nb]}) is not a (-1)-curve")
            if nb in rewritten:
                raise FiberError(f"edge {e.label()}: {nb} already contracted in this flop")
            if labels[nb] not in CONTRACTION_TABLE:
                raise FiberError(f"edge {e.label()}: no contraction rule for {labels[nb]}")
            new_labels[nb] = CONTRACTION_TABLE[labels[nb]]
            rewritten.add(nb)
            new_edges.append(Edge(e.a, e.b, None, e.notes))

    taken = set(labels)
    rename = {}
    for cid in sorted(labels):
        if cid in rewritten:
            rename[cid] = _primed(cid, taken)
            taken.add(rename[cid])
        else:
            rename[cid] = cid
    edges = [Edge(rename[e.a], rename[e.b], e.curves, e.notes) for e in new_edges]
    return FiberConfig([(rename[cid], s) for cid, s in new_labels.items()], edges)


# fixtures

P2 = PROJECTIVE_PLANE


def builtin_fixtures() -> dict[str, FiberConfig]:
    return {
        # Hilb^2 of the A1 resolution: the plane meets Sigma_4 along a conic
        # that is the negative section of Sigma_4
        "example-2.7": FiberConfig(
            {"P2": P2, "F": Surface("Hirzebruch", 4)},
            [Edge("P2", "F", (Curve("Conic"), Curve("NegativeSection")), (("(C^2)_S", -2),))],
        ),
        # Hilb^2 of the A2 resolution.  Only contacts stated outright are
        # encoded; E_C, E_D meet the planes along a conic / negative section.
        "sec5-full": FiberConfig(
            {"Q": Surface("PointBlowupOfQuadric"), "P_C": P2, "P_D": P2,
             "E_C": Surface("Hirzebruch", 4), "E_D": Surface("Hirzebruch", 4)},
            [
                Edge("Q", "P_C", (Curve("MinusOneCurve"), Curve("Line")), (("(l_C,e)", 1),)),
                Edge("Q", "P_D", (Curve("MinusOneCurve"), Curve("Line")), (("(l_D,e)", 1),)),
                Edge("P_C", "E_C", (Curve("Conic"), Curve("NegativeSection"))),
                Edge("P_D", "E_D", (Curve("Conic"), Curve("NegativeSection"))),
            ],
        ),
        # after flopping P_C: neighborhood of the point q
        "sec5-local-before": FiberConfig(
            {"P_D": P2, "Q": Surface("Hirzebruch", 1)},
            [Edge("P_D", "Q", (Curve("Line"), Curve("NegativeSection")))],
        ),
        "sec5-local-after": FiberConfig(
            {"P_D": P2, "Q": P2},
            [Edge("P_D", "Q", None)],
        ),
    }


def builtin_transitions() -> dict[str, tuple[str, FlopTransition]]:
    """Named flops as ``(fixture name, transition)``."""
    return {
        "flop-P_C": ("sec5-full", FlopTransition("P_C", {
            ("Q", "P_C"): CONTRACT,
            ("Q", "P_D"): relabel_to(Curve("NegativeSection"), Curve("Line")),
            ("P_C", "E_C"): UNCHANGED,
        })),
        "flop-P_D": ("sec5-local-before", FlopTransition("P_D", {("P_D", "Q"): CONTRACT})),
    }
