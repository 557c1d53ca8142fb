from .family import kanenobu_diagram, twist_crossing_indices
from .operations import (
    arc_ends,
    bridge_length,
    connected_sum,
    disjoint_union,
    is_alternating,
    mirror,
    reidemeister_one,
    reidemeister_two,
    resolve,
    switch,
)
from .pdfile import format_pd, load_fixture, parse_pd, read_pd, write_pd
from .planar import PlanarDiagram
from .states import ResolutionState, circle_count, state_circles


def validate(d: PlanarDiagram) -> PlanarDiagram:
    return d.validate()


__all__ = [
    "PlanarDiagram",
    "ResolutionState",
    "arc_ends",
    "bridge_length",
    "circle_count",
    "connected_sum",
    "disjoint_union",
    "format_pd",
    "is_alternating",
    "kanenobu_diagram",
    "load_fixture",
    "mirror",
    "parse_pd",
    "read_pd",
    "reidemeister_one",
    "reidemeister_two",
    "resolve",
    "state_circles",
    "switch",
    "twist_crossing_indices",
    "validate",
    "write_pd",
]
