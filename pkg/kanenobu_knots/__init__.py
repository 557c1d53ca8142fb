from .app import InvariantReport, build_report, compute_invariant, kanenobu_report
from .diagram import PlanarDiagram, kanenobu_diagram, read_pd
from .kanenobu import crossing_number

__all__ = ["InvariantReport",
    "PlanarDiagram",
    "build_report",
    "compute_invariant",
    "crossing_number",
    "kanenobu_diagram",
    "kanenobu_report",
    "read_pd",]
