from typing import Iterable, List, Sequence

from tabulate import tabulate

from kanenobu_knots.algebra import LaurentPoly1
from kanenobu_knots.khovanov import BigradedDims


def homology_table(dims: BigradedDims, tablefmt: str = "simple") -> str:
    """Rows are i ascending, columns j ascending; zero cells are blank."""
    if not len(dims):
        return "(zero homology)"
    columns = dims.quantum_degrees()
    rows = []
    for i in dims.homological_degrees():
        rows.append([i] + [dims[(i, j)] or "" for j in columns])
    headers = ["i \\ j"] + [str(j) for j in columns]
    return tabulate(rows, headers=headers, tablefmt=tablefmt, stralign="right")


def polynomial_line(label: str, pairs: Sequence[Sequence[int]], variable: str) -> List[str]:
    return [label, str(LaurentPoly1.from_pairs(pairs, variable))]


def report_table(report) -> str:
    """Human-readable rendering of an InvariantReport."""
    lines = [["input", ", ".join(f"{k}={v}" for k, v in report.input.items())],
             ["crossings", report.crossings],
             ["writhe", report.writhe],
             ["components", report.components]]
    if report.jones is not None:
        lines.append(polynomial_line("jones", report.jones, "t"))
        lines.append(["breadth", report.breadth])
    if report.q_poly is not None:
        lines.append(polynomial_line("q_poly", report.q_poly, "x"))
        lines.append(["deg_q", report.deg_q])
    if report.bridge is not None:
        lines.append(["bridge", report.bridge])
    if report.lee_degrees is not None:
        lines.append(["lee_degrees", " ".join(str(i) for i in report.lee_degrees)])
    if report.crossing_number is not None:
        lines.append(["crossing_number", _crossing_text(report.crossing_number)])
    for name, source in sorted(report.sources.items()):
        lines.append([f"source:{name}", source])
    for name, ok in sorted(report.checks.items()):
        lines.append([f"check:{name}", "pass" if ok else "FAIL"])
    for note in report.notes:
        lines.append(["note", note])
    if report.wall_time is not None:
        lines.append(["wall_time", f"{report.wall_time:.3f}s"])
    out = tabulate(lines, tablefmt="plain")
    if report.khovanov is not None:
        dims = report.khovanov_dims()
        out += f"\n\nKhovanov homology (total dimension {dims.total})\n" + homology_table(dims)
    return out


def _crossing_text(value: dict) -> str:
    if "exact" in value:
        return f"Exact({value['exact']})"
    return f"Bounds({value['lo']}, {value['hi']}, conjectured={value['conjectured']})"


def steps_table(steps: Iterable[dict]) -> str:
    rows = [[s["step_id"], s["action"], s["status"], s.get("error", "")] for s in steps]
    return tabulate(rows, headers=["step", "check", "status", "error"], tablefmt="simple")


def distinction_table(classes) -> str:
    rows = [[c.total_twist, len(c.members), c.khovanov_total, c.distinct_q] for c in classes]
    return tabulate(rows, headers=["p+q", "knots", "Kh total", "distinct Q"], tablefmt="simple")
