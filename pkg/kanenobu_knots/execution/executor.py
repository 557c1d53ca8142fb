import datetime, logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Tuple

from kanenobu_knots.algebra import breadth
from kanenobu_knots.diagram import (
    disjoint_union,
    is_alternating,
    kanenobu_diagram,
    load_fixture,
    mirror,
    resolve,
    twist_crossing_indices,
)
from kanenobu_knots.kanenobu import (
    FAMILY_TABLES,
    Exact,
    breadth_closed_form,
    crossing_number,
    jones_closed_form,
    jones_crossing_lower_bound,
    khovanov_closed_form,
    kidwell_audit,
    q_closed_form,
    q_degree_closed_form,
)
from kanenobu_knots.khovanov import (
    euler_check,
    homology_dims,
    knight_move_check,
    kunneth,
    lee_degrees,
    les_subadditivity_check,
    mirror_dims,
    thinness_s,
)
from kanenobu_knots.polyinv import KauffmanEngine, jones, q_polynomial

logger = logging.getLogger(__name__)

SUITES = ("jones", "q", "khovanov", "structure", "lee", "crossing", "kidwell", "closed")
DEFAULT_MAX = {"jones": 3, "q": 2, "khovanov": 2, "structure": 1, "lee": 1, "kidwell": 2, "closed": 6,
               "crossing": 10}
DEFAULT_SUM_MAX = 3

Check = Tuple[str, Dict[str, Any]]

_ENGINE: Optional[KauffmanEngine] = None


def _engine() -> KauffmanEngine:
    # one memo per worker process; values depend only on the diagram
    global _ENGINE
    if _ENGINE is None:
        _ENGINE = KauffmanEngine()
    return _ENGINE


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _grid(m: int):
    return [(p, q) for p in range(-m, m + 1) for q in range(-m, m + 1)]


# --- individual checks: each returns (passed, outputs) -------------------------

def check_jones(p: int, q: int):
    v = jones(kanenobu_diagram(p, q))
    expected = jones_closed_form(p, q)
    return v == expected, {"jones": str(v)}


def check_q(p: int, q: int):
    qx = q_polynomial(kanenobu_diagram(p, q), _engine())
    degree = int(qx.max_exponent)
    ok = qx == q_closed_form(p, q) and degree == q_degree_closed_form(p, q)
    return ok, {"q": str(qx), "deg": degree}


def check_khovanov(p: int, q: int):
    dims = homology_dims(kanenobu_diagram(p, q))
    return dims == khovanov_closed_form(p, q), {"total": dims.total}


def check_fixture_table(name: str):
    d = load_fixture(name)
    dims = homology_dims(d)
    return dims == FAMILY_TABLES.fig8, {"rows": dims.rows()}


def check_family_base_table():
    dims = homology_dims(kanenobu_diagram(0, 0))
    return dims == FAMILY_TABLES.t0, {"total": dims.total, "max": dims.max_dim()}


def check_split_table():
    d = load_fixture("4_1")
    dims = homology_dims(disjoint_union(d, d))
    return dims == FAMILY_TABLES.kk, {"total": dims.total, "max": dims.max_dim()}


def check_structure(p: int, q: int):
    d = kanenobu_diagram(p, q)
    dims = homology_dims(d)
    s = thinness_s(dims)
    ok = euler_check(dims, jones(d)) and s == 0 and knight_move_check(dims, 0)
    return ok, {"s": s}


def check_mirror(target: str):
    d = load_fixture("4_1") if target == "4_1" else kanenobu_diagram(int(target), 0)
    ok = homology_dims(mirror(d)) == mirror_dims(homology_dims(d))
    return ok, {}


def check_kunneth():
    d = load_fixture("4_1")
    dims = homology_dims(d)
    return homology_dims(disjoint_union(d, d)) == kunneth(dims, dims), {}


def check_les(p: int, q: int):
    d = kanenobu_diagram(p, q)
    failed = [c for c in range(d.n) if not les_subadditivity_check(d, c)]
    return not failed, {"failed_crossings": failed}


def check_lee(target: str, expected: List[int]):
    if target.startswith("K("):
        p, q = (int(a) for a in target[2:-1].split(","))
        d = kanenobu_diagram(p, q)
    else:
        d = load_fixture(target)
    degrees = lee_degrees(d)
    return degrees == expected, {"degrees": degrees}


def check_crossing(p: int, q: int, expected: Optional[str] = None):
    result = crossing_number(p, q)
    ok = str(result) == str(crossing_number(q, p)) == str(crossing_number(-p, -q))
    if isinstance(result, Exact):
        ok = ok and result.n >= jones_crossing_lower_bound(p, q)
    if expected is not None:
        ok = ok and str(result) == expected
    return ok, {"result": str(result)}


def check_kidwell(p: int, q: int):
    report = kidwell_audit(p, q, _engine())
    d = kanenobu_diagram(p, q)
    if (p, q) != (0, 0) and not is_alternating(d):
        breadth_ok = report.breadth_below_crossings
    else:
        breadth_ok = report.jones_breadth <= report.crossings
    ok = (report.inequality_holds and breadth_ok and report.crossings == abs(p) + abs(q) + 8
          and report.deg_q == q_degree_closed_form(p, q))
    return ok, report.to_dict()


def check_closed(p: int, q: int):
    dims = khovanov_closed_form(p, q)
    v = jones_closed_form(p, q)
    ok = (euler_check(dims, v) and thinness_s(dims) == 0 and knight_move_check(dims, 0)
          and breadth_closed_form(p, q) == breadth(v)
          and int(q_closed_form(p, q).max_exponent) == q_degree_closed_form(p, q))
    return ok, {"breadth": breadth_closed_form(p, q)}


def check_twist_resolution(p: int):
    """The unoriented smoothing of one twist crossing of K(p,0) leaves K(p -/+ 1, 0)."""
    d = kanenobu_diagram(p, 0)
    c = twist_crossing_indices(p, 0)[0][0]
    r = 0 if d.signs[c] < 0 else 1
    smaller = resolve(d, c, r)
    step = 1 if p < 0 else -1
    return jones(smaller) == jones_closed_form(p + step, 0), {"crossings": smaller.n}


CHECKS: Dict[str, Callable] = {
    f.__name__: f for f in (
        check_jones, check_q, check_khovanov, check_fixture_table, check_family_base_table,
        check_split_table, check_structure, check_mirror, check_kunneth, check_les, check_lee,
        check_crossing, check_kidwell, check_closed, check_twist_resolution,
    )
}


# --- suite planning -------------------------------------------------------------

def plan(suite: str, max_abs: Optional[int] = None, sum_max: Optional[int] = None) -> List[Check]:
    if suite == "all":
        return [c for name in SUITES for c in plan(name, max_abs, sum_max)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    m = DEFAULT_MAX.get(suite, 0) if max_abs is None else max_abs
    s_max = DEFAULT_SUM_MAX if sum_max is None else sum_max

    if suite == "jones":
        return [("check_jones", {"p": p, "q": q}) for p, q in _grid(m)]
    if suite == "q":
        return [("check_q", {"p": p, "q": q}) for p, q in _grid(m)]
    if suite == "khovanov":
        checks: List[Check] = [("check_fixture_table", {"name": "4_1"}),
                               ("check_family_base_table", {}),
                               ("check_split_table", {})]
        checks += [("check_khovanov", {"p": p, "q": q}) for p, q in _grid(min(m, 2))
                   if abs(p + q) <= s_max and (p, q) != (0, 0)]
        return checks
    if suite == "structure":
        checks = [("check_mirror", {"target": "4_1"}), ("check_kunneth", {})]
        if m >= 1:
            checks += [("check_mirror", {"target": t}) for t in ("1", "-1")]
            checks.append(("check_les", {"p": 1, "q": 0}))
        checks += [("check_structure", {"p": p, "q": q}) for p, q in _grid(min(m, 1))]
        checks += [("check_twist_resolution", {"p": p}) for p in (-2, -1, 1, 2) if abs(p) <= m]
        return checks
    if suite == "lee":
        checks = [("check_lee", {"target": "4_1", "expected": [0, 0]}),
                  ("check_lee", {"target": "K(0,0)", "expected": [0, 0]}),
                  ("check_lee", {"target": "unlink2", "expected": [0, 0, 0, 0]}),
                  ("check_lee", {"target": "hopf", "expected": [0, 0, 2, 2]})]
        if m >= 1:
            checks.append(("check_lee", {"target": "K(1,0)", "expected": [0, 0]}))
        return checks
    if suite == "crossing":
        expected = {(1, -1): "Exact(8)", (-1, 1): "Exact(8)", (1, 0): "Exact(8)", (-1, 0): "Exact(8)",
                    (0, 1): "Exact(8)", (0, -1): "Exact(8)", (0, 0): "Exact(8)",
                    (2, -1): "Exact(10)", (3, -1): "Exact(11)", (2, 3): "Exact(13)",
                    (3, -2): "Bounds(12, 13, conjectured=13)", (-2, 2): "Bounds(11, 12, conjectured=12)"}
        checks = [("check_crossing", {"p": p, "q": q, "expected": e}) for (p, q), e in expected.items()
                  if max(abs(p), abs(q)) <= m]
        checks += [("check_crossing", {"p": p, "q": q}) for p, q in _grid(m)]
        return checks
    if suite == "kidwell":
        return [("check_kidwell", {"p": p, "q": q}) for p, q in _grid(m)]
    return [("check_closed", {"p": p, "q": q}) for p, q in _grid(m)]


# --- execution --------------------------------------------------------------------

def run_check(step_id: str, name: str, inputs: Dict[str, Any]) -> Dict[str, Any]:
    record = {
        "step_id": step_id,
        "action": name,
        "start_at": _now(),
        "inputs": inputs,
        "outputs": {},
        "status": "pending",
    }
    try:
        passed, outputs = CHECKS[name](**inputs)
        record["outputs"] = outputs
        record["status"] = "success" if passed else "failed"
    except Exception as e:
        record["status"] = "error"
        record["error"] = f"{type(e).__name__}: {e}"
    finally:
        record["end_at"] = _now()
    return record


def _run_indexed(args):
    return run_check(*args)


def run_suite(suite: str, max_abs: Optional[int] = None, sum_max: Optional[int] = None,
              workers: int = 1, echo: Callable[[str], None] = None) -> List[Dict[str, Any]]:
    checks = plan(suite, max_abs, sum_max)
    jobs = [(f"step {i + 1}", name, inputs) for i, (name, inputs) in enumerate(checks)]
    logger.info("suite %s: %d checks on %d worker(s)", suite, len(jobs), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = pool.map(_run_indexed, jobs)
            results = []
            for record in records:
                results.append(record)
                _report(record, echo)
            return results
    results = []
    for job in jobs:
        record = _run_indexed(job)
        results.append(record)
        _report(record, echo)
    return results


def _report(record: Dict[str, Any], echo) -> None:
    if echo is None:
        return
    marker = "✅" if record["status"] == "success" else "❌"
    args = ", ".join(f"{k}={v}" for k, v in record["inputs"].items())
    line = f"{marker} {record['step_id']} {record['action']}({args}) {record['status']}"
    if "error" in record:
        line += f": {record['error']}"
    echo(line)


def all_passed(records: List[Dict[str, Any]]) -> bool:
    return all(r["status"] == "success" for r in records)
