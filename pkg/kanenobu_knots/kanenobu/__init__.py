from .audit import KidwellReport, kidwell_audit
from .closed_forms import (
    DistinctionClass,
    breadth_closed_form,
    jones_closed_form,
    jones_crossing_lower_bound,
    khovanov_closed_form,
    khovanov_distinction,
    q_closed_form,
    q_degree_closed_form,
    sigma,
)
from .crossing import Bounds, CrossingNumberResult, Exact, alternating_exceptions, crossing_number
from .tables import FAMILY_TABLES, FIG8, KK, T0, FamilyTables

__all__ = [
    "Bounds",
    "CrossingNumberResult",
    "DistinctionClass",
    "Exact",
    "FAMILY_TABLES",
    "FIG8",
    "FamilyTables",
    "KK",
    "KidwellReport",
    "T0",
    "alternating_exceptions",
    "breadth_closed_form",
    "crossing_number",
    "jones_closed_form",
    "jones_crossing_lower_bound",
    "khovanov_closed_form",
    "khovanov_distinction",
    "kidwell_audit",
    "q_closed_form",
    "q_degree_closed_form",
    "sigma",
]
