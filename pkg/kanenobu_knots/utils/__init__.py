from .formatting import distinction_table, homology_table, report_table, steps_table

__all__ = ["distinction_table", "homology_table", "report_table", "steps_table"]
