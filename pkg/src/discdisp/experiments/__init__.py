"""Reproductions, counterexample catalog and randomized audits."""

from .audit import AuditResult, TransitivityResult, preservation_audit, random_pair, transitivity_search
from .catalog import CatalogMismatch, CounterexampleCase, catalog, get_case, iqr_counterexample
from .curves import CurveTable, UniformScan, measure_curves, uniform_order_scan
from .data import table1, table2
from .geometric import SweepGrid, geom_region_theoretical, geom_sweep
from .sampling import HALF_GRID, LATTICE, RandomConfig, draw_rng, nested_pair, random_dist

__all__ = [
    "AuditResult",
    "TransitivityResult",
    "preservation_audit",
    "random_pair",
    "transitivity_search",
    "CatalogMismatch",
    "CounterexampleCase",
    "catalog",
    "get_case",
    "iqr_counterexample",
    "CurveTable",
    "UniformScan",
    "measure_curves",
    "uniform_order_scan",
    "table1",
    "table2",
    "SweepGrid",
    "geom_region_theoretical",
    "geom_sweep",
    "HALF_GRID",
    "LATTICE",
    "RandomConfig",
    "draw_rng",
    "nested_pair",
    "random_dist",
]
