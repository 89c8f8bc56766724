"""Generator discovery: registry, constructions, cell engine and replay."""

from .construct import ConstructionError, ZeroConstruction, evaluate, parse
from .pipeline import (
    BudgetExceeded,
    CellEngine,
    CellReport,
    audit_registry,
    cell_orders,
    delta,
    expected_table,
    find_new_generators,
    recompute_distribution,
    replay_paper_constructions,
    run_pipeline,
    verify_distribution,
)
from .registry import GeneratorRecord, Registry, RegistryError, RegistryGap
from .table import DistributionTable

__all__ = [
    "BudgetExceeded", "CellEngine", "CellReport", "ConstructionError", "DistributionTable",
    "GeneratorRecord", "Registry", "RegistryError", "RegistryGap", "ZeroConstruction",
    "audit_registry", "cell_orders", "delta", "evaluate", "expected_table", "find_new_generators", "parse",
    "recompute_distribution",
    "replay_paper_constructions", "run_pipeline", "verify_distribution",
]
