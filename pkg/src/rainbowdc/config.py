from __future__ import annotations

import dataclasses
from typing import Optional


@dataclasses.dataclass(frozen=True)
class Budgets:
    """Size limits for the exact searches; exceeding one yields an unresolved result."""

    max_rd_edges: int = 20
    max_chi_edges: int = 25
    max_rvd_vertices: int = 10
    max_nodes: Optional[int] = None

    def __post_init__(self):
        for f in dataclasses.fields(self):
            val = getattr(self, f.name)
            if val is not None and val <= 0:
                raise ValueError(f"{f.name} must be positive")


DEFAULT_BUDGETS = Budgets()
