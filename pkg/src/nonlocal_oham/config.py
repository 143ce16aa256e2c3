from __future__ import annotations

import enum
from dataclasses import dataclass

from .poly import Polynomial


class PStrategy(enum.Enum):
    """How the nonlocal value ``p_k`` is formed inside the recursion.

    FROZEN       p_k = int y_0 at every stage.
    PARTIAL_SUM  p_k = int (y_0 + ... + y_k).
    EXPANSION    1/alpha(p) is Taylor-expanded in the embedding parameter
                 around int y_0 and multiplied into the homotopy coefficients.
    """

    FROZEN = "frozen"
    PARTIAL_SUM = "partial-sum"
    EXPANSION = "expansion"


OPTIMIZE = "optimal"


@dataclass(frozen=True)
class SolverConfig:
    order: int = 2
    c0: float | str = OPTIMIZE          # a nonzero float, or OPTIMIZE
    p_strategy: PStrategy = PStrategy.FROZEN
    residual_points: int = 100
    bracket: tuple[float, float] = (-1.95, -0.05)
    scan_points: int = 39
    opt_tol: float = 1e-8
    norm_grid: int = 201
    initial_guess: Polynomial | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.residual_points < 2:
            raise ValueError("residual_points must be >= 2")
        lo, hi = self.bracket
        if not lo < hi < 0:
            raise ValueError(f"bracket must satisfy lo < hi < 0, got {self.bracket}")
        if self.scan_points < 3:
            raise ValueError("scan_points must be >= 3")
        if not self.opt_tol > 0:
            raise ValueError("opt_tol must be positive")
        if self.norm_grid < 2:
            raise ValueError("norm_grid must be >= 2")
        if self.c0 != OPTIMIZE:
            if isinstance(self.c0, str) or self.c0 == 0:
                raise ValueError(f"c0 must be a nonzero number or {OPTIMIZE!r}, got {self.c0!r}")

    @property
    def optimize(self) -> bool:
        return self.c0 == OPTIMIZE
