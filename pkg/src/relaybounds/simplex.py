"""Dense primal simplex for small scheduling linear programs.

Solves   maximize c.x   subject to  A x <= b,  x >= 0,  with b >= 0,
so the slack basis is immediately feasible and no phase-1 is needed.
Bland's smallest-index rule everywhere: slower than steepest-edge but
cycle-free and deterministic, which the snapshot tests rely on.  Problem
sizes here stay near 2**(K-2) + 1 on a side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_FEAS_TOL = 1e-9


class SimplexError(RuntimeError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    x: np.ndarray
    objective: float
    iterations: int


def solve_max(c, A, b, max_iter: int = 200_000) -> SimplexResult:
    """Maximize c.x s.t. A x <= b (b >= 0), x >= 0."""
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    m, n = A.shape
    if b.shape != (m,) or c.shape != (n,):
        raise ValueError(f"shape mismatch: A {A.shape}, b {b.shape}, c {c.shape}")
    if np.any(b < -_FEAS_TOL):
        raise ValueError("needs b >= 0 for a feasible slack start")

    # tableau: [A | I | b] with objective row [-c | 0 | 0]
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = A
    tab[:m, n: n + m] = np.eye(m)
    tab[:m, -1] = np.maximum(b, 0.0)
    tab[m, :n] = -c
    basis = list(range(n, n + m))

    for it in range(max_iter):
        reduced = tab[m, :-1]
        entering = -1
        for j in range(n + m):  # Bland: smallest index with negative reduced cost
            if reduced[j] < -_FEAS_TOL:
                entering = j
                break
        if entering < 0:
            x = np.zeros(n + m)
            for row, var in enumerate(basis):
                x[var] = tab[row, -1]
            return SimplexResult(x=x[:n], objective=float(tab[m, -1]), iterations=it)

        col = tab[:m, entering]
        rows = np.where(col > _FEAS_TOL)[0]
        if rows.size == 0:
            raise SimplexError("objective unbounded above (missing constraint?)")
        ratios = tab[rows, -1] / col[rows]
        best = ratios.min()
        # Bland tie-break: among minimal ratios, the smallest basis variable
        tied = rows[ratios <= best + _FEAS_TOL * (1.0 + abs(best))]
        leaving_row = min(tied, key=lambda r: basis[r])

        pivot = tab[leaving_row, entering]
        tab[leaving_row] /= pivot
        for r in range(m + 1):
            if r != leaving_row and tab[r, entering] != 0.0:
                tab[r] -= tab[r, entering] * tab[leaving_row]
        basis[leaving_row] = entering
    raise SimplexError(f"iteration budget {max_iter} exhausted")
