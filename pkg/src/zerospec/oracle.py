"""Independent checks: edge-wise tensor application and brute-force counting.

Nothing here touches the Smith form, so agreement with :mod:`zerospec.spectral`
is meaningful.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .hypergraph import Hypergraph

TensorKind = Literal["adjacency", "laplacian", "signless"]

DEFAULT_TOL = 1e-9
BRUTE_FORCE_BUDGET = 10**6

__all__ = [
    "apply_tensor",
    "residual",
    "exponent_to_vector",
    "gauge_from_exponents",
    "verify_diag_similarity",
    "brute_force_count",
    "BruteForceBudgetError",
    "DEFAULT_TOL",
]


class BruteForceBudgetError(ValueError):
    pass


@lru_cache(maxsize=64)
def _roots_of_unity(m: int) -> np.ndarray:
    table = np.exp(2j * np.pi * np.arange(m) / m)
    # pin the values that have exact representations
    table[0] = 1.0
    if m % 2 == 0:
        table[m // 2] = -1.0
    if m % 4 == 0:
        table[m // 4] = 1j
        table[3 * m // 4] = -1j
    table.setflags(write=False)
    return table


def exponent_to_vector(alpha: Sequence[int], m: int | None = None) -> np.ndarray:
    """``x_j = exp(2 pi i alpha_j / m)``; accepts a ResidueEigenvector or a sequence."""
    if m is None:
        alpha, m = alpha.alpha, alpha.modulus
    idx = np.asarray(alpha, dtype=np.int64) % m
    return _roots_of_unity(m)[idx]


def apply_tensor(H: Hypergraph, kind: TensorKind, x) -> np.ndarray:
    """Compute ``T x^(m-1)`` for the adjacency, Laplacian or signless Laplacian tensor.

    The adjacency part is ``sum over edges e containing i of prod_{j in e, j != i} x_j``;
    the order-m tensor is never built.  Integer input is evaluated exactly
    with Python ints.
    """
    if kind not in ("adjacency", "laplacian", "signless"):
        raise ValueError(f"unknown tensor kind {kind!r}")
    x = np.asarray(x)
    if x.shape != (H.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({H.n},)")
    exact = np.issubdtype(x.dtype, np.integer)
    if exact:
        x = x.astype(object)
        out = np.zeros(H.n, dtype=object)
    else:
        x = x.astype(complex)
        out = np.zeros(H.n, dtype=complex)

    for edge in H.edges:
        idx = [v - 1 for v in edge]
        vals = x[idx]
        for pos, i in enumerate(idx):
            term = 1
            for q, val in enumerate(vals):
                if q != pos:
                    term = term * val
            out[i] += term
    if kind == "adjacency":
        return out
    deg = np.array(H.degrees(), dtype=object if exact else float)
    diag = deg * x ** (H.m - 1)
    return diag - out if kind == "laplacian" else diag + out


def residual(H: Hypergraph, kind: TensorKind, lam: complex, x) -> float:
    """Relative infinity-norm residual of ``T x^(m-1) = lam x^[m-1]``."""
    x = np.asarray(x)
    if x.shape != (H.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({H.n},)")
    if not np.any(x):
        raise ValueError("residual is undefined for the zero vector")
    lhs = apply_tensor(H, kind, x)
    diff = lhs - lam * x.astype(lhs.dtype) ** (H.m - 1) if lam else lhs
    num = float(np.max(np.abs(diff.astype(complex))))
    scale = max(1.0, float(np.max(np.abs(x.astype(complex))))) ** (H.m - 1)
    return num / scale


def gauge_from_exponents(y: Sequence[int], m: int) -> np.ndarray:
    """Unit diagonal ``d_v = exp(2 pi i y_v / m)`` built from a coloring."""
    return exponent_to_vector(y, m)


def verify_diag_similarity(H: Hypergraph, gauge, tol: float = DEFAULT_TOL) -> bool:
    """Check ``Q(H) == D^-(m-1) L(H) D`` entrywise for ``D = diag(gauge)``.

    Diagonal entries agree for any unit gauge.  On the entry indexed by an
    edge ``e`` led by ``i``, L carries ``-1/(m-1)!`` and Q ``+1/(m-1)!``, so the
    check is ``-d_i^-(m-1) prod_{j in e, j != i} d_j == 1``.
    """
    d = np.asarray(gauge, dtype=complex)
    if d.shape != (H.n,):
        raise ValueError(f"gauge has shape {d.shape}, expected ({H.n},)")
    if np.any(np.abs(np.abs(d) - 1.0) > tol):
        raise ValueError("gauge entries must have unit modulus")
    for edge in H.edges:
        vals = d[[v - 1 for v in edge]]
        for pos in range(H.m):
            others = np.prod(np.delete(vals, pos))
            entry = -(vals[pos] ** -(H.m - 1)) * others
            if abs(entry - 1.0) > tol:
                return False
    return True


def brute_force_count(
    B, c: Sequence[int], m: int, pin_first: bool = False, budget: int = BRUTE_FORCE_BUDGET
) -> int:
    """Count ``y in Z_m^n`` (``y_1 = 0`` if pinned) with ``B y = c (mod m)`` exhaustively."""
    B = np.asarray(B, dtype=np.int64)
    k, n = B.shape
    c = np.asarray(c, dtype=np.int64) % m
    if c.shape != (k,):
        raise ValueError(f"right-hand side has shape {c.shape}, expected ({k},)")
    free = n - 1 if pin_first else n
    if m**n > budget:
        raise BruteForceBudgetError(f"{m}^{n} candidates exceeds the budget of {budget}")
    grid = np.indices((m,) * free, dtype=np.int64).reshape(free, -1)
    if pin_first:
        grid = np.vstack([np.zeros((1, grid.shape[1]), dtype=np.int64), grid])
    hits = ((B @ grid) % m == c[:, None]).all(axis=0)
    return int(hits.sum())
