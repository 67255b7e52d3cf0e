"""Exact linear algebra over Z, Z_m and GF(2).

All arithmetic is done on Python ints, so nothing overflows.  Matrices are
accepted as anything that iterates as rows of integers (lists, tuples or
integer numpy arrays) and returned as tuples of tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from math import gcd, prod
from typing import Iterator, Sequence

from .exceptions import InvariantViolation

__all__ = [
    "SmithDecomposition",
    "ModInvariants",
    "SolutionSpace",
    "integer_snf",
    "invariant_divisors_mod",
    "rank_gf2",
    "solve_gf2",
    "solve_mod",
    "enumerate_solutions",
    "composition_length",
    "matmul",
]

Matrix = tuple[tuple[int, ...], ...]


def _as_rows(M) -> list[list[int]]:
    return [[int(x) for x in row] for row in M]


def matmul(A, B) -> Matrix:
    A, B = _as_rows(A), _as_rows(B)
    if not A or not B:
        return ()
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


@dataclass(frozen=True)
class SmithDecomposition:
    """Integer Smith form ``P @ M @ Q == diag(diag) (+ zero padding)``.

    ``P`` is k x k and ``Q`` is n x n, both unimodular.
    """

    P: Matrix
    Q: Matrix
    diag: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def r(self) -> int:
        return len(self.diag)

    def diagonal_matrix(self) -> Matrix:
        k, n = self.shape
        return tuple(
            tuple(self.diag[i] if i == j and i < self.r else 0 for j in range(n)) for i in range(k)
        )


@dataclass(frozen=True)
class ModInvariants:
    modulus: int
    divisors: tuple[int, ...]

    @property
    def r_m(self) -> int:
        return len(self.divisors)


@dataclass(frozen=True)
class SolutionSpace:
    """Solutions of ``B y = c (mod m)`` as ``particular + sum t_j * basis_j``.

    Parameter ``t_j`` ranges over ``Z_{free_moduli[j]}``; distinct parameter
    tuples give distinct solutions.  ``particular`` is None when the system
    is inconsistent.
    """

    modulus: int
    dimension: int
    particular: tuple[int, ...] | None
    free_moduli: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def cardinality(self) -> int:
        return prod(self.free_moduli) if self.consistent else 0

    def vector(self, params: Sequence[int]) -> tuple[int, ...]:
        m = self.modulus
        y = list(self.particular)
        for t, b in zip(params, self.basis):
            if t:
                for i, bi in enumerate(b):
                    y[i] += t * bi
        return tuple(v % m for v in y)


def integer_snf(M) -> SmithDecomposition:
    """Smith normal form over Z with unimodular transforms.

    Pivoting uses the smallest nonzero absolute value in the remaining block;
    after a row and column are cleared, any entry not divisible by the pivot
    is folded back into the pivot row so the divisibility chain comes out
    directly.
    """
    A = _as_rows(M)
    k = len(A)
    n = len(A[0]) if k else 0
    P = [[int(i == j) for j in range(k)] for i in range(k)]
    Q = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        P[dst] = [a + f * b for a, b in zip(P[dst], P[src])]

    def add_col(dst, src, f):
        for row in A:
            row[dst] += f * row[src]
        for row in Q:
            row[dst] += f * row[src]

    diag = []
    for t in range(min(k, n)):
        best = None
        for i in range(t, k):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, k):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                # a remainder smaller than |p| is left in the pivot cross
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, k) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, k) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            P[t] = [-a for a in P[t]]
        diag.append(A[t][t])

    snf = SmithDecomposition(
        P=tuple(map(tuple, P)), Q=tuple(map(tuple, Q)), diag=tuple(diag), shape=(k, n)
    )
    for a, b in zip(diag, diag[1:]):
        if b % a:
            raise InvariantViolation(f"Smith diagonal {diag} breaks the divisibility chain")
    return snf


def invariant_divisors_mod(snf: SmithDecomposition, m: int) -> ModInvariants:
    """Invariant divisors over Z_m: ``gcd(s_i, m)`` for each factor, dropping those equal to m."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    divisors = tuple(g for g in (gcd(s, m) for s in snf.diag) if g != m)
    return ModInvariants(modulus=m, divisors=divisors)


def _gf2_rows(M) -> tuple[list[int], int]:
    rows = _as_rows(M)
    n = len(rows[0]) if rows else 0
    bits = []
    for row in rows:
        word = 0
        for j, x in enumerate(row):
            if x & 1:
                word |= 1 << j
        bits.append(word)
    return bits, n


def _gf2_eliminate(rows: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form on bitset rows; returns (pivot rows, pivot columns)."""
    work = rows[:]
    pivots = []
    r = 0
    for col in range(n_cols):
        bit = 1 << col
        hit = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if hit is None:
            continue
        work[r], work[hit] = work[hit], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_gf2(M) -> int:
    """Rank of ``M`` with entries reduced mod 2."""
    rows, n = _gf2_rows(M)
    return len(_gf2_eliminate(rows, n)[1])


def solve_gf2(M, c: Sequence[int]) -> tuple[int, ...] | None:
    """One solution of ``M y = c`` over GF(2) (free variables zero), or None."""
    rows, n = _gf2_rows(M)
    # right-hand side rides in bit n of each row
    aug = [row | ((int(ci) & 1) << n) for row, ci in zip(rows, c)]
    reduced, pivots = _gf2_eliminate(aug, n + 1)
    if n in pivots:
        return None
    y = [0] * n
    for row, col in zip(reduced, pivots):
        y[col] = (row >> n) & 1
    return tuple(y)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def solve_mod(B, c: Sequence[int], m: int, pin_first: bool = False) -> SolutionSpace:
    """Describe ``{y in Z_m^n : B y = c (mod m)}`` through the Smith form of B.

    With ``pin_first`` the set is intersected with ``y_1 = 0``.  Every row of
    B must then sum to a multiple of m, so that the pinned set is a
    transversal of the all-ones direction.  Inconsistent systems return a
    space whose ``particular`` is None.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    rows = _as_rows(B)
    c = [int(x) for x in c]
    if len(c) != len(rows):
        raise ValueError(f"right-hand side has length {len(c)}, expected {len(rows)}")
    n = len(rows[0]) if rows else 0
    if pin_first:
        if n == 0:
            raise ValueError("cannot pin a coordinate of a zero-column system")
        if any(sum(row) % m for row in rows):
            raise ValueError("pin_first requires B @ 1 == 0 (mod m)")
        # y_1 = 0 as an extra equation; the pinned module is S / (Z_m * 1)
        rows = rows + [[1] + [0] * (n - 1)]
        c = c + [0]

    snf = integer_snf(rows)
    k = len(rows)
    c2 = [sum(p * x for p, x in zip(prow, c)) % m for prow in snf.P]

    z = [0] * n
    consistent = True
    for i, s in enumerate(snf.diag):
        g, _, _ = _egcd(s, m)
        if c2[i] % g:
            consistent = False
            break
        step = m // g
        if step > 1:
            _, inv, _ = _egcd((s // g) % step, step)
            z[i] = (c2[i] // g) * inv % step
    if consistent and any(c2[i] for i in range(snf.r, k)):
        consistent = False

    moduli, gens = [], []
    for i, s in enumerate(snf.diag):
        g = gcd(s, m)
        if g > 1:
            moduli.append(g)
            gens.append(tuple(row[i] * (m // g) % m for row in snf.Q))
    for i in range(snf.r, n):
        moduli.append(m)
        gens.append(tuple(row[i] % m for row in snf.Q))

    particular = None
    if consistent:
        particular = tuple(sum(q * zi for q, zi in zip(row, z)) % m for row in snf.Q)
    return SolutionSpace(
        modulus=m,
        dimension=n,
        particular=particular,
        free_moduli=tuple(moduli),
        basis=tuple(gens),
    )


def enumerate_solutions(space: SolutionSpace, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield up to ``cap`` solutions, parameters in mixed-radix lexicographic order.

    ``cap=None`` means no limit.
    """
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    if not space.consistent:
        return
    params = product(*(range(c) for c in space.free_moduli))
    for t in islice(params, cap):
        yield space.vector(t)


def composition_length(d: int) -> int:
    """Sum of the prime exponents of ``d`` (``cl(1) == 0``)."""
    if d < 1:
        raise ValueError(f"composition length needs d >= 1, got {d}")
    total = 0
    p = 2
    while p * p <= d:
        while d % p == 0:
            d //= p
            total += 1
        p += 1
    return total + (d > 1)
