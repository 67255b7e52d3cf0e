"""Counts, decisions and enumerations for zero-eigenvalue eigenvectors.

A first Laplacian (signless Laplacian) eigenvector of a connected m-uniform
hypergraph, normalised so that ``x_1 = 1``, is ``x_j = exp(2 pi i alpha_j / m)``
where the exponent vector ``alpha`` has ``alpha_1 = 0`` and every edge sum of
``alpha`` is ``0`` (resp. ``m/2``) mod m.  So everything here reduces to the
linear system ``B alpha = c (mod m)`` on the incidence matrix ``B``.  Real
(H-) eigenvectors are the ones with ``alpha`` in ``{0, m/2}``, which turns
into the same system over GF(2).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import cached_property
from math import prod
from typing import Iterator, Literal

from .exceptions import DisconnectedError, HypergraphError, InvariantViolation
from .hypergraph import Hypergraph, incidence_matrix, is_connected
from .linalg import (
    ModInvariants,
    SmithDecomposition,
    SolutionSpace,
    composition_length,
    enumerate_solutions,
    integer_snf,
    invariant_divisors_mod,
    rank_gf2,
    solve_gf2,
    solve_mod,
)

Kind = Literal["laplacian", "signless"]
Parity = Literal["even", "odd"]

__all__ = [
    "ResidueEigenvector",
    "Bipartition",
    "ZeroSpectrumReport",
    "ZeroSpectrum",
    "zero_spectrum_report",
    "count_first_laplacian",
    "count_first_signless",
    "count_H",
    "count_N",
    "is_odd_colorable",
    "is_odd_bipartite",
    "enumerate_eigenvectors",
    "enumerate_bipartitions",
]


@dataclass(frozen=True)
class ResidueEigenvector:
    alpha: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if not self.alpha or self.alpha[0] != 0:
            raise ValueError("exponent vector must start with 0")
        if any(not 0 <= a < self.modulus for a in self.alpha):
            raise ValueError(f"exponents must lie in 0..{self.modulus - 1}")


@dataclass(frozen=True)
class Bipartition:
    """``{V0, V1}`` with vertex 1 in ``V0``."""

    V0: tuple[int, ...]
    V1: tuple[int, ...]


@dataclass(frozen=True)
class ZeroSpectrumReport:
    n: int
    m: int
    k: int
    r_m: int
    divisors: tuple[int, ...]
    r_bar: int
    count_L: int
    count_Q: int
    countH_L: int
    countH_Q: int
    countN_L: int
    countN_Q: int
    odd_colorable: bool
    odd_bipartite: bool
    module_structure: tuple[int, ...]
    composition_length: int
    # bipartitions only correspond to H-eigenvectors for even m; None otherwise
    even_bipartitions: int | None
    odd_bipartitions: int | None

    def to_dict(self) -> dict:
        return asdict(self)

    def structure_string(self) -> str:
        if not self.module_structure:
            return "0"
        return " ⊕ ".join(f"Z{c}" for c in self.module_structure)


def _check_kind(kind: str) -> None:
    if kind not in ("laplacian", "signless"):
        raise ValueError(f"kind must be 'laplacian' or 'signless', got {kind!r}")


class ZeroSpectrum:
    """Lazily computed algebraic data of one connected hypergraph.

    The public functions below are thin wrappers; building this once and
    reusing it avoids recomputing the Smith form.
    """

    def __init__(self, H: Hypergraph):
        if H.k == 0:
            raise HypergraphError("hypergraph has no edges")
        if not is_connected(H):
            raise DisconnectedError("hypergraph is not connected; analyze its components")
        self.H = H
        self.m = H.m
        self.n = H.n
        self.B = incidence_matrix(H)

    @cached_property
    def snf(self) -> SmithDecomposition:
        return integer_snf(self.B)

    @cached_property
    def invariants(self) -> ModInvariants:
        inv = invariant_divisors_mod(self.snf, self.m)
        if not 1 <= inv.r_m <= self.n - 1:
            raise InvariantViolation(f"r_m = {inv.r_m} outside 1..{self.n - 1}")
        return inv

    @cached_property
    def r_bar(self) -> int:
        return rank_gf2(self.B)

    def _rhs(self, kind: Kind, m: int) -> list[int]:
        return [0 if kind == "laplacian" else m // 2] * self.H.k

    def space(self, kind: Kind) -> SolutionSpace:
        """Pinned exponent space over Z_m for ``kind``."""
        _check_kind(kind)
        return self._spaces[kind]

    @cached_property
    def _spaces(self) -> dict:
        out = {"laplacian": solve_mod(self.B, self._rhs("laplacian", self.m), self.m, True)}
        if self.m % 2 == 0:
            out["signless"] = solve_mod(self.B, self._rhs("signless", self.m), self.m, True)
        else:
            out["signless"] = SolutionSpace(self.m, self.n, None, (), ())
        return out

    def h_space(self, kind: Kind) -> SolutionSpace:
        """Pinned GF(2) space of sign patterns; only meaningful for even m."""
        _check_kind(kind)
        rhs = [0 if kind == "laplacian" else 1] * self.H.k
        return solve_mod(self.B, rhs, 2, pin_first=True)

    @cached_property
    def count_L(self) -> int:
        inv = self.invariants
        return self.m ** (self.n - 1 - inv.r_m) * prod(inv.divisors)

    @cached_property
    def odd_colorable(self) -> bool:
        return self.m % 2 == 0 and self.space("signless").consistent

    @cached_property
    def count_Q(self) -> int:
        return self.count_L if self.odd_colorable else 0

    @cached_property
    def bipartite_witness(self) -> tuple[int, ...] | None:
        if self.m % 2:
            return None
        y = solve_gf2(self.B, [1] * self.H.k)
        if y is None:
            return None
        # shift by the all-ones vector (in the kernel, m even) so y_1 = 0
        return tuple(v ^ y[0] for v in y)

    @cached_property
    def odd_bipartite(self) -> bool:
        return self.bipartite_witness is not None

    def count(self, kind: Kind) -> int:
        _check_kind(kind)
        return self.count_L if kind == "laplacian" else self.count_Q

    def count_H(self, kind: Kind) -> int:
        _check_kind(kind)
        if self.m % 2:
            return 1 if kind == "laplacian" else 0
        full = 2 ** (self.n - 1 - self.r_bar)
        if kind == "laplacian":
            return full
        return full if self.odd_bipartite else 0

    def count_N(self, kind: Kind) -> int:
        return self.count(kind) - self.count_H(kind)

    def module_structure(self) -> tuple[int, ...]:
        inv = self.invariants
        return tuple(d for d in inv.divisors if d != 1) + (self.m,) * (self.n - 1 - inv.r_m)

    def report(self) -> ZeroSpectrumReport:
        inv = self.invariants
        structure = self.module_structure()
        rep = ZeroSpectrumReport(
            n=self.n,
            m=self.m,
            k=self.H.k,
            r_m=inv.r_m,
            divisors=inv.divisors,
            r_bar=self.r_bar,
            count_L=self.count_L,
            count_Q=self.count_Q,
            countH_L=self.count_H("laplacian"),
            countH_Q=self.count_H("signless"),
            countN_L=self.count_N("laplacian"),
            countN_Q=self.count_N("signless"),
            odd_colorable=self.odd_colorable,
            odd_bipartite=self.odd_bipartite,
            module_structure=structure,
            composition_length=sum(composition_length(c) for c in structure),
            even_bipartitions=self.count_H("laplacian") if self.m % 2 == 0 else None,
            odd_bipartitions=self.count_H("signless") if self.m % 2 == 0 else None,
        )
        _check_report(rep, self)
        return rep


def _check_report(rep: ZeroSpectrumReport, zs: ZeroSpectrum) -> None:
    problems = []
    if rep.count_L != zs.space("laplacian").cardinality:
        problems.append("count_L differs from the pinned solution-space size")
    if rep.count_Q not in (0, rep.count_L):
        problems.append("count_Q must be 0 or count_L")
    if rep.countH_Q not in (0, rep.countH_L):
        problems.append("countH_Q must be 0 or countH_L")
    if min(rep.countN_L, rep.countN_Q) < 0:
        problems.append("negative N-eigenvector count")
    if rep.m % 2 == 0:
        odd = sum(d % 2 for d in rep.divisors)
        if odd != rep.r_bar:
            problems.append(f"GF(2) rank {rep.r_bar} != {odd} odd invariant divisors")
        if rep.odd_bipartite and not rep.odd_colorable:
            problems.append("odd-bipartite but not odd-colorable")
    if problems:
        raise InvariantViolation("; ".join(problems))


def zero_spectrum_report(H: Hypergraph) -> ZeroSpectrumReport:
    return ZeroSpectrum(H).report()


def count_first_laplacian(H: Hypergraph) -> int:
    """Number of first Laplacian eigenvectors, ``m^(n-1-r) * prod(d_i)``."""
    return ZeroSpectrum(H).count_L


def count_first_signless(H: Hypergraph) -> int:
    """Number of first signless Laplacian eigenvectors (0 unless odd-colorable)."""
    return ZeroSpectrum(H).count_Q


def count_H(H: Hypergraph, kind: Kind = "laplacian") -> int:
    return ZeroSpectrum(H).count_H(kind)


def count_N(H: Hypergraph, kind: Kind = "laplacian") -> int:
    return ZeroSpectrum(H).count_N(kind)


def is_odd_colorable(H: Hypergraph) -> tuple[bool, tuple[int, ...] | None]:
    """Decide odd-colorability; the witness is an odd-coloring with ``y_1 = 0``.

    The witness is the particular solution of the Smith-form back-substitution
    (all free parameters zero), so it is deterministic.
    """
    zs = ZeroSpectrum(H)
    if not zs.odd_colorable:
        return False, None
    return True, zs.space("signless").particular


def is_odd_bipartite(H: Hypergraph) -> tuple[bool, Bipartition | None]:
    if H.m % 2:
        raise HypergraphError("odd-bipartiteness is defined for even uniformity only")
    zs = ZeroSpectrum(H)
    y = zs.bipartite_witness
    if y is None:
        return False, None
    return True, _bipartition(y)


def _bipartition(y: tuple[int, ...]) -> Bipartition:
    V0 = tuple(v for v, b in enumerate(y, start=1) if b == 0)
    V1 = tuple(v for v, b in enumerate(y, start=1) if b == 1)
    return Bipartition(V0, V1)


def enumerate_eigenvectors(
    H: Hypergraph, kind: Kind = "laplacian", cap: int | None = None
) -> Iterator[ResidueEigenvector]:
    """Stream the exponent vectors of all first eigenvectors of ``kind``."""
    zs = ZeroSpectrum(H)
    for alpha in enumerate_solutions(zs.space(kind), cap):
        yield ResidueEigenvector(alpha, zs.m)


def enumerate_bipartitions(
    H: Hypergraph, parity: Parity = "even", cap: int | None = None
) -> Iterator[Bipartition]:
    """Stream even (odd) bipartitions ``{V0, V1}`` with vertex 1 in ``V0``."""
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if H.m % 2:
        raise HypergraphError("bipartitions are defined for even uniformity only")
    zs = ZeroSpectrum(H)
    space = zs.h_space("laplacian" if parity == "even" else "signless")
    for y in enumerate_solutions(space, cap):
        yield _bipartition(y)

