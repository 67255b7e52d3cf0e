"""scikit-learn style front end.

``FirstEigenvectorModel`` is fitted on one connected hypergraph and predicts
whether exponent vectors (or complex vectors) are first eigenvectors.
``ZeroSpectrumFeatures`` maps a batch of hypergraphs to a feature table of
exact counts, so it can sit inside a Pipeline.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import HypergraphError
from .hypergraph import Hypergraph, parse_hypergraph
from .oracle import DEFAULT_TOL, residual
from .spectral import ZeroSpectrum, enumerate_bipartitions, enumerate_eigenvectors

__all__ = [
    "check_hypergraph",
    "check_exponent_array",
    "FirstEigenvectorModel",
    "ZeroSpectrumFeatures",
]

_KINDS = ("laplacian", "signless")


def check_hypergraph(X) -> Hypergraph:
    """Coerce ``X`` to a :class:`Hypergraph`.

    Accepts a Hypergraph, file text, a ``{"m", "n", "edges"}`` mapping or an
    ``(m, n, edges)`` triple.
    """
    if isinstance(X, Hypergraph):
        return X
    if isinstance(X, str):
        return parse_hypergraph(X)
    if isinstance(X, Mapping):
        try:
            return Hypergraph(n=X["n"], m=X["m"], edges=tuple(tuple(e) for e in X["edges"]))
        except KeyError as exc:
            raise HypergraphError(f"hypergraph mapping is missing key {exc}") from None
    if isinstance(X, Sequence) and len(X) == 3:
        m, n, edges = X
        return Hypergraph(n=int(n), m=int(m), edges=tuple(tuple(e) for e in edges))
    raise HypergraphError(f"cannot interpret {type(X).__name__} as a hypergraph")


def check_exponent_array(X, n: int, m: int) -> np.ndarray:
    """Validate a batch of exponent vectors; returns an ``(s, n)`` int array reduced mod m."""
    A = np.asarray(X)
    if A.ndim == 1:
        A = A[None, :]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError(f"expected exponent vectors of length {n}, got shape {A.shape}")
    if not np.issubdtype(A.dtype, np.integer):
        raise ValueError("exponent vectors must be integer valued")
    return A.astype(np.int64) % m


class FirstEigenvectorModel(BaseEstimator):
    """Zero-eigenvalue eigenvector structure of one connected hypergraph.

    Parameters
    ----------
    kind : {"laplacian", "signless"}
        Tensor whose zero eigenvectors are modelled.
    cap : int
        Default limit for :meth:`enumerate`.
    tol : float
        Tolerance for :meth:`score_vectors`.

    Attributes
    ----------
    hypergraph_ : Hypergraph
    incidence_ : ndarray of shape (k, n)
    snf_ : SmithDecomposition
    divisors_ : tuple of int
        Invariant divisors over Z_m.
    rank_gf2_ : int
    n_eigenvectors_, n_h_eigenvectors_, n_n_eigenvectors_ : int
        Counts for ``kind``.
    report_ : ZeroSpectrumReport
    """

    def __init__(self, kind="laplacian", cap=10_000, tol=DEFAULT_TOL):
        self.kind = kind
        self.cap = cap
        self.tol = tol

    def fit(self, X, y=None):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if self.cap is not None and self.cap < 1:
            raise ValueError("cap must be >= 1")
        H = check_hypergraph(X)
        zs = ZeroSpectrum(H)
        self._zs = zs
        self.hypergraph_ = H
        self.incidence_ = zs.B
        self.snf_ = zs.snf
        self.divisors_ = zs.invariants.divisors
        self.rank_gf2_ = zs.r_bar
        self.report_ = zs.report()
        self.n_eigenvectors_ = zs.count(self.kind)
        self.n_h_eigenvectors_ = zs.count_H(self.kind)
        self.n_n_eigenvectors_ = zs.count_N(self.kind)
        return self

    def predict(self, X) -> np.ndarray:
        """True for each exponent vector whose normalised eigenvector is a first eigenvector.

        Vectors are normalised by subtracting their first entry, so any
        scalar multiple by an m-th root of unity is accepted.
        """
        check_is_fitted(self, "report_")
        H = self.hypergraph_
        A = check_exponent_array(X, H.n, H.m)
        A = (A - A[:, :1]) % H.m
        target = 0 if self.kind == "laplacian" else H.m // 2
        if self.kind == "signless" and H.m % 2:
            return np.zeros(len(A), dtype=bool)
        sums = (A @ self.incidence_.T) % H.m
        return (sums == target).all(axis=1)

    def score_vectors(self, X) -> np.ndarray:
        """Relative zero-eigenvalue residual of each complex vector in ``X``."""
        check_is_fitted(self, "report_")
        X = np.atleast_2d(np.asarray(X, dtype=complex))
        return np.array([residual(self.hypergraph_, self.kind, 0, x) for x in X])

    def enumerate(self, cap=None) -> np.ndarray:
        """Exponent vectors of the first eigenvectors, shape ``(s, n)``."""
        check_is_fitted(self, "report_")
        cap = self.cap if cap is None else cap
        rows = [v.alpha for v in enumerate_eigenvectors(self.hypergraph_, self.kind, cap)]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.hypergraph_.n)

    def bipartitions(self, cap=None) -> list:
        check_is_fitted(self, "report_")
        parity = "even" if self.kind == "laplacian" else "odd"
        cap = self.cap if cap is None else cap
        return list(enumerate_bipartitions(self.hypergraph_, parity, cap))


class ZeroSpectrumFeatures(TransformerMixin, BaseEstimator):
    """Turn hypergraphs into rows of zero-spectrum statistics.

    Counts are exact Python ints, so the output has ``dtype=object`` unless
    ``as_float`` is set.
    """

    feature_names = (
        "n", "m", "k", "r_m", "r_bar", "count_L", "count_Q", "countH_L", "countH_Q",
        "countN_L", "countN_Q", "odd_colorable", "odd_bipartite", "composition_length",
    )

    def __init__(self, as_float=False):
        self.as_float = as_float

    def fit(self, X, y=None):
        self.n_features_out_ = len(self.feature_names)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "n_features_out_")
        rows = []
        for item in X:
            rep = ZeroSpectrum(check_hypergraph(item)).report()
            rows.append([getattr(rep, f) for f in self.feature_names])
        out = np.array(rows, dtype=object).reshape(len(rows), self.n_features_out_)
        return out.astype(float) if self.as_float else out

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)
