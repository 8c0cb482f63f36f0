"""Majorization machinery: partial-sum comparison, the u < v < w chain
attached to a matrix, and the trace-norm versus entrywise-l1 comparison
with monomial equality detection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg


def _descending(x) -> np.ndarray:
    return np.sort(np.asarray(x, dtype=float))[::-1]


def majorizes(y, x, tol: float = 1e-9) -> bool:
    """True iff x is majorized by y (x < y).

    Sequences of different lengths are zero-padded; all descending
    partial sums of x must stay below those of y and the totals must
    agree within ``tol``.
    """
    xs, ys = _descending(x), _descending(y)
    n = max(xs.size, ys.size)
    xs = np.pad(xs, (0, n - xs.size))
    ys = np.pad(ys, (0, n - ys.size))
    cx, cy = np.cumsum(xs), np.cumsum(ys)
    if abs(cx[-1] - cy[-1]) > tol:
        return False
    return bool(np.all(cx <= cy + tol))


@dataclass(frozen=True)
class MajorizationTriple:
    """u = squared entry moduli, v = diag(X^dag X), w = eig(X^dag X).

    All three share the same total (the squared Frobenius norm) and
    satisfy u < v < w.
    """

    u: np.ndarray
    v: np.ndarray
    w: np.ndarray


def uvw_triple(x) -> MajorizationTriple:
    """The majorization chain of a matrix, per-component."""
    x = linalg.as_complex_matrix(x)
    u = (np.abs(x) ** 2).ravel()
    gram = x.conj().T @ x
    v = np.diag(gram).real.copy()
    w = np.linalg.eigvalsh((gram + gram.conj().T) / 2)[::-1].copy()
    return MajorizationTriple(u=u, v=v, w=w)


class TraceVsL1(NamedTuple):
    trace_norm: float
    l1_norm: float
    is_monomial: bool
    gap: float


def is_monomial(x, zero_tol: float = 1e-10) -> bool:
    """At most one significant entry per row and per column.

    Significance is relative: modulus above zero_tol times the largest
    entry modulus.
    """
    x = linalg.as_complex_matrix(x)
    top = float(np.max(np.abs(x))) if x.size else 0.0
    if top == 0.0:
        return True
    mask = np.abs(x) > zero_tol * top
    return bool(np.all(mask.sum(axis=0) <= 1) and np.all(mask.sum(axis=1) <= 1))


def trace_vs_l1(x, zero_tol: float = 1e-10) -> TraceVsL1:
    """Compare ||X||_1 against ||X||_l1 and flag the monomial equality case."""
    x = linalg.as_complex_matrix(x)
    tn = linalg.trace_norm(x)
    l1 = linalg.entrywise_l1_norm(x)
    return TraceVsL1(tn, l1, is_monomial(x, zero_tol), l1 - tn)
