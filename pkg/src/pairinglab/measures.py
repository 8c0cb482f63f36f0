"""Scalar coherence and entanglement quantities with closed forms.

Coherence is always taken with respect to the fixed reference (product)
basis.  All logarithms are base 2.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import ValidationError
from .linalg import BipartiteState, DensityMatrix


def default_zero_tol(m: np.ndarray) -> float:
    """Entry-size cutoff: 1e-10 times max(1, largest entry modulus)."""
    top = float(np.max(np.abs(m))) if m.size else 0.0
    return 1e-10 * max(1.0, top)


def c_l1(rho: DensityMatrix) -> float:
    """l1-norm of coherence: sum of off-diagonal entry moduli."""
    off = np.abs(rho.mat.copy())
    np.fill_diagonal(off, 0.0)
    val = float(off.sum())
    bound = rho.dim - 1 + 1e-9
    if val > bound:
        warnings.warn(
            f"C_l1 = {val:.6g} exceeds the d-1 bound {rho.dim - 1}; "
            "validation_tol may be too loose",
            stacklevel=2,
        )
    return val


def c_log(rho: DensityMatrix) -> float:
    """Logarithmic l1-norm of coherence: log2(1 + C_l1)."""
    return float(np.log2(1.0 + c_l1(rho)))


def c_rel_entropy(rho: DensityMatrix) -> float:
    """Relative entropy of coherence: S(diag(rho)) - S(rho)."""
    return linalg.von_neumann_entropy(linalg.dephase(rho)) - linalg.von_neumann_entropy(rho)


def negativity(bs: BipartiteState) -> tuple[float, float]:
    """Negativity and logarithmic negativity of a bipartite state.

    N = ||rho^T_A||_1 - 1 and N_L = log2(1 + N).
    """
    n = linalg.trace_norm(linalg.partial_transpose(bs)) - 1.0
    return n, float(np.log2(1.0 + max(n, 0.0)))


def schmidt_negativity(lambdas) -> float:
    """Pure-state negativity from a Schmidt spectrum: (sum sqrt(l_j))^2 - 1."""
    lam = np.asarray(lambdas, dtype=float)
    if lam.size == 0 or np.any(lam < -1e-12):
        raise ValidationError("Schmidt coefficients must be nonnegative")
    if abs(lam.sum() - 1.0) > 1e-9:
        raise ValidationError(f"Schmidt coefficients sum to {lam.sum():.6g}, not 1")
    lam = np.clip(lam, 0.0, None)
    return float(np.sum(np.sqrt(lam)) ** 2 - 1.0)


def schmidt_spectrum(psi, d_a: int, d_b: int) -> np.ndarray:
    """Schmidt coefficients (descending, summing to 1) of a pure state vector."""
    v = np.asarray(psi, dtype=complex).reshape(d_a, d_b)
    s = linalg.singular_values(v)
    lam = s**2
    return lam / lam.sum()


def n0_count(bs: BipartiteState, zero_tol: float | None = None) -> int:
    """Number of eigenvalues of rho^T_A strictly below -zero_tol."""
    pt = linalg.partial_transpose(bs)
    w = np.linalg.eigvalsh((pt + pt.conj().T) / 2)
    if zero_tol is None:
        zero_tol = 1e-10 * max(1.0, float(np.max(np.abs(w))))
    return int(np.count_nonzero(w < -zero_tol))


def c_l0_count(rho: DensityMatrix, zero_tol: float | None = None) -> int:
    """Number of off-diagonal entries with modulus above zero_tol."""
    m = rho.mat
    if zero_tol is None:
        zero_tol = default_zero_tol(m)
    mask = np.abs(m) > zero_tol
    np.fill_diagonal(mask, False)
    return int(np.count_nonzero(mask))


@dataclass
class MeasureReport:
    """Named scalar measures with the formula that produced each value."""

    entries: dict[str, float] = field(default_factory=dict)
    formulas: dict[str, str] = field(default_factory=dict)

    def add(self, name: str, value: float, formula: str) -> None:
        self.entries[name] = float(value)
        self.formulas[name] = formula


def measure_report(state: DensityMatrix | BipartiteState, zero_tol: float | None = None) -> MeasureReport:
    """All closed-form measures of a state; bipartite inputs additionally
    get negativity-side quantities."""
    rho = state.rho if isinstance(state, BipartiteState) else state
    rep = MeasureReport()
    rep.add("C_l1", c_l1(rho), "sum of off-diagonal moduli")
    rep.add("C_L", c_log(rho), "log2(1 + C_l1)")
    rep.add("C_r", c_rel_entropy(rho), "S(diag(rho)) - S(rho)")
    if isinstance(state, BipartiteState):
        n, n_log = negativity(state)
        rep.add("N", n, "trace norm of partial transpose minus 1")
        rep.add("N_L", n_log, "log2(1 + N)")
        rep.add("N0", n0_count(state, zero_tol), "negative eigenvalue count of rho^T_A")
        rep.add("C_l0", c_l0_count(rho, zero_tol), "nonzero off-diagonal count")
    else:
        rep.add("C_l0", c_l0_count(rho, zero_tol), "nonzero off-diagonal count")
    return rep
