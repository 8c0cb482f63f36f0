"""Dense complex-matrix kernel: validated states, decompositions, norms,
partial transpose, tensor products, and entropies.

All matrices are plain numpy arrays with complex dtype.  The product-basis
index convention for a bipartite system is fixed globally: basis ket
``|j k>`` maps to row/column ``j * d_B + k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
    OutOfRange,
    ValidationError,
)

DEFAULT_TOL = 1e-9

#: relative cutoff below which eigenvalues are treated as exact zeros
#: (entropy terms, negative-eigenvalue counts)
ZERO_EIGENVALUE_RTOL = 1e-10


def as_complex_matrix(x) -> np.ndarray:
    """Coerce input to a finite 2-d complex array.

    Raises ValueError on wrong shape or non-finite entries.
    """
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


@dataclass(frozen=True)
class DensityMatrix:
    """Validated Hermitian, PSD, unit-trace complex matrix.

    Validation happens on construction; ``validation_tol`` bounds the
    allowed Hermiticity defect, the most negative eigenvalue, and the
    trace deviation from 1.
    """

    mat: np.ndarray
    validation_tol: float = DEFAULT_TOL

    def __post_init__(self):
        m = as_complex_matrix(self.mat)
        if m.shape[0] != m.shape[1]:
            raise ValidationError(f"density matrix must be square, got {m.shape}")
        object.__setattr__(self, "mat", m)
        tol = self.validation_tol
        if tol < 0:
            raise ValidationError("validation_tol must be nonnegative")
        herm_defect = np.max(np.abs(m - m.conj().T))
        if herm_defect > tol:
            raise ValidationError(
                f"not Hermitian: max |M - M^dag| = {herm_defect:.3e} > {tol:.3e}"
            )
        tr = m.trace()
        if abs(tr - 1) > tol:
            raise ValidationError(f"trace is {tr:.6g}, expected 1 within {tol:.3e}")
        lam_min = float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])
        if lam_min < -tol:
            raise ValidationError(
                f"smallest eigenvalue {lam_min:.3e} below -{tol:.3e}"
            )

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Real spectrum in descending order."""
        return np.linalg.eigvalsh((self.mat + self.mat.conj().T) / 2)[::-1]


@dataclass(frozen=True)
class BipartiteState:
    """A DensityMatrix together with subsystem dimensions (d_A, d_B).

    Index convention: ``|jk>`` lives at row/column ``j * d_B + k``.
    """

    rho: DensityMatrix
    d_A: int
    d_B: int

    def __post_init__(self):
        if self.d_A < 1 or self.d_B < 1:
            raise DimensionMismatch("subsystem dimensions must be positive")
        if self.d_A * self.d_B != self.rho.dim:
            raise DimensionMismatch(
                f"d_A * d_B = {self.d_A * self.d_B} != matrix dimension {self.rho.dim}"
            )

    @property
    def mat(self) -> np.ndarray:
        return self.rho.mat

    @property
    def dim(self) -> int:
        return self.rho.dim

    def label_of(self, index: int) -> tuple[int, int]:
        """Product-basis label (j, k) of a flat index."""
        return divmod(index, self.d_B)

    def index_of(self, j: int, k: int) -> int:
        return j * self.d_B + k


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in descending order plus orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eig(m, hermiticity_tol: float = 1e-9) -> SpectralDecomposition:
    """Full eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Raises NotHermitian if the symmetry defect exceeds ``hermiticity_tol``
    (scaled by the largest entry modulus) and NoConvergence if the
    underlying iteration fails.
    """
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix is not square: {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if defect > hermiticity_tol * scale:
        raise NotHermitian(f"symmetry defect {defect:.3e} exceeds tolerance")
    try:
        w, v = np.linalg.eigh((m + m.conj().T) / 2)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - numpy rarely fails here
        raise NoConvergence(str(exc)) from exc
    return SpectralDecomposition(eigenvalues=w[::-1].copy(), eigenvectors=v[:, ::-1].copy())


def singular_values(x) -> np.ndarray:
    """Singular values of a matrix, nonnegative and descending."""
    x = as_complex_matrix(x)
    try:
        return np.linalg.svd(x, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(str(exc)) from exc


def trace_norm(x) -> float:
    """Schatten 1-norm: the sum of singular values."""
    return float(np.sum(singular_values(x)))


def entrywise_l1_norm(x) -> float:
    """Sum of entry moduli."""
    return float(np.sum(np.abs(as_complex_matrix(x))))


def partial_transpose(state: BipartiteState) -> np.ndarray:
    """Partial transpose over subsystem A.

    ``<jk| out |j'k'> = <j'k| in |jk'>``; Hermiticity and trace are
    preserved exactly.
    """
    d_a, d_b = state.d_A, state.d_B
    m = state.mat
    return (
        m.reshape(d_a, d_b, d_a, d_b)
        .transpose(2, 1, 0, 3)
        .reshape(d_a * d_b, d_a * d_b)
    )


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product, consistent with the j*d_B + k index convention."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def _entropy_of_spectrum(lams: np.ndarray, tol: float) -> float:
    scale = max(1.0, float(np.max(np.abs(lams)))) if lams.size else 1.0
    cut = ZERO_EIGENVALUE_RTOL * scale
    bad = lams[lams < -tol]
    if bad.size:
        raise NegativeEigenvalue(f"eigenvalue {bad.min():.3e} below -{tol:.3e}")
    lams = np.clip(lams, 0.0, None)
    lams = lams[lams > cut]
    return float(-np.sum(lams * np.log2(lams)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i over the positive spectrum."""
    return _entropy_of_spectrum(rho.eigenvalues(), rho.validation_tol)


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2 (1-x) on [0, 1], with H(0) = H(1) = 0."""
    if not (-1e-12 <= x <= 1 + 1e-12):
        raise OutOfRange(f"binary entropy argument {x} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    out = 0.0
    if x > 0.0:
        out -= x * np.log2(x)
    if x < 1.0:
        out -= (1 - x) * np.log2(1 - x)
    return float(out)


def dephase(rho: DensityMatrix) -> DensityMatrix:
    """Zero every off-diagonal entry, keeping the diagonal."""
    d = np.diag(np.diag(rho.mat).real.astype(complex))
    return DensityMatrix(d, rho.validation_tol)
