"""Explicit states and transformations: maximally correlated states,
qubit-qudit pairing states, the generalized-CNOT embedding, the
root-of-unity dilation chain used in the uniqueness argument, and named
counterexamples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from . import linalg, measures
from .errors import (
    DimensionCapExceeded,
    InvalidCoeffs,
    LabelCollision,
    PhaseNotRoot,
    SupportOverlap,
    UnknownName,
    ValidationError,
    WeightMismatch,
)
from .linalg import BipartiteState, DensityMatrix


@dataclass(frozen=True)
class MCSpec:
    """Coefficient matrix plus injective A/B label lists of a canonical
    maximally correlated state."""

    coeffs: np.ndarray
    a_labels: tuple[int, ...]
    b_labels: tuple[int, ...]

    def __post_init__(self):
        c = linalg.as_complex_matrix(self.coeffs)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "a_labels", tuple(int(j) for j in self.a_labels))
        object.__setattr__(self, "b_labels", tuple(int(k) for k in self.b_labels))
        r = c.shape[0]
        if len(self.a_labels) != r or len(self.b_labels) != r:
            raise LabelCollision("label lists must match the coefficient dimension")
        if len(set(self.a_labels)) != r or len(set(self.b_labels)) != r:
            raise LabelCollision("A labels and B labels must each be pairwise distinct")
        try:
            DensityMatrix(c, 1e-9)
        except ValidationError as exc:
            raise InvalidCoeffs(str(exc)) from exc


def make_mc_state(spec: MCSpec, d_a: int, d_b: int) -> BipartiteState:
    """rho = sum_rs c_rs |j_r k_r><j_s k_s| on a d_A x d_B system."""
    if max(spec.a_labels) >= d_a or max(spec.b_labels) >= d_b:
        raise LabelCollision("labels exceed the subsystem dimensions")
    idx = [j * d_b + k for j, k in zip(spec.a_labels, spec.b_labels)]
    m = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    m[np.ix_(idx, idx)] = spec.coeffs
    return BipartiteState(DensityMatrix(m, 1e-9), d_a, d_b)


def make_qubit_qudit_pairing(
    p0: float,
    diag,
    blocks: list[tuple[float, np.ndarray, tuple[int, int]]],
) -> BipartiteState:
    """Assemble a canonical 2 x d_B pairing state from a weighted diagonal
    part and 2x2 maximally correlated blocks on disjoint B-column pairs.

    ``diag`` is a probability vector over the 2*d_B product basis (its
    support must avoid the block columns); each block is
    (weight, 2x2 unit-trace coefficient matrix, (k0, k1)) supported on
    |0 k0> and |1 k1>.
    """
    diag = np.asarray(diag, dtype=float)
    if diag.ndim != 1 or diag.size % 2:
        raise WeightMismatch("diag must be a flat vector over the 2 x d_B product basis")
    d_b = diag.size // 2
    weights = [p for p, _, _ in blocks]
    if abs(p0 + sum(weights) - 1.0) > 1e-9:
        raise WeightMismatch(f"p0 + block weights = {p0 + sum(weights):.6g}, expected 1")
    if p0 > 0 and abs(diag.sum() - 1.0) > 1e-9:
        raise WeightMismatch("diag must be normalized when p0 > 0")

    used_cols: set[int] = set()
    for _, _, (k0, k1) in blocks:
        cols = {int(k0), int(k1)}
        if len(cols) != 2 or not all(0 <= k < d_b for k in cols):
            raise SupportOverlap(f"invalid B-column pair ({k0}, {k1})")
        if used_cols & cols:
            raise SupportOverlap("block B-columns must be pairwise disjoint")
        used_cols |= cols
    diag_cols = {i % d_b for i in np.flatnonzero(diag > 0)}
    if p0 > 0 and diag_cols & used_cols:
        raise SupportOverlap("diagonal support overlaps a block column pair")

    m = np.zeros((2 * d_b, 2 * d_b), dtype=complex)
    if p0 > 0:
        m += p0 * np.diag(diag.astype(complex))
    for p, coeffs, (k0, k1) in blocks:
        c = linalg.as_complex_matrix(coeffs)
        try:
            DensityMatrix(c, 1e-9)
        except ValidationError as exc:
            raise InvalidCoeffs(str(exc)) from exc
        idx = [int(k0), d_b + int(k1)]
        m[np.ix_(idx, idx)] += p * c
    return BipartiteState(DensityMatrix(m, 1e-9), 2, d_b)


def cnot_embed(rho: DensityMatrix) -> BipartiteState:
    """Embed coherence into entanglement via the generalized CNOT:
    output = sum_jk rho_jk |jj><kk| on a d x d system.

    The output is canonically maximally correlated with negativity equal
    to C_l1 of the input.
    """
    d = rho.dim
    idx = [j * d + j for j in range(d)]
    m = np.zeros((d * d, d * d), dtype=complex)
    m[np.ix_(idx, idx)] = rho.mat
    return BipartiteState(DensityMatrix(m, rho.validation_tol), d, d)


@dataclass(frozen=True)
class AppendixAChain:
    """The dilation chain rho -> rho2 -> rho3 -> rho4 built from a group of
    diagonal root-of-unity unitaries; ``report`` carries the verified
    structural checks."""

    K: int
    L: int
    omega: complex
    rho2: DensityMatrix
    rho3: DensityMatrix
    rho4: DensityMatrix
    weights: np.ndarray  # |rho_jk| for j < k
    m_operator: np.ndarray
    v_diag: np.ndarray
    report: dict


def _offdiag_multiset(m: np.ndarray, cut: float = 1e-13) -> np.ndarray:
    vals = m[~np.eye(m.shape[0], dtype=bool)]
    vals = vals[np.abs(vals) > cut]
    # round the sort keys so sign noise around zero cannot scramble the order
    order = np.lexsort((np.round(vals.imag, 12), np.round(vals.real, 12)))
    return vals[order]


def appendix_a_chain(rho: DensityMatrix, L: int, dim_cap: int = 4096) -> AppendixAChain:
    """Instantiate the uniqueness-proof state chain for a state whose
    off-diagonal phases are L-th roots of unity.

    K is the smallest integer >= 2d divisible by L.  Raises PhaseNotRoot
    when a phase is not an L-th root of unity within 1e-9, and
    DimensionCapExceeded when any constructed matrix would exceed
    ``dim_cap``.
    """
    if L < 1:
        raise ValueError("L must be a positive integer")
    d = rho.dim
    if d < 2:
        raise ValueError("the chain needs dimension at least 2")
    m = rho.mat

    for j in range(d):
        for k in range(d):
            if j != k and abs(m[j, k]) > 1e-12:
                phase = m[j, k] / abs(m[j, k])
                if abs(phase**L - 1.0) > 1e-9:
                    raise PhaseNotRoot(
                        f"phase of entry ({j},{k}) is not an L={L} root of unity"
                    )

    K = ((2 * d + L - 1) // L) * L
    omega = np.exp(2j * np.pi / K)
    dim2 = d * K**d
    mult2 = 2 * (K ** (d - 2) - 1) // (K - 1)
    per_pair = 2 * K ** (d - 2) * K + mult2 * K + K * 2
    dim3 = d * (d - 1) // 2 * per_pair + 1
    if max(dim2, dim3) > dim_cap:
        raise DimensionCapExceeded(
            f"chain dimensions ({dim2}, {dim3}) exceed cap {dim_cap}"
        )

    # rho2: uniform mixture of conjugations by every diagonal unitary with
    # K-th root-of-unity entries, arranged block-diagonally
    conj_blocks = []
    for powers in itertools.product(range(K), repeat=d):
        u = omega ** np.asarray(powers)
        conj_blocks.append((u[:, None] * m * u.conj()[None, :]) / K**d)
    rho2 = DensityMatrix(block_diag(*conj_blocks), 1e-9)

    psi = omega ** np.arange(K) / np.sqrt(K)
    phi = np.ones(K) / np.sqrt(K)
    psi_proj = np.outer(psi, psi.conj())
    phi_proj = np.outer(phi, phi.conj())
    ones2 = np.ones((2, 2), dtype=complex)

    def m_op(rank1: np.ndarray) -> np.ndarray:
        m1 = np.kron(np.eye(2 * K ** (d - 2)), rank1)
        parts = [m1]
        if mult2 > 0:
            parts.append(np.kron(np.eye(mult2), phi_proj))
        parts.append(np.kron(np.eye(K), ones2) / K)
        core = block_diag(*parts)
        blocks = [abs(m[j, k]) * core for j in range(d) for k in range(j + 1, d)]
        return block_diag(*blocks) / K ** (d - 1)

    m_psi = m_op(psi_proj)
    m_phi = m_op(phi_proj)
    tr_m = float(m_psi.trace().real)
    rho3 = DensityMatrix(block_diag(m_psi, np.array([[1.0 - tr_m]])), 1e-9)
    rho4 = DensityMatrix(block_diag(m_phi, np.array([[1.0 - m_phi.trace().real]])), 1e-9)

    weights = np.array([abs(m[j, k]) for j in range(d) for k in range(j + 1, d)])
    v_diag = omega ** (-np.arange(K))

    off2 = _offdiag_multiset(rho2.mat)
    off3 = _offdiag_multiset(rho3.mat)
    if off2.size != off3.size:
        multiset_gap = np.inf
    elif off2.size == 0:
        multiset_gap = 0.0
    else:
        multiset_gap = float(np.max(np.abs(off2 - off3)))
    abs_gap = float(np.max(np.abs(np.abs(rho3.mat) - rho4.mat.real)))
    report = {
        "K_divisible_by_L": K % L == 0 and K >= 2 * d,
        "trace_M": tr_m,
        "trace_M_below_1": tr_m < 1.0,
        "offdiag_count_rho2": int(off2.size),
        "offdiag_count_rho3": int(off3.size),
        "offdiag_multiset_gap": multiset_gap,
        "offdiag_multiset_match": off2.size == off3.size and multiset_gap <= 1e-10,
        "rho4_abs_gap": abs_gap,
        "rho4_is_entrywise_abs_of_rho3": abs_gap <= 1e-10,
    }
    return AppendixAChain(
        K=K,
        L=L,
        omega=complex(omega),
        rho2=rho2,
        rho3=rho3,
        rho4=rho4,
        weights=weights,
        m_operator=m_psi,
        v_diag=v_diag,
        report=report,
    )


@dataclass(frozen=True)
class Counterexample:
    """A named state with an optional non-PSD companion matrix and the
    numeric facts that make it a (non)example."""

    name: str
    state: BipartiteState | DensityMatrix
    companion: np.ndarray | None
    details: dict


def _tau_remark() -> Counterexample:
    a = 1.0 / np.sqrt(2.0)
    m = np.array(
        [[1, a, 0, -a], [a, 1, a, 0], [0, a, 1, a], [-a, 0, a, 1]], dtype=complex
    ) / 4.0
    rho = DensityMatrix(m, 1e-12)
    tau = np.abs(m).astype(complex)
    tau_eigs = np.linalg.eigvalsh(tau)
    details = {
        "rho_eigenvalues": rho.eigenvalues(),
        "tau_eigenvalues": tau_eigs[::-1],
        "tau_min_eigenvalue": float(tau_eigs[0]),
    }
    return Counterexample("tau-remark", rho, tau, details)


def _appendix_f() -> Counterexample:
    # 3x3 state that saturates N = C_l1 but has no direct-sum block
    # structure: equal mixture of |02>, |20>, (|00>+|11>)/sqrt2,
    # (|11>+|22>)/sqrt2
    def ket(j, k):
        v = np.zeros(9)
        v[3 * j + k] = 1.0
        return v

    psi = (ket(0, 0) + ket(1, 1)) / np.sqrt(2)
    phi = (ket(1, 1) + ket(2, 2)) / np.sqrt(2)
    m = (
        np.outer(ket(0, 2), ket(0, 2))
        + np.outer(ket(2, 0), ket(2, 0))
        + np.outer(psi, psi)
        + np.outer(phi, phi)
    ) / 4.0
    bs = BipartiteState(DensityMatrix(m.astype(complex), 1e-12), 3, 3)
    n, _ = measures.negativity(bs)
    details = {"N": n, "C_l1": measures.c_l1(bs.rho)}
    return Counterexample("appendix-f", bs, None, details)


def isotropic_mixture(p: float, psi, d_a: int, d_b: int) -> BipartiteState:
    """p |psi><psi| + (1 - p) I / (d_A d_B)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing parameter p = {p} outside [0, 1]")
    v = np.asarray(psi, dtype=complex).ravel()
    v = v / np.linalg.norm(v)
    d = d_a * d_b
    if v.size != d:
        raise ValueError("pure part has wrong dimension")
    m = p * np.outer(v, v.conj()) + (1.0 - p) * np.eye(d) / d
    return BipartiteState(DensityMatrix(m, 1e-9), d_a, d_b)


def bell_vector() -> np.ndarray:
    return np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def named_counterexample(name: str, p: float | None = None, psi=None,
                         dims: tuple[int, int] = (2, 2)) -> Counterexample:
    """Dispatch on {tau-remark, appendix-f, isotropic}."""
    if name == "tau-remark":
        return _tau_remark()
    if name == "appendix-f":
        return _appendix_f()
    if name == "isotropic":
        if p is None:
            raise ValueError("isotropic requires the mixing parameter p")
        if psi is None:
            psi, dims = bell_vector(), (2, 2)
        bs = isotropic_mixture(p, psi, *dims)
        n, _ = measures.negativity(bs)
        details = {"p": p, "N": n, "C_l1": measures.c_l1(bs.rho)}
        return Counterexample("isotropic", bs, None, details)
    raise UnknownName(f"unknown counterexample {name!r}")
