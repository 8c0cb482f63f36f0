"""Seeded property-verification harness behind the ``verify`` CLI command.

Each suite fuzzes one structural invariant over seeded random states
and records every violation as (trial, quantity, lhs, rhs, gap).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg, measures, pairing, randgen
from .linalg import DensityMatrix
from .majorization import majorizes, trace_vs_l1, uvw_triple
from .randgen import RngState


@dataclass
class Violation:
    trial: int
    quantity: str
    lhs: float
    rhs: float
    gap: float


@dataclass
class VerifyReport:
    suite: str
    trials: int
    seed: int
    dims: tuple[int, int]
    algorithm: str = randgen.ALGORITHM
    violations: list[Violation] = field(default_factory=list)
    worst_gap: float = 0.0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, trial: int, quantity: str, lhs: float, rhs: float, tol: float = 0.0):
        """Record a violation when lhs > rhs + tol."""
        gap = lhs - rhs
        self.worst_gap = max(self.worst_gap, gap)
        if gap > tol:
            self.violations.append(Violation(trial, quantity, lhs, rhs, gap))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "dims": list(self.dims),
            "algorithm": self.algorithm,
            "violations": [vars(v) for v in self.violations],
            "worst_gap": self.worst_gap,
            "elapsed_ms": self.elapsed_ms,
        }


def _feasible_pairs(d_a: int, d_b: int) -> int:
    """Transposition capacity of the generator on a d_A x d_B system."""
    cap = 0
    cols = d_b
    while cols >= 2:
        m = min(d_a, cols)
        cap += m * (m - 1) // 2
        cols -= m
    return cap


def _random_pairing(rep: VerifyReport, rng: RngState, entangled: bool = False):
    d_a, d_b = rep.dims
    cap = _feasible_pairs(d_a, d_b)
    low = 1 if entangled else 0
    n_pairs = int(rng.generator.integers(low, max(cap, low) + 1))
    return randgen.random_canonical_pairing(d_a, d_b, n_pairs, rng), n_pairs


def suite_negativity_bound(rep: VerifyReport, rng: RngState) -> None:
    for t in range(rep.trials):
        bs = randgen.random_bipartite_state(*rep.dims, rng)
        n, _ = measures.negativity(bs)
        rep.check(t, "N <= C_l1", n, measures.c_l1(bs.rho), 1e-9)


def suite_l0_bound(rep: VerifyReport, rng: RngState) -> None:
    for t in range(rep.trials):
        bs = randgen.random_bipartite_state(*rep.dims, rng)
        rep.check(t, "2*N0 <= C_l0", 2 * measures.n0_count(bs),
                  measures.c_l0_count(bs.rho))


def suite_additivity(rep: VerifyReport, rng: RngState) -> None:
    d_a, d_b = rep.dims
    for t in range(rep.trials):
        rho = randgen.ginibre_density(d_a, int(rng.generator.integers(1, d_a + 1)), rng)
        sig = randgen.ginibre_density(d_b, int(rng.generator.integers(1, d_b + 1)), rng)
        prod = DensityMatrix(linalg.tensor_product(rho.mat, sig.mat), 1e-8)
        gap = abs(measures.c_log(prod) - measures.c_log(rho) - measures.c_log(sig))
        rep.check(t, "C_L additivity", gap, 0.0, 1e-9)


def suite_pairing_roundtrip(rep: VerifyReport, rng: RngState) -> None:
    d_a, d_b = rep.dims
    for t in range(rep.trials):
        bs, n_pairs = _random_pairing(rep, rng)
        cert = pairing.detect_canonical_pairing(bs)
        if cert is None:
            rep.check(t, "detector certifies generated state", 1.0, 0.0)
            continue
        rep.check(t, "pairing number matches generator",
                  abs(cert.pairing_number - n_pairs), 0.0)
        n, _ = measures.negativity(bs)
        rep.check(t, "|N - C_l1| on pairing state",
                  abs(n - measures.c_l1(bs.rho)), 0.0, 1e-8)
        if d_a == 2:
            dec = pairing.qubit_qudit_decompose(bs)
            gap = float(np.max(np.abs(dec.reassemble().mat - bs.mat)))
            rep.check(t, "decompose/reassemble round trip", gap, 0.0, 1e-9)


def suite_witness(rep: VerifyReport, rng: RngState) -> None:
    for t in range(rep.trials):
        bs, _ = _random_pairing(rep, rng, entangled=True)
        cert = pairing.detect_canonical_pairing(bs)
        if cert is None:
            rep.check(t, "detector certifies generated state", 1.0, 0.0)
            continue
        for i in range(cert.pairing_number):
            _, _, block_n = pairing.distill_witness(bs, cert, i)
            rep.check(t, f"witness block {i} negativity > 1e-6", 1e-6, block_n)


def suite_majorization(rep: VerifyReport, rng: RngState) -> None:
    g = rng.generator
    for t in range(rep.trials):
        n, m = int(g.integers(1, 9)), int(g.integers(1, 9))
        x = g.standard_normal((n, m)) + 1j * g.standard_normal((n, m))
        triple = uvw_triple(x)
        rep.check(t, "u < v", 0.0 if majorizes(triple.v, triple.u) else 1.0, 0.0)
        rep.check(t, "v < w", 0.0 if majorizes(triple.w, triple.v) else 1.0, 0.0)
        cmp = trace_vs_l1(x)
        rep.check(t, "trace norm <= l1 norm", cmp.trace_norm, cmp.l1_norm, 1e-9)


def suite_lowerbound(rep: VerifyReport, rng: RngState) -> None:
    d_b = rep.dims[1]
    for t in range(rep.trials):
        bs = randgen.random_canonical_pairing(2, d_b, int(rng.generator.integers(1, d_b // 2 + 1)), rng, diag_weight=0.0)
        cert = pairing.detect_canonical_pairing(bs)
        if cert is None:
            rep.check(t, "detector certifies generated state", 1.0, 0.0)
            continue
        bound = pairing.distillable_lower_bound(bs, cert, [(0, 1)])
        _, n_log = measures.negativity(bs)
        rep.check(t, "lower bound <= N_L", bound, n_log, 1e-9)
        e_d = pairing.pairing_measures(pairing.qubit_qudit_decompose(bs)).E_D
        rep.check(t, "p0=0 bound equals E_D", abs(bound - e_d), 0.0, 1e-8)


SUITES = {
    "negativity-bound": suite_negativity_bound,
    "l0-bound": suite_l0_bound,
    "additivity": suite_additivity,
    "pairing-roundtrip": suite_pairing_roundtrip,
    "witness": suite_witness,
    "majorization": suite_majorization,
    "lowerbound": suite_lowerbound,
}


def run_suite(suite: str, trials: int, seed: int, dims: tuple[int, int] = (3, 3)) -> list[VerifyReport]:
    """Run one named suite (or 'all'); returns one report per suite run."""
    names = list(SUITES) if suite == "all" else [suite]
    reports = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        rep = VerifyReport(suite=name, trials=trials, seed=seed, dims=tuple(dims))
        start = time.perf_counter()
        SUITES[name](rep, RngState(seed))
        rep.elapsed_ms = (time.perf_counter() - start) * 1e3
        rep.violations.sort(key=lambda v: v.trial)
        reports.append(rep)
    return reports
