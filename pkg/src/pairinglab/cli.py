"""Command-line surface: measure, detect, construct, verify, witness.

Exit codes: 0 success, 1 verification violation, 2 parse error,
3 validation failure, 4 not a canonical pairing state, 5 infeasible
parameters / unknown suite.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import constructions, measures, pairing, statefile, verify
from .errors import (
    Infeasible,
    NoTransposition,
    NotCanonicalPairing,
    NotQubit,
    PairingLabError,
    ParseError,
    UnknownName,
    ValidationError,
)
from .linalg import BipartiteState

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NOT_PAIRING = 4
EXIT_INFEASIBLE = 5


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PAIRINGLAB_SEED")
    return int(env) if env else 0


def cmd_measure(args) -> int:
    state = statefile.load_state(args.path)
    rep = measures.measure_report(state, zero_tol=args.tol)
    if args.json:
        print(json.dumps({"entries": rep.entries, "formulas": rep.formulas}, indent=1))
    else:
        for name, value in rep.entries.items():
            print(f"{name:5s} = {_fmt(value)}   [{rep.formulas[name]}]")
    return EXIT_OK


def _print_cert(cert: pairing.PairingCertificate) -> None:
    print(f"pairing number: {cert.pairing_number}")
    for (j, k), (jp, kp) in cert.transpositions:
        print(f"  transposition ({j},{k}) <-> ({jp},{kp})")
    print("  fixed points: " + " ".join(f"({j},{k})" for j, k in cert.fixed_points))


def cmd_detect(args) -> int:
    state = statefile.load_state(args.path)
    if not isinstance(state, BipartiteState):
        raise ValidationError("detect requires a bipartite state file (dims [d_A, d_B])")
    cert = pairing.detect_canonical_pairing(state, zero_tol=args.tol or 1e-10)
    if cert is None:
        print("not canonical pairing")
        return EXIT_NOT_PAIRING
    out = {"pairing_number": cert.pairing_number,
           "transpositions": [list(map(list, t)) for t in cert.transpositions],
           "fixed_points": [list(p) for p in cert.fixed_points]}
    if args.decompose:
        dec = pairing.qubit_qudit_decompose(state, zero_tol=args.tol or 1e-10)
        pm = pairing.pairing_measures(dec)
        out["p0"] = dec.p0
        out["blocks"] = [
            {"weight": b.weight, "b_columns": list(b.b_columns),
             "negativity": b.block_negativity}
            for b in dec.blocks
        ]
        out["measures"] = {"E_D": pm.E_D, "C_D": pm.C_D, "E_C": pm.E_C,
                           "C_C": pm.C_C, "E_PPT": pm.E_PPT}
    if args.json:
        print(json.dumps(out, indent=1))
    else:
        _print_cert(cert)
        if args.decompose:
            print(f"p0 = {_fmt(out['p0'])}")
            for b in out["blocks"]:
                print(f"  block on B-columns {tuple(b['b_columns'])}: "
                      f"weight {_fmt(b['weight'])}, N = {_fmt(b['negativity'])}")
            for name, value in out["measures"].items():
                print(f"{name:5s} = {_fmt(value)}")
    return EXIT_OK


def _construct_state(args):
    kind = args.kind
    if kind == "mc":
        spec = constructions.MCSpec(
            coeffs=np.asarray(json.loads(args.coeffs), dtype=complex),
            a_labels=tuple(args.a_labels),
            b_labels=tuple(args.b_labels),
        )
        bs = constructions.make_mc_state(spec, *args.dims)
        n, _ = measures.negativity(bs)
        return bs, {"N": n, "C_l1": measures.c_l1(bs.rho)}
    if kind == "qubit-qudit":
        doc = json.loads(open(args.spec).read())
        blocks = [(b["p"], np.asarray(b["coeffs"], dtype=complex), tuple(b["columns"]))
                  for b in doc.get("blocks", [])]
        bs = constructions.make_qubit_qudit_pairing(doc.get("p0", 0.0), doc["diag"], blocks)
        cert = pairing.detect_canonical_pairing(bs)
        return bs, {"pairing_number": cert.pairing_number if cert else None}
    if kind == "cnot-embed":
        rho = statefile.load_state(args.input)
        if isinstance(rho, BipartiteState):
            rho = rho.rho
        bs = constructions.cnot_embed(rho)
        n, _ = measures.negativity(bs)
        return bs, {"N": n, "C_l1_input": measures.c_l1(rho)}
    if kind == "appendix-a":
        rho = statefile.load_state(args.input)
        if isinstance(rho, BipartiteState):
            rho = rho.rho
        chain = constructions.appendix_a_chain(rho, args.L, dim_cap=args.dim_cap)
        return chain.rho3, {"K": chain.K, **chain.report}
    if kind == "counterexample":
        ex = constructions.named_counterexample(args.name, p=args.p)
        details = {
            k: ([float(x) for x in v] if isinstance(v, np.ndarray) else v)
            for k, v in ex.details.items()
        }
        return ex.state, details
    raise Infeasible(f"unknown construction kind {kind!r}")


def cmd_construct(args) -> int:
    state, report = _construct_state(args)
    statefile.save_state(args.out, state, label=args.kind)
    sidecar = os.fspath(args.out) + ".report.json"
    with open(sidecar, "w") as fh:
        json.dump({"kind": args.kind, "report": report}, fh, indent=1)
    print(f"wrote {args.out} and {sidecar}")
    for key, value in report.items():
        print(f"  {key}: {value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = _default_seed(args)
    try:
        reports = verify.run_suite(args.suite, args.trials, seed, tuple(args.dims))
    except KeyError:
        print(f"unknown suite {args.suite!r}; choose from "
              + ", ".join([*verify.SUITES, "all"]), file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        for rep in reports:
            status = "ok" if rep.ok else f"{len(rep.violations)} violations"
            print(f"{rep.suite}: trials={rep.trials} seed={rep.seed} "
                  f"dims={rep.dims} worst_gap={rep.worst_gap:.3e} "
                  f"elapsed={rep.elapsed_ms:.1f}ms -> {status}")
            for v in rep.violations[:20]:
                print(f"  trial {v.trial}: {v.quantity} lhs={_fmt(v.lhs)} "
                      f"rhs={_fmt(v.rhs)} gap={v.gap:.3e}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def cmd_witness(args) -> int:
    state = statefile.load_state(args.path)
    if not isinstance(state, BipartiteState):
        raise ValidationError("witness requires a bipartite state file")
    cert = pairing.detect_canonical_pairing(state, zero_tol=args.tol or 1e-10)
    if cert is None:
        print("not canonical pairing")
        return EXIT_NOT_PAIRING
    if cert.pairing_number == 0:
        print("state is separable (no transpositions); nothing to distill")
        return EXIT_NOT_PAIRING
    indices = [args.index] if args.index is not None else range(cert.pairing_number)
    for i in indices:
        _, _, block_n = pairing.distill_witness(state, cert, i)
        (j, k), (jp, kp) = cert.transpositions[i]
        print(f"transposition {i}: ({j},{k})<->({jp},{kp})  "
              f"block negativity = {_fmt(block_n)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pairinglab",
        description="Coherence/negativity measures and pairing-state structure tools",
    )
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="print coherence and negativity measures")
    m.add_argument("path")
    m.add_argument("--tol", type=float, default=None)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_measure)

    d = sub.add_parser("detect", help="certify canonical pairing structure")
    d.add_argument("path")
    d.add_argument("--tol", type=float, default=None)
    d.add_argument("--decompose", action="store_true")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_detect)

    c = sub.add_parser("construct", help="build a named state and write it out")
    c.add_argument("kind", choices=["mc", "qubit-qudit", "cnot-embed", "appendix-a",
                                    "counterexample"])
    c.add_argument("--out", required=True)
    c.add_argument("--coeffs", help="JSON matrix for kind=mc")
    c.add_argument("--a-labels", type=int, nargs="+", default=[])
    c.add_argument("--b-labels", type=int, nargs="+", default=[])
    c.add_argument("--dims", type=int, nargs=2, default=[2, 2])
    c.add_argument("--spec", help="JSON block file for kind=qubit-qudit")
    c.add_argument("--input", help="input state file for cnot-embed / appendix-a")
    c.add_argument("--L", type=int, default=1)
    c.add_argument("--dim-cap", type=int, default=4096)
    c.add_argument("--name", help="counterexample name")
    c.add_argument("--p", type=float, default=None)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--dims", type=int, nargs=2, default=[3, 3])
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("witness", help="two-qubit distillation witness blocks")
    w.add_argument("path")
    w.add_argument("--index", type=int, default=None)
    w.add_argument("--tol", type=float, default=None)
    w.set_defaults(func=cmd_witness)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NotCanonicalPairing, NotQubit, NoTransposition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PAIRING
    except (Infeasible, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PairingLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
