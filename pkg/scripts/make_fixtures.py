#!/usr/bin/env python3
"""Write a handful of state files under fixtures/ for CLI experiments:

    python3 scripts/make_fixtures.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from pairinglab import DensityMatrix, named_counterexample, statefile
from pairinglab.constructions import MCSpec, make_mc_state


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    out.mkdir(parents=True, exist_ok=True)

    statefile.save_state(out / "plus.json", DensityMatrix(np.ones((2, 2)) / 2), "plus")
    bell = make_mc_state(MCSpec(np.ones((2, 2)) / 2, (0, 1), (0, 1)), 2, 2)
    statefile.save_state(out / "bell.json", bell, "bell")
    mc = make_mc_state(MCSpec(np.array([[0.5, 0.3], [0.3, 0.5]]), (0, 1), (0, 1)), 2, 2)
    statefile.save_state(out / "mc_example.json", mc, "mc-example")
    statefile.save_state(out / "diagonal.json",
                         DensityMatrix(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)),
                         "diagonal")
    iso = named_counterexample("isotropic", p=0.5)
    statefile.save_state(out / "isotropic_p05.json", iso.state, "isotropic p=0.5")
    print(f"wrote fixtures to {out}/")


if __name__ == "__main__":
    main()
