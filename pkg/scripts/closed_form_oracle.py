#!/usr/bin/env python3
"""Independent brute-force evaluation of the closed-form distillable
entanglement and entanglement cost for the canonical 2x2 maximally
correlated block c = [[0.5, 0.3], [0.3, 0.5]] and for the Bell block.

Deliberately uses only the math module and explicit 2x2 closed forms so
the numbers can be frozen into the test suite without touching the
package under test.
"""

import math


def eig2x2_symmetric(a, b, d):
    # eigenvalues of [[a, b], [b, d]]
    mean = (a + d) / 2.0
    r = math.sqrt(((a - d) / 2.0) ** 2 + b * b)
    return mean + r, mean - r


def shannon2(probs):
    return -sum(p * math.log2(p) for p in probs if p > 0.0)


def binary_entropy(x):
    return shannon2((x, 1.0 - x))


def closed_forms(c00, c01, c11):
    lam = eig2x2_symmetric(c00, c01, c11)
    e_d = shannon2((c00, c11)) - shannon2(lam)
    n = 2.0 * abs(c01)
    e_c = binary_entropy((1.0 + math.sqrt(1.0 - n * n)) / 2.0)
    return e_d, e_c


def main():
    for name, (c00, c01, c11) in {
        "mc-example": (0.5, 0.3, 0.5),
        "bell": (0.5, 0.5, 0.5),
    }.items():
        e_d, e_c = closed_forms(c00, c01, c11)
        print(f"{name}: E_D = {e_d!r}  E_C = {e_c!r}")


if __name__ == "__main__":
    main()
