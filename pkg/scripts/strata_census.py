"""Brute-force census of unital 3-dimensional associative tables over F_p.

Counts associative points, membership in each parametric family, and
mismatches against the family description.

    python3 scripts/strata_census.py --primes 2 3
"""

import argparse
import time
from dataclasses import dataclass

from algdet.engine.strata import alg3_strata_check, associativity_residuals


@dataclass
class CensusConfig:
    primes: tuple = (2, 3)
    show_equations: bool = False


def run(cfg: CensusConfig):
    if cfg.show_equations:
        for r in associativity_residuals():
            print(f"0 = {r}")
        print()
    for p in cfg.primes:
        t0 = time.perf_counter()
        rep = alg3_strata_check(p)
        print(f"F_{p}: {rep.line()}  [{time.perf_counter() - t0:.2f}s]")
        for pt in rep.counterexamples[:5]:
            print(f"  counterexample {pt}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--primes", type=int, nargs="*", default=[2, 3])
    ap.add_argument("--show-equations", action="store_true")
    a = ap.parse_args()
    run(CensusConfig(tuple(a.primes), a.show_equations))
