"""M2 (x) M2: the 16-dimensional tensor square of 2x2 matrices.

Computes degree and trace, then tests det(xy) = det(x) det(y) at random
points and prints the failure bound.

    python3 scripts/tensor_demo.py --trials 20 --seed 0
"""

import argparse
import time
from dataclasses import dataclass

from algdet.algebra import catalog, tensor_product
from algdet.engine import char_data
from algdet.engine.checks import CheckConfig, check_suite


@dataclass
class DemoConfig:
    trials: int = 20
    seed: int = 0
    show_det: bool = False


def run(cfg: DemoConfig):
    M2 = catalog("matrix:2")
    A = tensor_product(M2, M2)
    t0 = time.perf_counter()
    cd = char_data(A)
    print(f"dim {A.dim}, degree {cd.degree}, {sum(1 for _ in cd.det.monomials())} det terms ({time.perf_counter() - t0:.2f}s)")
    print(f"trace = {cd.trace}")
    if cfg.show_det:
        print(f"det = {cd.det}")
    t0 = time.perf_counter()
    r = check_suite(A, "mult", CheckConfig(mode="random", trials=cfg.trials, seed=cfg.seed))
    print(f"{r.line()} ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show-det", action="store_true")
    a = ap.parse_args()
    run(DemoConfig(a.trials, a.seed, a.show_det))
