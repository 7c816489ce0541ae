"""Degree and determinant of exterior:r over small prime fields.

Over QQ the determinant is t_0^r. In small characteristic the square of
the nilpotent part can vanish and the degree drops.

    python3 scripts/exterior_charp.py --ranks 1 2 3 4 --primes 2 3 5
"""

import argparse
from dataclasses import dataclass

from algdet.algebra import catalog
from algdet.arith import GF, QQ
from algdet.engine import char_data


@dataclass
class ExteriorConfig:
    ranks: tuple = (1, 2, 3, 4)
    primes: tuple = (2, 3, 5)


def run(cfg: ExteriorConfig):
    fields = [QQ] + [GF(p) for p in cfg.primes]
    for r in cfg.ranks:
        for F in fields:
            cd = char_data(catalog(f"exterior:{r}", F))
            print(f"exterior:{r} over {F}: d={cd.degree} det={cd.det}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--ranks", type=int, nargs="*", default=[1, 2, 3, 4])
    ap.add_argument("--primes", type=int, nargs="*", default=[2, 3, 5])
    a = ap.parse_args()
    run(ExteriorConfig(tuple(a.ranks), tuple(a.primes)))
