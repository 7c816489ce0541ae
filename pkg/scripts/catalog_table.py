"""Degree, determinant, trace and discriminant of every catalog algebra.

    python3 scripts/catalog_table.py [--names quaternion dim2 ...] [--markdown]
"""

import argparse
import time
from dataclasses import dataclass, field

from algdet.algebra import QQ_CATALOG, catalog
from algdet.engine import char_data, discriminant

EXTRA = ("boolean2", "inseparable:2", "inseparable:3", "split:1", "dim3generic")


@dataclass
class TableConfig:
    names: list = field(default_factory=lambda: list(QQ_CATALOG) + list(EXTRA))
    markdown: bool = False
    width: int = 70  # truncate long polynomials in the plain listing


def clip(s: str, width: int) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


def run(cfg: TableConfig):
    rows = []
    for name in cfg.names:
        A = catalog(name)
        t0 = time.perf_counter()
        try:
            cd = char_data(A)
            disc = str(discriminant(A))
            row = (name, str(A.field), A.dim, cd.degree, str(cd.det), str(cd.trace), disc)
        except Exception as exc:  # dim3generic is not associative
            row = (name, str(A.field), A.dim, "-", f"({type(exc).__name__})", "-", "-")
        rows.append(row + (time.perf_counter() - t0,))
    if cfg.markdown:
        print("| algebra | field | n | d | det | trace | disc | s |")
        print("|---|---|---|---|---|---|---|---|")
        for r in rows:
            print("| " + " | ".join(f"`{x}`" if i in (4, 5, 6) else str(x) for i, x in enumerate(r[:-1])) + f" | {r[-1]:.2f} |")
        return
    for name, fld, n, d, det, tr, disc, secs in rows:
        print(f"{name} over {fld}: n={n} d={d} ({secs:.2f}s)")
        print(f"  det   = {clip(det, cfg.width)}")
        print(f"  trace = {clip(tr, cfg.width)}")
        print(f"  disc  = {clip(disc, cfg.width)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--names", nargs="*")
    ap.add_argument("--markdown", action="store_true")
    ap.add_argument("--width", type=int, default=70)
    a = ap.parse_args()
    cfg = TableConfig(markdown=a.markdown, width=a.width)
    if a.names:
        cfg.names = a.names
    run(cfg)
