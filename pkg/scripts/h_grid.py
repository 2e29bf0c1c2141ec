"""Print h-vectors of the subdivision over a (k, q) grid.

Every cell is computed by all available routes and they must agree:
    python3 scripts/h_grid.py --kmax 6 --qmax 5
"""

import argparse
from dataclasses import dataclass

from edgewise.shelling import h_vector_checked


@dataclass(frozen=True)
class GridConfig:
    kmax: int = 6
    qmax: int = 5
    max_facets: int = 10**6


def run(config: GridConfig) -> None:
    for k in range(2, config.kmax + 1):
        for q in range(1, config.qmax + 1):
            h = h_vector_checked(k, q, config.max_facets)
            total = sum(h)
            print(f"k={k} q={q}: h = {h[:-1]}  (sum {total} = {q}^{k - 1})")
        print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--qmax", type=int, default=5)
    parser.add_argument("--max-facets", type=int, default=10**6)
    args = parser.parse_args()
    run(GridConfig(kmax=args.kmax, qmax=args.qmax, max_facets=args.max_facets))


if __name__ == "__main__":
    main()
