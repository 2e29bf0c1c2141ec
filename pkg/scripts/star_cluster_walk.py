"""Walk through the layered star cluster of an interior facet.

Shows the layer sizes, the agreeing counts, the shelling verdict, and the
h-vector against the weighted-table formula:
    python3 scripts/star_cluster_walk.py --kmax 5
"""

import argparse
from dataclasses import dataclass

from edgewise.starcluster import (
    base_facet_code,
    sc_h_formula,
    sc_shelling_and_h,
)


@dataclass(frozen=True)
class WalkConfig:
    kmax: int = 5
    show_layers: bool = False


def run(config: WalkConfig) -> None:
    for k in range(2, config.kmax + 1):
        q = k + 3
        report = sc_shelling_and_h(base_facet_code(k, q), q)
        print(f"k={k} q={q} base {report.base_code}")
        print(f"  layers: {' + '.join(map(str, report.layer_sizes))}"
              f" = {report.count_enumerated}")
        print(f"  counts: enumerated {report.count_enumerated},"
              f" inclusion-exclusion {report.count_inclusion_exclusion},"
              f" partition formula {report.count_partition_formula},"
              f" X value {report.x_value}")
        print(f"  shelling valid: {report.certificate.valid}")
        print(f"  h = {report.h[:-1]}  formula {sc_h_formula(k)}")
        if config.show_layers:
            for row in report.rows:
                print(f"    layer {row.layer} label {row.label} code {row.code}")
        print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=5)
    parser.add_argument("--show-layers", action="store_true")
    args = parser.parse_args()
    run(WalkConfig(kmax=args.kmax, show_layers=args.show_layers))


if __name__ == "__main__":
    main()
