"""Census of face links in one subdivision, checked against the formulas.

Enumerates every face of T_{k,q}, classifies its link by combinatorial
type, and compares the distinct-type counts per dimension with the closed
counting formulas:
    python3 scripts/link_census.py -k 4 -q 3
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from edgewise.subdivision import (
    build_complex,
    classify_link_of_face,
    count_link_types,
    count_link_types_of_faces,
    vertex_partition,
)


@dataclass(frozen=True)
class CensusConfig:
    k: int
    q: int


def run(config: CensusConfig) -> None:
    k, q = config.k, config.q
    K = build_complex(k, q)
    print(f"T_{{{k},{q}}}: {len(K.vertices)} vertices, {K.num_facets} facets")

    by_partition = Counter(vertex_partition(v, q) for v in K.vertices)
    print("\nvertices by link type:")
    for lam, n in sorted(by_partition.items()):
        print(f"  {lam}: {n}")
    formula = count_link_types(k, q)
    marker = "" if formula == len(by_partition) else f"  MISMATCH formula {formula}"
    print(f"  distinct types: {len(by_partition)}{marker}")

    print("\ndistinct link types by face size:")
    for t in range(1, k + 1):
        keys = {
            classify_link_of_face(face, q).iso_key
            for face in K.faces()
            if len(face) == t
        }
        formula = count_link_types_of_faces(k, q, t)
        marker = "" if formula == len(keys) else f"  MISMATCH formula {formula}"
        print(f"  size {t}: {len(keys)} types{marker}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-k", type=int, required=True)
    parser.add_argument("-q", type=int, required=True)
    args = parser.parse_args()
    run(CensusConfig(k=args.k, q=args.q))


if __name__ == "__main__":
    main()
