#!/usr/bin/env python3
"""Generate the standard oracle fixture corpus.

Covers the exact tiling Ramsey values on tiny complete hosts, richness
verdicts, good-copy counts, clique supersaturation reports, and pattern
statistics.  Verify later with ``monotile verify-fixtures --dir <dir>``.
"""

import argparse

from monotile.fixtures import save_fixture
from monotile.graphs import Colour, Graph, colour_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", type=str, default="fixtures")
    args = parser.parse_args()

    k2, k3, p3, p4 = Graph.complete(2), Graph.complete(3), Graph.path(3), Graph.path(4)
    written = []

    # Exact tiling Ramsey values, including the monotone run-up in n.
    written.append(save_fixture(args.dir, "rt_exact", Graph.complete(3), k2, {}))
    for n in range(3, 8):
        written.append(save_fixture(args.dir, "rt_exact", Graph.complete(n), k3, {}))
        written.append(save_fixture(args.dir, "rt_exact", Graph.complete(n), p3, {}))

    # Richness ground truth on small complete hosts.
    written.append(save_fixture(args.dir, "richness_rich", Graph.complete(4), k3, {"s": 2}))
    written.append(save_fixture(args.dir, "richness_rich", Graph.complete(5), k3, {"s": 2}))
    written.append(save_fixture(args.dir, "richness_rich", Graph.complete(6), k3, {"s": 3}))

    # Good-copy counts.
    red6 = colour_all(Graph.complete(6), Colour.RED)
    blue6 = colour_all(Graph.complete(6), Colour.BLUE)
    written.append(save_fixture(args.dir, "good_copy_count", red6, k3, {"A": [0, 1, 2]}))
    written.append(save_fixture(args.dir, "good_copy_count", blue6, k3, {"A": [0, 1, 2]}))

    # Clique supersaturation on complete hosts.
    for n in (8, 10, 12):
        written.append(save_fixture(args.dir, "clique_supersat", Graph.complete(n), k3, {"R": 3}))

    # Pattern statistics.
    for pattern in (k2, k3, Graph.complete(4), p4, Graph.matching(2), Graph.cycle(5)):
        written.append(save_fixture(args.dir, "m2_density", pattern, pattern, {}))
        written.append(save_fixture(args.dir, "independence_number", pattern, pattern, {}))

    print(f"wrote {len(written)} fixtures to {args.dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
