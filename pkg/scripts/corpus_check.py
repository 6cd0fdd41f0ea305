"""Run the consistency suite across all small connected quiver shapes.

Every connected graph on up to --max-vertices vertices gets one fixed
acyclic orientation with principal coefficients; the suite cross-validates
the Hodge table against point counts, the closed small-weight formulas and
brute-force enumeration.

Usage: python scripts/corpus_check.py [--max-vertices 5]
"""

import argparse
import sys
import time

from clusterhodge.counts import consistency_suite
from clusterhodge.exchange import principal_from_graph
from clusterhodge.graphs import connected_graphs


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-vertices", type=int, default=5)
    args = parser.parse_args()
    failures = 0
    for v in range(1, args.max_vertices + 1):
        for graph in connected_graphs(v):
            matrix = principal_from_graph(graph)
            t0 = time.time()
            report = consistency_suite(matrix)
            status = "FAIL" if report.failed else "ok"
            edges = sorted((u + 1, w + 1) for u, w in graph.edges)
            print(f"[{status}] v={v} edges={edges} ({time.time()-t0:.1f}s)")
            if report.failed:
                failures += 1
                print(report.render())
    print(f"{failures} failing graphs")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
