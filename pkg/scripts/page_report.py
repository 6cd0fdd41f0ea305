"""Dump the filtration spectral sequence of a matrix file, page by page.

Prints each page's entries (e, f, s, dim), the observed collapse page per
weight, and the comparison of E_1 with the independence-complex assembly.

Usage: python scripts/page_report.py MATRIX_FILE [--s WEIGHT]
"""

import argparse

from clusterhodge.filtration import (
    build_filtered,
    e1_page,
    observed_collapse_page,
    spectral_sequence,
)
from clusterhodge.io import load_matrix


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("matrix")
    parser.add_argument("--s", type=int, default=None)
    args = parser.parse_args()
    matrix = load_matrix(args.matrix)
    weights = [args.s] if args.s is not None else range(matrix.d + 1)
    for s in weights:
        fc = build_filtered(matrix, s)
        pages = spectral_sequence(fc)
        independent = {k: v for k, v in e1_page(matrix, s).entries.items() if v}
        agree = pages[min(1, len(pages) - 1)].entries == independent
        print(f"== weight s={s}: collapse at page {observed_collapse_page(pages)},"
              f" E1 matches independence complexes: {agree} ==")
        for page in pages:
            if not page.entries:
                continue
            cells = " ".join(
                f"({e},{f})={v}" for (e, f), v in sorted(page.entries.items())
            )
            print(f"  E_{page.r}: {cells}")


if __name__ == "__main__":
    main()
