"""Command-line interface.

Subcommands: hodge, pointcount, e1, ss, indcomplex, check.  Exit codes:
0 success, 1 a consistency check failed, 2 invalid input.  Output is
deterministic; --format selects text, json or tsv.  --jobs (or the
CLUSTERHODGE_JOBS variable) fans the per-weight work of `hodge` out to
worker processes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .counts import consistency_suite, point_count_poly
from .errors import ConsistencyError, InputError
from .exchange import ExtendedExchangeMatrix, RankClass, rank_class, validate
from .filtration import (
    build_filtered,
    e1_page,
    observed_collapse_page,
    spectral_sequence,
)
from .graphs import reduced_cohomology, independence_complex
from .gysin import GysinBuilder, HodgeTable, hodge_table
from .io import load_graph, load_matrix


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    graph: str | None = None
    format: str = "text"
    s: int | None = None
    q: int | None = None
    max_page: int | None = None
    jobs: int = 1
    seed: int | None = None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterhodge",
        description="Mixed Hodge numbers and point counts of acyclic cluster varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("hodge", "mixed Hodge table of the cluster variety"),
        ("pointcount", "counting polynomial over finite fields"),
        ("e1", "first page of the filtration spectral sequence"),
        ("ss", "pages of the filtration spectral sequence"),
        ("indcomplex", "reduced cohomology of a graph's independence complex"),
        ("check", "run the consistency suite"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--input", help="path to an exchange-matrix file")
        p.add_argument("--graph", help="path to a graph file")
        p.add_argument(
            "--format", choices=["text", "json", "tsv"], default="text"
        )
        p.add_argument("--s", type=int, default=None, help="restrict to one weight")
        p.add_argument("--q", type=int, default=None, help="evaluate at a prime q")
        p.add_argument("--max-page", type=int, default=None)
        p.add_argument("--jobs", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
    return parser


def _config(args) -> RunConfig:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("CLUSTERHODGE_JOBS", "1"))
    if args.q is not None:
        from .counts import _is_prime

        if not _is_prime(args.q):
            raise InputError(f"--q {args.q} is not prime")
    return RunConfig(
        command=args.command,
        input=args.input,
        graph=args.graph,
        format=args.format,
        s=args.s,
        q=args.q,
        max_page=args.max_page,
        jobs=max(1, jobs),
        seed=args.seed,
    )


def _need_matrix(config: RunConfig) -> ExtendedExchangeMatrix:
    if not config.input:
        raise InputError("this command needs --input MATRIX_FILE")
    return load_matrix(config.input)


def _hodge_slice(payload) -> dict:
    rows, s = payload
    n = len(rows[0])
    matrix = validate(rows, n, len(rows) - n)
    builder = GysinBuilder(matrix)
    cx = builder.complex_for_s(s)
    return {s: cx.cohomology_dims()}


def cmd_hodge(config: RunConfig) -> int:
    matrix = _need_matrix(config)
    if config.s is not None or config.jobs == 1 or rank_class(matrix) is not RankClass.REALLY_FULL_RANK:
        table = hodge_table(matrix)
        if config.s is not None:
            table = HodgeTable(
                matrix.n,
                matrix.m,
                {k: v for k, v in table.dims.items() if k[1] == config.s},
            )
    else:
        rows = [list(r) for r in matrix.rows]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = pool.map(
                _hodge_slice, [(rows, s) for s in range(matrix.d + 1)]
            )
        dims: dict[tuple[int, int], int] = {}
        for part in parts:
            for s, per_p in part.items():
                for p, h in per_p.items():
                    dims[(p + s, s)] = dims.get((p + s, s), 0) + h
        table = HodgeTable(matrix.n, matrix.m, dims)
        table.check_lefschetz()
    if config.format == "json":
        print(json.dumps(table.to_json_dict(), sort_keys=True))
    elif config.format == "tsv":
        print(table.to_tsv())
    else:
        print(table.to_tsv())
        print("P(x,y) = " + _xy_polynomial(table))
        print("diagonal  : " + table.diagonal_polynomial().render("x"))
        print("next row  : " + table.offdiagonal_polynomial().render("x"))
    return 0


def _xy_polynomial(table: HodgeTable) -> str:
    terms = []
    for (k, s), v in sorted(table.dims.items()):
        coeff = "" if v == 1 else f"{v}*"
        terms.append(f"{coeff}x^{k}*y^{s}")
    return " + ".join(terms) if terms else "0"


def cmd_pointcount(config: RunConfig) -> int:
    matrix = _need_matrix(config)
    result = point_count_poly(matrix)
    payload = {
        "polynomial": result.polynomial.render(),
        "coefficients": list(result.polynomial.coefficients),
        "modulus": result.modulus,
    }
    if config.q is not None:
        payload["value_at_q"] = result(config.q)
    if config.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif config.format == "tsv":
        print("degree\tcoefficient")
        for i, c in enumerate(result.polynomial.coefficients):
            print(f"{i}\t{c}")
    else:
        print(payload["polynomial"])
        if result.modulus > 1:
            print(f"valid for primes q = 1 mod {2 * result.modulus}")
        if config.q is not None:
            print(f"value at q={config.q}: {payload['value_at_q']}")
    return 0


def cmd_e1(config: RunConfig) -> int:
    matrix = _need_matrix(config)
    weights = [config.s] if config.s is not None else list(range(matrix.d + 1))
    rows = []
    for s in weights:
        page = e1_page(matrix, s)
        for (e, f), v in sorted(page.entries.items()):
            if v:
                rows.append((e, f, s, v))
    if config.format == "json":
        print(
            json.dumps(
                [{"e": e, "f": f, "s": s, "dim": v} for e, f, s, v in rows]
            )
        )
        return 0
    print("e\tf\ts\tdim")
    for e, f, s, v in rows:
        print(f"{e}\t{f}\t{s}\t{v}")
    if config.format == "text":
        # bivariate coefficient tables sum dim * x^s y^e, one per antidiagonal
        by_t: dict[int, dict[tuple[int, int], int]] = {}
        for e, f, s, v in rows:
            by_t.setdefault(e + f, {})[(s, e)] = v
        for t in sorted(by_t):
            print(f"coefficients of x^s y^e on e+f={t} (rows e, columns s):")
            table = by_t[t]
            smax = max(s for s, _ in table)
            emax = max(e for _, e in table)
            print("e\\s\t" + "\t".join(str(s) for s in range(smax + 1)))
            for e in range(emax + 1):
                line = [str(table.get((s, e), 0)) for s in range(smax + 1)]
                print(f"{e}\t" + "\t".join(line))
    return 0


def cmd_ss(config: RunConfig) -> int:
    matrix = _need_matrix(config)
    weights = [config.s] if config.s is not None else list(range(matrix.d + 1))
    records = []
    collapses = []
    payload = []
    for s in weights:
        fc = build_filtered(matrix, s)
        pages = spectral_sequence(fc, max_page=config.max_page)
        for page in pages:
            for (e, f), v in sorted(page.entries.items()):
                records.append((page.r, e, f, s, v))
            if config.format == "json":
                payload.append(
                    {
                        "s": s,
                        "r": page.r,
                        "entries": [
                            {"e": e, "f": f, "dim": v}
                            for (e, f), v in sorted(page.entries.items())
                        ],
                        "differentials": [
                            {
                                "e": e,
                                "f": f,
                                "triplets": [
                                    [i, j, str(val)]
                                    for i, row in enumerate(mat)
                                    for j, val in enumerate(row)
                                    if val
                                ],
                            }
                            for (e, f), mat in sorted(page.differentials.items())
                        ],
                    }
                )
        collapses.append((s, observed_collapse_page(pages)))
    if config.format == "json":
        print(json.dumps(payload))
        return 0
    print("r\te\tf\ts\tdim")
    for rec in records:
        print("\t".join(str(x) for x in rec))
    if config.format == "text":
        for s, page in collapses:
            print(f"# weight s={s}: no differentials observed from page {page} on")
    return 0


def cmd_indcomplex(config: RunConfig) -> int:
    if not config.graph:
        raise InputError("indcomplex needs --graph GRAPH_FILE")
    graph = load_graph(config.graph)
    cohom = reduced_cohomology(independence_complex(graph))
    if config.format == "json":
        print(json.dumps({"dims": {str(k): v for k, v in sorted(cohom.dims.items())}}))
    else:
        print("H~: " + str(dict(sorted(cohom.dims.items()))))
    return 0


def cmd_check(config: RunConfig) -> int:
    matrix = _need_matrix(config)
    report = consistency_suite(matrix)
    if config.format == "json":
        print(
            json.dumps(
                [
                    {"name": c.name, "status": c.status, "detail": c.detail}
                    for c in report.checks
                ]
            )
        )
    else:
        print(report.render())
    return 1 if report.failed else 0


_COMMANDS = {
    "hodge": cmd_hodge,
    "pointcount": cmd_pointcount,
    "e1": cmd_e1,
    "ss": cmd_ss,
    "indcomplex": cmd_indcomplex,
    "check": cmd_check,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = _config(args)
        return _COMMANDS[config.command](config)
    except InputError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 2
    except ConsistencyError as exc:
        print(
            json.dumps({"error": "ConsistencyError", "detail": str(exc)}),
            file=sys.stderr,
        )
        return 1
    except OSError as exc:
        print(json.dumps({"error": "OSError", "detail": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
