"""Point counts, graph statistics and the closed-form small-weight formulas.

The point count of an acyclic cluster variety over F_q is assembled from the
anticlique stratification: each stratum for an anticlique of size k is an
affine k-space times a torus of dimension n+m-2k, weighted by the number of
components |X*(I)|; the weighted formula is valid at primes q = 1 mod 2N
where N is the common exponent of the groups X*(I).  The brute-force oracle
counts solutions of the defining exchange equations directly and knows
nothing about anticliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .errors import NotAcyclic, NotFullRank, NotPrincipal, TooLarge
from .exchange import (
    CharacterGroup,
    ExtendedExchangeMatrix,
    RankClass,
    is_acyclic,
    is_principal,
    rank_class,
    underlying_graph,
)
from .exterior import bits
from .graphs import Graph, anticliques
from .poly import IntPolynomial, lagrange_interpolate

ENUMERATION_GUARD = 10**8


@dataclass(frozen=True)
class PointCountResult:
    polynomial: IntPolynomial
    modulus: int  # the count is proven for primes q = 1 mod 2*modulus

    def __call__(self, q: int) -> int:
        return self.polynomial(q)


def point_count_poly(matrix: ExtendedExchangeMatrix) -> PointCountResult:
    """#A(F_q) as a polynomial in q, plus the congruence modulus N."""
    if not is_acyclic(matrix):
        raise NotAcyclic("point counts need an acyclic quiver")
    rc = rank_class(matrix)
    if rc is RankClass.NOT_FULL_RANK:
        raise NotFullRank("point counts need a full-rank matrix")
    graph = underlying_graph(matrix)
    family = anticliques(graph)
    d = matrix.d
    q = IntPolynomial.x()
    qm1 = IntPolynomial.from_coeffs([-1, 1])
    total = IntPolynomial.zero()
    modulus = 1
    weights_by_size: list[list[int]] = []
    if rc is RankClass.REALLY_FULL_RANK:
        weights_by_size = [[1] * len(level) for level in family.by_cardinality]
    else:
        group = CharacterGroup(matrix)
        for level in family.by_cardinality:
            ws = []
            for i_mask in level:
                sub = group.subgroup(bits(i_mask), graph)
                ws.append(sub.order)
                modulus = modulus * sub.exponent // gcd(modulus, sub.exponent)
            weights_by_size.append(ws)
    for k, level in enumerate(family.by_cardinality):
        weight = sum(weights_by_size[k])
        if weight:
            total = total + (q**k) * (qm1 ** (d - 2 * k)) * IntPolynomial.from_coeffs([weight])
    return PointCountResult(total, modulus)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def brute_force_count(matrix: ExtendedExchangeMatrix, q: int) -> int:
    """Count points of the exchange-equation model over F_q, q prime.

    A point is (x_1..x_n, x'_1..x'_n, y_1..y_m) with y_i nonzero and
    x_j x'_j = prod x_i^{[B~_ij]+} + prod x_i^{[-B~_ij]+} for every j.  The
    x'_j are eliminated: for x_j nonzero there is exactly one solution, for
    x_j = 0 there are q when the right side vanishes and none otherwise.
    """
    if not is_acyclic(matrix):
        raise NotAcyclic("the exchange-equation model needs an acyclic seed")
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    n, m, d = matrix.n, matrix.m, matrix.d
    if q ** (2 * n) * (q - 1) ** m > ENUMERATION_GUARD:
        raise TooLarge(f"q={q} exceeds the {ENUMERATION_GUARD} tuple guard")
    pos_exp = [[max(matrix.rows[i][j], 0) for i in range(d)] for j in range(n)]
    neg_exp = [[max(-matrix.rows[i][j], 0) for i in range(d)] for j in range(n)]
    total = 0
    coords = [0] * d

    def rhs(j: int) -> int:
        a = b = 1
        for i in range(d):
            pe, ne = pos_exp[j][i], neg_exp[j][i]
            if pe:
                a = a * pow(coords[i], pe, q) % q
            if ne:
                b = b * pow(coords[i], ne, q) % q
        return (a + b) % q

    def recurse(i: int):
        nonlocal total
        if i == d:
            ways = 1
            for j in range(n):
                if coords[j]:
                    continue
                if rhs(j) == 0:
                    ways *= q
                else:
                    return
            total += ways
            return
        lo = 0 if i < n else 1
        for v in range(lo, q):
            coords[i] = v
            recurse(i + 1)
        coords[i] = 0

    recurse(0)
    return total


def interpolate_point_count(
    matrix: ExtendedExchangeMatrix, modulus: int
) -> IntPolynomial:
    """Recover the counting polynomial from brute-force values.

    Uses d+1 primes congruent to 1 mod 2*modulus (all primes when the
    modulus is 1) and exact Lagrange interpolation.
    """
    need = matrix.d + 1
    points = []
    q = 2
    while len(points) < need:
        q += 1
        if not _is_prime(q) or (q - 1) % (2 * modulus):
            continue
        points.append((q, brute_force_count(matrix, q)))
    return lagrange_interpolate(points)


# ---------------------------------------------------------------------------
# graph statistics


@dataclass(frozen=True)
class GraphStats:
    components: int  # number of connected components
    isolated: int  # components that are isolated vertices
    degrees: tuple[int, ...]
    e_increments: tuple[int, ...]  # components gained when deleting a vertex
    triangles: int
    h1: int  # dim H^1 = |E| - |V| + components


def graph_stats(graph: Graph) -> GraphStats:
    comps = graph.components()
    iso = sum(1 for c in comps if c.bit_count() == 1)
    degrees = tuple(graph.degree(v) for v in range(graph.n_vertices))
    incs = []
    for v in range(graph.n_vertices):
        rest = ((1 << graph.n_vertices) - 1) & ~(1 << v)
        sub = graph.induced(rest)
        incs.append(len(sub.components()) - len(comps))
    tri = 0
    for u, v in graph.edges:
        both = graph.adjacency[u] & graph.adjacency[v]
        tri += both.bit_count()
    tri //= 3
    h1 = len(graph.edges) - graph.n_vertices + len(comps)
    return GraphStats(len(comps), iso, degrees, tuple(incs), tri, h1)


# ---------------------------------------------------------------------------
# closed forms for weights s <= 3


def closed_form_s_le_3(matrix: ExtendedExchangeMatrix) -> dict[tuple[int, int], int]:
    """dims(k, s) for s in {0,1,2,3} from the graph-statistic formulas.

    Principal coefficients only.  The (4,3) entry is the sum of the ranks of
    H^1 of the vertex-deleted graphs and the stabilized corner term
    sum C(d_i, 2) - triangles - sum e_i - isolated.
    """
    if not is_principal(matrix):
        raise NotPrincipal("the small-weight formulas assume principal coefficients")
    graph = underlying_graph(matrix)
    stats = graph_stats(graph)
    n = matrix.n
    ell, ell1, h1 = stats.components, stats.isolated, stats.h1
    out = {
        (0, 0): 1,
        (1, 1): n,
        (2, 2): comb(n, 2) + ell,
        (3, 2): h1,
        (3, 3): comb(n, 3) + n * ell - ell1,
        (4, 3): (
            n * h1
            - sum(d - e - 1 for d, e in zip(stats.degrees, stats.e_increments))
            + sum(comb(d, 2) for d in stats.degrees)
            - stats.triangles
            - sum(stats.e_increments)
            - ell1
        ),
    }
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# the consistency suite


@dataclass
class CheckResult:
    name: str
    status: str  # PASS / FAIL / SKIP
    detail: str = ""


@dataclass
class SuiteReport:
    checks: list[CheckResult]

    @property
    def failed(self) -> bool:
        return any(c.status == "FAIL" for c in self.checks)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            line = f"[{c.status}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        return "\n".join(lines)


def consistency_suite(matrix: ExtendedExchangeMatrix) -> SuiteReport:
    """Cross-validate the Hodge table, point counts and closed forms."""
    from .gysin import hodge_table

    checks: list[CheckResult] = []
    rc = rank_class(matrix)
    really = rc is RankClass.REALLY_FULL_RANK
    table = hodge_table(matrix, check=False)
    counted = point_count_poly(matrix)

    if really:
        lhs, rhs = counted.polynomial, table.point_count_polynomial()
        checks.append(
            CheckResult(
                "alternating point-count identity",
                "PASS" if lhs == rhs else "FAIL",
                f"{lhs.render()} vs {rhs.render()}",
            )
        )
    else:
        checks.append(
            CheckResult(
                "alternating point-count identity",
                "SKIP",
                "stated for really full rank only",
            )
        )

    if really:
        try:
            table.check_support_bounds()
            table.check_top_class()
            checks.append(CheckResult("vanishing bounds", "PASS"))
        except Exception as exc:  # ConsistencyError
            checks.append(CheckResult("vanishing bounds", "FAIL", str(exc)))
    else:
        checks.append(
            CheckResult("vanishing bounds", "SKIP", "really-full-rank statement")
        )

    try:
        table.check_lefschetz()
        checks.append(CheckResult("curious Lefschetz symmetry", "PASS"))
    except Exception as exc:
        checks.append(CheckResult("curious Lefschetz symmetry", "FAIL", str(exc)))

    if is_principal(matrix):
        closed = closed_form_s_le_3(matrix)
        slice_ = {
            (k, s): v for (k, s), v in table.dims.items() if s <= 3 and v
        }
        checks.append(
            CheckResult(
                "weights s <= 3 closed forms",
                "PASS" if closed == slice_ else "FAIL",
                "" if closed == slice_ else f"formulas {closed} vs table {slice_}",
            )
        )
    else:
        checks.append(
            CheckResult(
                "weights s <= 3 closed forms", "SKIP", "needs principal coefficients"
            )
        )

    primes = []
    q = 2
    while len(primes) < (3 if really else 2) and q < 2000:
        q += 1
        if not _is_prime(q):
            continue
        if (q - 1) % (2 * counted.modulus):
            continue
        if q ** (2 * matrix.n) * (q - 1) ** matrix.m > ENUMERATION_GUARD:
            break
        primes.append(q)
    if primes:
        bad = [
            q for q in primes if brute_force_count(matrix, q) != counted(q)
        ]
        checks.append(
            CheckResult(
                "brute-force point counts",
                "PASS" if not bad else "FAIL",
                f"q in {primes}" if not bad else f"mismatch at q in {bad}",
            )
        )
    else:
        checks.append(
            CheckResult(
                "brute-force point counts", "SKIP", "no admissible prime under guard"
            )
        )
    return SuiteReport(checks)
