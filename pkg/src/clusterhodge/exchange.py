"""Extended exchange matrices: validation, mutation, rank classes, characters.

An extended exchange matrix has n+m rows and n columns with skew-symmetric
top n x n block B; rows n..n+m-1 are frozen.  All indices are 0-based.
The finite character group X* = (B~ Q^n cap Z^{n+m}) / B~ Z^n and its
anticlique subgroups X*(I) are presented through one Smith normal form of
the matrix, which also provides explicit lifts for characters.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    NotAcyclic,
    NotAnticlique,
    NotFullRank,
    NotSkewSymmetric,
    ShapeMismatch,
)
from .graphs import Graph
from .linalg import SmithNormalForm, rank, smith_normal_form


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.n + self.m

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def top_block(self) -> list[list[int]]:
        return [list(r) for r in self.rows[: self.n]]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "rows": [list(r) for r in self.rows]}


def _check_shape_and_skew(rows, n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ShapeMismatch("n and m must be nonnegative")
    if len(rows) != n + m:
        raise ShapeMismatch(f"expected {n + m} rows, got {len(rows)}")
    for r in rows:
        if len(r) != n:
            raise ShapeMismatch(f"expected {n} columns, got {len(r)}")
    for i in range(n):
        for j in range(i, n):
            if rows[i][j] != -rows[j][i]:
                raise NotSkewSymmetric(i, j)


def validate(matrix, n: int, m: int) -> ExtendedExchangeMatrix:
    """Check shape and skew-symmetry of the top block; return a typed matrix."""
    rows = [list(map(int, r)) for r in matrix]
    _check_shape_and_skew(rows, n, m)
    return ExtendedExchangeMatrix(n, m, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class RationalExchangeMatrix:
    """Same shape contract as the integer matrix, but rational entries.

    These arise only as intermediate objects (frozen-row changes of basis);
    the complex machinery accepts them interchangeably.
    """

    n: int
    m: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def d(self) -> int:
        return self.n + self.m


def validate_rational(matrix, n: int, m: int) -> RationalExchangeMatrix:
    rows = [[Fraction(x) for x in r] for r in matrix]
    _check_shape_and_skew(rows, n, m)
    return RationalExchangeMatrix(n, m, tuple(tuple(r) for r in rows))


def mutate(matrix: ExtendedExchangeMatrix, k: int) -> ExtendedExchangeMatrix:
    """Matrix mutation in the mutable direction k (0-based)."""
    if not 0 <= k < matrix.n:
        raise IndexOutOfRange(f"mutation index {k} not in [0, {matrix.n})")
    old = matrix.rows
    new = []
    for i in range(matrix.d):
        row = []
        for j in range(matrix.n):
            if i == k or j == k:
                row.append(-old[i][j])
            else:
                ik, kj = old[i][k], old[k][j]
                row.append(old[i][j] + max(ik, 0) * max(kj, 0) - min(ik, 0) * min(kj, 0))
        new.append(tuple(row))
    return ExtendedExchangeMatrix(matrix.n, matrix.m, tuple(new))


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arcs: frozenset[tuple[int, int]]


def quiver(matrix: ExtendedExchangeMatrix) -> Quiver:
    arcs = frozenset(
        (i, j)
        for i in range(matrix.n)
        for j in range(matrix.n)
        if matrix.rows[i][j] > 0
    )
    return Quiver(matrix.n, arcs)


def underlying_graph(matrix: ExtendedExchangeMatrix) -> Graph:
    return Graph.from_edges(
        matrix.n, ((i, j) for i, j in quiver(matrix).arcs)
    )


def is_acyclic(matrix: ExtendedExchangeMatrix) -> bool:
    """True iff the quiver admits a topological order."""
    arcs = quiver(matrix).arcs
    out: dict[int, set[int]] = {v: set() for v in range(matrix.n)}
    indeg = {v: 0 for v in range(matrix.n)}
    for i, j in arcs:
        out[i].add(j)
        indeg[j] += 1
    queue = [v for v in range(matrix.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == matrix.n


class RankClass(enum.Enum):
    NOT_FULL_RANK = "NotFullRank"
    FULL_RANK = "FullRank"
    REALLY_FULL_RANK = "ReallyFullRank"


def _snf(matrix: ExtendedExchangeMatrix) -> SmithNormalForm:
    return smith_normal_form([list(r) for r in matrix.rows])


def rank_class(matrix: ExtendedExchangeMatrix) -> RankClass:
    if matrix.n == 0:
        return RankClass.REALLY_FULL_RANK
    snf = _snf(matrix)
    if snf.rank < matrix.n:
        return RankClass.NOT_FULL_RANK
    if all(d == 1 for d in snf.diag):
        return RankClass.REALLY_FULL_RANK
    return RankClass.FULL_RANK


def is_full_rank(matrix: ExtendedExchangeMatrix) -> bool:
    return rank_class(matrix) is not RankClass.NOT_FULL_RANK


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant-factor presentation d_1 | d_2 | ... with every d_i >= 2."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError("each invariant factor must divide the next")

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1


def cokernel_group(matrix: ExtendedExchangeMatrix) -> FiniteAbelianGroup:
    """Z^n / B~^T Z^{n+m}, which is also the torsion of Z^{n+m} / B~ Z^n."""
    if matrix.n == 0:
        return FiniteAbelianGroup(())
    snf = _snf(matrix)
    if snf.rank < matrix.n:
        raise NotFullRank("cokernel is infinite for rank-deficient matrices")
    return FiniteAbelianGroup(snf.invariant_factors_gt1())


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    """An element of X*, as canonical residues plus an integer lift."""

    coords: tuple[int, ...]  # residue per invariant factor > 1
    lift: tuple[int, ...]  # a representative z in B~ Q^n cap Z^{n+m}

    @property
    def is_identity(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class CharacterSubgroup:
    """X*(I) as an explicit subset of X* coordinates."""

    anticlique: tuple[int, ...]
    invariant_factors: tuple[int, ...]  # of X*(I) itself, > 1 only
    elements: frozenset[tuple[int, ...]]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def contains(self, chi: Character) -> bool:
        return chi.coords in self.elements

    def is_subgroup_of(self, other: "CharacterSubgroup") -> bool:
        return self.elements <= other.elements


class CharacterGroup:
    """X* of a full-rank matrix, with enumeration, lifts and subgroups.

    Built from one Smith normal form B~ = Pinv S Qinv: the first n columns
    u_i of Pinv span the saturation of the column lattice, and the class of
    u_i has order d_i, so X* = prod Z/d_i with explicit generators.
    """

    def __init__(self, matrix: ExtendedExchangeMatrix):
        self.matrix = matrix
        snf = _snf(matrix)
        if snf.rank < matrix.n:
            raise NotFullRank("X* requires a full-rank exchange matrix")
        self._snf = snf
        self.diag = snf.diag  # all n invariant factors, ones included
        self._nontrivial = [i for i, d in enumerate(self.diag) if d > 1]
        self.group = FiniteAbelianGroup(
            tuple(self.diag[i] for i in self._nontrivial)
        )

    @property
    def order(self) -> int:
        return self.group.order

    def _coords_of_integer_vector(self, z) -> tuple[int, ...] | None:
        """Residue coordinates of z in X*, or None if z is not in B~ Q^n."""
        p = self._snf.p
        t = [sum(p[i][j] * z[j] for j in range(self.matrix.d)) for i in range(self.matrix.d)]
        if any(t[i] for i in range(self.matrix.n, self.matrix.d)):
            return None
        return tuple(t[i] % self.diag[i] for i in self._nontrivial)

    def character_from_lift(self, z) -> Character:
        z = tuple(int(x) for x in z)
        coords = self._coords_of_integer_vector(z)
        if coords is None:
            raise ValueError("lift does not lie in the rational column span")
        return Character(coords, z)

    def character_from_coords(self, coords) -> Character:
        if len(coords) != len(self._nontrivial):
            raise ValueError("wrong number of coordinates")
        coords = tuple(int(c) % self.diag[i] for c, i in zip(coords, self._nontrivial))
        z = [0] * self.matrix.d
        pinv = self._snf.pinv
        for c, i in zip(coords, self._nontrivial):
            for r in range(self.matrix.d):
                z[r] += c * pinv[r][i]
        return Character(coords, tuple(z))

    def elements(self):
        """All characters, identity first, in lexicographic coordinate order."""
        ranges = [range(self.diag[i]) for i in self._nontrivial]
        for coords in itertools.product(*ranges):
            yield self.character_from_coords(coords)

    def solve_lift(self, chi: Character) -> list[Fraction]:
        """The unique rational u with B~ u = z for the stored lift z."""
        p, q = self._snf.p, self._snf.q
        d = self.matrix.d
        t = [sum(p[i][j] * chi.lift[j] for j in range(d)) for i in range(d)]
        y = [Fraction(t[i], self.diag[i]) for i in range(self.matrix.n)]
        return [
            sum(q[i][k] * y[k] for k in range(self.matrix.n))
            for i in range(self.matrix.n)
        ]

    def support(self, chi: Character) -> frozenset[int]:
        """J(chi): the mutable indices where the solution of z = B~ u is not integral."""
        u = self.solve_lift(chi)
        return frozenset(i for i, v in enumerate(u) if v.denominator != 1)

    def subgroup(self, anticlique, graph: Graph | None = None) -> CharacterSubgroup:
        """X*(I) as a subgroup of X*; I must be an anticlique of the quiver graph."""
        idx = tuple(sorted(int(i) for i in anticlique))
        g = graph if graph is not None else underlying_graph(self.matrix)
        mask = 0
        for i in idx:
            mask |= 1 << i
        if not g.is_independent(mask):
            raise NotAnticlique(f"{idx} is not an anticlique")
        if not idx:
            identity = self.character_from_coords([0] * len(self._nontrivial))
            return CharacterSubgroup((), (), frozenset({identity.coords}))
        cols = [[self.matrix.rows[r][j] for j in idx] for r in range(self.matrix.d)]
        sub_snf = smith_normal_form(cols)
        gens = []
        for t, dfac in enumerate(sub_snf.diag):
            if dfac == 1:
                continue
            u = tuple(sub_snf.pinv[r][t] for r in range(self.matrix.d))
            gens.append((self.character_from_lift(u).coords, dfac))
        # close the generated subgroup; orders here are tiny
        elems = {tuple(0 for _ in self._nontrivial)}
        frontier = [tuple(0 for _ in self._nontrivial)]
        while frontier:
            base = frontier.pop()
            for gcoords, _ in gens:
                new = tuple(
                    (a + b) % self.diag[i]
                    for a, b, i in zip(base, gcoords, self._nontrivial)
                )
                if new not in elems:
                    elems.add(new)
                    frontier.append(new)
        factors = sub_snf.invariant_factors_gt1()
        expected = 1
        for f in factors:
            expected *= f
        assert len(elems) == expected, "subgroup closure disagrees with SNF order"
        return CharacterSubgroup(idx, factors, frozenset(elems))


def character_group(matrix: ExtendedExchangeMatrix) -> CharacterGroup:
    return CharacterGroup(matrix)


def character_subgroup(matrix: ExtendedExchangeMatrix, anticlique) -> CharacterSubgroup:
    return CharacterGroup(matrix).subgroup(anticlique)


def support_J(chi: Character, matrix: ExtendedExchangeMatrix) -> frozenset[int]:
    return CharacterGroup(matrix).support(chi)


# ---------------------------------------------------------------------------
# reduction of a character component to a smaller plain complex


class ZeroComplex:
    """Sentinel: the character component vanishes identically."""

    def __repr__(self):
        return "ZeroComplex"

    def __eq__(self, other):
        return isinstance(other, ZeroComplex)


ZERO_COMPLEX = ZeroComplex()


@dataclass(frozen=True)
class ReducedCharacter:
    """G~[chi] is the plain complex of `matrix`, shifted by (kappa, kappa)."""

    kappa: int
    matrix: ExtendedExchangeMatrix


def reduce_character(
    matrix: ExtendedExchangeMatrix, chi: Character
) -> ReducedCharacter | ZeroComplex:
    """Reduce the chi-component to a plain Gysin complex of a smaller matrix.

    If J(chi) is not an anticlique the component is the zero complex.
    Otherwise, with kappa = |J(chi)| and K the mutable vertices having no
    exchange arrow into J(chi), the component equals the complex of a full
    rank matrix with top block B|_K and n+m-2*kappa rows in total (each
    isolated-vertex elimination removes one mutable and one frozen row).  The
    frozen completion is an identity block when it fits, then zero rows;
    otherwise rows of the original matrix are appended until full rank.
    """
    if not is_acyclic(matrix):
        raise NotAcyclic("character reduction needs an acyclic quiver")
    group = CharacterGroup(matrix)
    j_set = sorted(group.support(chi))
    g = underlying_graph(matrix)
    j_mask = 0
    for i in j_set:
        j_mask |= 1 << i
    if not g.is_independent(j_mask):
        return ZERO_COMPLEX
    kappa = len(j_set)
    k_set = [
        i
        for i in range(matrix.n)
        if i not in j_set and all(matrix.rows[i][j] == 0 for j in j_set)
    ]
    nk = len(k_set)
    total_rows = matrix.d - 2 * kappa
    assert nk <= total_rows, "K cannot exceed the reduced row budget"
    top = [[matrix.rows[i][j] for j in k_set] for i in k_set]
    rows = [list(r) for r in top]
    if 2 * nk <= total_rows:
        for t in range(nk):
            rows.append([1 if c == t else 0 for c in range(nk)])
    else:
        # append frozen/non-K rows of the source matrix until full column rank
        candidates = [
            [matrix.rows[r][j] for j in k_set]
            for r in range(matrix.d)
            if r >= matrix.n or (r not in k_set and r not in j_set)
        ]
        current = rank([dict(enumerate(r)) for r in rows])
        for cand in candidates:
            if len(rows) == total_rows or current == nk:
                break
            trial = rows + [cand]
            rk = rank([dict(enumerate(r)) for r in trial])
            if rk > current:
                rows.append(cand)
                current = rk
    while len(rows) < total_rows:
        rows.append([0] * nk)
    reduced = validate(rows, nk, total_rows - nk)
    if nk and rank_class(reduced) is RankClass.NOT_FULL_RANK:
        raise NotFullRank("could not complete the reduced matrix to full rank")
    return ReducedCharacter(kappa, reduced)


# ---------------------------------------------------------------------------
# convenience constructors


def principal_matrix(top: list[list[int]]) -> ExtendedExchangeMatrix:
    """[B ; Id_n] for a skew-symmetric integer matrix B."""
    n = len(top)
    rows = [list(r) for r in top] + [
        [1 if j == i else 0 for j in range(n)] for i in range(n)
    ]
    return validate(rows, n, n)


def principal_from_graph(graph: Graph, orientation=None, weights=None) -> ExtendedExchangeMatrix:
    """Principal-coefficients matrix whose quiver has the given graph shape.

    Edges are oriented low-to-high by default; `orientation` may map an edge
    (u, v) with u < v to +1 (u -> v) or -1, and `weights` to a magnitude.
    """
    n = graph.n_vertices
    top = [[0] * n for _ in range(n)]
    for u, v in sorted(graph.edges):
        w = 1 if weights is None else weights.get((u, v), 1)
        s = 1 if orientation is None else orientation.get((u, v), 1)
        top[u][v] = s * w
        top[v][u] = -s * w
    return principal_matrix(top)


def is_principal(matrix: ExtendedExchangeMatrix) -> bool:
    if matrix.m != matrix.n:
        return False
    return all(
        matrix.rows[matrix.n + i][j] == (1 if i == j else 0)
        for i in range(matrix.n)
        for j in range(matrix.n)
    )
