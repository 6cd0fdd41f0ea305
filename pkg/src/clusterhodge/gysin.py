"""The Gysin complex of an acyclic full-rank exchange matrix.

For an anticlique I of the quiver graph, G^I is the submodule of the
exterior algebra on dlog x_1..dlog x_{n+m} generated over the dlog's with
index outside I by the wedge of the one-forms alpha_i = sum_r B~_{ri} dlog x_r
over i in I.  Picking a row set N(I) with B~_{N(I),I} invertible, the wedges
theta(A, I) over A disjoint from I and N(I) form a basis; the residue maps

    rho: theta = theta_1 + theta_2 ^ dlog x_j  |->  theta_2 ^ alpha_j

assemble into a complex over anticliques whose degree-s slice computes the
mixed Hodge numbers: dim H^{k,(s,s)} = dim H^{k-s} of the weight-s complex.
Sign conventions: wedges are taken in increasing index order, rho extracts
dlog x_j with the Koszul sign of moving it past higher indices, and the
block from I to I u {j} is weighted by (-1)^{#{i in I : i < j}}.  The
composite is checked to square to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    ColumnsDependent,
    ConsistencyError,
    NotAcyclic,
    NotAnEdge,
    NotAnticlique,
    NotConnected,
    NotFullRank,
    NotPrincipal,
    NotReallyFullRank,
)
from .exchange import (
    Character,
    CharacterGroup,
    ExtendedExchangeMatrix,
    RankClass,
    ZeroComplex,
    is_acyclic,
    is_principal,
    rank_class,
    reduce_character,
    underlying_graph,
)
from .exterior import ExteriorForm, bits, wedge_all, wedge_sign
from .graphs import anticliques
from .linalg import Echelon, nullspace, rank, solve_in_span
from .poly import IntPolynomial

Label = tuple[int, int]  # (anticlique mask, A mask)


# ---------------------------------------------------------------------------
# complexes of based rational vector spaces


@dataclass
class CochainComplexQ:
    """Positions 0..P with labeled bases; differentials stored column-wise.

    ``columns[p][c]`` is the image of basis vector c of position p as a
    sparse vector over the basis of position p+1.
    """

    labels: list[list[Label]]
    columns: list[list[dict[int, Fraction | int]]]

    def dim(self, p: int) -> int:
        if 0 <= p < len(self.labels):
            return len(self.labels[p])
        return 0

    @property
    def positions(self) -> int:
        return len(self.labels)

    def differential_rank(self, p: int) -> int:
        if not (0 <= p < len(self.columns)):
            return 0
        return rank(self.columns[p])

    def verify_d2(self) -> None:
        for p in range(len(self.columns) - 1):
            nxt = self.columns[p + 1]
            for col in self.columns[p]:
                acc: dict[int, Fraction | int] = {}
                for mid, coeff in col.items():
                    for row, c2 in nxt[mid].items():
                        w = acc.get(row, 0) + coeff * c2
                        if w:
                            acc[row] = w
                        else:
                            acc.pop(row, None)
                if acc:
                    raise ConsistencyError("differential does not square to zero")

    def cohomology_dims(self) -> dict[int, int]:
        out = {}
        ranks = [self.differential_rank(p) for p in range(self.positions)]
        for p in range(self.positions):
            prev = ranks[p - 1] if p > 0 else 0
            h = self.dim(p) - ranks[p] - prev
            if h:
                out[p] = h
        return out

    def rows_at(self, p: int) -> list[dict[int, Fraction | int]]:
        """The differential out of position p, as rows over its basis."""
        rows: list[dict[int, Fraction | int]] = [dict() for _ in range(self.dim(p + 1))]
        if 0 <= p < len(self.columns):
            for c, col in enumerate(self.columns[p]):
                for r, v in col.items():
                    rows[r][c] = v
        return rows

    def cohomology_basis(self, p: int) -> "CohomologyClasses":
        return CohomologyClasses(self, p)


class CohomologyClasses:
    """Cocycle representatives of H^p with coordinates modulo coboundaries."""

    def __init__(self, cx: CochainComplexQ, p: int):
        self.p = p
        cocycles = nullspace(cx.rows_at(p), cx.dim(p))
        images = []
        if p >= 1:
            for col in cx.columns[p - 1]:
                if col:
                    images.append(col)
        ech = Echelon()
        for v in images:
            ech.add(v)
        self._span = images
        self.representatives = [z for z in cocycles if ech.add(z) is not None]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, vector) -> list[Fraction]:
        coeffs = solve_in_span(self.representatives + self._span, vector)
        if coeffs is None:
            raise ValueError("vector is not a cocycle at this position")
        return coeffs[: len(self.representatives)]


# ---------------------------------------------------------------------------
# theta bases


@dataclass(frozen=True)
class GModuleBasis:
    anticlique: tuple[int, ...]
    row_selection: tuple[int, ...]  # N(I)
    basis_index: tuple[int, ...]  # admissible A masks, ascending
    n: int
    m: int

    @property
    def dimension(self) -> int:
        return len(self.basis_index)

    def masks_of_degree(self, s: int) -> list[int]:
        k = len(self.anticlique)
        want = s - k
        return [a for a in self.basis_index if a.bit_count() == want]


class GysinBuilder:
    """Shared caches for one exchange matrix: bases, substitutions, blocks.

    Construction does not insist on full rank; a rank-deficient matrix
    surfaces as ColumnsDependent the moment some anticlique needs a row
    selection that does not exist.  The complex-level entry points enforce
    their own rank preconditions.
    """

    def __init__(self, matrix: ExtendedExchangeMatrix):
        self.matrix = matrix
        self.graph = underlying_graph(matrix)
        self.family = anticliques(self.graph)
        self._n_of: dict[int, tuple[int, ...]] = {}
        self._pi: dict[int, dict[int, ExteriorForm]] = {}
        self._alphas = [self._alpha(j) for j in range(matrix.n)]
        self._wedge_cache: dict[int, ExteriorForm] = {}

    # -- one-forms ---------------------------------------------------------

    def _alpha(self, j: int) -> ExteriorForm:
        return ExteriorForm(
            {1 << r: self.matrix.rows[r][j] for r in range(self.matrix.d)}
        )

    def alpha(self, j: int) -> ExteriorForm:
        return self._alphas[j]

    def alpha_wedge(self, i_mask: int) -> ExteriorForm:
        """wedge of alpha_i over i in the mask, in increasing order."""
        cached = self._wedge_cache.get(i_mask)
        if cached is None:
            cached = wedge_all([self._alphas[i] for i in bits(i_mask)])
            self._wedge_cache[i_mask] = cached
        return cached

    # -- row selections and bases -------------------------------------------

    def choose_n(self, i_mask: int) -> tuple[int, ...]:
        """Row set N(I) with B~_{N(I),I} invertible and fewest mutable rows.

        Frozen rows are offered to the greedy rank test first; by the matroid
        exchange property this minimizes the mutable share.
        """
        cached = self._n_of.get(i_mask)
        if cached is not None:
            return cached
        cols = bits(i_mask)
        selected = []
        ech = Echelon()
        order = list(range(self.matrix.n, self.matrix.d)) + list(range(self.matrix.n))
        for r in order:
            if len(selected) == len(cols):
                break
            vec = {c: self.matrix.rows[r][j] for c, j in enumerate(cols)}
            if ech.add(vec) is not None:
                selected.append(r)
        if len(selected) < len(cols):
            raise ColumnsDependent(
                f"columns {cols} of the exchange matrix are dependent"
            )
        result = tuple(sorted(selected))
        self._n_of[i_mask] = result
        return result

    def require_anticlique(self, i_mask: int) -> None:
        if not self.graph.is_independent(i_mask):
            raise NotAnticlique(f"{sorted(bits(i_mask))} is not an anticlique")

    def basis(self, i_mask: int) -> GModuleBasis:
        self.require_anticlique(i_mask)
        n_rows = self.choose_n(i_mask)
        n_mask = 0
        for r in n_rows:
            n_mask |= 1 << r
        allowed = [t for t in range(self.matrix.d) if not ((i_mask | n_mask) >> t & 1)]
        masks = []
        for size in range(len(allowed) + 1):
            for combo in itertools.combinations(allowed, size):
                m = 0
                for t in combo:
                    m |= 1 << t
                masks.append(m)
        masks.sort()
        return GModuleBasis(
            tuple(bits(i_mask)), n_rows, tuple(masks), self.matrix.n, self.matrix.m
        )

    def theta_form(self, a_mask: int, i_mask: int) -> ExteriorForm:
        """theta(A, I) expanded in the ambient dlog monomial basis."""
        return ExteriorForm.monomial(a_mask).wedge(self.alpha_wedge(i_mask))

    # -- substitution of dlog x_t for t in N(J) ------------------------------

    def _pi_table(self, j_mask: int) -> dict[int, ExteriorForm]:
        """For t in N(J): dlog x_t modulo the span of the alpha_i, i in J.

        Writing dlog x_t in the basis {alpha_i} + {dlog x_r : r free}, the
        alpha components die against the full alpha wedge of G^J, so only the
        free-dlog part is kept.
        """
        cached = self._pi.get(j_mask)
        if cached is not None:
            return cached
        j_list = bits(j_mask)
        n_rows = self.choose_n(j_mask)
        n_mask = 0
        for r in n_rows:
            n_mask |= 1 << r
        ambient = [r for r in range(self.matrix.d) if not (j_mask >> r & 1)]
        free = [r for r in ambient if not (n_mask >> r & 1)]
        # column vectors of the change of basis, over the ambient rows
        columns: list[dict[int, int]] = []
        for r in free:
            columns.append({ambient.index(r): 1})
        for i in j_list:
            columns.append(
                {
                    pos: self.matrix.rows[r][i]
                    for pos, r in enumerate(ambient)
                    if self.matrix.rows[r][i]
                }
            )
        table = {}
        for t in n_rows:
            target = {ambient.index(t): 1}
            coeffs = solve_in_span(columns, target)
            assert coeffs is not None, "N(J) selection must make S a basis"
            table[t] = ExteriorForm(
                {1 << free[pos]: coeffs[pos] for pos in range(len(free)) if coeffs[pos]}
            )
        self._pi[j_mask] = table
        return table

    # -- residue blocks ------------------------------------------------------

    def rho_columns(
        self, i_mask: int, j: int, s: int
    ) -> tuple[list[int], list[int], list[dict[int, Fraction | int]]]:
        """The matrix of rho from the degree-s slice of G^I to G^{I u j}.

        Returns (source masks, target masks, columns).  Basis elements whose
        A avoids j map to zero; otherwise dlog x_j is extracted with its
        Koszul sign, alpha_j joins the alpha wedge at its sorted position,
        and any leftover dlog x_t with t in N(J) is rewritten through the
        cached substitution table.
        """
        j_mask_new = i_mask | (1 << j)
        self.require_anticlique(j_mask_new)
        src = self.basis(i_mask).masks_of_degree(s)
        dst = self.basis(j_mask_new).masks_of_degree(s)
        dst_index = {a: r for r, a in enumerate(dst)}
        k = i_mask.bit_count()
        pi = self._pi_table(j_mask_new)
        n_mask_new = 0
        for r in self.choose_n(j_mask_new):
            n_mask_new |= 1 << r
        cols = []
        for a_mask in src:
            col: dict[int, Fraction | int] = {}
            if a_mask >> j & 1:
                above_in_a = (a_mask >> (j + 1)).bit_count()
                above_in_i = (i_mask >> (j + 1)).bit_count()
                sign = -1 if (k + above_in_a + above_in_i) & 1 else 1
                a0 = a_mask & ~(1 << j)
                subs = a0 & n_mask_new
                if not subs:
                    col[dst_index[a0]] = sign
                else:
                    # e_{A0} = interleave * e_{A0 minus subs} ^ e_subs
                    sign *= wedge_sign(a0 & ~subs, subs)
                    form = ExteriorForm.monomial(a0 & ~subs, sign)
                    for t in bits(subs):
                        form = form.wedge(pi[t])
                    for mask, coeff in form.terms.items():
                        col[dst_index[mask]] = coeff
            cols.append(col)
        return src, dst, cols

    # -- full complexes ------------------------------------------------------

    def complex_for_s(
        self, s: int, family_masks: list[list[int]] | None = None, check: bool = True
    ) -> CochainComplexQ:
        """The weight-s slice over a downward-compatible anticlique family.

        ``family_masks[p]`` lists which anticlique masks of size p take part
        (defaults to all of them); the family must contain, with any I and
        any J = I u {j}, both intermediates of every two-step extension it
        supports, which holds for the full family and for the up-sets used
        by character components.
        """
        if family_masks is None:
            family_masks = [list(level) for level in self.family.by_cardinality]
        members = {m for level in family_masks for m in level}
        labels: list[list[Label]] = []
        offsets: list[dict[int, int]] = []
        for p, level in enumerate(family_masks):
            position_labels: list[Label] = []
            offset: dict[int, int] = {}
            for i_mask in sorted(level):
                offset[i_mask] = len(position_labels)
                position_labels += [
                    (i_mask, a) for a in self.basis(i_mask).masks_of_degree(s)
                ]
            labels.append(position_labels)
            offsets.append(offset)
        columns = []
        for p in range(len(labels) - 1):
            cols: list[dict[int, Fraction | int]] = [dict() for _ in labels[p]]
            for i_mask in family_masks[p]:
                src_off = offsets[p][i_mask]
                for j in range(self.matrix.n):
                    new_mask = i_mask | (1 << j)
                    if new_mask == i_mask or new_mask not in members:
                        continue
                    if not self.graph.is_independent(new_mask):
                        continue
                    eps = -1 if (i_mask & ((1 << j) - 1)).bit_count() & 1 else 1
                    dst_off = offsets[p + 1][new_mask]
                    src, _, block = self.rho_columns(i_mask, j, s)
                    for c, col in enumerate(block):
                        if not col:
                            continue
                        target = cols[src_off + c]
                        for r, v in col.items():
                            w = target.get(dst_off + r, 0) + eps * v
                            if w:
                                target[dst_off + r] = w
                            else:
                                target.pop(dst_off + r, None)
            columns.append(cols)
        cx = CochainComplexQ(labels, columns)
        if check:
            cx.verify_d2()
        return cx


# ---------------------------------------------------------------------------
# public operations


def alpha(matrix: ExtendedExchangeMatrix, j: int) -> ExteriorForm:
    """The one-form sum_r B~_{rj} dlog x_r attached to a mutable index."""
    return ExteriorForm({1 << r: matrix.rows[r][j] for r in range(matrix.d)})


def choose_N(matrix: ExtendedExchangeMatrix, anticlique) -> tuple[int, ...]:
    builder = GysinBuilder(matrix)
    mask = _mask_of(anticlique)
    builder.require_anticlique(mask)
    return builder.choose_n(mask)


def basis_G_I(matrix: ExtendedExchangeMatrix, anticlique) -> GModuleBasis:
    return GysinBuilder(matrix).basis(_mask_of(anticlique))


def rho(matrix: ExtendedExchangeMatrix, anticlique, j: int, s: int):
    """Matrix of rho from the degree-s slice of G^I to G^{I u {j}}."""
    return GysinBuilder(matrix).rho_columns(_mask_of(anticlique), j, s)


def _mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


def build_gysin_complex(
    matrix: ExtendedExchangeMatrix, s: int, check: bool = True
) -> CochainComplexQ:
    """Weight-s Gysin complex of a really-full-rank acyclic matrix."""
    if not is_acyclic(matrix):
        raise NotAcyclic("the quiver has an oriented cycle")
    rc = rank_class(matrix)
    if rc is RankClass.NOT_FULL_RANK:
        raise NotFullRank("matrix is not of full rank")
    if rc is not RankClass.REALLY_FULL_RANK:
        raise NotReallyFullRank(
            "matrix has nontrivial characters; use build_character_complex"
        )
    if not 0 <= s <= matrix.d:
        raise ValueError(f"weight s={s} outside [0, {matrix.d}]")
    return GysinBuilder(matrix).complex_for_s(s, check=check)


@dataclass(frozen=True)
class CharacterComplex:
    """One character's contribution at one weight, already reindexed.

    H^p of ``complex`` contributes to dims(p + kappa + weight, weight).
    A ``complex`` of None means the zero complex.
    """

    kappa: int
    weight: int
    reduced_matrix: ExtendedExchangeMatrix | None
    complex: CochainComplexQ | None

    @property
    def is_zero(self) -> bool:
        return self.complex is None


def build_character_complex(
    matrix: ExtendedExchangeMatrix, chi: Character, s: int, check: bool = True
) -> CharacterComplex:
    """The chi-component of the weight-s complex, via the support reduction."""
    reduced = reduce_character(matrix, chi)
    if isinstance(reduced, ZeroComplex):
        return CharacterComplex(0, s, None, None)
    kappa, small = reduced.kappa, reduced.matrix
    if s - kappa < 0 or s - kappa > small.d:
        return CharacterComplex(kappa, s, small, None)
    cx = GysinBuilder(small).complex_for_s(s - kappa, check=check)
    return CharacterComplex(kappa, s, small, cx)


@dataclass(frozen=True)
class HodgeTable:
    """dim H^{k,(s,s)} for an acyclic full-rank cluster variety."""

    n: int
    m: int
    dims: dict[tuple[int, int], int]

    @property
    def d(self) -> int:
        return self.n + self.m

    def dim(self, k: int, s: int) -> int:
        return self.dims.get((k, s), 0)

    def diagonal_polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_coeffs(
            [self.dim(s, s) for s in range(self.d + 1)]
        )

    def offdiagonal_polynomial(self) -> IntPolynomial:
        """sum_s dims(s+1, s) x^s, the first nonstandard row."""
        return IntPolynomial.from_coeffs(
            [self.dim(s + 1, s) for s in range(self.d + 1)]
        )

    def point_count_polynomial(self) -> IntPolynomial:
        """sum (-1)^k dims(k,s) q^{d-s}, the E-polynomial point count."""
        coeffs = [0] * (self.d + 1)
        for (k, s), v in self.dims.items():
            coeffs[self.d - s] += v if k % 2 == 0 else -v
        return IntPolynomial.from_coeffs(coeffs)

    def check_lefschetz(self) -> None:
        for k in range(0, 2 * self.d + 2):
            for s in range(0, self.d + 1):
                if self.dim(k, s) != self.dim(k + self.d - 2 * s, self.d - s):
                    raise ConsistencyError(
                        f"curious Lefschetz fails at (k,s)=({k},{s})"
                    )

    def check_weak_support(self) -> None:
        """Smooth-affine bounds: 0 <= k <= d and k/2 <= s <= k."""
        for (k, s), v in self.dims.items():
            if not v:
                continue
            if not (0 <= k <= self.d and k / 2 <= s <= k):
                raise ConsistencyError(f"support bound fails at (k,s)=({k},{s})")

    def check_support_bounds(self) -> None:
        """The sharper really-full-rank bound max(2k/3, 2k-d) <= s <= k."""
        for (k, s), v in self.dims.items():
            if not v:
                continue
            if not (0 <= k <= self.d):
                raise ConsistencyError(f"degree {k} outside [0, {self.d}]")
            if not (max(2 * k / 3, 2 * k - self.d) <= s <= k):
                raise ConsistencyError(f"weight bound fails at (k,s)=({k},{s})")

    def check_top_class(self) -> None:
        if self.dim(self.d, self.d) != 1:
            raise ConsistencyError("top cohomology is not one-dimensional")
        for s in range(self.d):
            if self.dim(self.d, s):
                raise ConsistencyError("top cohomology has weight below d")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "hodge": [
                {"k": k, "s": s, "dim": v}
                for (k, s), v in sorted(self.dims.items())
            ],
        }

    def to_tsv(self) -> str:
        lines = ["k\ts\tdim"]
        lines += [f"{k}\t{s}\t{v}" for (k, s), v in sorted(self.dims.items())]
        return "\n".join(lines)


def hodge_table(matrix: ExtendedExchangeMatrix, check: bool = True) -> HodgeTable:
    """Full mixed Hodge table, summed over all character components.

    The trivial character runs over all anticliques; a nontrivial character
    chi contributes the subcomplex over anticliques containing J(chi), which
    is empty unless J(chi) is an anticlique.  Contributions from characters
    with equal support coincide, so they are cached by support.
    """
    if not is_acyclic(matrix):
        raise NotAcyclic("the quiver has an oriented cycle")
    rc = rank_class(matrix)
    if rc is RankClass.NOT_FULL_RANK:
        raise NotFullRank("matrix is not of full rank")
    builder = GysinBuilder(matrix)
    dims: dict[tuple[int, int], int] = {}

    def accumulate(family_masks):
        for s in range(matrix.d + 1):
            cx = builder.complex_for_s(s, family_masks, check=check)
            for p, h in cx.cohomology_dims().items():
                key = (p + s, s)
                dims[key] = dims.get(key, 0) + h

    full_family = [list(level) for level in builder.family.by_cardinality]
    if rc is RankClass.REALLY_FULL_RANK:
        accumulate(full_family)
    else:
        group = CharacterGroup(matrix)
        support_multiplicity: dict[int, int] = {}
        for chi in group.elements():
            j_mask = _mask_of(group.support(chi))
            if builder.graph.is_independent(j_mask):
                support_multiplicity[j_mask] = support_multiplicity.get(j_mask, 0) + 1
        for j_mask, mult in sorted(support_multiplicity.items()):
            family = [
                [i for i in level if i & j_mask == j_mask]
                for level in builder.family.by_cardinality
            ]
            partial: dict[tuple[int, int], int] = {}
            for s in range(matrix.d + 1):
                cx = builder.complex_for_s(s, family, check=check)
                for p, h in cx.cohomology_dims().items():
                    key = (p + s, s)
                    partial[key] = partial.get(key, 0) + h
            for key, v in partial.items():
                dims[key] = dims.get(key, 0) + v * mult

    table = HodgeTable(matrix.n, matrix.m, {k: v for k, v in dims.items() if v})
    if check:
        table.check_weak_support()
        table.check_lefschetz()
        if rc is RankClass.REALLY_FULL_RANK:
            table.check_support_bounds()
            table.check_top_class()
    return table


def standard_poincare(matrix: ExtendedExchangeMatrix) -> IntPolynomial:
    """Diagonal Poincare polynomial of a connected principal-coefficients case.

    Counts the basis gamma^j ^ (wedge of dlog y_k over k in K) with
    j + |K| <= n, living in degree 2j + |K|.
    """
    if not is_principal(matrix):
        raise NotPrincipal("standard basis needs principal coefficients")
    if not underlying_graph(matrix).is_connected():
        raise NotConnected("standard basis formula needs a connected quiver")
    n = matrix.n
    coeffs = [0] * (2 * n + 1)
    for j in range(n + 1):
        for ksize in range(n - j + 1):
            coeffs[2 * j + ksize] += comb(n, ksize)
    return IntPolynomial.from_coeffs(coeffs)


def gsv_form(matrix: ExtendedExchangeMatrix, component) -> ExteriorForm:
    """GSV two-form of a connected component, skew-completed by zeros.

    Uses the completion B^ with first n columns equal to the exchange matrix
    and zeros in the frozen-by-frozen corner, restricted to the component's
    mutable indices and all frozen indices.
    """
    graph = underlying_graph(matrix)
    comp_mask = _mask_of(component)
    if comp_mask not in graph.components():
        raise NotConnected(f"{sorted(bits(comp_mask))} is not a connected component")
    verts = bits(comp_mask)
    terms: dict[int, int] = {}
    for i in verts:
        for jv in verts:
            if i < jv and matrix.rows[i][jv]:
                terms[(1 << i) | (1 << jv)] = matrix.rows[i][jv]
        for r in range(matrix.n, matrix.d):
            if matrix.rows[r][i]:
                key = (1 << i) | (1 << r)
                terms[key] = terms.get(key, 0) - matrix.rows[r][i]
    return ExteriorForm(terms)


@dataclass(frozen=True)
class EdgeClassCochain:
    """The cocycle theta({a}, {b}) at position 1, weight 2."""

    a: int
    b: int
    form: ExteriorForm
    vector: dict[int, Fraction | int]  # coordinates in the weight-2 complex


def edge_class_cochain(
    matrix: ExtendedExchangeMatrix, a: int, b: int, builder: GysinBuilder | None = None
) -> EdgeClassCochain:
    graph = underlying_graph(matrix)
    if not graph.has_edge(a, b):
        raise NotAnEdge(f"({a}, {b}) is not an edge of the quiver graph")
    builder = builder or GysinBuilder(matrix)
    i_mask = 1 << b
    basis = builder.basis(i_mask)
    n_mask = 0
    for r in basis.row_selection:
        n_mask |= 1 << r
    index = {m: i for i, m in enumerate(basis.masks_of_degree(2))}
    vector: dict[int, Fraction | int] = {}
    if 1 << a & n_mask:
        pi = builder._pi_table(i_mask)[a]
        for mask, coeff in pi.terms.items():
            vector[index[mask]] = coeff
    else:
        vector[index[1 << a]] = 1
    offset = 0
    for m in sorted(builder.family.by_cardinality[1]):
        if m == i_mask:
            break
        offset += len(builder.basis(m).masks_of_degree(2))
    placed = {offset + i: v for i, v in vector.items()}
    form = builder.theta_form(1 << a, i_mask)
    return EdgeClassCochain(a, b, form, placed)
