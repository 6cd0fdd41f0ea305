"""Graphs, independence complexes and their rational reduced cohomology.

Vertices are 0-based ints.  Faces of a simplicial complex are bitmasks over
the ambient vertex set.  Reduced cohomology follows the convention that the
complex {empty set} has a one-dimensional H~^{-1} and every nonempty complex
has H~^{-1} = 0; cochains on r-faces are functions on sorted vertex tuples
with the usual alternating-sum coboundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CycleTooSmall, NotAForest, NotAnEdge, VertexInX
from .exterior import bits
from .linalg import Echelon, nullspace, rank, solve_in_span


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n_vertices-1."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]  # pairs (u, v) with u < v
    adjacency: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        adj = [0] * self.n_vertices
        for u, v in self.edges:
            if not (0 <= u < v < self.n_vertices):
                raise ValueError(f"bad edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adjacency", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        return cls(n, frozenset(tuple(sorted(p)) for p in pairs))

    def has_edge(self, u: int, v: int) -> bool:
        return tuple(sorted((u, v))) in self.edges

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adjacency[v] & mask:
                return False
        return True

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in mask order."""
        verts = bits(mask)
        index = {v: i for i, v in enumerate(verts)}
        pairs = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph.from_edges(len(verts), pairs)

    def components(self) -> list[int]:
        """Connected components as vertex masks, sorted by lowest vertex."""
        seen = 0
        comps = []
        for v in range(self.n_vertices):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = [v]
            while frontier:
                u = frontier.pop()
                for w in bits(self.adjacency[u] & ~comp):
                    comp |= 1 << w
                    frontier.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_forest(self) -> bool:
        return len(self.edges) == self.n_vertices - len(self.components())


def path_graph(v: int) -> Graph:
    return Graph.from_edges(v, [(i, i + 1) for i in range(v - 1)])


def cycle_graph(v: int) -> Graph:
    return Graph.from_edges(v, [(i, (i + 1) % v) for i in range(v)])


def star_graph(v: int) -> Graph:
    """The star Z_v: center 0 joined to v-1 leaves."""
    return Graph.from_edges(v, [(0, i) for i in range(1, v)])


def complete_graph(v: int) -> Graph:
    return Graph.from_edges(v, itertools.combinations(range(v), 2))


# ---------------------------------------------------------------------------
# anticliques and independence complexes


@dataclass(frozen=True)
class AnticliqueFamily:
    """All independent sets of a graph, grouped by cardinality."""

    by_cardinality: tuple[tuple[int, ...], ...]  # masks, sorted within a size

    def sizes(self) -> list[int]:
        return [len(level) for level in self.by_cardinality]

    def all_masks(self) -> list[int]:
        return [m for level in self.by_cardinality for m in level]


def anticliques(graph: Graph) -> AnticliqueFamily:
    levels: list[list[int]] = [[] for _ in range(graph.n_vertices + 1)]
    for mask in range(1 << graph.n_vertices):
        if graph.is_independent(mask):
            levels[mask.bit_count()].append(mask)
    while len(levels) > 1 and not levels[-1]:
        levels.pop()
    return AnticliqueFamily(tuple(tuple(lv) for lv in levels))


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces as bitmasks; always contains the empty face."""

    n_vertices: int
    faces: frozenset[int]

    def __post_init__(self):
        if 0 not in self.faces:
            raise ValueError("a simplicial complex contains the empty face")

    def faces_of_dim(self, r: int) -> list[int]:
        return sorted(f for f in self.faces if f.bit_count() == r + 1)

    def dimension(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    def euler_characteristic_reduced(self) -> int:
        """sum over faces of (-1)^dim, including the empty face."""
        return sum((-1) ** (f.bit_count() + 1) for f in self.faces)


def independence_complex(graph: Graph) -> SimplicialComplex:
    return SimplicialComplex(
        graph.n_vertices,
        frozenset(m for m in range(1 << graph.n_vertices) if graph.is_independent(m)),
    )


def independence_complex_on(graph: Graph, vertex_mask: int) -> SimplicialComplex:
    """Independence complex of the induced subgraph, keeping ambient labels."""
    faces = []
    verts = bits(vertex_mask)
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            m = 0
            for v in combo:
                m |= 1 << v
            if graph.is_independent(m):
                faces.append(m)
    return SimplicialComplex(graph.n_vertices, frozenset(faces))


# ---------------------------------------------------------------------------
# reduced cohomology


@dataclass(frozen=True)
class ReducedCohomology:
    dims: dict[int, int]

    def dim(self, r: int) -> int:
        return self.dims.get(r, 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def __eq__(self, other):
        return isinstance(other, ReducedCohomology) and self.dims == other.dims


def _coboundary(cx: SimplicialComplex, r: int) -> list[dict[int, Fraction]]:
    """Matrix of d: C^r -> C^{r+1} in the sorted-face bases (rows=targets)."""
    sources = cx.faces_of_dim(r)
    targets = cx.faces_of_dim(r + 1)
    src_index = {f: i for i, f in enumerate(sources)}
    rows = []
    for f in targets:
        row: dict[int, Fraction] = {}
        for pos, v in enumerate(bits(f)):
            sub = f & ~(1 << v)
            j = src_index.get(sub)
            if j is not None:
                row[j] = Fraction((-1) ** pos)
        rows.append(row)
    return rows


def reduced_cohomology(cx: SimplicialComplex) -> ReducedCohomology:
    if cx.faces == frozenset({0}):
        return ReducedCohomology({-1: 1})
    dims: dict[int, int] = {}
    top = cx.dimension()
    ranks = {}
    for r in range(-1, top + 1):
        ranks[r] = rank(_coboundary(cx, r))
    for r in range(0, top + 1):
        n_faces = len(cx.faces_of_dim(r))
        h = n_faces - ranks[r] - ranks[r - 1]
        if h:
            dims[r] = h
    return ReducedCohomology(dims)


class CohomologyBasis:
    """Explicit cocycle representatives of H~^r and coordinates mod coboundaries."""

    def __init__(self, cx: SimplicialComplex, r: int):
        self.complex = cx
        self.r = r
        self.faces = cx.faces_of_dim(r)
        if r == -1:
            # the empty face is the single basis cochain
            self.faces = [0] if 0 in cx.faces else []
        n = len(self.faces)
        d_out = _coboundary(cx, r) if r >= 0 else _coboundary_from_empty(cx)
        cocycles = nullspace(d_out, n)
        if r - 1 == -1:
            boundary_cols = _coboundary_from_empty(cx)
        elif r - 1 >= 0:
            boundary_cols = _coboundary(cx, r - 1)
        else:
            boundary_cols = []
        # images of the previous coboundary, as vectors over the r-faces
        images: list[dict[int, Fraction]] = []
        n_prev = 0
        if r - 1 == -1:
            n_prev = 1 if 0 in cx.faces else 0
        elif r - 1 >= 0:
            n_prev = len(cx.faces_of_dim(r - 1))
        for j in range(n_prev):
            images.append({i: row[j] for i, row in enumerate(boundary_cols) if row.get(j)})
        ech = Echelon()
        for v in images:
            ech.add(v)
        self._span = images
        self.representatives = []
        for z in cocycles:
            if ech.add(z) is not None:
                self.representatives.append(z)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, cocycle: dict[int, Fraction]) -> list[Fraction]:
        coeffs = solve_in_span(self.representatives + self._span, cocycle)
        if coeffs is None:
            raise ValueError("vector is not a cocycle of this complex")
        return coeffs[: len(self.representatives)]


def _coboundary_from_empty(cx: SimplicialComplex) -> list[dict[int, Fraction]]:
    """The augmentation C^{-1} -> C^0 (a single column of ones)."""
    return [{0: Fraction(1)} for _ in cx.faces_of_dim(0)]


# ---------------------------------------------------------------------------
# closed forms: paths, cycles, forests


@dataclass(frozen=True)
class HomotopyType:
    """Contractible, or a sphere; Sphere(-1) is the complex {empty set}."""

    contractible: bool
    sphere_dim: int | None = None

    def __repr__(self):
        return "Contractible" if self.contractible else f"Sphere({self.sphere_dim})"

    def cohomology(self) -> ReducedCohomology:
        if self.contractible:
            return ReducedCohomology({})
        return ReducedCohomology({self.sphere_dim: 1})


CONTRACTIBLE = HomotopyType(True)


def Sphere(k: int) -> HomotopyType:
    return HomotopyType(False, k)


def join(a: HomotopyType, b: HomotopyType) -> HomotopyType:
    """Join rule: spheres add dimensions plus one; contractible absorbs."""
    if a.contractible or b.contractible:
        return CONTRACTIBLE
    return Sphere(a.sphere_dim + b.sphere_dim + 1)


def suspend(a: HomotopyType) -> HomotopyType:
    return join(a, Sphere(0))


def closed_form_path(n: int) -> HomotopyType:
    """Homotopy type of the independence complex of the path of length n.

    Length counts edges, matching the n = 3k / 3k+1 / 3k+2 trichotomy; the
    degenerate n = 0 is fixed to the empty path, whose complex is {empty set}.
    """
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n == 0:
        return Sphere(-1)
    if n % 3 == 0:
        return CONTRACTIBLE
    return Sphere(n // 3)


def closed_form_cycle(m: int) -> ReducedCohomology:
    if m < 3:
        raise CycleTooSmall(f"cycles need at least 3 vertices, got {m}")
    k, rem = divmod(m, 3)
    if rem == 0:
        return ReducedCohomology({k - 1: 2})
    return ReducedCohomology({k: 1}) if rem == 2 else ReducedCohomology({k - 1: 1})


def forest_homotopy(forest: Graph) -> HomotopyType:
    """Homotopy type of the independence complex of a forest.

    Components are combined by the join rule; within a tree the pendant-path
    reductions are applied at the parent/grandparent of a deepest leaf:
    duplicate leaf siblings collapse, a pendant 2-path next to a pendant leaf
    forces contractibility, twin pendant 2-paths and pendant 3-paths suspend.
    """
    if not forest.is_forest():
        raise NotAForest("graph contains a cycle")
    result = Sphere(-1)
    for comp in forest.components():
        result = join(result, _tree_homotopy(forest.induced(comp)))
        if result.contractible:
            return CONTRACTIBLE
    return result


def _tree_homotopy(tree: Graph) -> HomotopyType:
    v = tree.n_vertices
    if v == 1:
        return CONTRACTIBLE
    if v == 2:
        return Sphere(0)

    # duplicate pendant leaves collapse (rule for twin 1-paths)
    for x in range(v):
        leaf_nbrs = [w for w in bits(tree.adjacency[x]) if tree.degree(w) == 1]
        if len(leaf_nbrs) >= 2:
            return _tree_homotopy(_delete(tree, {leaf_nbrs[1]}))

    # BFS from vertex 0: the last vertex discovered is a deepest leaf.  Its
    # parent p then has no other child, and every sibling subtree at the
    # grandparent g is a pendant leaf or a pendant 2-path.
    parent: dict[int, int | None] = {0: None}
    order = [0]
    for u in order:
        for w in bits(tree.adjacency[u]):
            if w not in parent:
                parent[w] = u
                order.append(w)
    leaf = order[-1]
    p = parent[leaf]
    g = parent[p]
    assert g is not None, "depth >= 2 after the leaf collapse above"
    others = [w for w in bits(tree.adjacency[g]) if w not in (parent[g], p)]
    if any(tree.degree(w) == 1 for w in others):
        # pendant 2-path plus pendant leaf at g: contractible
        return CONTRACTIBLE
    if others:
        # twin pendant 2-paths at g: remove one and suspend
        w = others[0]
        tip = next(x for x in bits(tree.adjacency[w]) if x != g)
        return suspend(_tree_homotopy(_delete(tree, {w, tip})))
    # pendant 3-path at parent(g): remove it and suspend
    return suspend(_tree_homotopy(_delete(tree, {leaf, p, g})))


def _delete(graph: Graph, drop: set[int]) -> Graph:
    keep = [v for v in range(graph.n_vertices) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    pairs = [
        (index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    ]
    return Graph.from_edges(len(keep), pairs)


# ---------------------------------------------------------------------------
# the Mayer-Vietoris connecting map


def mv_delta(graph: Graph, x_mask: int, a: int, b: int) -> dict[int, list[list[Fraction]]]:
    """Connecting maps H~^r(I(X)) -> H~^{r+1}(I(X u {a,b})) for all r.

    (a, b) must be an edge of the ambient graph and a, b must lie outside X;
    the cover is I(X u {a,b}) = I(X u a) u I(X u b).  On cochains the map
    sends psi to eta with eta(F) = psi(F minus a) when a is in F (a ordered
    last) and 0 otherwise.  Returns {r: matrix}, rows indexed by the chosen
    basis of H~^{r+1} of the larger complex.
    """
    if not graph.has_edge(a, b):
        raise NotAnEdge(f"({a}, {b}) is not an edge")
    if x_mask >> a & 1 or x_mask >> b & 1:
        raise VertexInX("a and b must lie outside X")
    small = independence_complex_on(graph, x_mask)
    big = independence_complex_on(graph, x_mask | 1 << a | 1 << b)
    small_h = reduced_cohomology(small)
    out: dict[int, list[list[Fraction]]] = {}
    for r in sorted(small_h.dims):
        src = CohomologyBasis(small, r)
        dst = CohomologyBasis(big, r + 1)
        cols = []
        big_faces = {f: i for i, f in enumerate(big.faces_of_dim(r + 1))}
        small_faces = {f: i for i, f in enumerate(src.faces)}
        for rep in src.representatives:
            eta: dict[int, Fraction] = {}
            for f, i in big_faces.items():
                if not (f >> a & 1):
                    continue
                sub = f & ~(1 << a)
                j = small_faces.get(sub)
                if j is None or not rep.get(j):
                    continue
                sign = -1 if ((f >> (a + 1)).bit_count() & 1) else 1
                eta[i] = rep[j] * sign
            cols.append(dst.coordinates(eta))
        out[r] = [[cols[j][i] for j in range(len(cols))] for i in range(dst.dim)]
    return out


# ---------------------------------------------------------------------------
# enumeration up to isomorphism (small vertex counts)


def _canonical_edge_mask(v: int, edge_mask: int, pair_index: dict) -> int:
    pairs = list(itertools.combinations(range(v), 2))
    best = None
    for perm in itertools.permutations(range(v)):
        m = 0
        for k, (i, j) in enumerate(pairs):
            if edge_mask >> k & 1:
                a, b = sorted((perm[i], perm[j]))
                m |= 1 << pair_index[(a, b)]
        if best is None or m < best:
            best = m
    return best


def all_graphs(v: int) -> list[Graph]:
    """All simple graphs on v vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(v), 2))
    pair_index = {p: k for k, p in enumerate(pairs)}
    seen = set()
    out = []
    for edge_mask in range(1 << len(pairs)):
        canon = _canonical_edge_mask(v, edge_mask, pair_index)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Graph.from_edges(v, [p for k, p in enumerate(pairs) if edge_mask >> k & 1]))
    return out


def connected_graphs(v: int) -> list[Graph]:
    return [g for g in all_graphs(v) if g.is_connected()]


def _tree_canon(graph: Graph) -> str:
    """AHU canonical form of a free tree, rooted at its centroid(s)."""
    verts = list(range(graph.n_vertices))
    adj = {u: bits(graph.adjacency[u]) for u in verts}
    if len(verts) == 1:
        return "()"
    # strip leaves until one or two centroids remain
    deg = {u: len(adj[u]) for u in verts}
    layer = [u for u in verts if deg[u] <= 1]
    removed: set[int] = set()
    remaining = len(verts)
    while remaining > 2:
        nxt = []
        for u in layer:
            removed.add(u)
            remaining -= 1
            for w in adj[u]:
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [u for u in verts if u not in removed]

    def encode(u, par):
        subs = sorted(encode(w, u) for w in adj[u] if w != par)
        return "(" + "".join(subs) + ")"

    if len(centers) == 1:
        return encode(centers[0], None)
    c1, c2 = centers
    return "[" + "".join(sorted([encode(c1, c2), encode(c2, c1)])) + "]"


def trees(v: int) -> list[Graph]:
    """All free trees on v vertices, one per isomorphism class."""
    if v < 1:
        return []
    current = [Graph.from_edges(1, [])]
    for _ in range(2, v + 1):
        seen: dict[str, Graph] = {}
        for tree in current:
            for attach in range(tree.n_vertices):
                pairs = list(tree.edges) + [(attach, tree.n_vertices)]
                cand = Graph.from_edges(tree.n_vertices + 1, pairs)
                seen.setdefault(_tree_canon(cand), cand)
        current = list(seen.values())
    return current


def forests(max_vertices: int) -> list[Graph]:
    """All forests with at most max_vertices vertices, one per iso class."""
    tree_lists = {k: trees(k) for k in range(1, max_vertices + 1)}
    out = [Graph.from_edges(0, [])]

    def build(parts: list[Graph]) -> Graph:
        total = sum(t.n_vertices for t in parts)
        pairs = []
        offset = 0
        for t in parts:
            pairs += [(u + offset, w + offset) for u, w in t.edges]
            offset += t.n_vertices
        return Graph.from_edges(total, pairs)

    def extend(parts, min_size, min_index, budget):
        if parts:
            out.append(build(parts))
        for size in range(min_size, budget + 1):
            start = min_index if size == min_size else 0
            for idx in range(start, len(tree_lists[size])):
                extend(parts + [tree_lists[size][idx]], size, idx, budget - size)

    extend([], 1, 0, max_vertices)
    return out
