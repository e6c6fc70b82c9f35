"""Finite simple graphs on vertex set {1..n}, and the combinatorics feeding
the ideal-theoretic formulas: chordality, clique complexes with leaf orders,
cut-set censuses, and the leaf-splitting step used to peel generalized block
graphs.

Vertices are 1-based in the public API.  Internally most routines work on
adjacency bitmasks (bit v-1 is vertex v), which keeps the exhaustive
enumerations over all subsets or all small graphs affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class GraphParseError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Edges are canonical (u, v) pairs with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) is not canonical for n={self.n}")

    @staticmethod
    def from_edges(n: int, pairs) -> "Graph":
        canon = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            canon.add((u, v) if u < v else (v, u))
        return Graph(n, frozenset(canon))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __repr__(self):
        es = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, {es or 'no edges'})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: comment lines start with '#', the first
    data line is the vertex count, every further data line is 'u v'."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError("expected a single vertex count", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphParseError(f"vertex count is not an integer: {tokens[0]!r}", lineno) from None
            if n < 1:
                raise GraphParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"edge endpoints must be integers: {line!r}", lineno) from None
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"edge ({u},{v}) outside 1..{n}", lineno)
        pairs.append((u, v))
    if n is None:
        raise GraphParseError("no vertex count found", 1)
    return Graph.from_edges(n, pairs)


# ---------------------------------------------------------------------------
# bitmask internals

def _adj_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _component_count(adj: list[int], mask: int) -> int:
    """Number of connected components of the restriction to `mask`."""
    count = 0
    rem = mask
    while rem:
        seed = rem & -rem
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        rem &= ~seen
        count += 1
    return count


def _component_masks(adj: list[int], mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        seed = rem & -rem
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        comps.append(seen)
        rem &= ~seen
    return comps


def _mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(b + 1 for b in _bits(mask))


def _lex_bfs(n: int, adj: list[int]) -> list[int]:
    """Lexicographic BFS visit order (0-based vertices).

    Ties are broken toward the smallest vertex, so the order and everything
    derived from it is deterministic.
    """
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if visited[v]:
                continue
            if best < 0 or labels[v] > labels[best]:
                best = v
        visited[best] = True
        order.append(best)
        stamp = n - step
        for w in _bits(adj[best]):
            if not visited[w]:
                labels[w].append(stamp)
    return order


def _is_peo(n: int, adj: list[int], elim: list[int]) -> bool:
    """Check that eliminating vertices in `elim` order always removes a
    vertex whose remaining neighbors form a clique."""
    pos = [0] * n
    for idx, v in enumerate(elim):
        pos[v] = idx
    for v in elim:
        later = [w for w in _bits(adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and not (adj[u] >> w) & 1:
                return False
    return True


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Chordality test.  Returns (True, perfect elimination order) or
    (False, None); the order lists 1-based vertices, earliest removed first."""
    adj = _adj_masks(g)
    elim = list(reversed(_lex_bfs(g.n, adj)))
    if _is_peo(g.n, adj, elim):
        return True, tuple(v + 1 for v in elim)
    return False, None


def _peo_facet_masks(n: int, adj: list[int], elim: list[int]) -> list[int]:
    """Maximal cliques of a chordal graph from an elimination order."""
    pos = [0] * n
    for idx, v in enumerate(elim):
        pos[v] = idx
    cands = []
    for v in elim:
        mask = 1 << v
        for w in _bits(adj[v]):
            if pos[w] > pos[v]:
                mask |= 1 << w
        cands.append(mask)
    return _prune_nonmaximal(cands)


def _prune_nonmaximal(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def _bron_kerbosch(n: int, adj: list[int]) -> list[int]:
    """All maximal cliques by branch and bound with pivoting."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda v: (adj[v] & p).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def _facet_masks(n: int, adj: list[int]) -> tuple[list[int], bool]:
    """(maximal clique masks, chordal flag); elimination-order route for
    chordal graphs, exhaustive search otherwise."""
    elim = list(reversed(_lex_bfs(n, adj)))
    if _is_peo(n, adj, elim):
        return _peo_facet_masks(n, adj, elim), True
    return _bron_kerbosch(n, adj), False


def _sorted_facets(masks: list[int]) -> list[int]:
    return sorted(masks, key=_mask_vertices)


def _leaf_order(facets: list[int]) -> tuple[int, ...] | None:
    """A leaf order of the facet list, as a permutation of indices.

    Position by position the smallest usable facet index is chosen and a
    dead end backtracks, so the result is the lexicographically least valid
    order.  Returns None when no leaf order exists.
    """
    r = len(facets)
    if r == 1:
        return (0,)
    inter = [[facets[i] & facets[j] for j in range(r)] for i in range(r)]

    def is_leaf(c: int, chosen: list[int]) -> bool:
        for b in chosen:
            if all(inter[h][c] & ~inter[b][c] == 0 for h in chosen):
                return True
        return False

    def extend(chosen: list[int], remaining: set[int]):
        if not remaining:
            return chosen
        for idx in sorted(remaining):
            if not chosen or is_leaf(idx, chosen):
                found = extend(chosen + [idx], remaining - {idx})
                if found:
                    return found
        return None

    found = extend([], set(range(r)))
    return tuple(found) if found else None


@dataclass(frozen=True)
class CliqueComplex:
    """Facets are the maximal cliques, listed in lexicographic vertex order.
    leaf_order is a permutation of facet indices such that each facet is a
    leaf of the subcomplex generated by it and its predecessors; present
    exactly when the graph is chordal."""

    facets: tuple[frozenset[int], ...]
    leaf_order: tuple[int, ...] | None

    @property
    def clique_number(self) -> int:
        return max(len(f) for f in self.facets)


def clique_complex(g: Graph) -> CliqueComplex:
    adj = _adj_masks(g)
    masks, chordal = _facet_masks(g.n, adj)
    masks = _sorted_facets(masks)
    order = _leaf_order(masks) if chordal else None
    facets = tuple(frozenset(_mask_vertices(m)) for m in masks)
    return CliqueComplex(facets=facets, leaf_order=order)


@dataclass(frozen=True)
class Classification:
    chordal: bool
    block_graph: bool
    generalized_block_graph: bool
    clique_number: int


def _classify_masks(n: int, adj: list[int]) -> tuple[bool, bool, bool, int]:
    facets, chordal = _facet_masks(n, adj)
    omega = max(m.bit_count() for m in facets)
    if not chordal:
        return False, False, False, omega
    block = True
    for a, b in combinations(facets, 2):
        if (a & b).bit_count() > 1:
            block = False
            break
    gblock = True
    for a, b, c in combinations(facets, 3):
        if a & b & c:
            if not (a & b == b & c == a & c):
                gblock = False
                break
    return True, block, gblock, omega


def classify(g: Graph) -> Classification:
    """Chordal / block / generalized block classification.

    A block graph is a chordal graph whose maximal cliques pairwise share at
    most one vertex.  A generalized block graph is a chordal graph in which
    any three maximal cliques with a common vertex have pairwise equal
    intersections.
    """
    chordal, block, gblock, omega = _classify_masks(g.n, _adj_masks(g))
    return Classification(
        chordal=chordal,
        block_graph=block,
        generalized_block_graph=gblock,
        clique_number=omega,
    )


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the components, each sorted, ordered by least element."""
    adj = _adj_masks(g)
    comps = _component_masks(adj, (1 << g.n) - 1)
    return tuple(sorted(_mask_vertices(m) for m in comps))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def components_within(g: Graph, vertices) -> tuple[tuple[int, ...], ...]:
    """Components of the restriction to `vertices`, in original labels."""
    mask = 0
    for v in vertices:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} outside 1..{g.n}")
        mask |= 1 << (v - 1)
    comps = _component_masks(_adj_masks(g), mask)
    return tuple(sorted(_mask_vertices(m) for m in comps))


def induced_subgraph(g: Graph, keep) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `keep`, relabeled 1..k preserving vertex order.
    Returns the graph and the old-to-new label map."""
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("cannot induce on an empty vertex set")
    for v in kept:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return Graph.from_edges(len(kept), edges), relabel


def is_path(g: Graph) -> bool:
    """True for path graphs, including the one-vertex path."""
    if not is_connected(g):
        return False
    if g.n == 1:
        return True
    degs = [g.degree(v) for v in range(1, g.n + 1)]
    return max(degs) <= 2 and degs.count(1) == 2


# ---------------------------------------------------------------------------
# cut sets

@dataclass(frozen=True)
class CutSetCensus:
    """Everything the closed-form invariants need to know about cut sets.

    minimal_cut_sets groups the inclusion-minimal cut sets by cardinality.
    counts[i] is the number of minimal cut sets of cardinality i for i up to
    the clique number minus one (the only range the formulas consume).
    cut_point_sets are the sets T where each member's removal genuinely
    lowers the component count of the restriction to the complement, indexed
    with their component counts; the empty set always qualifies.
    """

    minimal_cut_sets: dict[int, tuple[frozenset[int], ...]]
    counts: dict[int, int]
    cut_point_sets: tuple[frozenset[int], ...]
    component_counts: dict[frozenset[int], int]
    clique_number: int

    def a(self, i: int) -> int:
        """Number of minimal cut sets of cardinality i (0 when none)."""
        return len(self.minimal_cut_sets.get(i, ()))


def _census_masks(n: int, adj: list[int]) -> tuple[list[int], list[int], list[int]]:
    """(component counts by removed mask, minimal cut masks, cut point masks)."""
    full = (1 << n) - 1
    comp = [0] * (1 << n)
    for removed in range(1 << n):
        comp[removed] = _component_count(adj, full & ~removed)
    base = comp[0]
    contains_cut = bytearray(1 << n)
    minimal = []
    cut_points = [0]
    for t in range(1, 1 << n):
        is_cut = comp[t] > base
        proper = False
        point = True
        tt = t
        while tt:
            b = tt & -tt
            tt ^= b
            if contains_cut[t ^ b]:
                proper = True
            if comp[t ^ b] >= comp[t]:
                point = False
        if is_cut and not proper:
            minimal.append(t)
        contains_cut[t] = 1 if (is_cut or proper) else 0
        if point:
            cut_points.append(t)
    return comp, minimal, cut_points


def cut_set_census(g: Graph) -> CutSetCensus:
    if g.n > 20:
        raise ValueError(f"census is exhaustive over subsets; n={g.n} is past the intended scale")
    adj = _adj_masks(g)
    comp, minimal, cut_points = _census_masks(g.n, adj)
    omega = max(m.bit_count() for m in _facet_masks(g.n, adj)[0])
    groups: dict[int, list[frozenset[int]]] = {}
    for m in minimal:
        groups.setdefault(m.bit_count(), []).append(frozenset(_mask_vertices(m)))
    minimal_sets = {
        k: tuple(sorted(v, key=sorted)) for k, v in sorted(groups.items())
    }
    counts = {i: len(minimal_sets.get(i, ())) for i in range(1, omega)}
    cps = sorted((frozenset(_mask_vertices(t)) for t in cut_points), key=lambda s: (len(s), sorted(s)))
    return CutSetCensus(
        minimal_cut_sets=minimal_sets,
        counts=counts,
        cut_point_sets=tuple(cps),
        component_counts={frozenset(_mask_vertices(t)): comp[t] for t in cut_points},
        clique_number=omega,
    )


# ---------------------------------------------------------------------------
# leaf splitting

@dataclass(frozen=True)
class LeafSplit:
    """One peeling step of a connected generalized block graph.

    `leaf` is the last facet of the leaf order and `branches` are the other
    facets meeting it; all of those intersections coincide in the set `cut`
    (size `alpha`), which separates the graph into `q + 1` pieces.  Three
    derived graphs drive the induction: `merged` replaces leaf and branches
    by one clique on their union (same vertex set), while `minus_cut` and
    `merged_minus_cut` restrict the original and merged graphs to the
    complement of `cut`, relabeled via `relabel` (old label -> new label).
    """

    leaf: frozenset[int]
    branches: tuple[frozenset[int], ...]
    cut: frozenset[int]
    alpha: int
    q: int
    merged: Graph
    minus_cut: Graph
    merged_minus_cut: Graph
    kept: tuple[int, ...]
    relabel: dict[int, int]


def leaf_decomposition(g: Graph) -> LeafSplit:
    if not is_connected(g):
        raise ValueError("leaf decomposition needs a connected graph")
    cls = classify(g)
    if not cls.generalized_block_graph:
        raise ValueError("leaf decomposition needs a generalized block graph")
    cc = clique_complex(g)
    if len(cc.facets) < 2:
        raise ValueError("graph is a single clique; nothing to split")
    leaf = cc.facets[cc.leaf_order[-1]]
    others = [f for i, f in enumerate(cc.facets) if i != cc.leaf_order[-1]]
    cut = max((f & leaf for f in others), key=len)
    if not cut:
        raise AssertionError("leaf facet meets no other facet in a connected graph")
    branches = []
    for f in others:
        meet = f & leaf
        if meet == cut:
            branches.append(f)
        elif meet:
            raise AssertionError(f"facet {sorted(f)} meets the leaf outside the common cut")
    for a, b in combinations([*branches, leaf], 2):
        if a & b != cut:
            raise AssertionError("pairwise facet intersections at the leaf disagree")

    union = frozenset().union(leaf, *branches)
    merged_edges = set(g.edges)
    merged_edges.update((u, v) for u, v in combinations(sorted(union), 2))
    merged = Graph(g.n, frozenset(merged_edges))

    kept = tuple(v for v in range(1, g.n + 1) if v not in cut)
    minus_cut, relabel = induced_subgraph(g, kept)
    merged_minus_cut, _ = induced_subgraph(merged, kept)

    q = len(branches)
    pieces = len(connected_components(minus_cut))
    if pieces != q + 1:
        raise AssertionError(f"removing the cut left {pieces} components, expected {q + 1}")
    return LeafSplit(
        leaf=leaf,
        branches=tuple(branches),
        cut=cut,
        alpha=len(cut),
        q=q,
        merged=merged,
        minus_cut=minus_cut,
        merged_minus_cut=merged_minus_cut,
        kept=kept,
        relabel=relabel,
    )


# ---------------------------------------------------------------------------
# exhaustive enumeration

_FILTERS = ("all", "chordal", "block", "gblock")


def enumerate_connected_graphs(n: int, classification: str | None = None):
    """Yield every connected labeled graph on {1..n}, optionally filtered to
    a classification ('chordal', 'block', 'gblock').  No isomorphism
    deduplication is performed.  Exhaustive over all 2^C(n,2) edge sets, so
    capped at n <= 7.
    """
    if n > 7:
        raise ValueError(f"enumeration is exponential in C(n,2); n={n} > 7")
    if n < 1:
        raise ValueError("need n >= 1")
    want = classification or "all"
    if want not in _FILTERS:
        raise ValueError(f"unknown filter {classification!r}; options: {_FILTERS}")

    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            u, v = pairs[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            continue
        if want != "all":
            chordal, block, gblock, _ = _classify_masks(n, adj)
            if want == "chordal" and not chordal:
                continue
            if want == "block" and not block:
                continue
            if want == "gblock" and not gblock:
                continue
        mm = mask
        edges = []
        while mm:
            b = mm & -mm
            mm ^= b
            u, v = pairs[b.bit_length() - 1]
            edges.append((u + 1, v + 1))
        yield Graph.from_edges(n, edges)
