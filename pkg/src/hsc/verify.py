"""Mechanical checks for constructed hypergraphs: subset-regularity with
its valence, antimorphism verification and backtracking search, per-pair
coverage split by edge family, vertex-transitivity evidence, and the Euler
characteristic of 2-valent triple systems.

All checks are pure functions of their inputs.  The exhaustive searches
(antimorphism and automorphism enumeration) are gated by order: orders up
to 8 run freely, 9 and 10 need an explicit opt-in, anything larger is
refused outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .construct import AdmissibilityError, EdgeFamilies
from .hypercore import Hypergraph, Permutation, subset_rank, unrank_colex

__all__ = [
    "AntimorphismCheck",
    "PairCaseBreakdown",
    "RegularityReport",
    "SearchBudgetExceeded",
    "SearchOrderError",
    "automorphism_vertex_orbits",
    "euler_characteristic_triangulation",
    "expected_valence",
    "find_antimorphism",
    "pair_case_breakdown",
    "t_subset_regularity",
    "verify_antimorphism",
    "vertex_invariant_k4",
]

# Orders up to this bound may be searched exhaustively without opting in.
FREE_SEARCH_ORDER = 8
# Hard ceiling for the exhaustive searches (n! roots grow too fast beyond).
MAX_SEARCH_ORDER = 10


class SearchOrderError(ValueError):
    """The order is too large for the exhaustive search policy."""


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search ran out of node budget; result is inconclusive."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


# ---------------------------------------------------------------------------
# Subset-regularity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of a t-subset coverage check.

    On success `valence` holds the common coverage; on failure `witness` is
    the first t-subset (in colex order) whose coverage differs from that of
    the colex-first t-subset, with both counts attached.
    """

    t: int
    valence: int | None
    witness: tuple[int, ...] | None = None
    witness_count: int | None = None
    first_count: int | None = None

    @property
    def regular(self) -> bool:
        return self.valence is not None

    def __bool__(self) -> bool:
        return self.regular


def t_subset_regularity(h: Hypergraph, t: int) -> RegularityReport:
    """Check whether every t-subset of vertices lies in the same number of edges.

    One pass over the edges increments the coverage of each of the comb(k,t)
    contained t-subsets; a scan over all comb(n,t) positions then either
    certifies the common valence or produces a witness.
    """
    if not 1 <= t < h.k:
        raise ValueError(f"need 1 <= t < k={h.k}, got t={t}")
    total = comb(h.n, t)
    counts = [0] * total
    for e in h.edges():
        for sub in itertools.combinations(e, t):
            counts[subset_rank(sub)] += 1
    first = counts[0]
    for r in range(1, total):
        if counts[r] != first:
            return RegularityReport(
                t=t,
                valence=None,
                witness=unrank_colex(r, h.n, t),
                witness_count=counts[r],
                first_count=first,
            )
    # Double counting: valence * comb(n,t) == |E| * comb(k,t).
    assert first * total == h.edge_count * comb(h.k, t)
    return RegularityReport(t=t, valence=first)


def expected_valence(n: int, k: int, t: int) -> int:
    """The only t-valence a hypergraph paired with its complement can have:
    half of comb(n-t, k-t)."""
    if not 0 < t < k <= n:
        raise ValueError(f"need 0 < t < k <= n, got t={t}, k={k}, n={n}")
    c = comb(n - t, k - t)
    if c % 2:
        raise AdmissibilityError(
            f"comb({n - t},{k - t})={c} is odd; no such valence exists"
        )
    return c // 2


# ---------------------------------------------------------------------------
# Pair coverage by family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairCaseBreakdown:
    """Coverage of one vertex pair, split across the three edge families.

    The case letter classifies the pair: (a) both side 0, (b) both side 1,
    (c) same residue on opposite sides, (d) different residues on opposite
    sides.
    """

    case: str
    side0_count: int
    midpoint_count: int
    off_midpoint_count: int

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.side0_count, self.midpoint_count, self.off_midpoint_count)

    @property
    def total(self) -> int:
        return sum(self.counts)


def pair_case_breakdown(families: EdgeFamilies, pair) -> PairCaseBreakdown:
    """Classify a vertex pair and count its covering edges per family."""
    u, v = pair
    if u == v:
        raise ValueError("pair vertices must be distinct")
    for w in (u, v):
        if not 0 <= w < families.n:
            raise ValueError(f"vertex {w} out of range [0, {families.n})")
    m = families.m
    (u, v) = (min(u, v), max(u, v))
    su, sv = u // m, v // m
    if su == 0 and sv == 0:
        case = "a"
    elif su == 1 and sv == 1:
        case = "b"
    elif u % m == v % m:
        case = "c"
    else:
        case = "d"

    def cover(fam):
        return sum(1 for e in fam if u in e and v in e)

    return PairCaseBreakdown(
        case=case,
        side0_count=cover(families.side0_triples),
        midpoint_count=cover(families.midpoint_triples),
        off_midpoint_count=cover(families.off_midpoint_triples),
    )


# ---------------------------------------------------------------------------
# Antimorphisms and automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AntimorphismCheck:
    """Result of checking `e is an edge  xor  image of e is an edge` for all e."""

    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_antimorphism(h: Hypergraph, tau: Permutation) -> AntimorphismCheck:
    """True iff tau exchanges edges and non-edges; witness is the first
    k-subset (lex order) violating the exchange."""
    if tau.n != h.n:
        raise ValueError(f"permutation length {tau.n} != order {h.n}")
    bits = h._bits
    images = tau.images
    for e in itertools.combinations(range(h.n), h.k):
        mapped = sorted(images[v] for v in e)
        if bits[subset_rank(e)] == bits[subset_rank(mapped)]:
            return AntimorphismCheck(ok=False, witness=e)
    return AntimorphismCheck(ok=True)


def _require_search_order(n: int, allow_large: bool) -> None:
    if n <= FREE_SEARCH_ORDER:
        return
    if n <= MAX_SEARCH_ORDER:
        if allow_large:
            return
        raise SearchOrderError(
            f"exhaustive search at order {n} needs an explicit opt-in "
            f"(orders above {FREE_SEARCH_ORDER} have factorially many roots)"
        )
    raise SearchOrderError(
        f"order {n} exceeds the exhaustive search ceiling of {MAX_SEARCH_ORDER}"
    )


def _backtrack_images(h, *, want_equal, node_budget, first_only):
    """Enumerate permutations mapping edges to edges (want_equal) or edges to
    non-edges (not want_equal), assigning vertices in increasing order with
    candidate images ascending.  Prunes on every k-subset completed by the
    newest assignment."""
    n, k = h.n, h.k
    bits = h._bits
    images = [0] * n
    used = [False] * n
    # k-subsets of {0..v} containing v, as their first k-1 members.
    tails = [list(itertools.combinations(range(v), k - 1)) for v in range(n)]
    found = []
    nodes = 0

    def extend(v):
        nonlocal nodes
        if v == n:
            found.append(Permutation(list(images)))
            return first_only
        for cand in range(n):
            if used[cand]:
                continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetExceeded(nodes)
            images[v] = cand
            ok = True
            for rest in tails[v]:
                e = rest + (v,)
                mapped = sorted(images[w] for w in e)
                if (bits[subset_rank(e)] == bits[subset_rank(mapped)]) != want_equal:
                    ok = False
                    break
            if ok:
                used[cand] = True
                if extend(v + 1):
                    return True
                used[cand] = False
        return False

    extend(0)
    return found


def find_antimorphism(
    h: Hypergraph, node_budget: int | None = None, *, allow_large: bool = False
) -> Permutation | None:
    """First permutation (deterministic search order) exchanging edges and
    non-edges, or None when none exists.

    The counting obstruction 2*|E| == comb(n,k) is checked before any
    search.  Raises SearchBudgetExceeded when the node budget runs out
    (inconclusive, as opposed to a definite None).
    """
    if 2 * h.edge_count != comb(h.n, h.k):
        return None
    _require_search_order(h.n, allow_large)
    found = _backtrack_images(
        h, want_equal=False, node_budget=node_budget, first_only=True
    )
    return found[0] if found else None


def _enumerate_automorphisms(h, *, allow_large=False, node_budget=None):
    _require_search_order(h.n, allow_large)
    return _backtrack_images(
        h, want_equal=True, node_budget=node_budget, first_only=False
    )


def automorphism_vertex_orbits(
    h: Hypergraph, *, allow_large: bool = False, node_budget: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the vertices under the full automorphism group,
    found by exhaustive backtracking; a single orbit means vertex-transitive."""
    autos = _enumerate_automorphisms(
        h, allow_large=allow_large, node_budget=node_budget
    )
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in autos:
        for v, w in enumerate(p.images):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[rw] = rv
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(g) for g in sorted(groups.values()))


# ---------------------------------------------------------------------------
# Per-vertex invariants and the Euler characteristic
# ---------------------------------------------------------------------------


def vertex_invariant_k4(h: Hypergraph, v: int) -> int:
    """Number of 4-subsets through v whose four triples are all edges.

    A cheap vertex invariant: any automorphism preserves it, so two vertices
    with different values certify that the hypergraph is not
    vertex-transitive.
    """
    if h.k != 3:
        raise ValueError("defined for 3-uniform hypergraphs only")
    if h.n < 4:
        raise ValueError(f"need n >= 4, got {h.n}")
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    bits = h._bits
    others = [u for u in range(h.n) if u != v]
    count = 0
    for trio in itertools.combinations(others, 3):
        quad = tuple(sorted(trio + (v,)))
        if all(bits[subset_rank(c)] for c in itertools.combinations(quad, 3)):
            count += 1
    return count


def euler_characteristic_triangulation(
    h: Hypergraph, *, skeleton: str = "complete"
) -> int:
    """V - E + F for the triangle complex of a 3-uniform hypergraph whose
    pairs each lie in exactly two triangles.

    With skeleton="complete" every one of the comb(n,2) vertex pairs counts
    as a 1-cell and must lie in exactly 2 triangles.  With
    skeleton="covered" only pairs lying in some triangle count, and only
    those must have coverage exactly 2.
    """
    if h.k != 3:
        raise ValueError("defined for 3-uniform hypergraphs only")
    if skeleton not in ("complete", "covered"):
        raise ValueError(f"unknown skeleton convention {skeleton!r}")
    total_pairs = comb(h.n, 2)
    counts = [0] * total_pairs
    for e in h.edges():
        for pair in itertools.combinations(e, 2):
            counts[subset_rank(pair)] += 1
    required = (2,) if skeleton == "complete" else (0, 2)
    for r, c in enumerate(counts):
        if c not in required:
            raise ValueError(
                f"not a triangulation candidate: pair {unrank_colex(r, h.n, 2)}"
                f" lies in {c} edges, need exactly 2"
            )
    skeleton_edges = (
        total_pairs if skeleton == "complete" else sum(1 for c in counts if c)
    )
    return h.n - skeleton_edges + h.edge_count
