"""k-uniform hypergraphs with dense colex-rank indexing.

A k-subset of the vertex range [0, n) is a strictly increasing tuple of
ints.  Subsets are ordered colexicographically (compare the largest
differing element), and a hypergraph stores one indicator byte per rank,
giving O(1) membership and a canonical iteration order.  Hypergraphs are
immutable: every operation returns a new instance, so shared read-only use
is safe.
"""

from __future__ import annotations

import itertools
from math import comb
from pathlib import Path

__all__ = [
    "MAX_POSITIONS",
    "Hypergraph",
    "Permutation",
    "from_edge_list_text",
    "rank_colex",
    "read_edge_list",
    "subset_rank",
    "to_edge_list_text",
    "unrank_colex",
    "validate_ksubset",
    "write_edge_list",
]

# Refuse indicator allocations past this many subset positions; a clear
# error beats an accidental multi-gigabyte bytearray.
MAX_POSITIONS = 1 << 24


def subset_rank(s) -> int:
    """Colex rank of a strictly increasing vertex tuple (no validation)."""
    return sum(comb(v, i + 1) for i, v in enumerate(s))


def validate_ksubset(s, n: int, k: int) -> None:
    """Raise ValueError unless s is a strictly increasing k-tuple inside [0, n)."""
    if len(s) != k:
        raise ValueError(f"subset {tuple(s)} has {len(s)} vertices, expected {k}")
    prev = -1
    for v in s:
        if v <= prev:
            raise ValueError(f"subset {tuple(s)} is not strictly increasing")
        prev = v
    if k and (s[0] < 0 or s[-1] >= n):
        raise ValueError(f"subset {tuple(s)} leaves the vertex range [0, {n})")


def rank_colex(s, n: int, k: int) -> int:
    """Colex rank of the k-subset s among all k-subsets of [0, n)."""
    s = tuple(s)
    validate_ksubset(s, n, k)
    return subset_rank(s)


def unrank_colex(r: int, n: int, k: int) -> tuple[int, ...]:
    """The k-subset of [0, n) with colex rank r; inverse of rank_colex."""
    total = comb(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total}) for n={n}, k={k}")
    out = [0] * k
    c = n - 1
    for size in range(k, 0, -1):
        # Largest c with comb(c, size) <= r picks the biggest remaining vertex.
        while comb(c, size) > r:
            c -= 1
        out[size - 1] = c
        r -= comb(c, size)
        c -= 1
    return tuple(out)


class Permutation:
    """A bijection on the vertex range [0, n), stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for v in images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"images {images} are not a permutation of 0..{n - 1}")
            seen[v] = True
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def apply_to_subset(self, s) -> tuple[int, ...]:
        """Image of a vertex subset, re-sorted ascending."""
        return tuple(sorted(self.images[v] for v in s))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition self * other: apply other first, then self."""
        if len(self.images) != len(other.images):
            raise ValueError("cannot compose permutations of different lengths")
        return Permutation(self.images[w] for w in other.images)

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)!r})"


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices 0..n-1.

    Edges are k-subsets kept as an indicator over colex ranks plus the
    sorted rank tuple, so membership is O(1) and iteration order is
    canonical.  Two hypergraphs are equal iff they have the same n, k, and
    edge set.
    """

    __slots__ = ("n", "k", "positions", "_bits", "_ranks", "_edge_memo")

    def __init__(self, n: int, k: int, edges=()):
        ranks = [rank_colex(tuple(e), n, k) for e in edges]
        self._setup(n, k, ranks)

    @classmethod
    def from_ranks(cls, n: int, k: int, ranks) -> "Hypergraph":
        """Build from colex ranks directly (validated for range and duplicates)."""
        obj = cls.__new__(cls)
        obj._setup(n, k, list(ranks))
        return obj

    @classmethod
    def empty(cls, n: int, k: int) -> "Hypergraph":
        return cls.from_ranks(n, k, ())

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls.from_ranks(n, k, range(comb(n, k)))

    def _setup(self, n, k, ranks):
        if not 1 <= k <= n:
            raise ValueError(f"uniformity k={k} must satisfy 1 <= k <= n={n}")
        positions = comb(n, k)
        if positions > MAX_POSITIONS:
            raise ValueError(
                f"comb({n},{k})={positions} subset positions exceed the "
                f"supported bound of {MAX_POSITIONS}"
            )
        bits = bytearray(positions)
        for r in ranks:
            if not 0 <= r < positions:
                raise ValueError(f"edge rank {r} out of range [0, {positions})")
            if bits[r]:
                raise ValueError(f"duplicate edge at rank {r}")
            bits[r] = 1
        self.n = n
        self.k = k
        self.positions = positions
        self._bits = bits
        self._ranks = tuple(sorted(ranks))
        self._edge_memo = None

    @property
    def edge_count(self) -> int:
        return len(self._ranks)

    @property
    def edge_ranks(self) -> tuple[int, ...]:
        """Colex ranks of the edges, ascending."""
        return self._ranks

    def has_rank(self, r: int) -> bool:
        if not 0 <= r < self.positions:
            raise ValueError(f"rank {r} out of range [0, {self.positions})")
        return bool(self._bits[r])

    def has_edge(self, s) -> bool:
        return bool(self._bits[rank_colex(tuple(s), self.n, self.k)])

    def edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge subsets in colex-rank order (memoized)."""
        if self._edge_memo is None:
            self._edge_memo = tuple(
                unrank_colex(r, self.n, self.k) for r in self._ranks
            )
        return self._edge_memo

    def complement(self) -> "Hypergraph":
        """Same vertices, edge set flipped to the unused k-subsets."""
        bits = self._bits
        return Hypergraph.from_ranks(
            self.n, self.k, [r for r in range(self.positions) if not bits[r]]
        )

    def permute(self, sigma: Permutation) -> "Hypergraph":
        """Relabel vertices through sigma; edges are re-sorted images."""
        if sigma.n != self.n:
            raise ValueError(f"permutation length {sigma.n} != order {self.n}")
        return Hypergraph.from_ranks(
            self.n,
            self.k,
            [subset_rank(sigma.apply_to_subset(e)) for e in self.edges()],
        )

    def is_complete_on(self, vertices) -> bool:
        """True iff every k-subset of the given vertex set is an edge."""
        vs = sorted(vertices)
        for prev, v in zip([-1] + vs, vs):
            if v == prev:
                raise ValueError(f"vertex set has a repeated vertex {v}")
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range [0, {self.n})")
        if len(vs) < self.k:
            raise ValueError(f"need at least k={self.k} vertices, got {len(vs)}")
        bits = self._bits
        return all(
            bits[subset_rank(c)] for c in itertools.combinations(vs, self.k)
        )

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self._ranks) == (other.n, other.k, other._ranks)

    def __hash__(self):
        return hash((self.n, self.k, self._ranks))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, k={self.k}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# Edge-list text format
#
# Line 1:  "p hsc <n> <k>"
# then     optional comment lines "c <text>"
# then     one line per edge "e <v1> <v2> ..." with vertices ascending and
#          edges in colex-rank order; single spaces, decimal integers,
#          newline-terminated.
# ---------------------------------------------------------------------------


def to_edge_list_text(h: Hypergraph, comments=()) -> str:
    """Serialize a hypergraph to the edge-list text format (bit-exact)."""
    lines = [f"p hsc {h.n} {h.k}"]
    for c in comments:
        if "\n" in c:
            raise ValueError("comments must be single lines")
        lines.append(f"c {c}")
    for e in h.edges():
        lines.append("e " + " ".join(map(str, e)))
    return "\n".join(lines) + "\n"


def _parse_uint(token: str, context: str) -> int:
    if not (token.isascii() and token.isdigit()):
        raise ValueError(f"{context}: expected a decimal integer, got {token!r}")
    return int(token)


def from_edge_list_text(text: str) -> Hypergraph:
    """Parse the edge-list text format; strict about shape and duplicates."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty edge-list document")
    head = lines[0].split(" ")
    if len(head) != 4 or head[0] != "p" or head[1] != "hsc":
        raise ValueError(f"bad header line: {lines[0]!r}")
    n = _parse_uint(head[2], "header order")
    k = _parse_uint(head[3], "header uniformity")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("c ") or line == "c":
            continue
        parts = line.split(" ")
        if parts[0] != "e":
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
        if len(parts) != k + 1:
            raise ValueError(f"line {lineno}: edge needs exactly {k} vertices")
        edges.append(tuple(_parse_uint(p, f"line {lineno}") for p in parts[1:]))
    return Hypergraph(n, k, edges)


def write_edge_list(h: Hypergraph, path, comments=()) -> None:
    Path(path).write_bytes(to_edge_list_text(h, comments).encode("ascii"))


def read_edge_list(path) -> Hypergraph:
    return from_edge_list_text(Path(path).read_bytes().decode("ascii"))
