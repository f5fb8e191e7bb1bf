"""Independent rediscovery oracle: enumerate every hypergraph for which a
given permutation exchanges edges with non-edges, and filter the
subset-regular survivors.

The permutation acts on k-subset ranks; membership must alternate along
each of its orbits, so an orbit of odd length rules the permutation out
entirely, and otherwise each orbit contributes one free bit (whether its
colex-least subset is an edge).  The candidate space is exactly
2**orbit_count, enumerated in lexicographic bit order with the first
orbit's bit most significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .hypercore import Hypergraph, Permutation, subset_rank, unrank_colex
from .verify import t_subset_regularity

__all__ = [
    "DEFAULT_CANDIDATE_CAP",
    "CandidateCapExceeded",
    "InfeasibleAntimorphismError",
    "OrbitDecomposition",
    "SearchSummary",
    "enumerate_sc_hypergraphs",
    "search_regular_sc",
    "tau_orbits_on_ksubsets",
]

DEFAULT_CANDIDATE_CAP = 1 << 20


class InfeasibleAntimorphismError(ValueError):
    """The permutation has an odd-length orbit on k-subsets, so no
    edge/non-edge alternation exists."""


class CandidateCapExceeded(RuntimeError):
    """The assignment space is larger than the enumeration cap."""


@dataclass(frozen=True)
class OrbitDecomposition:
    """Cycles of a permutation acting on the colex ranks of k-subsets.

    Each orbit is listed as the cycle starting from its smallest rank;
    orbits are ordered by that smallest rank.
    """

    n: int
    k: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def all_even(self) -> bool:
        return all(len(o) % 2 == 0 for o in self.orbits)


def tau_orbits_on_ksubsets(n: int, k: int, tau: Permutation) -> OrbitDecomposition:
    """Decompose the action of tau on all comb(n,k) subset ranks into cycles."""
    if tau.n != n:
        raise ValueError(f"permutation length {tau.n} != order {n}")
    total = comb(n, k)
    seen = bytearray(total)
    orbits = []
    for start in range(total):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        r = subset_rank(tau.apply_to_subset(unrank_colex(start, n, k)))
        while r != start:
            cycle.append(r)
            seen[r] = 1
            r = subset_rank(tau.apply_to_subset(unrank_colex(r, n, k)))
        orbits.append(tuple(cycle))
    return OrbitDecomposition(n=n, k=k, orbits=tuple(orbits))


def _check_feasible(dec: OrbitDecomposition) -> None:
    for o in dec.orbits:
        if len(o) % 2:
            raise InfeasibleAntimorphismError(
                f"orbit of odd length {len(o)} starting at rank {o[0]} "
                f"admits no alternating edge assignment"
            )


def _candidates(dec: OrbitDecomposition, emit: int):
    """Yield the first `emit` alternating assignments in lexicographic bit
    order (bit of the first orbit most significant; bit 1 puts the orbit's
    least rank in the edge set)."""
    o = dec.orbit_count
    for c in range(emit):
        ranks = []
        for j, orbit in enumerate(dec.orbits):
            bit = (c >> (o - 1 - j)) & 1
            for pos, r in enumerate(orbit):
                if (pos % 2 == 0) == bool(bit):
                    ranks.append(r)
        yield Hypergraph.from_ranks(dec.n, dec.k, ranks)


def enumerate_sc_hypergraphs(
    n: int,
    k: int,
    tau: Permutation,
    *,
    cap: int = DEFAULT_CANDIDATE_CAP,
    truncate: bool = False,
):
    """All hypergraphs for which tau exchanges edges and non-edges.

    Returns a generator over the 2**orbit_count alternating assignments.
    When the assignment space exceeds `cap`, raises CandidateCapExceeded
    unless truncate=True, in which case only the first `cap` candidates are
    produced.
    """
    dec = tau_orbits_on_ksubsets(n, k, tau)
    _check_feasible(dec)
    total = 1 << dec.orbit_count
    if total > cap and not truncate:
        raise CandidateCapExceeded(
            f"2^{dec.orbit_count} candidates exceed the cap of {cap}"
        )
    return _candidates(dec, min(total, cap))


@dataclass(frozen=True)
class SearchSummary:
    """Result of an enumeration filtered by subset-regularity."""

    orbit_count: int
    candidate_total: int
    examined: int
    truncated: bool
    regular: tuple[Hypergraph, ...]

    def summary_line(self) -> str:
        return (
            f"orbits={self.orbit_count} candidates={self.candidate_total} "
            f"regular={len(self.regular)}"
        )


def search_regular_sc(
    n: int,
    k: int,
    t: int,
    tau: Permutation,
    *,
    cap: int = DEFAULT_CANDIDATE_CAP,
    truncate: bool = False,
) -> SearchSummary:
    """Enumerate the alternating assignments for tau and keep the t-subset
    regular ones, in enumeration order."""
    dec = tau_orbits_on_ksubsets(n, k, tau)
    _check_feasible(dec)
    total = 1 << dec.orbit_count
    if total > cap and not truncate:
        raise CandidateCapExceeded(
            f"2^{dec.orbit_count} candidates exceed the cap of {cap}"
        )
    emit = min(total, cap)
    survivors = []
    examined = 0
    for h in _candidates(dec, emit):
        examined += 1
        if t_subset_regularity(h, t):
            survivors.append(h)
    return SearchSummary(
        orbit_count=dec.orbit_count,
        candidate_total=total,
        examined=examined,
        truncated=emit < total,
        regular=tuple(survivors),
    )
