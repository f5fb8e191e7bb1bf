from math import comb

import pytest

from hsc.construct import (
    AdmissibilityError,
    ConstructionParams,
    build_gamma,
    build_gamma_families,
    edge_counts,
    half,
    inverse_of_two,
    swap_antimorphism,
    vertex_index,
    vertex_label,
)
from hsc.hypercore import to_edge_list_text

ADMISSIBLE_ORDERS = [6, 10, 14, 18]

# Direct evaluation of the set-builder rules at n=6 (m=3, 1/2 = 2 mod 3),
# with vertex (a, i) at index a + 3*i.
GAMMA6_EDGES = {
    (0, 1, 2),
    (0, 1, 5),
    (0, 2, 4),
    (1, 2, 3),
    (0, 3, 4),
    (1, 3, 4),
    (0, 3, 5),
    (2, 3, 5),
    (1, 4, 5),
    (2, 4, 5),
}


def test_inverse_of_two_small():
    assert inverse_of_two(3) == 2
    assert inverse_of_two(5) == 3


def test_inverse_of_two_closed_form():
    for kp in range(1, 21):
        m = 2 * kp + 1
        inv = inverse_of_two(m)
        assert inv == kp + 1
        assert 2 * inv % m == 1


def test_inverse_of_two_rejects_even():
    with pytest.raises(ValueError):
        inverse_of_two(4)
    with pytest.raises(ValueError):
        inverse_of_two(1)


def test_half_known_values():
    for m in (3, 5, 7, 9):
        assert half(0, m) == 0
    assert half(4, 5) == 2
    # brute-force oracle: the unique y with 2y == x (mod m)
    for m in (3, 5, 7):
        for x in range(m):
            brute = [y for y in range(m) if 2 * y % m == x]
            assert brute == [half(x, m)]


def test_half_rejects_bad_inputs():
    with pytest.raises(ValueError):
        half(1, 4)
    with pytest.raises(ValueError):
        half(3, 3)
    with pytest.raises(ValueError):
        half(-1, 5)


def test_construction_params():
    p = ConstructionParams.from_order(10)
    assert (p.kparam, p.m, p.n) == (2, 5, 10)
    with pytest.raises(AdmissibilityError):
        ConstructionParams.from_order(8)
    with pytest.raises(AdmissibilityError):
        ConstructionParams.from_order(2)
    with pytest.raises(AdmissibilityError):
        ConstructionParams(kparam=2, m=5, n=11)


def test_vertex_indexing_helpers():
    assert vertex_index(2, 0, 3) == 2
    assert vertex_index(2, 1, 3) == 5
    assert vertex_label(5, 3) == "2_1"
    with pytest.raises(ValueError):
        vertex_index(3, 0, 3)
    with pytest.raises(ValueError):
        vertex_index(0, 2, 3)


def test_gamma6_exact_edge_set():
    g = build_gamma(6)
    assert set(g.edges()) == GAMMA6_EDGES
    assert g.has_edge((0, 1, 2))


def test_gamma10_edge_count():
    g = build_gamma(10)
    assert g.edge_count == 60 == comb(10, 3) // 2


def test_build_gamma_rejects_inadmissible_orders():
    for n in (4, 5, 7, 8, 9, 12, 0, -2):
        with pytest.raises(AdmissibilityError):
            build_gamma(n)


def test_edge_counts_closed_forms():
    assert edge_counts(6) == (1, 3, 6)
    assert edge_counts(10) == (10, 10, 40)
    for n in range(6, 51, 4):
        assert sum(edge_counts(n)) == comb(n, 3) // 2


def test_families_disjoint_and_sized():
    for n in ADMISSIBLE_ORDERS:
        fams = build_gamma_families(n)
        assert fams.sizes() == edge_counts(n)
        all_edges = fams.all_edges()
        assert len(set(all_edges)) == len(all_edges)
        # families are separated by how many side-0 vertices an edge uses
        m = fams.m
        assert all(sum(v < m for v in e) == 3 for e in fams.side0_triples)
        assert all(sum(v < m for v in e) == 2 for e in fams.midpoint_triples)
        assert all(sum(v < m for v in e) == 1 for e in fams.off_midpoint_triples)


def test_family_arithmetic_invariants():
    for n in ADMISSIBLE_ORDERS:
        fams = build_gamma_families(n)
        m = fams.m
        for a, b, c1 in fams.midpoint_triples:
            assert 2 * (c1 - m) % m == (a + b) % m
        for a, b1, c1 in fams.off_midpoint_triples:
            assert 2 * a % m != (b1 + c1 - 2 * m) % m


def test_swap_antimorphism_mapping():
    phi = swap_antimorphism(6)
    assert phi(0) == 3 and phi(3) == 0 and phi(2) == 5
    for n in ADMISSIBLE_ORDERS:
        phi = swap_antimorphism(n)
        assert (phi * phi).is_identity()
        assert all(phi(v) != v for v in range(n))


def test_swap_antimorphism_rejects_odd():
    with pytest.raises(ValueError):
        swap_antimorphism(7)
    with pytest.raises(ValueError):
        swap_antimorphism(0)


def test_self_complementarity():
    for n in ADMISSIBLE_ORDERS:
        g = build_gamma(n)
        assert g.permute(swap_antimorphism(n)) == g.complement()


def test_complement_of_gamma6():
    g = build_gamma(6)
    gc = g.complement()
    assert gc.edge_count == 10
    assert not set(g.edges()) & set(gc.edges())


def test_side0_is_complete_but_side1_is_not():
    g = build_gamma(10)
    assert g.is_complete_on(range(5))
    assert not g.is_complete_on(range(5, 10))


def test_build_is_deterministic():
    for n in (6, 10):
        assert to_edge_list_text(build_gamma(n)) == to_edge_list_text(build_gamma(n))
