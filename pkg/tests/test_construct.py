import pytest

from weakdiam2.construct import SplitChoice, base_clique, build_O, optimal_split, verify_family
from weakdiam2.digraph import is_absolute_clique, is_cut_vertex, weak_diameter
from weakdiam2.sequence import x


def test_base_cliques():
    assert base_clique(1).num_arcs == 0
    assert base_clique(4).arcs() == [(0, 1), (1, 2), (1, 3), (2, 3)]
    assert base_clique(5).arcs() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    for n in range(1, 6):
        assert base_clique(n).num_arcs == x(n)
        assert is_absolute_clique(base_clique(n))
    with pytest.raises(ValueError):
        base_clique(6)
    with pytest.raises(ValueError):
        base_clique(0)


@pytest.mark.parametrize("n, expected", [(9, (5, 3)), (7, (3, 3)), (10, (5, 4)), (6, (3, 2)), (8, (4, 3))])
def test_optimal_split(n, expected):
    assert optimal_split(n) == SplitChoice(*expected)


def test_optimal_split_rejects_small():
    with pytest.raises(ValueError):
        optimal_split(5)


def test_build_layout_O6():
    g = build_O(6)
    # O_3 on 0..2 feeds the hub 5, which feeds O_2 on 3..4
    assert g.arcs() == [(0, 1), (0, 5), (1, 2), (1, 5), (2, 5), (3, 4), (5, 3), (5, 4)]


def test_build_O10():
    g = build_O(10)
    assert g.num_arcs == 18
    assert weak_diameter(g) == 2


def test_arc_count_recurrence():
    for n in range(6, 200):
        s = optimal_split(n)
        assert build_O(n).num_arcs == n - 1 + build_O(s.n1).num_arcs + build_O(s.n2).num_arcs


def test_build_is_deterministic():
    assert build_O(37) == build_O(37)
    assert build_O(37).arcs() == build_O(37).arcs()


def test_hub_properties():
    assert build_O(6).degree(5) == 5
    g = build_O(7)
    assert is_cut_vertex(g, 6)


def test_clique_and_count_small():
    for n in range(1, 65):
        g = build_O(n)
        assert is_absolute_clique(g), n
        assert g.num_arcs == x(n)


def test_verify_family_small():
    report = verify_family(80, clique_cap=80)
    assert report.ok


def test_build_rejects_zero():
    with pytest.raises(ValueError):
        build_O(0)
