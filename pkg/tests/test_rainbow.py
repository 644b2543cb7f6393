import random

import pytest
from hypothesis import given, settings, strategies as st

from rcbound.graphs import gen_family, is_connected, make_graph
from rcbound.rainbow import (BudgetExhaustedError, EdgeColoring, cycle_color_sequence,
                             cycle_coloring, find_rainbow_witness, is_rainbow_connected,
                             parse_coloring, rainbow_path_exists, rc_exact,
                             serialize_coloring)

from _oracles import brute_rainbow_witness, brute_rc, canonical_colorings
from test_graphs import graph_from_mask


def c6_striped():
    return EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 3,
                         (3, 4): 1, (4, 5): 2, (0, 5): 3})


class TestRainbowPath:
    def test_striped_c6_antipodal(self):
        g = gen_family("cycle", 6)
        col = c6_striped()
        # oracle: one of the two arcs must be rainbow
        assert brute_rainbow_witness(g, col.colors) is None
        assert rainbow_path_exists(g, col, 0, 3)

    def test_monochrome_path_fails(self):
        g = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        col = EdgeColoring({e: 1 for e in g.edges})
        assert not rainbow_path_exists(g, col, 0, 3)

    def test_same_vertex(self):
        g = gen_family("cycle", 5)
        col = EdgeColoring({e: 1 for e in g.edges})
        assert rainbow_path_exists(g, col, 2, 2)

    def test_out_of_range(self):
        g = gen_family("cycle", 5)
        col = EdgeColoring({e: 1 for e in g.edges})
        with pytest.raises(ValueError, match="range"):
            rainbow_path_exists(g, col, 0, 9)


class TestWitness:
    def test_complete_monochrome_ok(self):
        g = gen_family("complete", 4)
        assert find_rainbow_witness(g, EdgeColoring({e: 1 for e in g.edges})) is None

    def test_c5_monochrome_witness(self):
        g = gen_family("cycle", 5)
        col = EdgeColoring({e: 1 for e in g.edges})
        assert find_rainbow_witness(g, col) == (0, 2)

    def test_striped_c6_ok(self):
        assert find_rainbow_witness(gen_family("cycle", 6), c6_striped()) is None
        assert is_rainbow_connected(gen_family("cycle", 6), c6_striped())

    def test_disconnected_rejected(self):
        g = make_graph(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError, match="connected"):
            find_rainbow_witness(g, EdgeColoring({e: 1 for e in g.edges}))

    def test_wrong_edge_set_rejected(self):
        g = gen_family("cycle", 5)
        with pytest.raises(ValueError, match="edge set"):
            find_rainbow_witness(g, EdgeColoring({(0, 1): 1}))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(3, 6), st.integers(0, 2 ** 15 - 1), st.randoms(use_true_random=False))
    def test_matches_path_enumeration(self, n, mask, rng):
        g = graph_from_mask(n, mask % (1 << (n * (n - 1) // 2)))
        if g.m == 0 or not is_connected(g):
            return
        col = EdgeColoring({e: rng.randint(1, max(1, g.m // 2)) for e in g.edges})
        assert find_rainbow_witness(g, col) == brute_rainbow_witness(g, col.colors)


class TestCycleColoring:
    def test_triangle_single_color(self):
        assert cycle_color_sequence(3) == [1, 1, 1]
        assert cycle_coloring(3).num_colors == 1

    def test_six(self):
        assert cycle_color_sequence(6) == [1, 2, 3, 1, 2, 3]

    def test_seven(self):
        assert cycle_color_sequence(7) == [1, 2, 3, 4, 1, 2, 3]

    @pytest.mark.parametrize("n", range(3, 13))
    def test_verified_and_tight(self, n):
        col = cycle_coloring(n)
        expected = 1 if n == 3 else (n + 1) // 2
        assert col.num_colors == expected
        assert is_rainbow_connected(gen_family("cycle", n), col)

    def test_too_short(self):
        with pytest.raises(ValueError):
            cycle_color_sequence(2)


class TestRcExact:
    def test_k4(self):
        k, col = rc_exact(gen_family("complete", 4))
        assert k == 1 and col.num_colors == 1

    @pytest.mark.parametrize("n,expected", [(5, 3), (6, 3), (8, 4)])
    def test_cycles(self, n, expected):
        assert rc_exact(gen_family("cycle", n))[0] == expected

    def test_path5(self):
        g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert rc_exact(g)[0] == 4

    def test_trees_need_all_colors(self):
        star = make_graph(5, [(0, i) for i in range(1, 5)])
        assert rc_exact(star)[0] == 4
        spider = make_graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
        assert rc_exact(spider)[0] == 5

    def test_petersen(self):
        # golden recorded from a completed run of this solver
        assert rc_exact(gen_family("petersen"))[0] == 3

    def test_coloring_verifies(self):
        for fam, args in [("cycle", (7,)), ("wheel", (6,)), ("prism", (3,))]:
            g = gen_family(fam, *args)
            k, col = rc_exact(g)
            assert col.num_colors == k
            assert is_rainbow_connected(g, col)

    def test_diameter_lower_bound(self):
        from rcbound.graphs import diameter
        for fam, args in [("cycle", (6,)), ("prism", (4,)), ("wheel", (7,))]:
            g = gen_family(fam, *args)
            assert rc_exact(g)[0] >= diameter(g)

    def test_budget_exhaustion(self):
        with pytest.raises(BudgetExhaustedError) as info:
            rc_exact(gen_family("petersen"), node_budget=10)
        assert info.value.k == 3
        assert "budget-exhausted at k=3" in str(info.value)

    def test_max_colors_too_small(self):
        with pytest.raises(ValueError, match="no rainbow-connected"):
            rc_exact(gen_family("cycle", 6), max_colors=2)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            rc_exact(make_graph(4, [(0, 1), (2, 3)]))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(3, 5), st.integers(0, 2 ** 10 - 1))
    def test_matches_brute_force(self, n, mask):
        g = graph_from_mask(n, mask % (1 << (n * (n - 1) // 2)))
        if g.m == 0 or not is_connected(g) or g.m > 7:
            return
        assert rc_exact(g)[0] == brute_rc(g)

    @pytest.mark.parametrize("fam,args", [("cycle", (5,)), ("cycle", (6,)),
                                          ("prism", (3,))])
    def test_no_canonical_coloring_below_optimum(self, fam, args):
        g = gen_family(fam, *args)
        k, _ = rc_exact(g)
        assert k >= 2
        for vec in canonical_colorings(g.m, k - 1):
            colors = dict(zip(g.edges, vec))
            assert brute_rainbow_witness(g, colors) is not None


class TestColoringIO:
    def test_round_trip(self):
        g = gen_family("cycle", 6)
        col = c6_striped()
        text = serialize_coloring(col)
        back = parse_coloring(text, g)
        assert back.colors == col.colors

    def test_header_is_distinct_count(self):
        col = EdgeColoring({(0, 1): 1, (1, 2): 5, (0, 2): 1})
        text = serialize_coloring(col)
        assert text.splitlines()[0] == "2"

    def test_missing_edge_rejected(self):
        g = gen_family("cycle", 5)
        text = "1\n" + "\n".join(f"{u} {v} 1" for u, v in g.edges[:-1]) + "\n"
        with pytest.raises(ValueError, match="missing"):
            parse_coloring(text, g)

    def test_foreign_edge_rejected(self):
        g = gen_family("cycle", 5)
        with pytest.raises(ValueError, match="not in the host"):
            parse_coloring("1\n0 2 1\n", g)

    def test_color_out_of_range(self):
        g = make_graph(2, [(0, 1)])
        with pytest.raises(ValueError, match="outside"):
            parse_coloring("2\n0 1 3\n", g)


def test_checker_vs_oracle_on_themed_colorings():
    rng = random.Random(123)
    for fam, args in [("complete", (5,)), ("wheel", (6,)), ("prism", (3,)),
                      ("cycle", (7,))]:
        g = gen_family(fam, *args)
        for _ in range(10):
            col = EdgeColoring({e: rng.randint(1, 4) for e in g.edges})
            assert find_rainbow_witness(g, col) == brute_rainbow_witness(g, col.colors)
