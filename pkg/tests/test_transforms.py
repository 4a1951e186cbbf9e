from collections import Counter

import pytest

from abstree.enumeration import free_trees
from abstree.errors import BadArity, BadAssignment, BadPartition, NotAnEdge, ShapeMismatch
from abstree.families import make_path, make_star
from abstree.graph import Tree, canonical_code, degree_counts, pendent_vertices
from abstree.transforms import (
    SplitSpec,
    all_replacements,
    attach_leaf,
    contract_edge,
    contract_edges,
    is_k3_regular,
    k3_regular_shapes,
    replace_with_3regular,
    split_vertex,
    subdivide_edge,
)


def iso(a: Tree, b: Tree) -> bool:
    return canonical_code(a) == canonical_code(b)


class TestContract:
    def test_p3(self):
        for e in make_path(3).edges:
            assert iso(contract_edge(make_path(3), e), make_path(2))

    def test_p5_middle(self):
        out = contract_edge(make_path(5), (1, 2))
        assert out.n == 4 and iso(out, make_path(4))

    def test_star_pendent(self):
        assert iso(contract_edge(make_star(4), (0, 3)), make_star(3))

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdge):
            contract_edge(make_path(4), (0, 2))

    def test_map_is_contiguous(self):
        t = make_path(5)
        out, m = contract_edge(t, (2, 3), return_map=True)
        assert m == {0: 0, 1: 1, 2: 2, 3: 2, 4: 3}
        assert sorted(set(m.values())) == list(range(out.n))

    def test_several_edges(self):
        t = make_path(7)
        out, m = contract_edges(t, [(1, 2), (4, 5)], return_map=True)
        assert iso(out, make_path(5))
        assert m[2] == m[1] and m[5] == m[4]


class TestSplit:
    def test_star5_into_double_star(self):
        out = split_vertex(make_star(5), SplitSpec(0, {1, 2}, {3, 4}))
        assert out.n == 6
        assert degree_counts(out) == {1: 4, 3: 2}
        assert out.has_edge(0, 5)

    def test_p3(self):
        assert iso(split_vertex(make_path(3), SplitSpec(1, {0}, {2})), make_path(4))

    def test_k16(self):
        out = split_vertex(make_star(7), SplitSpec(0, {1, 2, 3}, {4, 5, 6}))
        assert degree_counts(out) == {1: 6, 4: 2}

    @pytest.mark.parametrize(
        "left,right", [(set(), {1, 2, 3, 4}), ({1, 2}, {2, 3, 4}), ({1}, {2, 3}), ({1, 2}, {3, 4, 9})]
    )
    def test_bad_partition(self, left, right):
        with pytest.raises(BadPartition):
            split_vertex(make_star(5), SplitSpec(0, left, right))

    def test_degrees_after_split(self):
        out = split_vertex(make_star(6), SplitSpec(0, {1}, {2, 3, 4, 5}))
        assert out.degree(0) == 2 and out.degree(6) == 5


@pytest.mark.parametrize("n", range(2, 9))
def test_contract_then_split_round_trip(n):
    for t in free_trees(n):
        for u, v in t.edges:
            out, m = contract_edge(t, (u, v), return_map=True)
            w = m[u]
            if t.degree(u) >= 2 and t.degree(v) >= 2:
                left = {m[x] for x in t.neighbors(u) - {v}}
                right = {m[x] for x in t.neighbors(v) - {u}}
                back = split_vertex(out, SplitSpec(w, left, right))
            else:
                # one endpoint was a leaf: undo by re-attaching it
                back = attach_leaf(out, w)
            assert iso(back, t)


class TestShapes:
    @pytest.mark.parametrize("s,count", [(3, 1), (4, 1), (5, 1), (6, 2), (7, 2)])
    def test_counts(self, s, count):
        shapes = k3_regular_shapes(s)
        assert len(shapes) == count
        for sh in shapes:
            assert sh.n == 2 * s - 2
            assert is_k3_regular(sh, s)

    @pytest.mark.parametrize("s", range(3, 8))
    def test_against_exhaustive_filter(self, s):
        expected = {
            canonical_code(t)
            for t in free_trees(2 * s - 2)
            if t.degrees.count(1) == s and set(t.degrees) <= {1, 3}
        }
        assert {canonical_code(t) for t in k3_regular_shapes(s)} == expected

    def test_s3_is_star(self):
        (sh,) = k3_regular_shapes(3)
        assert iso(sh, make_star(4))

    def test_default_is_caterpillar(self):
        for s in range(3, 9):
            sh = k3_regular_shapes(s)[0]
            internal = [x for x in range(sh.n) if sh.degree(x) == 3]
            assert internal == list(range(s - 2))
            for i in range(s - 3):
                assert sh.has_edge(i, i + 1)

    def test_bad_arity(self):
        with pytest.raises(BadArity):
            k3_regular_shapes(2)


# Worked example: v has neighbours v1 (degree 4), v2 (degree 2), v3 (degree 3), v4, v5 (leaves)
WORKED_T = Tree(12, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (1, 8), (2, 9), (3, 10), (3, 11)])
# drawn result: internal path Y - X - Z with v1* on X, v2*, v3* on Y, v4*, v5* on Z
WORKED_RESULT = Tree(
    14,
    [
        (0, 1), (0, 2), (0, 3),        # v1* and its three leaves
        (0, 4),                        # v1* - X
        (4, 5), (4, 6),                # X - Y, X - Z
        (5, 7), (5, 8),                # Y - v2*, Y - v3*
        (7, 9),                        # v2* - leaf
        (8, 10), (8, 11),              # v3* - two leaves
        (6, 12), (6, 13),              # Z - v4*, Z - v5*
    ],
)


class TestReplace:
    def test_star5(self):
        out = replace_with_3regular(make_star(5), 0)
        assert out.n == 6
        assert iso(out, k3_regular_shapes(4)[0])

    def test_worked_instance(self):
        assert sorted(WORKED_T.degree(x) for x in WORKED_T.neighbors(0)) == [1, 1, 2, 3, 4]
        results = [r for _, _, r in all_replacements(WORKED_T, 0)]
        assert all(r.n == WORKED_T.n + 2 for r in results)
        assert any(iso(r, WORKED_RESULT) for r in results)

    def test_degree6_shapes_give_distinct_results(self):
        t = make_star(7)
        shapes = k3_regular_shapes(6)
        a = replace_with_3regular(t, 0, shapes[0])
        b = replace_with_3regular(t, 0, shapes[1])
        assert not iso(a, b)
        assert a.n == b.n == 10

    def test_neighbor_degrees_kept(self):
        out = replace_with_3regular(WORKED_T, 0)
        for x in (1, 2, 3, 4, 5):
            assert out.degree(x) == WORKED_T.degree(x)

    def test_default_assignment_order(self):
        sh = k3_regular_shapes(5)[0]
        leaves = sorted(pendent_vertices(sh))
        explicit = dict(zip(leaves, [1, 3, 2, 4, 5]))
        assert replace_with_3regular(WORKED_T, 0) == replace_with_3regular(WORKED_T, 0, sh, explicit)

    def test_bad_arity(self):
        with pytest.raises(BadArity):
            replace_with_3regular(make_star(4), 0)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            replace_with_3regular(make_star(6), 0, k3_regular_shapes(4)[0])

    def test_bad_assignment(self):
        sh = k3_regular_shapes(4)[0]
        leaves = sorted(pendent_vertices(sh))
        with pytest.raises(BadAssignment):
            replace_with_3regular(make_star(5), 0, sh, dict(zip(leaves, [1, 1, 2, 3])))
        with pytest.raises(BadAssignment):
            replace_with_3regular(make_star(5), 0, sh, {leaves[0]: 1})

    @pytest.mark.parametrize("n", range(5, 10))
    def test_degree_multiset_changes_only_at_site(self, n):
        for t in free_trees(n):
            for v in range(t.n):
                s = t.degree(v)
                if s < 4:
                    continue
                expected = Counter(t.degrees)
                expected[s] -= 1
                expected[3] += s - 2
                expected = +expected
                for _, _, out in all_replacements(t, v) if s <= 5 else [(0, 0, replace_with_3regular(t, v))]:
                    assert out.n == t.n + s - 3
                    assert Counter(out.degrees) == expected


def test_subdivide_and_attach():
    t = subdivide_edge(make_star(4), (0, 1), 2)
    assert t.n == 6 and degree_counts(t) == {1: 3, 2: 2, 3: 1}
    assert attach_leaf(make_path(3), 1).degree(1) == 3
    with pytest.raises(NotAnEdge):
        subdivide_edge(make_path(3), (0, 2))
