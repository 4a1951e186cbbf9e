import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abstree.errors import BadParameters
from abstree.families import make_path, make_spider, make_star, tstar_family
from abstree.graph import canonical_code, relabel
from abstree.indices import (
    ABC,
    ABS,
    HARMONIC,
    RANDIC,
    SUM_CONNECTIVITY,
    EdgeTypeHistogram,
    IndexKind,
    Kind,
    abs_index,
    abs_term,
    abs_value,
    edge_type_histogram,
    general_sum_connectivity,
    index_value,
)
from oracles import abs_by_definition
from strategies import trees

histograms = st.dictionaries(
    st.tuples(st.integers(1, 12), st.integers(1, 12)), st.integers(0, 30), max_size=8
)
ALL_KINDS = [ABS, RANDIC, SUM_CONNECTIVITY, HARMONIC, ABC, general_sum_connectivity(0.7)]


def test_histograms_of_small_trees():
    assert edge_type_histogram(make_path(5)) == {(1, 2): 2, (2, 2): 2}
    assert edge_type_histogram(make_star(4)) == {(1, 3): 3}


@pytest.mark.parametrize("n,k", [(7, 3), (10, 3), (12, 4), (13, 5), (16, 6)])
def test_extremal_histogram(n, k):
    for t in tstar_family(n, k):
        h = edge_type_histogram(t)
        assert h == {(1, 2): k, (2, 2): n - 3 * k + 2, (2, 3): k, (3, 3): k - 3}


def test_histogram_normalizes_pairs():
    h = EdgeTypeHistogram({(3, 1): 2, (1, 3): 1, (2, 2): 0})
    assert dict(h) == {(1, 3): 3}
    assert h[(3, 1)] == 3 and h[(4, 4)] == 0


@pytest.mark.parametrize("bad", [{(0, 2): 1}, {(1, 2): -1}])
def test_histogram_rejects(bad):
    with pytest.raises(BadParameters):
        EdgeTypeHistogram(bad)


@given(trees(min_n=2))
def test_histogram_invariants(t):
    h = edge_type_histogram(t)
    assert h.total() == t.n - 1
    assert max(b for _, b in h) <= t.max_degree()


class TestValues:
    def test_p2(self):
        assert index_value(edge_type_histogram(make_path(2)), ABS).value == 0.0
        assert abs_index(make_path(2)).value == 0.0

    def test_p5_abs(self):
        v = abs_index(make_path(5)).value
        assert v == pytest.approx(2 * math.sqrt(1 / 3) + 2 * math.sqrt(1 / 2), abs=1e-12)
        assert v == pytest.approx(2.5689141, abs=1e-7)

    def test_s4_abs(self):
        assert abs_index(make_star(4)).value == pytest.approx(2.1213203, abs=1e-7)

    def test_p3_randic(self):
        assert index_value(edge_type_histogram(make_path(3)), RANDIC).value == pytest.approx(1.4142136, abs=1e-7)

    def test_p5_harmonic(self):
        v = index_value(edge_type_histogram(make_path(5)), HARMONIC).value
        assert v == pytest.approx(2 * 2 / 3 + 2 * 2 / 4, abs=1e-12)

    def test_spider_333(self):
        expected = 3 * math.sqrt(1 / 3) + 3 * math.sqrt(1 / 2) + 3 * math.sqrt(3 / 5)
        assert abs_index(make_spider([3, 3, 3])).value == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(6.1771612, abs=1e-7)

    def test_star6(self):
        assert abs_index(make_star(6)).value == pytest.approx(5 * math.sqrt(2 / 3), abs=1e-12)
        assert abs_index(make_star(6)).value == pytest.approx(4.0824829, abs=1e-7)

    def test_other_kinds_on_p4(self):
        # P4: edge types (1,2), (2,2), (1,2)
        h = edge_type_histogram(make_path(4))
        assert index_value(h, SUM_CONNECTIVITY).value == pytest.approx(2 / math.sqrt(3) + 1 / 2, abs=1e-12)
        assert index_value(h, ABC).value == pytest.approx(2 * math.sqrt(1 / 2) + math.sqrt(2 / 4), abs=1e-12)
        assert index_value(h, general_sum_connectivity(2)).value == pytest.approx(2 * 9 + 16, abs=1e-12)

    def test_degenerate_edge_is_zero(self):
        h = {(1, 1): 1}
        assert index_value(h, ABS).value == 0.0
        assert index_value(h, ABC).value == 0.0


class TestKinds:
    def test_alpha_required(self):
        with pytest.raises(BadParameters):
            IndexKind(Kind.GENERAL_SUM_CONNECTIVITY)
        with pytest.raises(BadParameters):
            general_sum_connectivity(float("nan"))

    def test_alpha_rejected_elsewhere(self):
        with pytest.raises(BadParameters):
            IndexKind(Kind.ABS, 0.5)

    def test_names(self):
        assert [k.name for k in ALL_KINDS] == ["abs", "randic", "sumconn", "harmonic", "abc", "gensumconn"]


@pytest.mark.parametrize("a", range(1, 13))
def test_abs_term_two_forms_agree(a):
    for b in range(a, 13):
        assert abs_term(a, b) == pytest.approx(math.sqrt(1 - 2 / (a + b)), abs=1e-12)


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.name)
@given(h1=histograms, h2=histograms)
def test_linear_in_histogram(kind, h1, h2):
    a, b = EdgeTypeHistogram(h1), EdgeTypeHistogram(h2)
    total = index_value(a + b, kind).value
    assert total == pytest.approx(index_value(a, kind).value + index_value(b, kind).value, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("kind", [ABS, RANDIC, SUM_CONNECTIVITY, HARMONIC, ABC], ids=lambda k: k.name)
@given(h=histograms)
def test_nonnegative(kind, h):
    assert index_value(h, kind).value >= 0


@given(trees(min_n=2, max_n=12))
def test_general_sum_connectivity_at_minus_half(t):
    h = edge_type_histogram(t)
    assert index_value(h, general_sum_connectivity(-0.5)).value == pytest.approx(
        index_value(h, SUM_CONNECTIVITY).value, abs=1e-12
    )


@given(trees(min_n=2, max_n=16), st.data())
def test_abs_isomorphism_invariant(t, data):
    perm = data.draw(st.permutations(list(range(t.n))))
    u = relabel(t, perm)
    assert canonical_code(u) == canonical_code(t)
    assert abs_index(u).value == pytest.approx(abs_index(t).value, abs=1e-12)


@given(trees(min_n=1, max_n=30))
def test_fast_path_matches_definition(t):
    assert abs_value(t) == abs_index(t).value
    assert abs_value(t) == pytest.approx(abs_by_definition(t), abs=1e-12)


@pytest.mark.parametrize("k", range(1, 7))
def test_gap_function_decreasing(k):
    def f(x):
        return math.sqrt(1 - 2 / (x + k)) - math.sqrt(1 - 2 / x)

    xs = [i / 10 for i in range(30, 201)]
    vals = [f(x) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))
