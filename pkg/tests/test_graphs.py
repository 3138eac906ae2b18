import itertools

import pytest
from hypothesis import given, strategies as st

from domroots.exactpoly import IntPolynomial as P
from domroots.families import join_poly
from domroots.graphs import (
    Graph,
    GraphParseError,
    OracleCapExceeded,
    book,
    brute_force_dompoly,
    complete,
    corona,
    cycle,
    empty,
    friendship,
    join,
    parse_adjacency,
    read_adjacency,
    union,
)


def naive_dompoly(g: Graph) -> P:
    """Independent reference: test each subset with Python sets."""
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            covered = set(s)
            for v in s:
                covered |= g.adj[v]
            counts[k] += len(covered) == g.n
    return P(counts)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


class TestConstructors:
    def test_friendship_shape(self):
        g = friendship(3)
        assert g.n == 7 and g.num_edges == 9
        assert g.degrees()[0] == 6 and set(g.degrees()[1:]) == {2}

    def test_book_shape(self):
        g = book(3)
        assert g.n == 8 and g.num_edges == 10
        assert g.degrees()[:2] == [4, 4]

    def test_b1_is_c4(self):
        assert brute_force_dompoly(book(1)) == brute_force_dompoly(cycle(4))

    def test_invalid(self):
        for bad in (lambda: friendship(0), lambda: book(0), lambda: cycle(2)):
            with pytest.raises(ValueError):
                bad()

    def test_validation(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (frozenset({1}), frozenset()))
        with pytest.raises(ValueError, match="self-loop"):
            Graph(1, (frozenset({0}),))

    def test_corona_labels(self):
        g = corona(complete(2), complete(1))
        assert g.n == 4 and sorted(g.edges) == [(0, 1), (0, 2), (1, 3)]


class TestOracle:
    def test_examples(self):
        assert brute_force_dompoly(cycle(4)).coeffs == (0, 0, 6, 4, 1)
        assert brute_force_dompoly(complete(3)).coeffs == (0, 3, 3, 1)
        assert brute_force_dompoly(empty(3)).coeffs == (0, 0, 0, 1)
        assert brute_force_dompoly(friendship(1)).coeffs == (0, 3, 3, 1)

    def test_cap(self):
        with pytest.raises(OracleCapExceeded):
            brute_force_dompoly(empty(25))

    @given(graphs())
    def test_matches_naive(self, g):
        assert brute_force_dompoly(g) == naive_dompoly(g)

    @given(graphs())
    def test_basic_invariants(self, g):
        d = brute_force_dompoly(g)
        assert d.degree == g.n and d.leading == 1
        assert d.coeffs[0] == 0
        # a vertex set of size n-1 dominates unless the missing vertex is isolated
        isolated = sum(1 for s in g.adj if not s)
        assert (d.coeffs[g.n - 1] if g.n > 1 else 0) == (g.n - isolated if g.n > 1 else 0)
        # the number of dominating sets is odd (Brouwer)
        assert sum(d.coeffs) % 2 == 1

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_union_is_product(self, g, h):
        assert brute_force_dompoly(union(g, h)) == brute_force_dompoly(g) * brute_force_dompoly(h)

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_join_identity(self, g, h):
        expected = join_poly(brute_force_dompoly(g), g.n, brute_force_dompoly(h), h.n)
        assert brute_force_dompoly(join(g, h)) == expected


class TestParsing:
    C4 = "0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n"

    def test_round_trip(self):
        g = parse_adjacency(self.C4)
        assert g == cycle(4)

    def test_comments_and_blanks(self):
        assert parse_adjacency("# c4\n\n" + self.C4 + "\n") == cycle(4)

    def test_isolated_vertex(self):
        assert parse_adjacency("0:\n1:\n").num_edges == 0

    @pytest.mark.parametrize("text, match", [
        ("", "no vertices"),
        ("0 1\n", "line 1"),
        ("0: 1\n1:\n", "asymmetric.*0 lists 1"),
        ("0: 0\n", "self-loop"),
        ("0: x\n", "line 1"),
        ("0:\n0:\n", "line 2"),
        ("0: 2\n1:\n", "unknown neighbour"),
        ("1:\n2:\n", "0..1"),
    ])
    def test_errors(self, text, match):
        with pytest.raises(GraphParseError, match=match):
            parse_adjacency(text)

    def test_read_file(self, tmp_path):
        f = tmp_path / "c4.adj"
        f.write_text(self.C4)
        assert brute_force_dompoly(read_adjacency(f)).coeffs == (0, 0, 6, 4, 1)
