"""Property-based invariants over randomized matrices and vectors."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from effvec import (
    HamiltonianCycle,
    MonomialTransform,
    build_digraph,
    cone_membership,
    consistent_matrix,
    cycle_product,
    decompose,
    enumerate_cycles,
    format_matrix,
    format_vector,
    is_consistent,
    is_efficient,
    membership,
    min_reversal_vector,
    monomial_similarity,
    parse_matrix,
    parse_vector,
    probe,
    resolve_unit_cycle,
    transform_vector,
)
from effvec.matrices import ReciprocalMatrix
from helpers import identity_cycle

entries = st.fractions(
    min_value=Fraction(1, 9), max_value=Fraction(9), max_denominator=9
).filter(lambda f: f > 0)


@st.composite
def matrix_and_vector(draw, min_n=3, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    upper = draw(st.lists(entries, min_size=pairs, max_size=pairs))
    rows = [[Fraction(1)] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            value = next(it)
            rows[i][j] = value
            rows[j][i] = 1 / value
    w = tuple(draw(st.lists(entries, min_size=n, max_size=n)))
    return ReciprocalMatrix.from_rows(rows), w


@st.composite
def transforms(draw, n):
    scale = tuple(draw(st.lists(entries, min_size=n, max_size=n)))
    perm = tuple(draw(st.permutations(range(n))))
    return MonomialTransform(scale=scale, perm=perm)


@st.composite
def matrix_vector_transform(draw, min_n=3, max_n=5):
    a, w = draw(matrix_and_vector(min_n, max_n))
    t = draw(transforms(a.n))
    return a, w, t


@given(matrix_and_vector())
@settings(deadline=None)
def test_digraph_semicomplete(pair):
    a, w = pair
    g = build_digraph(a, w)
    for i in range(a.n):
        for j in range(i + 1, a.n):
            assert g.has_edge(i, j) or g.has_edge(j, i)


@given(matrix_vector_transform())
@settings(deadline=None)
def test_efficiency_invariant_under_monomial_similarity(triple):
    a, w, t = triple
    image = monomial_similarity(a, t)
    assert (
        is_efficient(a, w).efficient
        == is_efficient(image, transform_vector(w, t)).efficient
    )


@given(matrix_and_vector())
@settings(deadline=None)
def test_certificate_is_sound(pair):
    a, w = pair
    cert = is_efficient(a, w)
    g = build_digraph(a, w)
    if cert.efficient:
        assert all(g.has_edge(i, j) for i, j in cert.cycle.edges())
    else:
        inside = set(cert.cut)
        for u in inside:
            for v in range(a.n):
                if v not in inside:
                    assert not g.has_edge(v, u)


@given(matrix_and_vector(), st.integers(0, 10**6))
@settings(deadline=None, max_examples=60)
def test_decomposition_membership_matches_certificate(pair, salt):
    a, w = pair
    d = decompose(a)
    cycle = membership(d, w)
    assert (cycle is not None) == is_efficient(a, w).efficient
    if cycle is not None and d.ray is None:
        assert cone_membership(a, cycle, w)


@given(matrix_and_vector())
@settings(deadline=None, max_examples=60)
def test_cone_closed_under_entrywise_products_of_squares(pair):
    # Efficiency cones are log-convex: members of a cycle's cone for the
    # squared matrix multiply into the cone of the fourth-power matrix,
    # which keeps the geometric midpoint rational.
    a, w = pair
    squared = ReciprocalMatrix.from_rows([[x * x for x in row] for row in a.entries])
    fourth = ReciprocalMatrix.from_rows(
        [[x * x for x in row] for row in squared.entries]
    )
    _, below = enumerate_cycles(squared)
    assume(below)
    cycle = below[0]
    from effvec import cone_extremes

    extremes = cone_extremes(squared, cycle)
    u, v = extremes[0], extremes[-1]
    product = tuple(ui * vi for ui, vi in zip(u, v))
    assert cone_membership(fourth, cycle, product)


@given(matrix_and_vector())
@settings(deadline=None, max_examples=80)
def test_min_reversal_counts(pair):
    a, _ = pair
    at_most, _ = enumerate_cycles(a)
    for cycle in at_most[:4]:
        vec, along = min_reversal_vector(a, cycle)
        has_above = any(a.entries[i][j] > 1 for i, j in cycle.edges())
        expected = 0 if (has_above or cycle_product(a, cycle) == 1) else 1
        assert along == expected
        assert is_efficient(a, vec).efficient


@given(matrix_and_vector())
@settings(deadline=None)
def test_formats_round_trip(pair):
    a, w = pair
    assert parse_matrix(format_matrix(a)) == a
    assert parse_vector(format_vector(w)) == w


@given(matrix_and_vector())
@settings(deadline=None, max_examples=60)
def test_probe_agrees_with_certificate_on_columns(pair):
    a, w = pair
    # Columns are always efficient: nothing may dominate them, including w.
    for k in range(a.n):
        assert not probe(a, a.column(k), w).dominates or not is_efficient(
            a, w
        ).efficient


@given(st.integers(4, 6), st.lists(entries, min_size=1, max_size=4))
@settings(deadline=None)
def test_resolve_unit_cycle_on_random_fixtures(n, values):
    # n = 3 admits no such fixture: every entry lies on the cycle itself.
    rows = [[Fraction(1)] * n for _ in range(n)]
    offset = 2
    usable = min(len(values), n - offset)
    assume(usable >= 1)
    for i in range(usable):
        rows[i][i + offset] = values[i]
        rows[i + offset][i] = 1 / values[i]
    a = ReciprocalMatrix.from_rows(rows)
    assume(not is_consistent(a))
    out = resolve_unit_cycle(a, identity_cycle(n))
    along = [a.entries[i][j] for i, j in out.edges()]
    assert all(e <= 1 for e in along)
    assert any(e < 1 for e in along)


@given(st.lists(entries, min_size=3, max_size=6))
@settings(deadline=None)
def test_consistent_matrices_have_unit_products(ws):
    a = consistent_matrix(tuple(ws))
    assert is_consistent(a)
    at_most, below = enumerate_cycles(a)
    assert below == ()
    assert all(cycle_product(a, c) == 1 for c in at_most)
