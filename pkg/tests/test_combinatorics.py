from itertools import combinations, groupby

import pytest

from qpartitions import combinatorics as comb
from qpartitions.combinatorics import (
    BlockDecomposition,
    ColoredPart as P,
    ColoredPartition,
    PartitionLiteralError,
    durfee_decompose,
    durfee_stratified_poly,
    enum_over,
    enum_strict,
    gen_poly,
    parse_partition,
    recompose,
    verify_over_lemmas,
)
from qpartitions.identities import alladi_n_term, build_alladi_y, overpartition_n_term
from qpartitions.polyring import Symbol, parse_poly

WEIGHT7_OVER = "2[2]~,2[1],1[2]~,1[1],1[1]~"


def ordinary_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in ordinary_partitions(n - first, first):
            yield (first,) + rest


def overpartition_count(n):
    # each distinct part size may or may not have its last copy overlined
    return sum(2 ** len(set(p)) for p in ordinary_partitions(n))


def strict_count(n, colors):
    # r independent strict partitions whose weights add to n
    one = [0] * (n + 1)
    for k in range(n + 1):
        for s in combinations(range(1, n + 1), k):
            if sum(s) <= n:
                one[sum(s)] += 1
    total = [1] + [0] * n
    for _ in range(colors):
        total = [sum(total[i] * one[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return total[n]


def test_enum_strict_examples():
    assert [str(p) for p in enum_strict(1, 5)] == ["5[1]", "4[1],1[1]", "3[1],2[1]"]
    assert sorted(str(p) for p in enum_strict(2, 2)) == ["1[2],1[1]", "2[1]", "2[2]"]
    for r in (1, 2, 3):
        assert [p.parts for p in enum_strict(r, 0)] == [()]


@pytest.mark.parametrize("r", [1, 2])
def test_enum_strict_counts_match_independent_count(r):
    assert [len(enum_strict(r, n)) for n in range(11)] == [strict_count(n, r) for n in range(11)]


def test_enum_over_examples():
    assert sorted(str(p) for p in enum_over(1, 1)) == ["1[1]", "1[1]~"]
    assert [len(enum_over(1, n)) for n in range(6)] == [1, 2, 4, 8, 14, 24]
    assert [len(enum_over(1, n)) for n in range(11)] == [overpartition_count(n) for n in range(11)]
    assert parse_partition(WEIGHT7_OVER) in enum_over(2, 7)


@pytest.mark.parametrize("kind,n", [("strict", 9), ("over", 7)])
def test_no_duplicates(kind, n):
    parts = comb.enumerate_partitions(kind, 2, n)
    assert len(parts) == len(set(parts))
    assert all(p.weight == n for p in parts)


def test_overline_legality():
    for p in enum_over(2, 7):
        for _, run in groupby(p.parts, key=lambda q: (q.size, q.color)):
            flags = [q.overlined for q in run]
            assert sum(flags) <= 1
            assert not any(flags[:-1])


def test_gen_poly_examples():
    assert gen_poly("strict", 1, 5) == parse_poly("a1 + 2*a1^2")
    assert gen_poly("over", 1, 1) == parse_poly("a1 + a1*z1")
    assert gen_poly("over", 1, 2) == parse_poly("a1 + a1*z1 + a1^2 + a1^2*z1")
    assert str(gen_poly("over", 1, 2)) == "a1 + a1*z1 + a1^2 + a1^2*z1"


def test_y_refinement_counts_parts():
    lhs = build_alladi_y(2, 9).lhs
    for n in range(9):
        g = gen_poly("strict", 2, n, count_parts=True)
        assert g == lhs[n]
        for m in g.terms:
            assert m.degree(Symbol("y")) == m.degree(Symbol("a", 1)) + m.degree(Symbol("a", 2))


def test_weight_seven_literal():
    p = parse_partition(WEIGHT7_OVER)
    assert p.kind == "over"
    assert p.weight == 7
    assert str(p) == WEIGHT7_OVER
    assert str(p.monomial()) == "a1^3*z1*a2^2*z2^2"


def test_parse_partition_sorts_between_runs():
    assert str(parse_partition("1[1],2[1],1[2]")) == "2[1],1[2],1[1]"
    assert parse_partition("1[1],2[1]").kind == "strict"
    assert parse_partition("").parts == ()


@pytest.mark.parametrize(
    "literal,message",
    [
        ("1[1]~,1[1]", "non-final"),
        ("1[1]~,1[1]~", "more than one"),
        ("2[1],x", "bad part"),
        ("0[1]", "size >= 1"),
        ("2[0]", "color >= 1"),
    ],
)
def test_parse_partition_rejects(literal, message):
    with pytest.raises(PartitionLiteralError, match=message):
        parse_partition(literal)


def test_strict_kind_rejections():
    with pytest.raises(PartitionLiteralError):
        parse_partition("1[1],1[1]", kind="strict")
    with pytest.raises(PartitionLiteralError):
        parse_partition("1[1]~", kind="strict")
    with pytest.raises(PartitionLiteralError):
        ColoredPartition((P(1, 1), P(2, 1)), "strict")


def test_decompose_examples():
    d = durfee_decompose(parse_partition("1[1]"))
    assert (d.durfee, d.block2, d.block3, d.block4.parts) == (1, (P(0, 1),), (), ())
    d = durfee_decompose(parse_partition("3[1],2[2],2[1],1[2]"))
    assert d.durfee == 2
    assert d.block2 == (P(1, 1), P(0, 2))
    assert d.block3 == (P(2, 1),)
    assert d.block4.parts == (P(1, 2),)
    assert d.weights == {"I": 4, "II": 1, "III": 2, "IV": 1}
    assert d.top_color == 1
    d = durfee_decompose(parse_partition("5[1]"))
    assert (d.durfee, d.block2, d.block3) == (1, (P(4, 1),), ())


def test_decompose_keeps_zero_row_flags():
    d = durfee_decompose(parse_partition(WEIGHT7_OVER))
    assert d.durfee == 2
    assert d.block2 == (P(0, 2, True), P(0, 1))
    assert d.block3 == ()
    assert str(d.block4) == "1[2]~,1[1],1[1]~"


def test_decompose_rejects_empty():
    with pytest.raises(ValueError):
        durfee_decompose(ColoredPartition((), "strict"))


def test_recompose_example_and_rejections():
    d = durfee_decompose(parse_partition("1[1]"))
    assert str(recompose(d)) == "1[1]"
    good = durfee_decompose(parse_partition("3[1],2[2],2[1],1[2]"))
    with pytest.raises(ValueError):
        recompose(BlockDecomposition(2, good.block2, good.block3, ColoredPartition((P(2, 2),), "strict"), "strict"))
    with pytest.raises(ValueError):
        recompose(BlockDecomposition(2, good.block2[:1], good.block3, good.block4, "strict"))
    with pytest.raises(ValueError):
        recompose(BlockDecomposition(2, good.block2, (P(3, 1),), good.block4, "strict"))


@pytest.mark.parametrize("kind,n_max", [("strict", 10), ("over", 8)])
def test_round_trip(kind, n_max):
    for n in range(1, n_max + 1):
        for p in comb.enumerate_partitions(kind, 2, n):
            d = durfee_decompose(p)
            assert recompose(d) == p
            assert d.weight == n
            assert all(q.size < d.durfee for q in d.block4.parts)


def test_stratified_examples():
    # {5}, {4,1} have Durfee size 1; {3,2} has Durfee size 2
    assert durfee_stratified_poly("strict", 1, 5, 1) == parse_poly("a1 + a1^2")
    assert durfee_stratified_poly("strict", 1, 5, 2) == parse_poly("a1^2")
    for kind in ("strict", "over"):
        total = sum((durfee_stratified_poly(kind, 2, 6, N) for N in (1, 2)), start=parse_poly("0"))
        assert total == gen_poly(kind, 2, 6)


@pytest.mark.parametrize("kind,n_term", [("strict", alladi_n_term), ("over", overpartition_n_term)])
def test_strata_match_outer_terms(kind, n_term):
    T = 9
    for N in (1, 2):
        term = n_term(2, N, T)
        for n in range(T):
            assert durfee_stratified_poly(kind, 2, n, N) == term[n], (N, n)


def test_lemma_single_part_cases():
    results = verify_over_lemmas(1, 6)
    assert all(r.passed for r in results)
    # exactly one part >= 1: {n} and {n~}; with zero allowed also {0}, {0~}
    exactly = comb._single_color_series(6, 1, exact=True, allow_zero=False)
    with_zero = comb._single_color_series(6, 1, exact=True, allow_zero=True)
    one_plus_z = parse_poly("1 + z1")
    assert [exactly[n] for n in range(6)] == [0] + [one_plus_z] * 5
    assert [with_zero[n] for n in range(6)] == [one_plus_z] * 6


def test_lemmas_up_to_six():
    results = verify_over_lemmas(6, 15)
    assert len(results) == 24
    assert all(r.passed for r in results), [str(r.comparison) for r in results if not r.passed]
