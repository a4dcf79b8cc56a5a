from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, product

import pytest

from cycloperm.forests import (
    DecoratedForest,
    LabeledForest,
    PartialDecoratedForest,
    abel_eval,
    components_of,
    enumerate_decorated_forests,
    enumerate_partial_decorated_forests,
    enumerate_trees,
    forest_count,
    forest_gcd_sum,
    integer_partitions,
    prufer_decode,
    prufer_encode,
    reduce_decorated_forest,
    rooted_forest_counts,
    set_partitions,
    trees_on,
)

# --- independent brute-force oracle (DFS cycle check, no shared code) ---


def _has_cycle(n: int, edges) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen: set[int] = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        stack = [(start, 0)]
        seen.add(start)
        while stack:
            v, parent = stack.pop()
            for w in adj[v]:
                if w == parent:
                    parent = 0  # consume one edge back to parent (simple graphs)
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, v))
    return False


def _brute_forests(n: int) -> list[tuple[tuple[int, int], ...]]:
    all_edges = list(combinations(range(1, n + 1), 2))
    out = []
    for r in range(len(all_edges) + 1):
        for sub in combinations(all_edges, r):
            if not _has_cycle(n, sub):
                out.append(sub)
    return out


def _brute_components(n: int, edges) -> list[set[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen: set[int] = set()
    comps = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _brute_decorated(n: int) -> set[tuple[tuple[tuple[int, int], ...], frozenset[int]]]:
    """(edges, marks) pairs satisfying the decorated-forest conditions."""
    out = set()
    for edges in _brute_forests(n):
        comps = _brute_components(n, edges)
        for m_size in range(n):
            if len(edges) + m_size != n - 1:
                continue
            for marks in combinations(range(1, n + 1), m_size):
                marked = frozenset(marks)
                per_comp = [len(c & marked) for c in comps]
                if all(x <= 1 for x in per_comp) and per_comp.count(0) == 1:
                    out.add((edges, marked))
    return out


def _brute_partial(n: int) -> set[tuple[tuple[tuple[int, int], ...], frozenset[int]]]:
    out = set()
    for edges in _brute_forests(n):
        comps = _brute_components(n, edges)
        for m_size in range(n):
            if len(edges) + m_size > n - 1:
                continue
            for marks in combinations(range(1, n + 1), m_size):
                marked = frozenset(marks)
                if all(len(c & marked) <= 1 for c in comps):
                    out.add((edges, marked))
    return out


# --- partitions ---


def test_set_partitions_order_and_counts():
    got = list(set_partitions([1, 2, 3]))
    assert got == [
        ((1, 2, 3),),
        ((1, 2), (3,)),
        ((1, 3), (2,)),
        ((1,), (2, 3)),
        ((1,), (2,), (3,)),
    ]
    bell = [1, 1, 2, 5, 15, 52, 203, 877]
    for n, b in enumerate(bell):
        parts = list(set_partitions(range(1, n + 1)))
        assert len(parts) == b
        assert len(set(parts)) == b
        for blocks in parts:
            assert sorted(x for b_ in blocks for x in b_) == list(range(1, n + 1))


def test_integer_partitions():
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(integer_partitions(0)) == [()]
    # partition numbers p(1..8)
    assert [len(list(integer_partitions(v))) for v in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


# --- trees and Pruefer codes ---


def test_enumerate_trees_cayley():
    for n in range(1, 7):
        trees = list(enumerate_trees(n))
        assert len(trees) == (n ** (n - 2) if n >= 2 else 1)
        assert len(set(t.edges for t in trees)) == len(trees)
        for t in trees:
            assert t.is_tree()
    with pytest.raises(ValueError):
        list(enumerate_trees(0))


def test_trees_match_bruteforce():
    for n in range(1, 6):
        brute = {sub for sub in _brute_forests(n) if len(sub) == n - 1}
        assert {t.edges for t in enumerate_trees(n)} == brute


def test_prufer_examples():
    assert prufer_decode((1, 2, 3, 4), (2, 2)) == ((1, 2), (2, 3), (2, 4))
    assert prufer_encode((1, 2, 3, 4), ((1, 2), (2, 3), (2, 4))) == (2, 2)
    assert prufer_decode((1, 2), ()) == ((1, 2),)
    assert prufer_decode((7,), ()) == ()
    with pytest.raises(ValueError):
        prufer_decode((1, 2, 3), (5,))
    with pytest.raises(ValueError):
        prufer_encode((1, 2, 3), ((1, 2),))


def test_prufer_roundtrip():
    for n in range(3, 7):
        labels = tuple(range(1, n + 1))
        for seq in product(labels, repeat=n - 2):
            assert prufer_encode(labels, prufer_decode(labels, seq)) == seq
    # arbitrary label sets
    labels = (2, 5, 9, 11)
    seen = set()
    for edges in trees_on(labels):
        assert prufer_decode(labels, prufer_encode(labels, edges)) == edges
        seen.add(edges)
    assert len(seen) == 16


# --- labeled forests ---


def test_labeled_forest_validation():
    f = LabeledForest(3, [(2, 1)])
    assert f.edges == ((1, 2),)
    assert f.component_count == 2
    assert components_of(f.vertices, f.edges) == (frozenset({1, 2}), frozenset({3}))
    assert LabeledForest(2, [(1, 2), (2, 1)]).edges == ((1, 2),)  # set semantics
    with pytest.raises(ValueError):
        LabeledForest(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabeledForest(3, [(1, 4)])
    with pytest.raises(ValueError):
        LabeledForest(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(ValueError):
        LabeledForest(0)


def test_forest_count_known_values():
    assert [forest_count(n) for n in range(0, 6)] == [1, 1, 2, 7, 38, 291]


def test_forest_count_matches_bruteforce():
    for n in range(1, 7):
        assert forest_count(n) == len(_brute_forests(n))


def test_forest_gcd_sum_known_values():
    assert [forest_gcd_sum(v) for v in range(1, 5)] == [1, 3, 13, 89]
    with pytest.raises(ValueError):
        forest_gcd_sum(0)


def test_forest_gcd_sum_matches_bruteforce():
    for v in range(1, 6):
        brute = 0
        for edges in _brute_forests(v):
            sizes = [len(c) for c in _brute_components(v, edges)]
            brute += math.gcd(*sizes)
        assert forest_gcd_sum(v) == brute


# --- rooted forest counts and Abel polynomials ---


def test_rooted_forest_count_tables():
    assert rooted_forest_counts(2).counts == {1: 2, 2: 1}
    assert rooted_forest_counts(3).counts == {1: 9, 2: 6, 3: 1}
    assert rooted_forest_counts(0).counts == {}
    assert rooted_forest_counts(0).polynomial_value(7) == 1


def test_rooted_forest_counts_match_bruteforce():
    for n in range(1, 6):
        table: dict[int, int] = {}
        for edges in _brute_forests(n):
            comps = _brute_components(n, edges)
            k = len(comps)
            rooted = 1
            for c in comps:
                rooted *= len(c)
            table[k] = table.get(k, 0) + rooted
        assert rooted_forest_counts(n).counts == table


def test_rooted_forest_polynomial_identity():
    # sum_k t_{n,k} x^k = x (x + n)^(n-1)
    for n in range(0, 9):
        tbl = rooted_forest_counts(n)
        for x in (-n, -3, -1, 0, 1, 2, Fraction(1, 2)):
            assert tbl.polynomial_value(x) == abel_eval(n, -1, x)


def test_abel_eval_basics():
    assert abel_eval(0, 5, 3) == 1
    assert abel_eval(1, 5, 3) == 3
    assert abel_eval(3, 1, 2) == 2 * (2 - 3) ** 2
    assert abel_eval(2, Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 3) * (Fraction(1, 3) - 1)
    with pytest.raises(ValueError):
        abel_eval(-1, 1, 1)


def test_abel_grouped_sum_identity():
    # sum_N C(n,N) N^(N-1) A_{n-N,-1}(-n) = (-1)^n n sum_N (-1)^N C(n,N) N^(n-2)
    for n in range(2, 11):
        lhs = sum(
            math.comb(n, N) * N ** (N - 1) * abel_eval(n - N, -1, -n)
            for N in range(1, n + 1)
        )
        rhs = (-1) ** n * n * sum(
            (-1) ** N * math.comb(n, N) * N ** (n - 2) for N in range(1, n + 1)
        )
        assert lhs == rhs
        if n >= 3:
            # alternating vanishing: p(-1) = 0 for p(x) = sum N^(n-2) C(n,N) x^N
            assert rhs == 0
        else:
            assert rhs == -2


# --- decorated forests ---


def test_decorated_forest_validation():
    f = LabeledForest(3, [(1, 2)])
    d = DecoratedForest(f, [3])
    assert d.free_tree_vertices == frozenset({1, 2})
    assert d.free_tree_size == 2
    assert d.mark_count == 1
    with pytest.raises(ValueError):
        DecoratedForest(f, [1, 2])  # two marks in one component
    with pytest.raises(ValueError):
        DecoratedForest(f, [])  # |edges| + |marks| != n - 1
    with pytest.raises(ValueError):
        DecoratedForest(f, [4])
    with pytest.raises(ValueError):
        DecoratedForest(LabeledForest(3, [(1, 2), (2, 3)]), [1])  # no free component


def test_partial_decorated_forest_validation():
    f = LabeledForest(3, [])
    p = PartialDecoratedForest(f, [1, 2])
    assert p.free_components() == (frozenset({3}),)
    assert p.marked_components() == (frozenset({1}), frozenset({2}))
    with pytest.raises(ValueError):
        PartialDecoratedForest(f, [1, 2, 3])  # cap |edges| + |marks| <= n - 1
    with pytest.raises(ValueError):
        PartialDecoratedForest(LabeledForest(3, [(1, 2)]), [1, 2])


def test_enumerate_decorated_forests_counts():
    assert len(list(enumerate_decorated_forests(1))) == 1
    assert len(list(enumerate_decorated_forests(2))) == 3
    assert len(list(enumerate_decorated_forests(3))) == 15
    # count formula: choose the free tree, rooted forest on the rest
    for n in range(1, 6):
        expected = sum(
            math.comb(n, N) * N ** max(N - 2, 0) * (n - N + 1) ** max(n - N - 1, 0)
            for N in range(1, n + 1)
        )
        assert len(list(enumerate_decorated_forests(n))) == expected


def test_enumerate_decorated_forests_matches_bruteforce():
    for n in range(1, 5):
        got = [(d.forest.edges, d.marked) for d in enumerate_decorated_forests(n)]
        assert len(got) == len(set(got))
        assert set(got) == _brute_decorated(n)


def test_enumerate_partial_decorated_forests_counts():
    assert len(list(enumerate_partial_decorated_forests(1))) == 1
    assert len(list(enumerate_partial_decorated_forests(2))) == 4
    assert len(list(enumerate_partial_decorated_forests(3))) == 22


def test_enumerate_partial_decorated_forests_matches_bruteforce():
    for n in range(1, 5):
        got = [(p.forest.edges, p.marked) for p in enumerate_partial_decorated_forests(n)]
        assert len(got) == len(set(got))
        assert set(got) == _brute_partial(n)


def test_every_decorated_forest_is_partial():
    for n in range(1, 5):
        partial = _brute_partial(n)
        for d in enumerate_decorated_forests(n):
            assert (d.forest.edges, d.marked) in partial


# --- reduction ---


def test_reduce_example():
    p = PartialDecoratedForest(LabeledForest(5, [(1, 2), (4, 5)]), [4])
    r = reduce_decorated_forest(p)
    assert r.forest.edges == ((1, 2),)
    assert r.marked == frozenset({4, 5})
    assert isinstance(r, PartialDecoratedForest)


def test_reduce_properties():
    for n in range(1, 5):
        for p in enumerate_partial_decorated_forests(n):
            r = reduce_decorated_forest(p)
            # invariant: |edges| + |marks| preserved, free components unchanged
            assert len(r.forest.edges) + len(r.marked) == len(p.forest.edges) + len(p.marked)
            assert r.free_components() == p.free_components()
            assert all(len(c) == 1 for c in r.marked_components())
            r2 = reduce_decorated_forest(r)
            assert (r2.forest.edges, r2.marked) == (r.forest.edges, r.marked)


def test_reduce_decorated_type_preserved():
    d = DecoratedForest(LabeledForest(4, [(1, 2), (3, 4)]), [3])
    r = reduce_decorated_forest(d)
    assert isinstance(r, DecoratedForest)
    assert r.marked == frozenset({3, 4})
    assert r.free_tree_vertices == frozenset({1, 2})
