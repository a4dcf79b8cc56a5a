"""Labeled trees and forests on [n]: enumeration, counting, decorations.

Everything here is exact integer/rational combinatorics; enumeration orders
are deterministic so downstream output is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, product
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    seen = set()
    for e in edges:
        i, j = e
        if i == j:
            raise ValueError(f"invalid edge ({i},{j}): endpoints must differ")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge ({i},{j}) outside vertex range 1..{n}")
        seen.add((min(i, j), max(i, j)))
    return tuple(sorted(seen))


def _union_find_components(vertices: Iterable[int], edges: Iterable[Edge]) -> dict[int, int]:
    """Map each vertex to its component representative (path-compressed DSU)."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise ValueError(f"edges contain a cycle through ({i},{j})")
        parent[max(ri, rj)] = min(ri, rj)
    return {v: find(v) for v in parent}


def components_of(vertices: Iterable[int], edges: Iterable[Edge]) -> tuple[frozenset[int], ...]:
    """Connected components of an acyclic graph, sorted by least vertex."""
    root = _union_find_components(vertices, edges)
    groups: dict[int, set[int]] = {}
    for v, r in root.items():
        groups.setdefault(r, set()).add(v)
    return tuple(frozenset(groups[r]) for r in sorted(groups))


@dataclass(frozen=True)
class LabeledForest:
    """Acyclic graph on vertices 1..vertex_count with canonically sorted edges."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        normalized = _normalize_edges(vertex_count, edges)
        _union_find_components(range(1, vertex_count + 1), normalized)  # acyclicity check
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", normalized)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def components(self) -> tuple[frozenset[int], ...]:
        return components_of(self.vertices, self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def component_count(self) -> int:
        return self.vertex_count - len(self.edges)

    def is_tree(self) -> bool:
        return self.component_count == 1


def _check_marks(forest: LabeledForest, marked: frozenset[int]) -> tuple[frozenset[int], ...]:
    n = forest.vertex_count
    if not all(1 <= v <= n for v in marked):
        raise ValueError("marked vertices outside 1..n")
    comps = forest.components()
    for comp in comps:
        if len(comp & marked) > 1:
            raise ValueError("a component carries more than one mark")
    return comps


@dataclass(frozen=True)
class DecoratedForest:
    """Forest plus marks with |edges| + |marks| = n - 1 and at most one mark
    per component; exactly one component (the free tree) is then unmarked."""

    forest: LabeledForest
    marked: frozenset[int]

    def __init__(self, forest: LabeledForest, marked: Iterable[int] = ()):
        marked = frozenset(marked)
        comps = _check_marks(forest, marked)
        n = forest.vertex_count
        if forest.edge_count + len(marked) != n - 1:
            raise ValueError("need |edges| + |marks| = n - 1")
        free = [c for c in comps if not (c & marked)]
        if len(free) != 1:
            raise ValueError("expected exactly one unmarked component")
        object.__setattr__(self, "forest", forest)
        object.__setattr__(self, "marked", marked)

    @property
    def mark_count(self) -> int:
        return len(self.marked)

    @property
    def free_tree_vertices(self) -> frozenset[int]:
        for comp in self.forest.components():
            if not (comp & self.marked):
                return comp
        raise AssertionError("unreachable: validated at construction")

    @property
    def free_tree_size(self) -> int:
        return len(self.free_tree_vertices)


@dataclass(frozen=True)
class PartialDecoratedForest:
    """Forest plus marks with |edges| + |marks| <= n - 1 and at most one mark
    per component; at least one component is unmarked."""

    forest: LabeledForest
    marked: frozenset[int]

    def __init__(self, forest: LabeledForest, marked: Iterable[int] = ()):
        marked = frozenset(marked)
        _check_marks(forest, marked)
        n = forest.vertex_count
        if forest.edge_count + len(marked) > n - 1:
            raise ValueError("need |edges| + |marks| <= n - 1")
        object.__setattr__(self, "forest", forest)
        object.__setattr__(self, "marked", marked)

    @property
    def mark_count(self) -> int:
        return len(self.marked)

    def free_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.forest.components() if not (c & self.marked))

    def marked_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.forest.components() if c & self.marked)


def prufer_decode(labels: Sequence[int], seq: Sequence[int]) -> tuple[Edge, ...]:
    """Edges of the tree on `labels` encoded by a Pruefer sequence of length
    len(labels) - 2.  Single vertex decodes to the empty edge set."""
    labels = tuple(sorted(labels))
    v = len(labels)
    if v == 1:
        if seq:
            raise ValueError("sequence must be empty for a single vertex")
        return ()
    if len(seq) != v - 2:
        raise ValueError("sequence length must be len(labels) - 2")
    if not set(seq) <= set(labels):
        raise ValueError("sequence entries must be labels")
    degree = {u: 1 for u in labels}
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = min(u for u in labels if degree[u] == 1)
        edges.append((min(leaf, s), max(leaf, s)))
        degree[leaf] -= 1
        degree[s] -= 1
    u, w = sorted(u for u in labels if degree[u] == 1)
    edges.append((u, w))
    return tuple(sorted(edges))


def prufer_encode(labels: Sequence[int], edges: Iterable[Edge]) -> tuple[int, ...]:
    """Pruefer sequence of a tree given as edges on `labels` (inverse of
    prufer_decode)."""
    labels = tuple(sorted(labels))
    v = len(labels)
    label_set = set(labels)
    norm = {(min(i, j), max(i, j)) for i, j in edges}
    if len(norm) != v - 1 or any(i not in label_set or j not in label_set for i, j in norm):
        raise ValueError("edges do not form a tree on the labels")
    if len(components_of(labels, tuple(norm))) != 1:
        raise ValueError("edges do not form a tree on the labels")
    adj: dict[int, set[int]] = {u: set() for u in labels}
    for i, j in norm:
        adj[i].add(j)
        adj[j].add(i)
    seq = []
    remaining = set(labels)
    while len(remaining) > 2:
        leaf = min(u for u in remaining if len(adj[u]) == 1)
        nb = next(iter(adj[leaf]))
        seq.append(nb)
        adj[nb].remove(leaf)
        del adj[leaf]
        remaining.remove(leaf)
    return tuple(seq)


def trees_on(labels: Sequence[int]) -> Iterator[tuple[Edge, ...]]:
    """All spanning trees on an arbitrary label set, as sorted edge tuples,
    in Pruefer-lexicographic order."""
    labels = tuple(sorted(labels))
    v = len(labels)
    if v == 0:
        raise ValueError("empty vertex set")
    if v <= 2:
        yield () if v == 1 else ((labels[0], labels[1]),)
        return
    for seq in product(labels, repeat=v - 2):
        yield prufer_decode(labels, seq)


def enumerate_trees(vertex_count: int) -> Iterator[LabeledForest]:
    """All labeled trees on 1..vertex_count (Cayley: vertex_count^(vertex_count-2))."""
    if vertex_count < 1:
        raise ValueError("vertex_count must be positive")
    for edges in trees_on(range(1, vertex_count + 1)):
        yield LabeledForest(vertex_count, edges)


def set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions in lexicographic restricted-growth-string order; blocks
    are ordered by first occurrence and each block keeps the input order."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    codes = [0] * n
    maxes = [0] * n
    while True:
        blocks: list[list[int]] = [[] for _ in range(maxes[n - 1] + 1)]
        for x, c in zip(items, codes):
            blocks[c].append(x)
        yield tuple(tuple(b) for b in blocks)
        i = n - 1
        while i > 0:
            if codes[i] <= maxes[i - 1]:
                codes[i] += 1
                break
            codes[i] = 0
            i -= 1
        else:
            return
        maxes[i] = max(maxes[i - 1], codes[i])
        for j in range(i + 1, n):
            codes[j] = 0
            maxes[j] = maxes[j - 1]


def integer_partitions(total: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `total` into weakly decreasing positive parts."""
    if total < 0:
        raise ValueError("total must be non-negative")

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(total, total)


def _labelings(parts: tuple[int, ...]) -> int:
    """Number of set partitions of [sum(parts)] with the given block sizes."""
    n = sum(parts)
    count = math.factorial(n)
    for p in parts:
        count //= math.factorial(p)
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    for m in mult.values():
        count //= math.factorial(m)
    return count


def _trees_with(size: int) -> int:
    # Cayley count; sizes 1 and 2 both admit exactly one tree.
    return size ** max(size - 2, 0)


def forest_count(n: int) -> int:
    """Number of labeled forests on [n]: sum over block-size partitions of
    the labelings count times a Cayley factor per block.  forest_count(0) = 1
    (the empty forest)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    for parts in integer_partitions(n):
        term = _labelings(parts)
        for p in parts:
            term *= _trees_with(p)
        total += term
    return total


def forest_gcd_sum(v: int) -> int:
    """Sum over labeled forests on [v] of gcd(component sizes)."""
    if v < 1:
        raise ValueError("v must be positive")
    total = 0
    for parts in integer_partitions(v):
        term = _labelings(parts) * math.gcd(*parts)
        for p in parts:
            term *= _trees_with(p)
        total += term
    return total


@dataclass(frozen=True, eq=True)
class RootedForestCountTable:
    """Counts t[k] of rooted labeled forests on [n] with exactly k trees."""

    n: int
    counts: dict[int, int]

    def polynomial_value(self, x: int | Fraction) -> int | Fraction:
        """Evaluate sum_k t[k] * x^k; the empty table (n = 0) evaluates to 1."""
        if self.n == 0:
            return x ** 0
        return sum(t * x ** k for k, t in sorted(self.counts.items()))


def rooted_forest_counts(n: int) -> RootedForestCountTable:
    """t_{n,k} = C(n-1, k-1) * n^(n-k); the generating identity
    sum_k t_{n,k} x^k = x (x + n)^(n-1) pins the whole table."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return RootedForestCountTable(0, {})
    counts = {k: math.comb(n - 1, k - 1) * n ** (n - k) for k in range(1, n + 1)}
    return RootedForestCountTable(n, counts)


def abel_eval(n: int, a: int | Fraction, x: int | Fraction) -> Fraction:
    """Abel polynomial A_{n,a}(x) = x (x - a n)^(n-1), with A_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    if n == 0:
        return Fraction(1)
    return x * (x - Fraction(a) * n) ** (n - 1)


def enumerate_decorated_forests(n: int) -> Iterator[DecoratedForest]:
    """All decorated forests on [n].

    Order: component partitions in restricted-growth lex order; within a
    partition, the free block by position, then root choices for the marked
    blocks in ascending vertex order, then per-block spanning trees in
    Pruefer-lex order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for blocks in set_partitions(range(1, n + 1)):
        block_trees = [list(trees_on(b)) for b in blocks]
        for free_idx in range(len(blocks)):
            root_spaces = [b for j, b in enumerate(blocks) if j != free_idx]
            for roots in product(*root_spaces):
                for combo in product(*block_trees):
                    edges = tuple(chain.from_iterable(combo))
                    yield DecoratedForest(LabeledForest(n, edges), roots)


def enumerate_partial_decorated_forests(n: int) -> Iterator[PartialDecoratedForest]:
    """All partial decorated forests on [n] (|edges| + |marks| <= n - 1).

    Order: component partitions in restricted-growth lex order; within a
    partition, per-block spanning trees in Pruefer-lex order, then marked
    block subsets by size then lex (never all blocks), then root choices in
    ascending vertex order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for blocks in set_partitions(range(1, n + 1)):
        c = len(blocks)
        block_trees = [list(trees_on(b)) for b in blocks]
        for combo in product(*block_trees):
            edges = tuple(chain.from_iterable(combo))
            forest = LabeledForest(n, edges)
            for size in range(c):
                for marked_blocks in combinations(range(c), size):
                    for roots in product(*(blocks[j] for j in marked_blocks)):
                        yield PartialDecoratedForest(forest, roots)


def reduce_decorated_forest(forest: PartialDecoratedForest | DecoratedForest):
    """Collapse every marked component: drop its edges and mark all of its
    vertices.  Keeps |edges| + |marks| and the free components unchanged;
    idempotent.  Returns the same type as the input."""
    comps = forest.forest.components()
    new_marked = frozenset(chain.from_iterable(c for c in comps if c & forest.marked))
    edges = tuple(e for e in forest.forest.edges if e[0] not in new_marked)
    new_forest = LabeledForest(forest.forest.vertex_count, edges)
    return type(forest)(new_forest, new_marked)
