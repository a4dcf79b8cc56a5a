"""Permutohedron and cyclopermutohedron: exact volumes and lattice counts.

The cyclopermutohedron is a virtual zonotope: the formal difference of a
Minkowski sum of edge segments q_ij = [0, e_j - e_i] and radial segments
r_i = [0, e - n e_i], translated by e = (1,...,1).  Its volume and its
lattice-point count are alternating sums over generator subsets; both
collapse to closed forms through decorated forests.

A volume in R^n along the hyperplane sum(x) = const is c / sqrt(n); the
exact rational c and the radicand n travel together in NormalizedVolume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .forests import (
    DecoratedForest,
    PartialDecoratedForest,
    enumerate_decorated_forests,
    forest_count,
    forest_gcd_sum,
    rooted_forest_counts,
)
from .intlin import IntMatrix, det_rows, semiopen_lattice_count

EDGE = "edge"
RADIAL = "radial"
TRANSLATION = "translation"


@dataclass(frozen=True)
class Generator:
    """One generating segment (or translation vector) with its signed weight."""

    kind: str
    indices: tuple[int, ...]
    vector: tuple[int, ...]
    weight: int

    def __post_init__(self):
        if self.kind not in (EDGE, RADIAL, TRANSLATION):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.weight not in (-1, 1):
            raise ValueError("weight must be +1 or -1")


@dataclass(frozen=True)
class VirtualZonotope:
    """Formal signed Minkowski sum of segments in Z^dim."""

    dim: int
    generators: tuple[Generator, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g.vector) != self.dim:
                raise ValueError("generator dimension mismatch")

    def edge_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.kind == EDGE)

    def radial_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.kind == RADIAL)


@dataclass(frozen=True)
class NormalizedVolume:
    """Exact value coeff / sqrt(radicand)."""

    coeff: Fraction
    radicand: int

    def __post_init__(self):
        if self.radicand < 1:
            raise ValueError("radicand must be a positive integer")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def approx(self) -> float:
        return float(self.coeff) / math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        return f"{self.coeff}/sqrt({self.radicand})"


def edge_vector(n: int, i: int, j: int) -> tuple[int, ...]:
    """e_j - e_i."""
    v = [0] * n
    v[i - 1] = -1
    v[j - 1] = 1
    return tuple(v)


def radial_vector(n: int, i: int) -> tuple[int, ...]:
    """e - n e_i: every coordinate 1 except 1 - n in slot i."""
    v = [1] * n
    v[i - 1] = 1 - n
    return tuple(v)


def ones_vector(n: int) -> tuple[int, ...]:
    return (1,) * n


def cyclopermutohedron_generators(n: int) -> VirtualZonotope:
    """Generators of the cyclopermutohedron CP_{n+1} in R^n: all edge
    segments with weight +1, all radial segments with weight -1, and the
    translation e."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    gens = [
        Generator(EDGE, (i, j), edge_vector(n, i, j), 1)
        for i, j in combinations(range(1, n + 1), 2)
    ]
    gens += [Generator(RADIAL, (i,), radial_vector(n, i), -1) for i in range(1, n + 1)]
    gens.append(Generator(TRANSLATION, (), ones_vector(n), 1))
    return VirtualZonotope(n, tuple(gens))


# --- matrices attached to forests ---


def forest_columns(forest: PartialDecoratedForest | DecoratedForest) -> IntMatrix:
    """Generator columns selected by a (partial) decorated forest: one edge
    vector per edge (lexicographic) and one radial vector per mark
    (ascending)."""
    n = forest.forest.vertex_count
    cols = [edge_vector(n, i, j) for i, j in forest.forest.edges]
    cols += [radial_vector(n, k) for k in sorted(forest.marked)]
    return IntMatrix.from_columns(cols, dim=n)


def forest_det_matrix(forest: DecoratedForest, marks_as: str = "radial") -> IntMatrix:
    """Square n x n matrix of a decorated forest: edge columns, then one
    column per mark (the radial vector, or the standard unit vector when
    marks_as="unit"), then the all-ones column."""
    n = forest.forest.vertex_count
    cols = [list(edge_vector(n, i, j)) for i, j in forest.forest.edges]
    for k in sorted(forest.marked):
        if marks_as == "radial":
            cols.append(list(radial_vector(n, k)))
        elif marks_as == "unit":
            unit = [0] * n
            unit[k - 1] = 1
            cols.append(unit)
        else:
            raise ValueError("marks_as must be 'radial' or 'unit'")
    cols.append(list(ones_vector(n)))
    return IntMatrix.from_columns(cols, dim=n)


def det_of_decorated_forest(forest: DecoratedForest) -> int:
    """|det| of the unit-mark matrix of a decorated forest: the number of
    vertices of the free tree.  With radial mark columns the determinant
    picks up a factor n per mark."""
    return forest.free_tree_size


def sharp_of_partial_forest(forest: PartialDecoratedForest) -> int:
    """Lattice points in the semiopen brick of a partial decorated forest:
    n^(|marks| - 1) * gcd(free component sizes), with value 1 when there are
    no marks and 0 when no free component remains."""
    free_sizes = [len(c) for c in forest.free_components()]
    if not free_sizes:
        return 0
    m = forest.mark_count
    if m == 0:
        return 1
    n = forest.forest.vertex_count
    return n ** (m - 1) * math.gcd(*free_sizes)


# --- volumes ---


def _volume_chunk(args) -> int:
    n, combos = args
    total = 0
    ones = list(ones_vector(n))
    for combo in combos:
        cols = [list(vec) for vec, _ in combo]
        cols.append(ones)
        rows = [[col[i] for col in cols] for i in range(n)]
        d = det_rows(rows)
        if d:
            radials = sum(1 for _, is_radial in combo if is_radial)
            total += (-1) ** radials * abs(d)
    return total


def volume_bruteforce(n: int, *, bound: int = 7, jobs: int = 1) -> NormalizedVolume:
    """Volume of the cyclopermutohedron by the defining alternating sum over
    all (n-1)-subsets of generators, each contributing |det| with sign
    (-1)^(#radials).  Cost grows as C(n(n+1)/2, n-1); refuse past `bound`."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    if n > bound:
        raise ValueError(f"n={n} exceeds bound={bound}; use volume_by_forests or volume_closed_form")
    items = [(edge_vector(n, i, j), False) for i, j in combinations(range(1, n + 1), 2)]
    items += [(radial_vector(n, i), True) for i in range(1, n + 1)]
    combos = list(combinations(items, n - 1))
    if jobs > 1 and len(combos) > 1000:
        import multiprocessing as mp

        workers = min(jobs, mp.cpu_count())
        step = (len(combos) + workers - 1) // workers
        chunks = [(n, combos[i:i + step]) for i in range(0, len(combos), step)]
        with mp.get_context("fork").Pool(workers) as pool:
            total = sum(pool.map(_volume_chunk, chunks))
    else:
        total = _volume_chunk((n, combos))
    return NormalizedVolume(Fraction(total), n)


def volume_by_forests(n: int) -> NormalizedVolume:
    """Volume of the cyclopermutohedron as the decorated-forest sum
    sum_F (-n)^(#marks) * N(F), evaluated grouped: a free tree on N chosen
    vertices and a rooted forest with k trees on the rest contribute
    C(n,N) N^(N-2) * N * (-n)^k * t_{n-N,k}."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    total = 0
    for N in range(1, n + 1):
        table = rooted_forest_counts(n - N)
        rooted = table.polynomial_value(-n)
        total += math.comb(n, N) * N ** max(N - 2, 0) * N * rooted
    return NormalizedVolume(Fraction(total), n)


def volume_closed_form(n: int) -> NormalizedVolume:
    """Closed form for the cyclopermutohedron volume: 0 for n >= 3; the
    single exception is n = 2, where the signed sum gives -2/sqrt(2)."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    return NormalizedVolume(Fraction(-2 if n == 2 else 0), n)


def volume_terms_by_forest(n: int) -> Iterator[tuple[DecoratedForest, int]]:
    """Each decorated forest with its signed volume contribution
    (-n)^(#marks) * N(F); the terms sum to the volume coefficient."""
    for f in enumerate_decorated_forests(n):
        yield f, (-n) ** f.mark_count * f.free_tree_size


def permutohedron_volume(n: int) -> NormalizedVolume:
    """Volume of the permutohedron Pi_n (convex hull of all permutations of
    (1,...,n)): n^(n-1) / sqrt(n), one factor n per spanning tree of K_n."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    return NormalizedVolume(Fraction(n ** (n - 1)), n)


# --- lattice point counts ---


def _lattice_chunk(args) -> int:
    n, pairs = args
    total = 0
    for edges, marks in pairs:
        cols = [edge_vector(n, i, j) for i, j in edges]
        cols += [radial_vector(n, k) for k in marks]
        count = semiopen_lattice_count(IntMatrix.from_columns(cols, dim=n))
        total += (-1) ** len(marks) * count
    return total


def lattice_count_bruteforce(n: int, *, bound: int = 6, jobs: int = 1) -> int:
    """Lattice points of the cyclopermutohedron by the defining alternating
    sum over all generator subsets with |edges| + |marks| <= n - 1, counting
    each semiopen brick via minor gcds.  Refuse past `bound`; use
    lattice_count_closed_form for larger n."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    if n > bound:
        raise ValueError(f"n={n} exceeds bound={bound}; use lattice_count_closed_form")
    all_edges = list(combinations(range(1, n + 1), 2))
    pairs = []
    for icount in range(n):
        for edges in combinations(all_edges, icount):
            for mcount in range(n - icount):
                for marks in combinations(range(1, n + 1), mcount):
                    pairs.append((edges, marks))
    if jobs > 1 and len(pairs) > 1000:
        import multiprocessing as mp

        workers = min(jobs, mp.cpu_count())
        step = (len(pairs) + workers - 1) // workers
        chunks = [(n, pairs[i:i + step]) for i in range(0, len(pairs), step)]
        with mp.get_context("fork").Pool(workers) as pool:
            return sum(pool.map(_lattice_chunk, chunks))
    return _lattice_chunk((n, pairs))


def lattice_count_closed_form(n: int) -> int:
    """Lattice points of the cyclopermutohedron:
    phi(n) - sum_{v=1}^{n-1} C(n,v) (-v)^(n-v-1) Phi(v),
    with phi the forest count and Phi the forest gcd sum."""
    if n < 2:
        raise ValueError("n too small: need n >= 2")
    total = forest_count(n)
    for v in range(1, n):
        total -= math.comb(n, v) * (-v) ** (n - v - 1) * forest_gcd_sum(v)
    return total


def permutohedron_lattice_count(n: int) -> int:
    """Lattice points of the permutohedron Pi_n: the forest count phi(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return forest_count(n)
