"""Independent brute-force checks for the closed-form results.

Everything here counts or measures directly from definitions (point scans,
exact linear solves, coordinate geometry) and shares no code path with the
formula implementations it validates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, permutations, product

from .intlin import IntMatrix
from .zonotope import NormalizedVolume


def permutohedron_lattice_points_direct(n: int, *, bound: int = 5) -> int:
    """Count integer points of the permutohedron Pi_n from its facet
    description: coordinates in 1..n summing to n(n+1)/2 with every
    nonempty proper subset S satisfying sum_S x >= |S|(|S|+1)/2."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise ValueError(f"n={n} exceeds oracle bound={bound}")
    total_needed = n * (n + 1) // 2
    subsets = []
    for r in range(1, n):
        floor = r * (r + 1) // 2
        subsets.extend((s, floor) for s in combinations(range(n), r))
    count = 0
    for point in product(range(1, n + 1), repeat=n):
        if sum(point) != total_needed:
            continue
        if all(sum(point[i] for i in s) >= floor for s, floor in subsets):
            count += 1
    return count


def _fraction_rows(m: IntMatrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]


def _independent_rows(m: IntMatrix) -> list[int] | None:
    """Indices of `cols` linearly independent rows, or None if rank < cols."""
    rows = _fraction_rows(m)
    picked: list[int] = []
    basis: list[list[Fraction]] = []
    for idx, row in enumerate(rows):
        vec = list(row)
        for b in basis:
            lead = next(j for j in range(len(b)) if b[j] != 0)
            if vec[lead] != 0:
                f = vec[lead] / b[lead]
                vec = [x - f * y for x, y in zip(vec, b)]
        if any(x != 0 for x in vec):
            basis.append(vec)
            picked.append(idx)
            if len(picked) == m.cols:
                return picked
    return None


def _invert(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(rows)]
    for c in range(k):
        p = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pivot = aug[c][c]
        aug[c] = [x / pivot for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[k:] for r in aug]


def semiopen_count_direct(columns: IntMatrix, *, max_candidates: int = 2_000_000) -> int:
    """Count lattice points x = sum_i t_i c_i with 0 <= t_i < 1 by scanning
    the integer bounding box of the brick and solving each candidate exactly.

    Dependent columns give 0 (the brick is degenerate).  Raises when the
    bounding box would hold more than `max_candidates` points."""
    k = columns.cols
    if k == 0:
        return 1
    picked = _independent_rows(columns)
    if picked is None:
        return 0
    inv = _invert([[Fraction(columns.row(i)[j]) for j in range(k)] for i in picked])
    ranges = []
    size = 1
    for i in range(columns.rows):
        row = columns.row(i)
        lo = sum(min(0, x) for x in row)
        hi = sum(max(0, x) for x in row)
        size *= hi - lo + 1
        if size > max_candidates:
            raise ValueError(f"bounding box exceeds {max_candidates} candidate points")
        ranges.append(range(lo, hi + 1))
    rows = [columns.row(i) for i in range(columns.rows)]
    count = 0
    for x in product(*ranges):
        coeffs = [sum(inv[r][c] * x[picked[c]] for c in range(k)) for r in range(k)]
        if any(not (0 <= t < 1) for t in coeffs):
            continue
        if all(sum(row[j] * coeffs[j] for j in range(k)) == x[i] for i, row in enumerate(rows)):
            count += 1
    return count


def _angle_cmp(p: tuple[int, int], q: tuple[int, int]) -> int:
    def half(v: tuple[int, int]) -> int:
        a, b = v
        return 0 if (b > 0 or (b == 0 and a > 0)) else 1

    hp, hq = half(p), half(q)
    if hp != hq:
        return hp - hq
    cross = p[0] * q[1] - p[1] * q[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def hexagon_area_direct() -> NormalizedVolume:
    """Area of Pi_3 (the hexagon spanned by the permutations of (1,2,3))
    measured inside the plane x+y+z = 6: project isometrically onto the
    orthonormal pair (1,-1,0)/sqrt(2), (1,1,-2)/sqrt(6) and take the exact
    shoelace sum."""
    points = []
    for p in set(permutations((1, 2, 3))):
        a = p[0] - p[1]  # sqrt(2) * x
        b = p[0] + p[1] - 2 * p[2]  # sqrt(6) * y
        points.append((a, b))
    points.sort(key=cmp_to_key(_angle_cmp))
    s = 0
    for i, (a1, b1) in enumerate(points):
        a2, b2 = points[(i + 1) % len(points)]
        s += a1 * b2 - a2 * b1
    # area = |s| / 2 * (1/sqrt(2)) * (1/sqrt(6)) = (|s|/4) / sqrt(3)
    return NormalizedVolume(Fraction(abs(s), 4), 3)
