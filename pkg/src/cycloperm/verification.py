"""Cross-checks between independent computation routes.

Each check pits a closed form against a brute-force or structurally
different route and reports pass/fail; run_all drives the CLI `verify`
subcommand.  A failure means two routes that must agree did not.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import forests, intlin, linkage, oracle, zonotope


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_prufer_roundtrip(n_max: int, jobs: int) -> str:
    top = min(n_max, 7)
    for n in range(1, top + 1):
        labels = tuple(range(1, n + 1))
        count = 0
        for tree in forests.enumerate_trees(n):
            count += 1
            if n >= 2:
                seq = forests.prufer_encode(labels, tree.edges)
                assert forests.prufer_decode(labels, seq) == tree.edges
        assert count == (n ** (n - 2) if n >= 2 else 1), f"Cayley count failed at n={n}"
    return f"trees enumerated and round-tripped for n <= {top}"


def _check_forest_counts(n_max: int, jobs: int) -> str:
    known = {1: 1, 2: 2, 3: 7, 4: 38, 5: 291}
    for n, value in known.items():
        assert forests.forest_count(n) == value, f"phi({n}) != {value}"
    top = min(n_max, 5)
    for n in range(1, top + 1):
        by_enum = sum(
            1 for p in forests.enumerate_partial_decorated_forests(n) if not p.marked
        )
        assert forests.forest_count(n) == by_enum, f"phi({n}) mismatch vs enumeration"
    known_gcd = {1: 1, 2: 3, 3: 13, 4: 89}
    for v, value in known_gcd.items():
        assert forests.forest_gcd_sum(v) == value, f"Phi({v}) != {value}"
    return f"phi and Phi match enumeration for n <= {top}"


def _check_rooted_forest_tables(n_max: int, jobs: int) -> str:
    for n in range(0, max(n_max, 8) + 1):
        table = forests.rooted_forest_counts(n)
        for x in (-n, -2, -1, 0, 1, 3, Fraction(1, 2)):
            assert table.polynomial_value(x) == forests.abel_eval(n, -1, x), (
                f"table identity failed at n={n}, x={x}"
            )
    return f"sum_k t(n,k) x^k = x(x+n)^(n-1) for n <= {max(n_max, 8)}"


def _check_grouped_abel_identity(n_max: int, jobs: int) -> str:
    import math

    top = max(n_max, 10)
    for n in range(2, top + 1):
        lhs = sum(
            math.comb(n, N) * N ** (N - 1) * forests.abel_eval(n - N, -1, -n)
            for N in range(1, n + 1)
        )
        rhs = (-1) ** n * n * sum(
            (-1) ** N * math.comb(n, N) * N ** (n - 2) for N in range(1, n + 1)
        )
        assert lhs == rhs, f"grouped identity failed at n={n}"
        if n >= 3:
            assert rhs == 0, f"alternating sum not zero at n={n}"
    return f"grouped Abel identity holds for 2 <= n <= {top}"


def _check_determinant_lemma(n_max: int, jobs: int) -> str:
    top = min(n_max, 5)
    for n in range(2, top + 1):
        for d in forests.enumerate_decorated_forests(n):
            unit = abs(intlin.determinant(zonotope.forest_det_matrix(d, marks_as="unit")))
            radial = abs(intlin.determinant(zonotope.forest_det_matrix(d, marks_as="radial")))
            N = d.free_tree_size
            assert unit == N, f"unit det != N(F) at n={n}"
            assert radial == n ** d.mark_count * N, f"radial det != n^m N(F) at n={n}"
    return f"det lemma exhaustive for n <= {top}"


def _check_cyclo_volume(n_max: int, jobs: int) -> str:
    top = min(n_max, 7)
    for n in range(2, top + 1):
        brute = zonotope.volume_bruteforce(n, jobs=jobs)
        assert brute == zonotope.volume_by_forests(n), f"volume routes differ at n={n}"
        assert brute == zonotope.volume_closed_form(n), f"closed volume differs at n={n}"
    for n in range(2, 9):
        assert zonotope.volume_by_forests(n) == zonotope.volume_closed_form(n)
    assert zonotope.volume_by_forests(2).coeff == -2
    return f"brute/forest/closed volumes agree for n <= {top}; zero for 3 <= n <= 8"


def _check_cyclo_lattice(n_max: int, jobs: int) -> str:
    known = {2: 0, 3: 1, 4: 18}
    top = min(n_max, 6)
    for n in range(2, top + 1):
        closed = zonotope.lattice_count_closed_form(n)
        assert closed == zonotope.lattice_count_bruteforce(n, jobs=jobs), (
            f"lattice routes differ at n={n}"
        )
        if n in known:
            assert closed == known[n], f"Lambda({n}) != {known[n]}"
    return f"lattice count routes agree for n <= {top}; values 0, 1, 18 at n = 2, 3, 4"


def _check_sharp_routes(n_max: int, jobs: int) -> str:
    for m, expected in (
        (_WORKED_1, 1),
        (_WORKED_2, 4),
        (_WORKED_3, 2),
    ):
        assert intlin.semiopen_lattice_count(m) == expected
        assert oracle.semiopen_count_direct(m) == expected
    top = min(n_max, 4)
    for n in range(2, top + 1):
        for p in forests.enumerate_partial_decorated_forests(n):
            cols = zonotope.forest_columns(p)
            s = zonotope.sharp_of_partial_forest(p)
            assert s == intlin.semiopen_lattice_count(cols), f"sharp vs minors at n={n}"
            assert s == oracle.semiopen_count_direct(cols), f"sharp vs scan at n={n}"
    return f"sharp formula == minor gcd == point scan for n <= {top} and worked matrices"


def _check_permutohedron(n_max: int, jobs: int) -> str:
    top = min(n_max, 5)
    for n in range(1, top + 1):
        assert zonotope.permutohedron_lattice_count(n) == oracle.permutohedron_lattice_points_direct(n), (
            f"permutohedron point count differs at n={n}"
        )
    for n in range(2, min(n_max, 6) + 1):
        total = 0
        ones = list(zonotope.ones_vector(n))
        for tree in forests.enumerate_trees(n):
            cols = [list(zonotope.edge_vector(n, i, j)) for i, j in tree.edges]
            cols.append(ones)
            total += abs(intlin.determinant(intlin.IntMatrix.from_columns(cols, dim=n)))
        vol = zonotope.permutohedron_volume(n)
        assert vol.coeff == total, f"tree determinant sum differs at n={n}"
        assert vol.coeff == n ** (n - 1) and vol.coeff != n ** (n - 2), (
            f"volume coefficient must be n^(n-1), not n^(n-2), at n={n}"
        )
    assert oracle.hexagon_area_direct() == zonotope.permutohedron_volume(3)
    return f"point counts (n <= {top}) and tree-determinant volumes verified; hexagon = 9/sqrt(3)"


def _check_linkage_volumes(n_max: int, jobs: int) -> str:
    named = [
        (("1.2", 1, 1, "0.8", "2.2"), Fraction(28), 4),
        ((1, 1, 1, 1, 1), Fraction(-80), 4),
        ((1, 1, 1, 1, "3.5"), Fraction(64), 4),
    ]
    for lengths, coeff, radicand in named:
        spec = linkage.validate(lengths)
        vol = linkage.moduli_volume_theorem(spec)
        assert vol == zonotope.NormalizedVolume(coeff, radicand), f"volume of {lengths}"
        assert vol == linkage.moduli_volume_forests(spec), f"forest route for {lengths}"
    rng = random.Random(90210)
    checked = 0
    for bars in (4, 5, 6):
        for _ in range(3):
            spec = _random_linkage(rng, bars)
            assert linkage.moduli_volume_theorem(spec) == linkage.moduli_volume_forests(spec), (
                f"routes differ for {spec.lengths}"
            )
            checked += 1
    for m in (2, 3):
        cmp = linkage.equilateral_volume(m)
        assert cmp.forest == cmp.theorem, f"equilateral routes differ at m={m}"
        assert not cmp.agree, f"binomial display unexpectedly agrees at m={m}"
    return f"three named + {checked} random linkages agree across routes; equilateral display flagged"


def _check_linkage_topology(n_max: int, jobs: int) -> str:
    named = [
        (("1.2", 1, 1, "0.8", "2.2"), (1, 2, 1), (24, 42, 18), 0),
        ((1, 1, 1, 1, 1), (1, 8, 1), (24, 60, 30), -6),
        ((1, 1, 1, 1, "3.5"), (1, 0, 1), (24, 36, 14), 2),
    ]
    for lengths, b, f, chi in named:
        spec = linkage.validate(lengths)
        assert linkage.betti_vector(spec) == b, f"betti of {lengths}"
        assert linkage.f_vector(spec) == f, f"f-vector of {lengths}"
        assert linkage.euler_characteristic(spec) == chi, f"chi of {lengths}"
        counts = [0] * (spec.n - 1)
        for cell in linkage.enumerate_cells(spec):
            counts[spec.bar_count - cell.block_count] += 1
        assert tuple(counts) == f, f"cell enumeration vs f-vector for {lengths}"
    rng = random.Random(31337)
    for bars in (4, 5, 6):
        for _ in range(2):
            spec = _random_linkage(rng, bars)
            b = linkage.betti_vector(spec)
            assert b == b[::-1], f"betti not symmetric for {spec.lengths}"
            assert linkage.euler_characteristic(spec) == sum(
                (-1) ** k * x for k, x in enumerate(b)
            ), f"chi mismatch for {spec.lengths}"
    return "betti, f-vectors, Euler characteristics consistent on named and random linkages"


def _random_linkage(rng: random.Random, bars: int) -> linkage.LinkageSpec:
    while True:
        den = rng.choice([4, 5, 8, 10])
        nums = sorted(rng.randrange(1, 60) for _ in range(bars))
        try:
            return linkage.validate([Fraction(v, den) for v in nums])
        except linkage.LinkageError:
            continue


_WORKED_1 = intlin.IntMatrix.from_rows(
    [
        [1, 0, 0, -1],
        [-1, 1, 0, -1],
        [0, -1, 0, -1],
        [0, 0, 1, -1],
        [0, 0, -1, -1],
        [0, 0, 0, 5],
    ]
)
_WORKED_2 = intlin.IntMatrix.from_rows(
    [
        [1, 0, 0, 0, -1],
        [-1, 0, 0, 0, 5],
        [0, -1, 0, 0, -1],
        [0, 1, -1, 0, -1],
        [0, 0, 1, 1, -1],
        [0, 0, 0, -1, -1],
    ]
)
_WORKED_3 = intlin.IntMatrix.from_rows(
    [
        [1, 0, 0, 0, -1],
        [-1, 0, 0, 0, -1],
        [0, -1, 0, 0, -1],
        [0, 1, -1, 0, 5],
        [0, 0, 1, 1, -1],
        [0, 0, 0, -1, -1],
    ]
)

_CHECKS: list[tuple[str, Callable[[int, int], str]]] = [
    ("prufer-roundtrip-cayley", _check_prufer_roundtrip),
    ("forest-counts", _check_forest_counts),
    ("rooted-forest-tables", _check_rooted_forest_tables),
    ("grouped-abel-identity", _check_grouped_abel_identity),
    ("determinant-lemma", _check_determinant_lemma),
    ("cyclo-volume", _check_cyclo_volume),
    ("cyclo-lattice-count", _check_cyclo_lattice),
    ("sharp-routes", _check_sharp_routes),
    ("permutohedron", _check_permutohedron),
    ("linkage-volumes", _check_linkage_volumes),
    ("linkage-topology", _check_linkage_topology),
]


def check_names() -> list[str]:
    return [name for name, _ in _CHECKS]


def run_all(n_max: int = 5, *, jobs: int = 1) -> list[CheckResult]:
    """Run every cross-check up to n_max; individual failures are captured,
    not raised."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    results = []
    for name, func in _CHECKS:
        try:
            detail = func(n_max, jobs)
            results.append(CheckResult(name, True, detail))
        except Exception as exc:  # report, don't abort the sweep
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
