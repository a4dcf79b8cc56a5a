"""Command-line interface.

Subcommand groups: `cyclo` (cyclopermutohedron volume and lattice points),
`perm` (permutohedron), `linkage` (configuration-space invariants),
`forests` (counting utilities), and `verify` (cross-check suite).  Every
numeric result is exact: a rational coefficient plus an integer radicand
encoding coeff / sqrt(radicand); `approx` is a 12-significant-digit decimal
rendering.  Exit codes: 0 success, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import forests as forests_mod
from . import linkage as linkage_mod
from . import verification, zonotope


@dataclass(frozen=True)
class ResultRecord:
    quantity: str
    coeff: Fraction
    radicand: int
    method: str
    n: int

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "coeff": str(self.coeff),
            "radicand": self.radicand,
            "approx": approx_string(self.coeff, self.radicand),
            "method": self.method,
            "n": self.n,
        }

    def to_text(self) -> str:
        d = self.to_dict()
        return (
            f"{d['quantity']} n={d['n']} method={d['method']} "
            f"coeff={d['coeff']} radicand={d['radicand']} approx={d['approx']}"
        )


def approx_string(coeff: Fraction, radicand: int) -> str:
    """Decimal rendering of coeff / sqrt(radicand) to 12 significant digits,
    without trailing zeros (integers print as integers)."""
    if coeff == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = 30
        val = Decimal(coeff.numerator) / Decimal(coeff.denominator) / Decimal(radicand).sqrt()
    with localcontext() as ctx:
        ctx.prec = 12
        val = (+val).normalize()
    if abs(val.adjusted()) < 16:
        return format(val, "f")
    return format(val, "e")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_lengths(text: str) -> list[Fraction]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty length list")
    return [parse_rational(p) for p in parts]


def _volume_record(quantity: str, vol: zonotope.NormalizedVolume, method: str, n: int) -> ResultRecord:
    return ResultRecord(quantity, vol.coeff, vol.radicand, method, n)


def _int_record(quantity: str, value: int | Fraction, method: str, n: int) -> ResultRecord:
    return ResultRecord(quantity, Fraction(value), 1, method, n)


def _run_cyclo(args) -> list[ResultRecord]:
    n = args.n
    if args.sub == "volume":
        method = args.method or "forests"
        if method == "brute":
            vol = zonotope.volume_bruteforce(n, jobs=args.jobs)
        elif method == "forests":
            vol = zonotope.volume_by_forests(n)
        else:
            vol = zonotope.volume_closed_form(n)
        return [_volume_record("cyclo.volume", vol, method, n)]
    method = args.method or "closed"
    if method == "brute":
        value = zonotope.lattice_count_bruteforce(n, jobs=args.jobs)
    else:
        value = zonotope.lattice_count_closed_form(n)
    return [_int_record("cyclo.points", value, method, n)]


def _run_perm(args) -> list[ResultRecord]:
    n = args.n
    if args.sub == "volume":
        return [_volume_record("perm.volume", zonotope.permutohedron_volume(n), "closed", n)]
    return [_int_record("perm.points", zonotope.permutohedron_lattice_count(n), "closed", n)]


def _run_linkage(args) -> list[ResultRecord]:
    spec = linkage_mod.validate(parse_lengths(args.lengths))
    n = spec.n
    if args.sub == "volume":
        method = args.method or "theorem"
        if method == "forests":
            vol = linkage_mod.moduli_volume_forests(spec)
        else:
            vol = linkage_mod.moduli_volume_theorem(spec)
        return [_volume_record("linkage.volume", vol, method, n)]
    if args.sub == "betti":
        return [
            _int_record(f"linkage.betti[{k}]", b, "a-profile", n)
            for k, b in enumerate(linkage_mod.betti_vector(spec))
        ]
    if args.sub == "aprofile":
        return [
            _int_record(f"linkage.a[{k}]", a, "short-sets", n)
            for k, a in enumerate(linkage_mod.a_profile(spec).a)
        ]
    records = [
        _int_record(f"linkage.f[{k}]", f, "cell-complex", n)
        for k, f in enumerate(linkage_mod.f_vector(spec))
    ]
    records.append(
        _int_record("linkage.euler", linkage_mod.euler_characteristic(spec), "cell-complex", n)
    )
    return records


def _run_forests(args) -> list[ResultRecord]:
    n = args.n
    if args.sub == "phi":
        return [_int_record("forests.phi", forests_mod.forest_count(n), "partition-sum", n)]
    if args.sub == "Phi":
        return [_int_record("forests.Phi", forests_mod.forest_gcd_sum(n), "partition-sum", n)]
    value = forests_mod.abel_eval(n, parse_rational(args.a), parse_rational(args.x))
    return [_int_record("forests.abel", value, "closed", n)]


def _emit(records: list[ResultRecord], fmt: str) -> None:
    if fmt == "json":
        payload = [r.to_dict() for r in records]
        print(json.dumps(payload[0] if len(payload) == 1 else payload))
    else:
        for r in records:
            print(r.to_text())


def _run_verify(args) -> int:
    results = verification.run_all(args.n_max, jobs=args.jobs)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        print(json.dumps([{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        if failed:
            print(f"{len(failed)} of {len(results)} checks failed")
        else:
            print(f"all {len(results)} checks passed")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloperm",
        description="Exact volumes, lattice counts, and linkage invariants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="parallelism cap for brute-force scans")
    groups = parser.add_subparsers(dest="group", required=True)

    cyclo = groups.add_parser("cyclo", help="cyclopermutohedron").add_subparsers(
        dest="sub", required=True
    )
    cv = cyclo.add_parser("volume", parents=[common], help="signed volume")
    cv.add_argument("--n", type=int, required=True)
    cv.add_argument(
        "--method",
        choices=("brute", "forests", "closed"),
        help="brute: alternating determinant sum; forests: grouped forest sum (default); "
        "closed: 0 for n >= 3, -2/sqrt(2) at n = 2",
    )
    cp = cyclo.add_parser("points", parents=[common], help="signed lattice-point count")
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--method", choices=("brute", "closed"))

    perm = groups.add_parser("perm", help="permutohedron").add_subparsers(dest="sub", required=True)
    for sub in ("volume", "points"):
        p = perm.add_parser(sub, parents=[common])
        p.add_argument("--n", type=int, required=True)

    link = groups.add_parser("linkage", help="polygonal linkage configuration space").add_subparsers(
        dest="sub", required=True
    )
    lv = link.add_parser("volume", parents=[common])
    lv.add_argument("--lengths", required=True, help="comma-separated bar lengths, longest last")
    lv.add_argument("--method", choices=("theorem", "forests"))
    for sub in ("betti", "cells", "aprofile"):
        lp = link.add_parser(sub, parents=[common])
        lp.add_argument("--lengths", required=True, help="comma-separated bar lengths, longest last")

    fo = groups.add_parser("forests", help="forest counting utilities").add_subparsers(
        dest="sub", required=True
    )
    for sub in ("phi", "Phi"):
        fp = fo.add_parser(sub, parents=[common])
        fp.add_argument("--n", type=int, required=True)
    fa = fo.add_parser("abel", parents=[common])
    fa.add_argument("--n", type=int, required=True)
    fa.add_argument("--a", required=True, help="rational parameter a")
    fa.add_argument("--x", required=True, help="rational evaluation point x")

    ver = groups.add_parser("verify", parents=[common], help="run the cross-check suite")
    ver.add_argument("--n-max", type=int, default=5, dest="n_max")
    return parser


_RUNNERS = {
    "cyclo": _run_cyclo,
    "perm": _run_perm,
    "linkage": _run_linkage,
    "forests": _run_forests,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.group == "verify":
            return _run_verify(args)
        records = _RUNNERS[args.group](args)
    except ValueError as exc:  # includes LinkageError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(records, args.format)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
