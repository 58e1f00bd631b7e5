"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 validation error, 3 failed
cross-check.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .blowup import (
    FMSpec, Geometry, fm_expected_dimension, fm_normalize, fm_summands,
    fm_t4_nodal, fm_wcn_n1_mixed,
)
from .crossing import (
    WcnValue, kodaira_series_q1, kodaira_series_q3, sw_from_winding, wcn_mixed, wcn_pure,
)
from .errors import CrossCheckError, ValidationError
from .index import family_index_oracle, index_character
from .manifold import ManifoldModel, OneCycle, SpincClass, expected_dimension, read_manifold
from .presets import preset
from .selftest import random_spinc, run_checks

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CROSSCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",")] if text else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def _model_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--preset", choices=("t4", "k3", "kodaira"))
    g.add_argument("--manifold", metavar="PATH")


def _geometry_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c0sq", type=int, default=0)
    p.add_argument("--c0k", type=int, default=0)
    p.add_argument("--c1sq", type=int, default=0)
    p.add_argument("--c2", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wallcross", description="Family Seiberg-Witten wall-crossing calculator")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="expected dimension of the parametrised moduli space")
    _model_flags(p)
    p.add_argument("--spinc", type=_ints, required=True)
    p.add_argument("--dim-b", type=int, help="base dimension (default b+ - 1)")

    p = sub.add_parser("wcn-pure", help="wall-crossing number of the pure invariant")
    _model_flags(p)
    p.add_argument("--spinc", type=_ints, required=True)

    p = sub.add_parser("wcn-mixed", help="wall-crossing number with H_1 insertions")
    _model_flags(p)
    p.add_argument("--spinc", type=_ints, required=True)
    p.add_argument("--zeta", type=_ints, action="append", default=[])

    p = sub.add_parser("winding", help="invariant in a winding chamber")
    _model_flags(p)
    p.add_argument("--spinc", type=_ints, required=True)
    p.add_argument("--zeta", type=_ints, action="append", default=[])
    p.add_argument("--chamber", type=int, required=True)

    p = sub.add_parser("series-kodaira-q1", help="Kodaira generating series, one insertion (CSV)")
    p.add_argument("--zeta", type=_ints, required=True)
    p.add_argument("--order", type=int, default=5)

    p = sub.add_parser("series-kodaira-q3", help="Kodaira generating series, three insertions (CSV)")
    p.add_argument("--zeta", type=_ints, action="append", required=True)
    p.add_argument("--order", type=int, default=5)

    p = sub.add_parser("fm-summands", help="summands of the blow-up index bundle (CSV)")
    p.add_argument("--m", type=_ints, required=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("fm-wcn", help="one-point blow-up wall-crossing number")
    p.add_argument("--m", type=_ints, required=True)
    p.add_argument("--n", type=int)
    _geometry_flags(p)
    p.add_argument("--delta0", type=_rational, help="critical number of L0 (default: from --preset/--spinc, else 1)")
    _model_flags(p, required=False)
    p.add_argument("--spinc", type=_ints)
    p.add_argument("--zeta", type=_ints, action="append", default=[])
    p.add_argument("--eta-degree", type=int, choices=(0, 2, 4), default=0)
    p.add_argument("--eta-pairing", type=_ints, help="eta.C0,eta.c1(M) for --eta-degree 2")

    p = sub.add_parser("fm-dim", help="expected dimension for the blown-up family")
    _model_flags(p)
    p.add_argument("--m", type=_ints, default=[])
    p.add_argument("--n", type=int)
    p.add_argument("--l0sq", type=int, help="L0^2 (default: computed from --spinc)")
    p.add_argument("--spinc", type=_ints)
    p.add_argument("--dim-b", type=int, help="extra base dimension (default b+ - 1)")

    p = sub.add_parser("fm-t4-nodal", help="nodal count on T^4: printed formula and composed value")
    p.add_argument("--c0sq", type=int, required=True)

    p = sub.add_parser("oracle-check", help="brute-force family index vs cup-product shortcut on T^4")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("selftest", help="run the built-in consistency checks")
    return parser


def _model(args) -> ManifoldModel:
    if args.preset:
        return preset(args.preset)
    return read_manifold(args.manifold)


def _multiplicities(args) -> List[int]:
    if args.n is not None and args.n != len(args.m):
        raise UsageError(f"--n {args.n} does not match {len(args.m)} multiplicities in --m")
    return args.m


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "dim":
        m = _model(args)
        dim_b = m.bplus - 1 if args.dim_b is None else args.dim_b
        print(expected_dimension(m, SpincClass(args.spinc), dim_b), file=out)
    elif cmd == "wcn-pure":
        print(wcn_pure(_model(args), SpincClass(args.spinc)), file=out)
    elif cmd == "wcn-mixed":
        print(wcn_mixed(_model(args), SpincClass(args.spinc), [OneCycle(z) for z in args.zeta]), file=out)
    elif cmd == "winding":
        w = wcn_mixed(_model(args), SpincClass(args.spinc), [OneCycle(z) for z in args.zeta])
        print(sw_from_winding(w, args.chamber), file=out)
    elif cmd == "series-kodaira-q1":
        out.write(kodaira_series_q1(OneCycle(args.zeta), (args.order,) * 4).to_csv())
    elif cmd == "series-kodaira-q3":
        if len(args.zeta) != 3:
            raise UsageError("series-kodaira-q3 needs exactly three --zeta")
        z1, z2, z3 = (OneCycle(z) for z in args.zeta)
        out.write(kodaira_series_q3(z1, z2, z3, (args.order,) * 4).to_csv())
    elif cmd == "fm-summands":
        spec = fm_normalize(FMSpec(_multiplicities(args)))
        print("point,sym_power,rank,twist", file=out)
        total = 0
        for s in fm_summands(spec):
            total += s.rank
            print(f"{s.point_index},{s.sym_power},{s.rank},{s.twist}", file=out)
        print(f"# total rank {total}", file=out)
    elif cmd == "fm-wcn":
        ms = _multiplicities(args)
        if len(ms) != 1:
            raise ValidationError("fm-wcn evaluates one blow-up point only (n = 1)")
        if args.delta0 is not None:
            delta0 = WcnValue(args.delta0)
        elif args.preset or args.manifold:
            if args.spinc is None:
                raise UsageError("--spinc is needed to compute delta0 from a manifold")
            delta0 = wcn_mixed(_model(args), SpincClass(args.spinc), [OneCycle(z) for z in args.zeta])
        else:
            delta0 = WcnValue(1)
        geometry = Geometry(args.c0sq, args.c0k, args.c1sq, args.c2)
        pairing = tuple(args.eta_pairing) if args.eta_pairing else None
        if pairing is not None and len(pairing) != 2:
            raise UsageError("--eta-pairing takes two integers")
        print(fm_wcn_n1_mixed(FMSpec(ms, geometry), delta0, args.eta_degree, pairing), file=out)
    elif cmd == "fm-dim":
        m = _model(args)
        ms = _multiplicities(args)
        if args.l0sq is not None:
            l0sq = args.l0sq
        elif args.spinc is not None:
            l0sq = m.square(SpincClass(args.spinc))
        else:
            raise UsageError("fm-dim needs --l0sq or --spinc")
        spec = FMSpec(ms) if ms else None
        print(fm_expected_dimension(m, l0sq, spec, args.dim_b), file=out)
    elif cmd == "fm-t4-nodal":
        r = fm_t4_nodal(args.c0sq)
        print(f"literal,{r['literal']}", file=out)
        print(f"composed,{r['composed']}", file=out)
        if r["literal"] != r["composed"]:
            print("# printed formula and composed value differ", file=out)
    elif cmd == "oracle-check":
        rng = random.Random(args.seed)
        m = preset("t4")
        for trial in range(args.trials):
            L = random_spinc(rng, m.h2_rank)
            if family_index_oracle(L, m) != index_character(m, L):
                raise CrossCheckError(f"oracle mismatch for Spin^c class {L.components}")
        print(f"ok {args.trials}", file=out)
    elif cmd == "selftest":
        failed = 0
        for name, ok, msg in run_checks():
            print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {msg}" if msg else ""), file=out)
            failed += not ok
        return EXIT_CROSSCHECK if failed else EXIT_OK
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=err)
        return EXIT_CROSSCHECK
    except (ValidationError, OSError) as exc:
        print(f"invalid input: {exc}", file=err)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE


def run(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
