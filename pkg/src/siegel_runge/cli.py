"""JSON-in/JSON-out command-line interface.

One subcommand per capability: theta evaluation, fundamental-domain
reduction, the projective embedding, vanishing analysis, relation rank from
seeded samples, tube membership, Runge verdicts, the explicit bound cases
and Weil heights.  Verdicts live in the payload ("holds"), never in the
exit code: 0 means the run succeeded, 2 malformed input, 1 numerical
failure.  Output is byte-reproducible for identical arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import RunConfig
from .embedding import (
    in_tube,
    near_zero_coordinates,
    psi,
    relation_rank,
    relation_singular_values,
)
from .errors import InvalidInputError, SiegelRungeError
from .halfspace import reduce_to_fundamental_domain
from .heights import bound_case_a, bound_case_b, weil_height_gaussian, weil_height_rational
from .json_io import (
    dumps_canonical,
    incidence_from_json,
    projective_point_to_json,
    reduction_to_json,
    siegel_point_from_json,
    siegel_point_to_json,
)
from .runge import m_y_value, runge_condition, siegel_runge_condition
from .sampling import sample_reduced_points
from .theta import Characteristic, theta_constant

_TAU_HELP = "SiegelPoint JSON {\"tau1\":[re,im],\"tau2\":[re,im],\"tau4\":[re,im]}"


def _add_tau_arguments(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", help=_TAU_HELP)
    group.add_argument("--tau-file", help="path to a file holding the same JSON")


def _parse_tau(args):
    if args.tau_file is not None:
        with open(args.tau_file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.loads(args.tau)
    return siegel_point_from_json(data)


def _parse_bits(text: str) -> Characteristic:
    try:
        bits = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse characteristic {text!r}") from exc
    return Characteristic(bits)


def _parse_gaussian(text: str) -> tuple[int, int]:
    try:
        re_part, im_part = text.split(",")
        return int(re_part), int(im_part)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse Gaussian integer {text!r} (want re,im)") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegel-runge",
        description="theta constants, Siegel reduction, the P^9 embedding, "
        "heights and Runge-condition arithmetic",
    )
    parser.add_argument("--config", help="JSON file overriding the run configuration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="evaluate one theta constant")
    _add_tau_arguments(p)
    p.add_argument("--char", required=True, help="characteristic bits a1,a2,b1,b2 (1 means 1/2)")
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("reduce", help="reduce to the fundamental domain")
    _add_tau_arguments(p)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("embed", help="the ten theta fourth powers as a projective point")
    _add_tau_arguments(p)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("vanishing", help="indices of near-zero embedding coordinates")
    _add_tau_arguments(p)
    p.add_argument("--rel-tol", type=float, default=None)

    p = sub.add_parser("rank", help="rank of the span of seeded sample embeddings")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("tube", help="cusp-tube membership of the reduced representative")
    _add_tau_arguments(p)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("runge", help="the condition m_Y * s < r")
    p.add_argument("--n", type=int, help="even level for the closed-formula case")
    p.add_argument("--s", type=int, required=True, help="number of bad places")
    p.add_argument("--incidence-file", help="DivisorIncidence JSON instead of --n")

    p = sub.add_parser("bounds", help="explicit height-bound cases")
    p.add_argument("--case", choices=("a", "b"), required=True)
    p.add_argument("--sp", type=int, required=True, help="count of product-reduction places")
    p.add_argument("--field", default="rational",
                   help="'rational'/'Q' or 'imaginary_quadratic' (case a)")
    p.add_argument("--places", type=int, default=None, help="archimedean place count (case b)")
    p.add_argument("--t", type=float, default=None, help="tube parameter (case b)")

    p = sub.add_parser("height", help="Weil height of integer or Gaussian coordinates")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rational", type=int, nargs="+", metavar="INT")
    group.add_argument("--gaussian", nargs="+", metavar="RE,IM")

    return parser


def _run(args, config: RunConfig) -> dict:
    if args.command == "theta":
        tau = _parse_tau(args)
        m = _parse_bits(args.char)
        tv = theta_constant(m, tau, args.tol if args.tol is not None else config.tolerance)
        return {
            "char": list(m.bits),
            "value": [tv.value.real, tv.value.imag],
            "error_bound": tv.error_bound,
        }

    if args.command == "reduce":
        return reduction_to_json(reduce_to_fundamental_domain(_parse_tau(args), tol=args.tol))

    if args.command == "embed":
        return projective_point_to_json(psi(_parse_tau(args), tol=args.tol))

    if args.command == "vanishing":
        rel = args.rel_tol if args.rel_tol is not None else config.rel_tol_vanishing
        point = psi(_parse_tau(args))
        return {"indices": sorted(near_zero_coordinates(point, rel)), "rel_tol": rel}

    if args.command == "rank":
        seed = args.seed if args.seed is not None else config.seed
        points = [psi(t) for t in sample_reduced_points(args.samples, seed)]
        svals = relation_singular_values(points)
        return {
            "rank": relation_rank(points),
            "n_samples": args.samples,
            "seed": seed,
            "singular_values": [float(s) for s in svals],
        }

    if args.command == "tube":
        reduced = reduce_to_fundamental_domain(_parse_tau(args)).reduced
        return {
            "holds": in_tube(reduced, args.t),
            "t": args.t,
            "im_tau4": reduced.tau4.imag,
            "reduced": siegel_point_to_json(reduced),
        }

    if args.command == "runge":
        if (args.n is None) == (args.incidence_file is None):
            raise InvalidInputError("pass exactly one of --n or --incidence-file")
        if args.n is not None:
            return siegel_runge_condition(args.n, args.s).to_json()
        with open(args.incidence_file, "r", encoding="utf-8") as fh:
            inc = incidence_from_json(json.load(fh))
        return runge_condition(m_y_value(inc), args.s, inc.r).to_json()

    if args.command == "bounds":
        if args.case == "a":
            field = {"Q": "rational", "Qi": "imaginary_quadratic"}.get(args.field, args.field)
            return bound_case_a(args.sp, field).to_json()
        if args.places is None or args.t is None:
            raise InvalidInputError("case b needs --places and --t")
        return bound_case_b(args.sp, args.places, args.t).to_json()

    if args.command == "height":
        if args.rational is not None:
            return {"height": weil_height_rational(args.rational)}
        return {"height": weil_height_gaussian([_parse_gaussian(g) for g in args.gaussian])}

    raise InvalidInputError(f"unknown command {args.command!r}")  # pragma: no cover


def dispatch(argv=None) -> int:
    """Run one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        config = RunConfig.from_file(args.config) if args.config else RunConfig()
        result = _run(args, config)
    except (InvalidInputError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SiegelRungeError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    print(dumps_canonical(result))
    return 0


def main(argv=None) -> int:
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
