"""Command-line front end: read scheme files, run computations and
verifications, print golden-format rows and reports.

Exit status: 0 on success / verified claims, 1 on a failed verification
(witness printed), 2 on usage or input errors (one-line diagnostic).
"""

from __future__ import annotations

import argparse
import json
import sys

from .hilbert import ideal_hilbert_function
from .kaehler import kaehler_hilbert_function
from .scheme import fat_scheme_ideal, read_scheme, separators
from . import verify as V


class CliError(Exception):
    pass


def _load_scheme(path):
    if path is None:
        raise CliError("a scheme file is required (--scheme FILE)")
    try:
        return read_scheme(path)
    except OSError as exc:
        raise CliError(f"cannot read scheme file: {exc}") from exc
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"malformed scheme file: {exc}") from exc


def _emit(args, text_lines, payload):
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_hf(args):
    scheme = _load_scheme(args.scheme)
    hf = ideal_hilbert_function(fat_scheme_ideal(scheme))
    row = hf.format_row()
    deg = scheme.degree()
    ri = hf.regularity_index
    _emit(args, [row, f"deg={deg} ri={ri}"],
          {"row": row, "values": hf.values_upto(ri + 1),
           "deg": deg, "ri": ri})
    return 0


def cmd_kaehler(args):
    scheme = _load_scheme(args.scheme)
    k = args.k
    if k is None:
        raise CliError("kaehler requires -k K")
    if not 1 <= k <= scheme.n + 1:
        raise CliError(f"k must be between 1 and {scheme.n + 1}")
    hf = kaehler_hilbert_function(scheme, k)
    row = hf.format_row()
    hp = hf.hilbert_polynomial
    ri = hf.regularity_index
    _emit(args, [row, f"HP={hp} ri={ri}"],
          {"row": row, "values": hf.values_upto(ri + 1),
           "k": k, "HP": hp, "ri": ri})
    return 0


_CLAIM_ALIASES = {
    "theorem": "thm-3.7",
    "thm-3.7": "thm-3.7",
    "colon": "prop-2.6a",
    "prop-2.6a": "prop-2.6a",
    "product-intersection": "prop-2.6b",
    "product": "prop-2.6b",
    "prop-2.6b": "prop-2.6b",
    "hp-bounds": "prop-3.1",
    "prop-3.1": "prop-3.1",
    "derivative-inclusion": "lem-3.3",
    "lem-3.3": "lem-3.3",
    "complex-exactness": "prop-4.3",
    "prop-4.3": "prop-4.3",
    "p2-formulas": "prop-4.1",
    "prop-4.1": "prop-4.1",
    "theorem-sweep": "thm-3.7-sweep",
    "thm-3.7-sweep": "thm-3.7-sweep",
}


def cmd_verify(args):
    claim = args.claim or args.claim_opt
    if claim is None:
        raise CliError("verify requires a claim "
                       f"(one of: {', '.join(sorted(set(_CLAIM_ALIASES)))})")
    claim_id = _CLAIM_ALIASES.get(claim)
    if claim_id is None:
        raise CliError(f"unknown claim {claim!r}")
    if claim_id == "thm-3.7-sweep":
        reports = V.theorem_sweep(count=args.count, seed=args.seed)
        _emit(args, [r.line() for r in reports],
              [r.to_json() for r in reports])
        return 0 if all(r.ok for r in reports) else 1
    scheme = _load_scheme(args.scheme)
    reports = []
    if claim_id == "thm-3.7":
        reports.append(V.verify_main_theorem(scheme))
    elif claim_id == "prop-2.6a":
        reports.append(V.verify_colon_identity(scheme))
    elif claim_id == "prop-2.6b":
        reports.append(V.verify_product_intersection(scheme))
    elif claim_id == "prop-3.1":
        ks = [args.k] if args.k is not None else list(range(1, scheme.n + 2))
        for k in ks:
            if not 1 <= k <= scheme.n + 1:
                raise CliError(f"k must be between 1 and {scheme.n + 1}")
            reports.append(V.verify_hp_bounds(scheme, k))
    elif claim_id == "lem-3.3":
        slim = scheme.slimming()
        if slim.size == 0:
            raise CliError("derivative-inclusion needs a scheme whose "
                           "slimming is nonempty")
        reports.append(V.verify_derivative_inclusion(
            scheme.support(), slim.support(), 1, 1, window=args.window))
    elif claim_id == "prop-4.3":
        if scheme.n != 2:
            raise CliError("complex-exactness requires a scheme in P^2")
        reports.append(V.verify_complex_exactness(scheme))
    elif claim_id == "prop-4.1":
        if scheme.n != 2:
            raise CliError("p2-formulas requires a scheme in P^2")
        reports.append(V.verify_p2_formulas(scheme))
    _emit(args, [r.line() for r in reports],
          [r.to_json() for r in reports])
    return 0 if all(r.ok for r in reports) else 1


def cmd_example(args):
    if args.name is None:
        names = V.example_names()
        _emit(args, names, {"examples": names})
        return 0
    if args.name not in V.example_names():
        raise CliError(f"unknown example {args.name!r}")
    result = V.paper_example(args.name)
    _emit(args, [result.text()], result.to_json())
    return 0 if all(r.ok for r in result.reports) else 1


def cmd_separators(args):
    scheme = _load_scheme(args.scheme)
    if args.point is None:
        raise CliError("separators requires --point J (1-based)")
    if not 1 <= args.point <= scheme.size:
        raise CliError(f"point index must be between 1 and {scheme.size}")
    seps = separators(scheme, args.point)
    lines = [f"count={len(seps)}"]
    lines += [f"separator {i} deg={f.degree()} {f}"
              for i, f in enumerate(seps, 1)]
    _emit(args, lines,
          {"count": len(seps),
           "separators": [{"deg": f.degree(), "poly": str(f)}
                          for f in seps]})
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Hilbert data of fat point schemes and their Kaehler "
                    "differential modules (exact arithmetic)")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, scheme=True):
        if scheme:
            p.add_argument("--scheme", help="scheme file")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")

    p_hf = sub.add_parser("hf", help="Hilbert function of the scheme")
    common(p_hf)
    p_hf.set_defaults(func=cmd_hf)

    p_k = sub.add_parser("kaehler", help="Hilbert data of the k-form module")
    common(p_k)
    p_k.add_argument("-k", type=int, default=None)
    p_k.set_defaults(func=cmd_kaehler)

    p_v = sub.add_parser("verify", help="check a claim on the scheme")
    p_v.add_argument("claim", nargs="?", default=None)
    p_v.add_argument("--claim", dest="claim_opt", default=None)
    common(p_v)
    p_v.add_argument("-k", type=int, default=None)
    p_v.add_argument("--window", type=int, default=None)
    p_v.add_argument("--seed", type=int, default=V.DEFAULT_SEED)
    p_v.add_argument("--count", type=int, default=50,
                     help="scheme count for theorem-sweep")
    p_v.set_defaults(func=cmd_verify)

    p_e = sub.add_parser("example", help="bundled example tables")
    p_e.add_argument("name", nargs="?", default=None)
    common(p_e, scheme=False)
    p_e.set_defaults(func=cmd_example)

    p_s = sub.add_parser("separators", help="minimal separator set")
    common(p_s)
    p_s.add_argument("--point", type=int, default=None,
                     help="1-based index of the point to slim")
    p_s.set_defaults(func=cmd_separators)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
