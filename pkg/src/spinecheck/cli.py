"""Command-line front end.

Subcommands:

    profile lens|qm|surgery|mp   compute a d-invariant profile
    obstruct                     run the spine obstruction on a profile file
    scan-mp                      verdict table over a parameter range
    lattice                      definite-lattice oracle values
    pi1                          fiber normal-generation by coset enumeration

Reports are deterministic (no timestamps, fixed ordering) so identical
inputs produce byte-identical output.  Exit codes: 0 success, 2 invalid
input, 3 an indeterminate/overflow outcome was produced.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .dcore import DProfile, ProfileError, RawProfile, format_profile, parse_profile
from .families import MpDescriptor, QmDescriptor, lens_n1_profile, mp_profile, qm_profile
from .knots import MonotonicityViolation, v_from_values
from .lattice import (
    DEFAULT_BUDGET,
    IntLattice,
    SearchOverflow,
    chain_lattice,
    char_cosets,
    d_lower_bound,
)
from .obstruct import Overall, verdict
from .pi1 import (
    DEFAULT_COSET_LIMIT,
    brieskorn_presentation,
    fiber_word,
    normal_generation_check,
    seifert_data,
    todd_coxeter,
)
from .surgery import niwu_profile

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INDETERMINATE = 3


class CliError(Exception):
    """Invalid input surfaced to the user with exit code 2."""


def decimal_str(q: Fraction, digits: int) -> str:
    """Render q with the given number of decimal digits, exactly (integer
    arithmetic, round half away from zero).  Display only."""
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 10**digits
    n = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    text = str(n).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _fmt_value(q: Fraction, decimal) -> str:
    if decimal is None:
        return str(q)
    return f"{q} ({decimal_str(q, decimal)})"


def _echo(out, args_echo):
    out.append(f"spinecheck {__version__}")
    out.append("command: " + args_echo)


def _parse_int_list(text: str, what: str):
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"cannot parse {what}: {text!r}")


# ---------------------------------------------------------------------------
# profile
# ---------------------------------------------------------------------------


def _print_dprofile(out, profile: DProfile, decimal):
    out.append(f"order: {profile.n}")
    out.append("  i  d")
    for i, v in enumerate(profile.values):
        out.append(f"  {i}  {_fmt_value(v, decimal)}")


def _print_raw(out, raw: RawProfile, decimal):
    out.append(f"order: {raw.order}")
    out.append("  id  d  conj")
    for k, v in raw.entries:
        out.append(f"  {k}  {_fmt_value(v, decimal)}  {raw.conj[k]}")


def cmd_profile(args, out) -> int:
    if args.family == "lens":
        profile = lens_n1_profile(_require(args, "n"))
    elif args.family == "qm":
        m = _require(args, "m")
        profile = qm_profile(m)
        out_extra = QmDescriptor(m).h1_type
    elif args.family == "surgery":
        try:
            v = v_from_values(_parse_int_list(_require(args, "v"), "--v"))
        except MonotonicityViolation as exc:
            raise CliError(str(exc))
        profile = niwu_profile(v, _require(args, "n"))
    elif args.family == "mp":
        try:
            profile = mp_profile(MpDescriptor(p=_require(args, "p"), d_yp=args.dyp))
        except ValueError as exc:
            raise CliError(str(exc))
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown family {args.family}")

    if isinstance(profile, DProfile):
        _print_dprofile(out, profile, args.decimal)
    else:
        out.append(f"order: {profile.order}")
        out.append(f"h1: {out_extra}")
        out.append("  id  d  conj")
        for k, v in profile.entries:
            out.append(f"  {k}  {_fmt_value(v, args.decimal)}  {profile.conj[k]}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(format_profile(profile))
        out.append(f"wrote {args.output}")
    return EXIT_OK


def _require(args, name):
    value = getattr(args, name)
    if value is None:
        raise CliError(f"--{name} is required for this family")
    return value


# ---------------------------------------------------------------------------
# obstruct
# ---------------------------------------------------------------------------


def _verdict_json(result) -> dict:
    branches = []
    for branch in result.branches:
        branches.append(
            {
                "sign": branch.sign.value,
                "congruence_excluded": branch.congruence_excluded,
                "labelings": [
                    {
                        "values": [str(v) for v in item.profile.values],
                        "result": "Pass" if item.result.passed else "Fail",
                        "violations": list(item.result.violations),
                    }
                    for item in branch.labelings
                ],
            }
        )
    return {
        "schema": 1,
        "n": result.order,
        "branches": branches,
        "overall": result.overall.value,
    }


def cmd_obstruct(args, out) -> int:
    try:
        with open(args.profile) as fh:
            profile, _ = parse_profile(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.profile}: {exc}")
    except ProfileError as exc:
        raise CliError(f"{args.profile}: {exc}")
    raw = profile.to_raw() if isinstance(profile, DProfile) else profile
    result = verdict(raw)
    if args.json:
        out.append(json.dumps(_verdict_json(result), indent=2, sort_keys=True))
        return EXIT_OK
    out.append(f"order: {result.order}")
    for branch in result.branches:
        out.append(f"branch {branch.sign.value}:")
        if branch.congruence_excluded:
            out.append("  congruence-excluded")
        for item in branch.labelings:
            values = ", ".join(str(v) for v in item.profile.values)
            if item.result.passed:
                out.append(f"  ({values}): PASS")
            else:
                where = ", ".join(str(i) for i in item.result.violations)
                out.append(f"  ({values}): FAIL at i = {where}")
    out.append(f"overall: {result.overall.value}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan-mp
# ---------------------------------------------------------------------------


def cmd_scan_mp(args, out) -> int:
    if args.pmin > args.pmax:
        raise CliError(f"empty range: pmin {args.pmin} > pmax {args.pmax}")
    dyps = _parse_int_list(args.dyp, "--dyp")
    if any(d % 2 for d in dyps):
        raise CliError(f"--dyp values must be even, got {args.dyp}")
    out.append("  p  dYp  verdict")
    surviving = []
    for p in range(args.pmin, args.pmax + 1):
        for d in dyps:
            res = verdict(mp_profile(MpDescriptor(p=p, d_yp=d)).to_raw())
            out.append(f"  {p}  {d}  {res.overall.value}")
            if res.overall is Overall.NOT_OBSTRUCTED and p not in surviving:
                surviving.append(p)
    out.append(
        "non-obstructed p: "
        + (", ".join(str(p) for p in sorted(surviving)) if surviving else "none")
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------


def _read_gram(path) -> IntLattice:
    try:
        with open(path) as fh:
            tokens = []
            for lineno, line in enumerate(fh, start=1):
                body = line.split("#", 1)[0].split()
                if body:
                    tokens.append((lineno, body))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    if not tokens:
        raise CliError(f"{path}: empty Gram file")
    try:
        rank = int(tokens[0][1][0])
        rows = [[int(x) for x in body] for _, body in tokens[1:]]
    except ValueError:
        raise CliError(f"{path}: Gram file must contain integers")
    if len(rows) != rank or any(len(r) != rank for r in rows):
        raise CliError(f"{path}: expected {rank} rows of {rank} integers")
    try:
        return IntLattice(tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}")


def cmd_lattice(args, out) -> int:
    if (args.chain is None) == (args.gram is None):
        raise CliError("exactly one of --chain or --gram is required")
    if args.chain is not None:
        if args.chain < 2:
            raise CliError(f"--chain needs n >= 2, got {args.chain}")
        lattice_ = chain_lattice(args.chain)
        sharp = True
    else:
        lattice_ = _read_gram(args.gram)
        sharp = False
    out.append(f"rank: {lattice_.rank}")
    if sharp:
        out.append("values: d-invariants of the boundary lens space (sharp)")
    else:
        out.append("values: lower bounds only (sharpness not certified)")
    out.append("  coset  representative  value")
    status = EXIT_OK
    for idx, coset in enumerate(char_cosets(lattice_)):
        rep = "(" + ", ".join(str(c) for c in coset.representative) + ")"
        try:
            value = str(
                d_lower_bound(lattice_, coset, budget=args.budget)
            )
        except SearchOverflow as exc:
            value = f"overflow({exc.budget})"
            status = EXIT_INDETERMINATE
        out.append(f"  {idx}  {rep}  {value}")
    return status


# ---------------------------------------------------------------------------
# pi1
# ---------------------------------------------------------------------------


def cmd_pi1(args, out) -> int:
    triple = _parse_int_list(args.triple, "--triple")
    if len(triple) != 3:
        raise CliError(f"--triple needs three integers, got {args.triple!r}")
    try:
        data = seifert_data(*triple)
    except ValueError as exc:
        raise CliError(str(exc))
    pres = brieskorn_presentation(data)
    word = fiber_word(data, args.leg)
    result = todd_coxeter(pres.adjoin(word), (), args.limit)
    doc = {
        "schema": 1,
        "triple": triple,
        "leg": args.leg,
        "seifert": {"e": data.e, "legs": [list(leg) for leg in data.legs]},
        "fiber_word": pres.word_str(word),
        "outcome": "enumerated" if result.complete else "overflow",
        "order": result.cosets if result.complete else None,
        "normally_generates": result.cosets == 1 if result.complete else None,
    }
    out.append(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK if result.complete else EXIT_INDETERMINATE


# ---------------------------------------------------------------------------
# parser / main
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinecheck",
        description="exact d-invariant profiles and PL-sphere/spine obstructions",
    )
    parser.add_argument("--config", help="JSON file with default flag values")
    sub = parser.add_subparsers(dest="command", required=True)

    p_prof = sub.add_parser("profile", help="compute a d-invariant profile")
    p_prof.add_argument("family", choices=["lens", "qm", "surgery", "mp"])
    p_prof.add_argument("--n", type=int, help="order (lens) / coefficient (surgery)")
    p_prof.add_argument("--m", type=int, help="Euler number (qm)")
    p_prof.add_argument("--v", help="comma-separated V-sequence (surgery)")
    p_prof.add_argument("--p", type=int, help="parameter p (mp)")
    p_prof.add_argument("--dyp", type=int, default=0, help="even stand-in for d(Y_p) (mp)")
    p_prof.add_argument("-o", "--output", help="also write the profile file here")
    p_prof.add_argument("--decimal", type=int, help="append k-digit decimal rendering")
    p_prof.set_defaults(func=cmd_profile)

    p_obs = sub.add_parser("obstruct", help="spine obstruction verdict")
    p_obs.add_argument("--profile", required=True, help="profile file to test")
    p_obs.add_argument("--json", action="store_true", help="machine-readable output")
    p_obs.set_defaults(func=cmd_obstruct)

    p_scan = sub.add_parser("scan-mp", help="verdict table for the built-in family")
    p_scan.add_argument("--pmin", type=int, required=True)
    p_scan.add_argument("--pmax", type=int, required=True)
    p_scan.add_argument("--dyp", default="0", help="comma-separated even integers")
    p_scan.set_defaults(func=cmd_scan_mp)

    p_lat = sub.add_parser("lattice", help="definite-lattice oracle")
    p_lat.add_argument("--chain", type=int, help="chain of -2 framings for -L(n,1)")
    p_lat.add_argument("--gram", help="file: rank, then rank rows of integers")
    p_lat.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_lat.set_defaults(func=cmd_lattice)

    p_pi1 = sub.add_parser("pi1", help="fiber normal-generation check")
    p_pi1.add_argument("--triple", required=True, help="p,q,r pairwise coprime")
    p_pi1.add_argument("--leg", type=int, choices=[1, 2, 3], required=True)
    p_pi1.add_argument("--limit", type=int, default=DEFAULT_COSET_LIMIT)
    p_pi1.set_defaults(func=cmd_pi1)

    return parser


def _apply_config(parser, argv):
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    try:
        path = argv[idx + 1]
    except IndexError:
        raise CliError("--config needs a file argument")
    try:
        with open(path) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot load config {path}: {exc}")
    if not isinstance(config, dict):
        raise CliError(f"config {path} must be a JSON object")
    for action in parser._subparsers._group_actions:
        for sub_parser in action.choices.values():
            known = {a.dest for a in sub_parser._actions}
            sub_parser.set_defaults(
                **{k: v for k, v in config.items() if k in known}
            )
    return argv[:idx] + argv[idx + 2 :]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        out = []
        _echo(out, " ".join(argv))
        status = args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ProfileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print("\n".join(out))
    return status


if __name__ == "__main__":
    sys.exit(main())
