"""Command-line surface with stable machine-readable output.

Exit codes: 0 success, 1 internal check failed, 2 bad input, 3 resource
budget exceeded.  Rationals are serialized as "num/den" strings; floats
appear only in Monte Carlo estimate columns.  Defaults can be overridden by
SUPERWALK_* environment variables.  Output is written atomically when
--output is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import __version__
from .characters import (
    ProbVector,
    schur_by_tableaux,
    schur_weyl_empty,
    schur_weyl_hook,
    schur_weyl_strict,
)
from .errors import (
    BudgetExceededError,
    InvalidInputError,
    SamplingFailureError,
    SuperwalkError,
)
from .insertion import pitman, rsk
from .kinds import (
    EMPTY,
    HOOK,
    STRICT,
    AlgebraKind,
    format_rational,
    parse_shape,
    parse_word,
    shape_to_json,
    word_to_json,
)
from .markov import stay_probability, stay_probability_truncated
from .multiplicities import decompose_product, lr_count
from .simulate import (
    RngStream,
    asympt_multiplicity_experiment,
    estimate_conditioned_acceptance,
    estimate_letter_frequencies,
    estimate_shape_law,
    quotient_llt_experiment,
)
from .suites import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def _env_default(name: str, fallback):
    value = os.environ.get(f"SUPERWALK_{name}")
    if value is None:
        return fallback
    return type(fallback)(value) if fallback is not None else value


def _add_common(parser: argparse.ArgumentParser, kinded: bool = True):
    if kinded:
        parser.add_argument("--kind", choices=(EMPTY, HOOK, STRICT), required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--m", type=int, default=0, help="barred rank (hook kind only)")
    parser.add_argument("--budget", type=int, default=_env_default("BUDGET", 8))
    parser.add_argument("--output", default=_env_default("OUTPUT", None))
    parser.add_argument(
        "--format",
        choices=("json", "csv"),
        default=_env_default("FORMAT", None),
        help="output format; each command has one native format",
    )


def _check_format(args, native: str):
    if args.format is not None and args.format != native:
        raise InvalidInputError(f"this command emits {native} output only")


def _kind_from(args) -> AlgebraKind:
    if args.kind == HOOK:
        if not args.m:
            raise InvalidInputError("--kind hook requires --m")
        return AlgebraKind.hook(args.m, args.n)
    if args.m:
        raise InvalidInputError("--m is meaningful only for --kind hook")
    return AlgebraKind(args.kind, args.n)


def _prob_from(kind: AlgebraKind, text: str) -> ProbVector:
    return ProbVector.parse(kind, text)


def _emit(args, text: str):
    if args.output:
        directory = os.path.dirname(os.path.abspath(args.output)) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".superwalk-")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp, args.output)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict):
    payload = {"version": __version__, **payload}
    _emit(args, json.dumps(payload, indent=2, sort_keys=False) + "\n")


def _csv_text(header: list[str], rows: list[list], comments: list[str] = ()) -> str:
    buffer = io.StringIO()
    for comment in (f"# superwalk {__version__}", *comments):
        buffer.write(comment + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_rsk(args) -> int:
    _check_format(args, "json")
    kind = _kind_from(args)
    word = parse_word(kind, args.word)
    pair = rsk(kind, word)
    _emit_json(
        args,
        {
            "kind": kind.kind,
            "n": kind.n,
            "m": kind.m,
            "word": word_to_json(word),
            "p_tableau": pair.p.to_json(),
            "q_tableau": pair.q.to_json(),
        },
    )
    return EXIT_OK


def cmd_pitman(args) -> int:
    _check_format(args, "json")
    kind = _kind_from(args)
    word = parse_word(kind, args.word)
    chain = pitman(kind, word)
    lines = [
        json.dumps({"step": i + 1, "shape": shape_to_json(s)}) for i, s in enumerate(chain)
    ]
    _emit(args, "".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_char(args) -> int:
    _check_format(args, "json")
    kind = _kind_from(args)
    shape = parse_shape(kind, args.shape)
    p = _prob_from(kind, args.p)
    values = {}
    if args.route in ("tableaux", "both"):
        values["tableaux"] = schur_by_tableaux(kind, shape, p, budget=args.budget)
    if args.route in ("weyl", "both"):
        if kind.kind == EMPTY:
            values["weyl"] = schur_weyl_empty(kind, shape, p)
        elif kind.kind == HOOK:
            values["weyl"] = schur_weyl_hook(kind, shape, p)
        else:
            values["weyl"] = schur_weyl_strict(kind, shape, p)
    agreement = None
    if len(values) == 2:
        agreement = values["tableaux"] == values["weyl"]
    value = values.get("tableaux", values.get("weyl"))
    _emit_json(
        args,
        {
            "kind": kind.kind,
            "n": kind.n,
            "m": kind.m,
            "shape": shape_to_json(shape),
            "p": p.to_json(),
            "route": args.route,
            "value": format_rational(value),
            "route_agreement": agreement,
        },
    )
    return EXIT_OK if agreement in (None, True) else EXIT_CHECK_FAILED


def cmd_multiplicity(args) -> int:
    _check_format(args, "json")
    kind = _kind_from(args)
    kappa = parse_shape(kind, args.kappa)
    mu = parse_shape(kind, args.mu)
    dec = decompose_product(kind, kappa, mu, budget=args.budget)
    lr_agreement = None
    if kind.kind == HOOK:
        lr_agreement = all(
            lr_count(kind, lam, kappa, mu) == mult for lam, mult in dec.items()
        )
    _emit_json(
        args,
        {
            "kind": kind.kind,
            "n": kind.n,
            "m": kind.m,
            "kappa": shape_to_json(kappa),
            "mu": shape_to_json(mu),
            "multiplicities": {
                ",".join(map(str, lam)) if lam else "0": mult
                for lam, mult in sorted(dec.items())
            },
            "lr_agreement": lr_agreement,
        },
    )
    return EXIT_OK if lr_agreement in (None, True) else EXIT_CHECK_FAILED


def cmd_exit_prob(args) -> int:
    _check_format(args, "csv")
    kind = _kind_from(args)
    shape = parse_shape(kind, args.shape)
    p = _prob_from(kind, args.p)
    closed = stay_probability(kind, shape, p)
    rows = []
    for horizon in range(1, args.horizon + 1):
        truncated = stay_probability_truncated(kind, shape, p, horizon)
        gap = truncated - closed
        rows.append(
            [horizon, format_rational(truncated), format_rational(closed), format_rational(gap)]
        )
    _emit(args, _csv_text(["L", "truncated", "closed_form", "gap"], rows))
    return EXIT_OK


def cmd_simulate(args) -> int:
    _check_format(args, "csv")
    kind = _kind_from(args)
    p = _prob_from(kind, args.p)
    rng = RngStream(args.seed)
    if args.experiment == "letters":
        report = estimate_letter_frequencies(kind, p, args.paths, args.length, rng)
        references = {
            f"letter {letter}": p.prob(letter) for letter in kind.alphabet
        }
    elif args.experiment == "shape-law":
        from .characters import schur
        from .multiplicities import f_count

        report = estimate_shape_law(kind, p, args.paths, args.length, rng)
        references = {}
        for target in report.estimates:
            lam = parse_shape(kind, target.removeprefix("shape "))
            references[target] = f_count(kind, lam) * schur(
                kind, lam, p, budget=args.budget
            )
    elif args.experiment == "conditioned":
        report = estimate_conditioned_acceptance(
            kind, p, args.length, args.horizon, args.paths, rng
        )
        references = {
            "acceptance": stay_probability_truncated(kind, (), p, args.horizon)
        }
    else:
        raise InvalidInputError(f"unknown experiment {args.experiment!r}")
    header = [
        "experiment", "kind", "n", "m", "p", "seed", "count",
        "target", "estimate", "stderr", "reference", "sigma_distance",
    ]
    config = [args.experiment, kind.kind, kind.n, kind.m, args.p, args.seed,
              report.count]
    rows = []
    for target, estimate in report.estimates.items():
        stderr = report.stderrs[target]
        reference = references[target]
        distance = abs(estimate - float(reference)) / stderr if stderr else 0.0
        rows.append(
            config + [target, f"{estimate:.10g}", f"{stderr:.6g}",
                      format_rational(reference), f"{distance:.4g}"]
        )
    _emit(args, _csv_text(header, rows))
    return EXIT_OK


def cmd_llt(args) -> int:
    _check_format(args, "csv")
    kind = _kind_from(args)
    p = _prob_from(kind, args.p)
    if args.mode == "quotient":
        gamma = tuple(int(t) for t in args.gamma.replace(",", " ").split())
        report = quotient_llt_experiment(kind, p, gamma, args.lmax)
    else:
        mu = parse_shape(kind, args.mu)
        report = asympt_multiplicity_experiment(kind, p, mu, args.lmax)
    rows = []
    for row in report.rows:
        value = "" if row.value is None else format_rational(row.value)
        deviation = (
            "" if row.value is None else f"{abs(float(row.value) - float(report.target)):.6g}"
        )
        rows.append([row.step, ",".join(map(str, row.shape)), value, deviation])
    comment = f"# final_quartile_max_deviation={report.final_quartile_deviation:.6g}"
    _emit(args, _csv_text(["step", "shape", "value", "abs_deviation"], rows, [comment]))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_format(args, "json")
    overrides = {
        "n": args.n,
        "m": args.m,
        "length": args.length,
        "budget": args.budget,
    }
    try:
        failures = run_suite(args.suite, **overrides)
    except KeyError:
        raise InvalidInputError(f"unknown suite {args.suite!r}")
    _emit_json(
        args,
        {
            "suite": args.suite,
            "config": {k: v for k, v in overrides.items() if v is not None},
            "passed": not failures,
            "failures": failures,
        },
    )
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superwalk",
        description="Exact tableau combinatorics and conditioned one-way simple walks.",
    )
    parser.add_argument("--version", action="version", version=f"superwalk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    _add_common(p_rsk)
    p_rsk.add_argument(
        "word",
        help="word such as 232143 or -23-2 (barred letters negative; place a "
        "bare -- before words starting with a barred letter)",
    )
    p_rsk.set_defaults(func=cmd_rsk)

    p_pit = sub.add_parser("pitman", help="prefix shape sequence of a word as JSON lines")
    _add_common(p_pit)
    p_pit.add_argument("word")
    p_pit.set_defaults(func=cmd_pitman)

    p_char = sub.add_parser("char", help="exact character evaluation")
    _add_common(p_char)
    p_char.add_argument("--shape", required=True)
    p_char.add_argument("--p", required=True, help='rationals such as "1/2,1/3,1/6"')
    p_char.add_argument("--route", choices=("tableaux", "weyl", "both"), default="both")
    p_char.set_defaults(func=cmd_char)

    p_mult = sub.add_parser("multiplicity", help="tensor product decomposition")
    _add_common(p_mult)
    p_mult.add_argument("--kappa", required=True)
    p_mult.add_argument("--mu", required=True)
    p_mult.set_defaults(func=cmd_multiplicity)

    p_exit = sub.add_parser("exit-prob", help="stay probabilities, closed form and truncated")
    _add_common(p_exit)
    p_exit.add_argument("--shape", default="0")
    p_exit.add_argument("--p", required=True)
    p_exit.add_argument("--horizon", type=int, default=_env_default("HORIZON", 30))
    p_exit.set_defaults(func=cmd_exit_prob)

    p_sim = sub.add_parser("simulate", help="Monte Carlo experiments with exact references")
    _add_common(p_sim)
    p_sim.add_argument("--p", required=True)
    p_sim.add_argument(
        "--experiment", choices=("letters", "shape-law", "conditioned"), default="letters"
    )
    p_sim.add_argument("--paths", type=int, default=10000)
    p_sim.add_argument("--length", type=int, default=_env_default("LENGTH", 4))
    p_sim.add_argument("--horizon", type=int, default=_env_default("HORIZON", 30))
    p_sim.add_argument("--seed", type=int, default=_env_default("SEED", 20120214))
    p_sim.set_defaults(func=cmd_simulate)

    p_llt = sub.add_parser("llt", help="exact-DP drift trend experiments")
    _add_common(p_llt)
    p_llt.add_argument("--p", required=True)
    p_llt.add_argument("--mode", choices=("quotient", "asympt"), default="quotient")
    p_llt.add_argument("--gamma", default="1,0", help="fixed weight for the quotient mode")
    p_llt.add_argument("--mu", default="1", help="shape for the asympt mode")
    p_llt.add_argument("--lmax", type=int, default=40)
    p_llt.set_defaults(func=cmd_llt)

    p_verify = sub.add_parser("verify", help="run a named exhaustive identity suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--length", type=int, default=None)
    _add_common(p_verify, kinded=False)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"superwalk: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SamplingFailureError as exc:
        print(
            f"superwalk: sampling budget exhausted: {exc} "
            f"(acceptance rate estimate {exc.acceptance_rate:.3g})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    except InvalidInputError as exc:
        print(f"superwalk: bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except SuperwalkError as exc:
        print(f"superwalk: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
