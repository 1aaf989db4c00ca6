"""
Command-line interface: bound evaluation, sweeps, verification runs, corollary
queries, series utilities and figure data.

Every sub-command writes a flat record (or a list of flat records) as text, JSON or
CSV, to standard output or to ``--output``. The exit code is 0 on success, 1 when a
verification finds a violation, and 2 on bad arguments or configuration.

"""

# SPDX-License-Identifier: BSD-3-Clause

import argparse
import csv
import io
import itertools
import json
import logging
import sys
import typing
from fractions import Fraction

import numpy

from . import _bound, _common, _exceptions, _model, _oracle, _series
from ._version import LIBRARY_VERSION

logger = logging.getLogger(__name__)

Record = typing.Dict[str, typing.Any]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

FIGURE_QUANTITIES = {
    "Fcurves": ("F1", "F2", "F3", "F4"),
    "F3plus2F4": ("F3plus2F4",),
    "F2plus2F3F4": ("F2plus2F3F4",),
    "Kcurve": ("K",),
}

_COROLLARY_KINDS = {
    "mfold": _bound.CorollaryKind.MFOLD,
    "general1fold": _bound.CorollaryKind.GENERAL_1FOLD,
    "lambda1fold": _bound.CorollaryKind.LAMBDA_1FOLD,
    "base": _bound.CorollaryKind.BASE,
}

# Decimal format for floats in text and CSV output.
_FLOAT_FORMAT = ".12g"


class RunConfig(typing.NamedTuple):
    """
    A parsed command line.

    ``params`` is set for the single-point commands, ``params_grid`` for ``sweep``;
    command-specific options not listed here stay on ``arguments``.

    """

    command: str
    params: typing.Optional[_model.Params]
    params_grid: typing.Tuple[_model.Params, ...]
    samples: int
    seed: int
    rho_steps: int
    mu_steps: int
    output_format: str
    output_path: typing.Optional[str]
    arguments: argparse.Namespace


# Figure data.
# -------------------------------------------------------------------------------


def _format_beta(beta: Fraction) -> str:
    """
    Column-name form of ``beta``: ``0``, ``0.1``, ``0.9``.

    """
    return format(float(beta), "g")


def emit_figure_data(
    params: _model.Params,
    betas: typing.Sequence[_model.RealLike],
    which: str,
    rho_steps: int = _common.DEFAULT_RHO_STEPS,
) -> str:
    """
    Return CSV data for one family of curves over ``rho`` in ``[0, 2]``.

    ``which`` is one of ``Fcurves`` (``F1`` .. ``F4``), ``F3plus2F4``,
    ``F2plus2F3F4`` or ``Kcurve``. The first column is ``rho``; then one column per
    quantity per ``beta``, named ``<quantity>_beta=<value>``. ``params.beta`` is
    ignored. Values carry 12 significant digits and rows end in ``\\n``, so identical
    input gives byte-identical output.

    :raises hdet.RangeError: When ``which`` is unknown, ``rho_steps`` is below 2,
       ``betas`` is empty, or any ``beta`` lies outside ``[0, 1)``.

    """
    if which not in FIGURE_QUANTITIES:
        raise _exceptions.RangeError(
            f"which must be one of {', '.join(FIGURE_QUANTITIES)}, got {which!r}",
            "which",
        )
    if rho_steps < 2:
        raise _exceptions.RangeError(
            f"rho_steps must be at least 2, got {rho_steps}", "rho_steps"
        )
    if not betas:
        raise _exceptions.RangeError("At least one beta is required.", "beta")
    points = [params.beta_replaced(beta) for beta in betas]
    rho = numpy.linspace(0.0, 2.0, rho_steps)
    header = ["rho"]
    columns = []
    for point in points:
        f1, f2, f3, f4 = _bound._f_coeff_arrays(point, rho)
        values = {
            "F1": f1,
            "F2": f2,
            "F3": f3,
            "F4": f4,
            "F3plus2F4": f3 + 2 * f4,
            "F2plus2F3F4": f2 + 2 * (f3 + f4),
            "K": f1 + 2 * (f2 + f3) + 4 * f4,
        }
        for quantity in FIGURE_QUANTITIES[which]:
            header.append(f"{quantity}_beta={_format_beta(point.beta)}")
            columns.append(values[quantity])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for index, rho_value in enumerate(rho):
        writer.writerow(
            [_format_float(rho_value)]
            + [_format_float(column[index]) for column in columns]
        )
    return buffer.getvalue()


# Argument parsing.
# -------------------------------------------------------------------------------


def _real_argument(text: str) -> Fraction:
    """
    argparse type for a single exact real (``0.5``, ``1/3``, ``2``).

    """
    try:
        return _model.parse_real(text)
    except _exceptions.RangeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _real_list_argument(text: str) -> typing.Tuple[Fraction, ...]:
    """
    argparse type for a comma-separated list of exact reals.

    """
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    return tuple(_real_argument(item) for item in items)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    """
    Add the output flags every sub-command accepts.

    """
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=("text", "json", "csv"),
        default="text",
        help="Output format (default: text).",
    )
    parser.add_argument("--output", dest="output_path", help="Write to this file.")
    parser.add_argument(
        "--verbose", action="store_true", help="Log progress to standard error."
    )


def _add_params_flags(
    parser: argparse.ArgumentParser, beta_required: bool = True
) -> None:
    """
    Add the four parameter flags.

    """
    parser.add_argument("--m", type=_real_argument, required=True)
    parser.add_argument("--lambda", dest="lambda_", type=_real_argument, required=True)
    parser.add_argument("--gamma", type=_real_argument, required=True)
    parser.add_argument(
        "--beta",
        type=_real_argument,
        required=beta_required,
        default=None if beta_required else Fraction(0),
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Return the :class:`argparse.ArgumentParser` for the ``hdet`` command.

    """
    parser = argparse.ArgumentParser(
        prog="hdet",
        description=(
            "Second Hankel determinant bounds for m-fold symmetric bi-univalent "
            "functions."
        ),
    )
    parser.add_argument("--version", action="version", version=LIBRARY_VERSION)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    bound = commands.add_parser("bound", help="Evaluate the bound at one point.")
    _add_params_flags(bound)

    tau = commands.add_parser("tau", help="Report the branch threshold.")
    _add_params_flags(tau, beta_required=False)
    tau.add_argument(
        "--audit",
        action="store_true",
        help="Compare against the alternative threshold over a beta grid.",
    )
    tau.add_argument("--beta-steps", type=int, default=100)

    corollary = commands.add_parser(
        "corollary", help="Evaluate a specialization of the bound."
    )
    corollary.add_argument("--kind", choices=tuple(_COROLLARY_KINDS), required=True)
    corollary.add_argument("--m", type=_real_argument)
    corollary.add_argument("--lambda", dest="lambda_", type=_real_argument)
    corollary.add_argument("--gamma", type=_real_argument)
    corollary.add_argument("--beta", type=_real_argument, required=True)

    sweep = commands.add_parser("sweep", help="Evaluate the bound over a grid.")
    sweep.add_argument("--m", type=_real_list_argument, required=True)
    sweep.add_argument(
        "--lambda", dest="lambda_", type=_real_list_argument, required=True
    )
    sweep.add_argument("--gamma", type=_real_list_argument, required=True)
    sweep.add_argument("--beta", type=_real_list_argument, required=True)
    sweep.add_argument(
        "--check", action="store_true", help="Compare with a brute-force maximum."
    )

    verify = commands.add_parser("verify", help="Run the Monte Carlo verifier.")
    _add_params_flags(verify)
    verify.add_argument("--samples", type=int, default=_common.DEFAULT_SAMPLES)
    verify.add_argument("--seed", type=int, default=_common.DEFAULT_SEED)

    figures = commands.add_parser("figures", help="Emit curve data as CSV.")
    _add_params_flags(figures, beta_required=False)
    figures.add_argument("--which", choices=tuple(FIGURE_QUANTITIES), required=True)
    figures.add_argument("--betas", type=_real_list_argument, required=True)

    invert = commands.add_parser("invert", help="Invert an m-fold series.")
    invert.add_argument("--m", type=int, required=True)
    invert.add_argument("--coeffs", type=_real_list_argument, required=True)

    hankel = commands.add_parser("hankel", help="Evaluate a Hankel determinant.")
    hankel.add_argument("--coeffs", type=_real_list_argument, required=True)
    hankel.add_argument("--q", type=int, required=True)
    hankel.add_argument("--n", type=int, required=True)

    for subparser in (bound, tau, corollary, sweep, verify, figures, invert, hankel):
        _add_common_flags(subparser)
    for subparser in (sweep, figures):
        subparser.add_argument(
            "--rho-steps", type=int, default=_common.DEFAULT_RHO_STEPS
        )
    sweep.add_argument("--mu-steps", type=int, default=_common.DEFAULT_MU_STEPS)
    return parser


def parse_config(arguments: typing.Sequence[str]) -> RunConfig:
    """
    Parse ``arguments`` into a :class:`RunConfig`.

    :raises SystemExit: With code 2 on malformed flags or out-of-range parameters.

    """
    parser = build_parser()
    namespace = parser.parse_args(list(arguments))
    params = None
    grid: typing.Tuple[_model.Params, ...] = ()
    try:
        if namespace.command in ("bound", "tau", "verify", "figures"):
            params = _model.validate_params(
                namespace.m, namespace.lambda_, namespace.gamma, namespace.beta
            )
        elif namespace.command == "sweep":
            grid = tuple(
                _model.validate_params(m, lambda_, gamma, beta)
                for m, lambda_, gamma, beta in itertools.product(
                    namespace.m, namespace.lambda_, namespace.gamma, namespace.beta
                )
            )
    except _exceptions.RangeError as exc:
        parser.error(str(exc).strip())
    return RunConfig(
        command=namespace.command,
        params=params,
        params_grid=grid,
        samples=getattr(namespace, "samples", _common.DEFAULT_SAMPLES),
        seed=getattr(namespace, "seed", _common.DEFAULT_SEED),
        rho_steps=getattr(namespace, "rho_steps", _common.DEFAULT_RHO_STEPS),
        mu_steps=getattr(namespace, "mu_steps", _common.DEFAULT_MU_STEPS),
        output_format=namespace.output_format,
        output_path=namespace.output_path,
        arguments=namespace,
    )


# Output.
# -------------------------------------------------------------------------------


def _format_float(value: float) -> str:
    """
    Format a float with 12 significant digits.

    """
    return format(float(value), _FLOAT_FORMAT)


def _params_record(params: _model.Params, with_beta: bool = True) -> Record:
    """
    Echo the parameters back as the leading fields of a record.

    """
    record: Record = {
        "m": params.m,
        "lambda": _exact(params.lambda_),
        "gamma": params.gamma,
    }
    if with_beta:
        record["beta"] = _exact(params.beta)
    return record


def _exact(value: Fraction) -> typing.Union[int, str]:
    """
    Echo form of an exact input: integers stay integers, anything else is written
    as ``p/q``.

    """
    return int(value) if value.denominator == 1 else str(value)


def _text_value(value: typing.Any) -> str:
    """
    Text and CSV form of a record value.

    """
    if isinstance(value, float):
        return _format_float(value)
    if value is None:
        return "-"
    return str(value)


def render(records: typing.Sequence[Record], output_format: str) -> str:
    """
    Render flat records as ``text``, ``json`` or ``csv``.

    JSON is a single object for one record and a list of objects otherwise.

    """
    if output_format == "json":
        document = records[0] if len(records) == 1 else list(records)
        return json.dumps(document, indent=2) + "\n"
    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer, fieldnames=list(records[0]), lineterminator="\n"
        )
        writer.writeheader()
        for record in records:
            writer.writerow({key: _text_value(value) for key, value in record.items()})
        return buffer.getvalue()
    blocks = [
        "\n".join(f"{key}: {_text_value(value)}" for key, value in record.items())
        for record in records
    ]
    return "\n\n".join(blocks) + "\n"


def _write(config: RunConfig, text: str) -> None:
    """
    Write output to standard output or to the configured path.

    """
    if config.output_path is None:
        sys.stdout.write(text)
        return
    with open(config.output_path, "w", encoding="utf-8", newline="") as output:
        output.write(text)


# Commands.
# -------------------------------------------------------------------------------

CommandResult = typing.Tuple[typing.List[Record], int]


def _run_bound(config: RunConfig) -> CommandResult:
    """
    The bound with its branch, threshold and the values of K it was chosen from.

    """
    params = typing.cast(_model.Params, config.params)
    result = _bound.theorem_bound(params)
    extremes = _bound.k_extremes(params)
    record = _params_record(params)
    record.update(
        value=result.value,
        branch=result.branch.value,
        tau=result.tau,
        rho_star=result.rho_star,
        k_at_zero=extremes.k_at_zero,
        k_at_two=extremes.k_at_two,
        k_at_rho2=extremes.k_at_rho2,
    )
    return [record], EXIT_OK


def _run_tau(config: RunConfig) -> CommandResult:
    """
    The branch threshold, and optionally the threshold audit.

    """
    params = typing.cast(_model.Params, config.params)
    record = _params_record(params, with_beta=False)
    record.update(
        tau=_bound.tau(params),
        result_one_threshold=_bound.result_one_threshold(params),
    )
    if not config.arguments.audit:
        return [record], EXIT_OK
    audit = _oracle.threshold_audit(params, beta_steps=config.arguments.beta_steps)
    record.update(
        beta_steps=config.arguments.beta_steps,
        disagreements=len(audit.disagreements),
        inconsistent=len(audit.inconsistent),
        theorem_failures=len(audit.theorem_failures),
        missing_rho_two=len(audit.missing_rho_two),
        consistent=audit.consistent,
    )
    return [record], EXIT_OK if audit.consistent else EXIT_VIOLATION


def _run_corollary(config: RunConfig) -> CommandResult:
    """
    One corollary bound, given only the arguments the kind uses.

    """
    namespace = config.arguments
    kind = _COROLLARY_KINDS[namespace.kind]
    given = {
        name: getattr(namespace, name)
        for name in ("m", "lambda_", "gamma", "beta")
        if getattr(namespace, name) is not None
    }
    result = _bound.corollary_bound(kind, **given)
    record: Record = {"kind": kind.value}
    record.update({name.rstrip("_"): _exact(value) for name, value in given.items()})
    record.update(value=result.value, threshold=result.threshold)
    return [record], EXIT_OK


def _run_sweep(config: RunConfig) -> CommandResult:
    """
    One row per parameter combination; exits 1 when a checked gap is too large.

    """
    check = config.arguments.check
    rows = _oracle.sweep(
        config.params_grid,
        check=check,
        rho_steps=config.rho_steps,
        mu_steps=config.mu_steps,
    )
    records = []
    for row in rows:
        record = _params_record(row.params)
        record.update(
            value=row.value,
            branch=row.branch.value,
            tau=row.tau,
            rho_star=row.rho_star,
        )
        if check:
            record.update(oracle_max=row.oracle_max, gap=row.gap)
        records.append(record)
    failed = any(not row.within_tolerance for row in rows)
    return records, EXIT_VIOLATION if failed else EXIT_OK


def _run_verify(config: RunConfig) -> CommandResult:
    """
    Monte Carlo verification plus the sign suite.

    """
    params = typing.cast(_model.Params, config.params)
    result = _bound.theorem_bound(params)
    report = _oracle.monte_carlo_verify(params, config.samples, config.seed)
    signs = _oracle.sign_invariant_check(params)
    record = _params_record(params)
    record.update(
        value=result.value,
        branch=result.branch.value,
        tau=result.tau,
        bound=report.bound,
        observed_max=report.observed_max,
        violations=report.violations,
        worst_ratio=report.worst_ratio,
        soundness_violations=report.soundness_violations,
        seed=report.seed,
        samples=report.samples,
        signs_passed=signs.passed,
    )
    passed = report.passed and signs.passed
    return [record], EXIT_OK if passed else EXIT_VIOLATION


def _run_invert(config: RunConfig) -> CommandResult:
    """
    First three coefficients of the inverse series.

    """
    namespace = config.arguments
    series = _series.MFoldSeries.from_coefficients(namespace.m, namespace.coeffs)
    triple = _series.invert_series(series)
    record: Record = {"m": namespace.m}
    record.update(
        b_m1=str(triple.a_m1), b_2m1=str(triple.a_2m1), b_3m1=str(triple.a_3m1)
    )
    return [record], EXIT_OK


def _run_hankel(config: RunConfig) -> CommandResult:
    """
    A single Hankel determinant.

    """
    namespace = config.arguments
    value = _series.hankel_determinant(namespace.coeffs, namespace.q, namespace.n)
    return [{"q": namespace.q, "n": namespace.n, "determinant": str(value)}], EXIT_OK


_HANDLERS: typing.Dict[str, typing.Callable[[RunConfig], CommandResult]] = {
    "bound": _run_bound,
    "tau": _run_tau,
    "corollary": _run_corollary,
    "sweep": _run_sweep,
    "verify": _run_verify,
    "invert": _run_invert,
    "hankel": _run_hankel,
}


def run_cli(arguments: typing.Sequence[str]) -> int:
    """
    Run the ``hdet`` command with ``arguments`` (excluding the program name) and
    return its exit code.

    """
    try:
        config = parse_config(arguments)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE
    if config.arguments.verbose:
        logging.basicConfig(level=logging.DEBUG)
    logger.debug("Running %s", config.command)
    try:
        if config.command == "figures":
            params = typing.cast(_model.Params, config.params)
            text = emit_figure_data(
                params,
                config.arguments.betas,
                config.arguments.which,
                config.rho_steps,
            )
            code = EXIT_OK
        else:
            records, code = _HANDLERS[config.command](config)
            text = render(records, config.output_format)
    except (
        _exceptions.RangeError,
        _exceptions.TruncationError,
        _exceptions.MissingCoefficientError,
        _exceptions.ConfigurationError,
    ) as exc:
        sys.stderr.write(f"hdet {config.command}: error: {str(exc).strip()}\n")
        return EXIT_USAGE
    except _exceptions.ConsistencyError as exc:
        sys.stderr.write(f"hdet {config.command}: {str(exc).strip()}\n")
        return EXIT_VIOLATION
    _write(config, text)
    return code


def main() -> None:
    """
    Console entry point.

    """
    sys.exit(run_cli(sys.argv[1:]))
