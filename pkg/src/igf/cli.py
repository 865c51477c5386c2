"""Command line front end.

One executable, ``igf``, with subcommands for point evaluation, entropy,
moments, curve sampling to CSV, closed-form family values, escort
transforms, and canonical re-serialization of scheme files.

Exit codes: 0 success, 2 validation problems (unreadable or malformed input,
bad parameters), 3 evaluation outside a function's domain, 4 a requested
identity verification that did not pass.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import closed_forms
from .distributions import (
    ParametricFamily,
    ProbabilityDistribution,
    UtilityInformationScheme,
    constant_utility_scheme,
    realize_family,
    scheme_from_dict,
    scheme_to_dict,
)
from .errors import DomainError, InvalidParameter, ValidationError
from .escort import escort_transform, unnormalized_power_igf, verify_scaling_identity
from .generating_functions import (
    LogBase,
    golomb_igf,
    hooda_bhaker_igf,
    weighted_entropy,
    weighted_igf,
    weighted_self_information_moment,
)

DEFAULT_DIGITS = 12
MAX_DIGITS = 17
MAX_MOMENT_ORDER = 8


class Measure(Enum):
    WEIGHTED = "weighted"
    GOLOMB = "golomb"
    HOODA_BHAKER = "hooda_bhaker"


#: Canonical column order for curve output, independent of request order.
_MEASURE_ORDER = (Measure.WEIGHTED, Measure.GOLOMB, Measure.HOODA_BHAKER)


def _evaluate_measure(
    measure: Measure, scheme: UtilityInformationScheme, t: float, extended: bool
) -> float:
    if measure is Measure.WEIGHTED:
        return weighted_igf(scheme, t, extended=extended)
    if measure is Measure.GOLOMB:
        return golomb_igf(scheme.dist, t, extended=extended)
    return hooda_bhaker_igf(scheme, t, extended=extended)


@dataclass(frozen=True)
class CurveRequest:
    """A grid-evaluation request over [t_min, t_max] with inclusive endpoints."""

    scheme: UtilityInformationScheme
    t_min: float
    t_max: float
    steps: int
    measures: tuple[Measure, ...] = (Measure.WEIGHTED,)
    extended: bool = False

    def __post_init__(self) -> None:
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 2:
            raise InvalidParameter(f"steps must be an integer >= 2, got {self.steps!r}")
        t_min, t_max = float(self.t_min), float(self.t_max)
        if math.isnan(t_min) or math.isnan(t_max) or not t_min < t_max:
            raise InvalidParameter(f"need t_min < t_max, got {t_min!r} and {t_max!r}")
        if not self.extended and t_min < 1.0:
            raise DomainError(
                f"t_min = {t_min} is below the default domain t >= 1; "
                f"use the extended flag to sample there"
            )
        object.__setattr__(self, "t_min", t_min)
        object.__setattr__(self, "t_max", t_max)
        measures = tuple(m for m in _MEASURE_ORDER if m in set(self.measures))
        if not measures:
            raise InvalidParameter("at least one measure is required")
        object.__setattr__(self, "measures", measures)


@dataclass(frozen=True)
class CurveSample:
    """One grid point with values ordered like the request's measures."""

    t: float
    values: tuple[float, ...]


def evaluate_curve(request: CurveRequest) -> list[CurveSample]:
    """Evaluate every requested measure on the equally spaced t grid."""
    step = (request.t_max - request.t_min) / (request.steps - 1)
    samples = []
    for k in range(request.steps):
        # pin the endpoint so the grid covers [t_min, t_max] exactly
        t = request.t_max if k == request.steps - 1 else request.t_min + k * step
        values = tuple(
            _evaluate_measure(m, request.scheme, t, request.extended)
            for m in request.measures
        )
        for v in values:
            if not math.isfinite(v):
                raise DomainError(f"non-finite curve value at t = {t}")
        samples.append(CurveSample(t=t, values=values))
    return samples


def render_curve_csv(request: CurveRequest) -> str:
    """CSV text for a curve request: header row, then one row per grid point.

    Floats are rendered with ``repr`` (shortest round-trip form) and rows end
    with a bare newline, so identical requests produce byte-identical output.
    """
    lines = ["t," + ",".join(m.value for m in request.measures)]
    for sample in evaluate_curve(request):
        lines.append(repr(sample.t) + "," + ",".join(repr(v) for v in sample.values))
    return "\n".join(lines) + "\n"


def write_curve_csv(request: CurveRequest, path: str) -> None:
    text = render_curve_csv(request)
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc}") from None


def _load_scheme(path: str | None, fmt: str) -> UtilityInformationScheme:
    if path is None:
        raise ValidationError("an --input file is required for this command")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path} is not valid JSON: {exc}") from None
        return scheme_from_dict(doc)
    return _scheme_from_csv(text, path)


def _scheme_from_csv(text: str, path: str) -> UtilityInformationScheme:
    probs: list[float] = []
    utils: list[float] = []
    rows = [line.strip() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if rows and rows[0].replace(" ", "") in ("p,u", "probability,utility"):
        rows = rows[1:]
    for lineno, row in enumerate(rows, start=1):
        parts = [c.strip() for c in row.split(",")]
        if len(parts) != 2:
            raise ValidationError(
                f"{path}: row {lineno} must have two columns (p,u), got {row!r}"
            )
        try:
            p, u = float(parts[0]), float(parts[1])
        except ValueError:
            raise ValidationError(
                f"{path}: row {lineno} has non-numeric entries: {row!r}"
            ) from None
        probs.append(p)
        utils.append(u)
    return scheme_from_dict({"probabilities": probs, "utilities": utils})


def _fmt(value: float, digits: int) -> str:
    return format(value, f".{digits}g")


def _render_number_17g(x: float) -> str:
    return format(x, ".17g")


def render_scheme_json(scheme: UtilityInformationScheme) -> str:
    """Canonical JSON for a scheme: fixed key order, 17 significant digits.

    17 digits make the decimal rendering round-trip float64 exactly, so
    normalizing twice is byte-for-byte stable.
    """
    doc = scheme_to_dict(scheme)
    parts = []
    probs = ", ".join(_render_number_17g(p) for p in doc["probabilities"])
    parts.append(f'  "probabilities": [{probs}]')
    utils = ", ".join(_render_number_17g(u) for u in doc["utilities"])
    parts.append(f'  "utilities": [{utils}]')
    parts.append(f'  "kind": {json.dumps(doc["kind"])}')
    if "labels" in doc:
        labels = ", ".join(json.dumps(lab) for lab in doc["labels"])
        parts.append(f'  "labels": [{labels}]')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _family_from_args(args: argparse.Namespace) -> ParametricFamily:
    name = args.family
    given = {
        "--n": args.n is not None,
        "--p": args.p is not None,
        "--beta": args.beta is not None,
    }
    wanted = {"uniform": "--n", "geometric": "--p", "beta-power": "--beta"}[name]
    for flag, present in given.items():
        if flag == wanted and not present:
            raise ValidationError(f"family {name!r} requires {flag}")
        if flag != wanted and present:
            raise ValidationError(f"family {name!r} does not take {flag}")
    if name == "uniform":
        return ParametricFamily.uniform(args.n)
    if name == "geometric":
        return ParametricFamily.geometric(args.p)
    return ParametricFamily.beta_power(args.beta)


def _check_digits(value: str) -> int:
    try:
        digits = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {value!r}")
    if not 1 <= digits <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must be in 1..{MAX_DIGITS}, got {digits}")
    return digits


def _base_from_args(args: argparse.Namespace) -> LogBase:
    return LogBase.TWO if args.base == "2" else LogBase.NATURAL


def _cmd_eval(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.input, args.format)
    value = _evaluate_measure(Measure(args.measure), scheme, args.t, args.extended_t)
    print(_fmt(value, args.digits))
    return 0


def _cmd_entropy(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.input, args.format)
    print(_fmt(weighted_entropy(scheme, _base_from_args(args)), args.digits))
    return 0


def _cmd_moments(args: argparse.Namespace) -> int:
    if args.r_max < 1 or args.r_max > MAX_MOMENT_ORDER:
        raise ValidationError(
            f"--r-max must be in 1..{MAX_MOMENT_ORDER}, got {args.r_max}"
        )
    scheme = _load_scheme(args.input, args.format)
    for r in range(args.r_max + 1):
        print(f"{r}\t{_fmt(weighted_self_information_moment(scheme, r), args.digits)}")
    return 0


def _scheme_for_curve(args: argparse.Namespace) -> UtilityInformationScheme:
    if args.input is not None and args.family is not None:
        raise ValidationError("give either --input or --family, not both")
    if args.input is not None:
        return _load_scheme(args.input, args.format)
    if args.family is not None:
        dist = realize_family(_family_from_args(args), args.truncation)
        return constant_utility_scheme(dist, args.u)
    raise ValidationError("curve needs a scheme: pass --input or --family")


def _cmd_curve(args: argparse.Namespace) -> int:
    scheme = _scheme_for_curve(args)
    try:
        measures = tuple(Measure(tok.strip()) for tok in args.measures.split(","))
    except ValueError:
        raise ValidationError(
            f"--measures must name measures from "
            f"{[m.value for m in _MEASURE_ORDER]}, got {args.measures!r}"
        ) from None
    request = CurveRequest(
        scheme=scheme,
        t_min=args.t_min,
        t_max=args.t_max,
        steps=args.steps,
        measures=measures,
        extended=args.extended_t,
    )
    write_curve_csv(request, args.out)
    return 0


_GEOMETRIC_CHECK_TAIL = 1e-13


def _geometric_direct_igf(p: float, u: float, t: float) -> float:
    """Truncated direct sum with the geometric tail below _GEOMETRIC_CHECK_TAIL."""
    s = 1.0 - u * (1.0 - t)
    q = 1.0 - p
    # tail after T terms is q**s * p**(T*s) / (1 - p**s)
    bound = math.log(_GEOMETRIC_CHECK_TAIL * (1.0 - p**s)) - s * math.log(q)
    trunc = max(1, math.ceil(bound / (s * math.log(p))) + 1)
    return math.fsum((q * p**i) ** s for i in range(trunc))


def _geometric_direct_entropy(p: float, u: float) -> float:
    q = 1.0 - p
    trunc = 64
    while (trunc * abs(math.log(p)) + 60.0) * p**trunc > 1e-15:
        trunc *= 2
    return -math.fsum(
        u * (q * p**i) * math.log(q * p**i) for i in range(trunc)
    )


def _beta_power_direct_igf(beta: float, u: float, t: float) -> float:
    import numpy as np

    s = 1.0 - u * (1.0 - t)
    z = closed_forms.zeta(beta)
    n = np.arange(1, closed_forms.ZETA_SERIES_TERMS + 1, dtype=np.float64)
    return float(np.sum((n ** (-beta) / z) ** s))


def _beta_power_direct_entropy(beta: float, u: float) -> float:
    import numpy as np

    z = closed_forms.zeta(beta)
    n = np.arange(1, closed_forms.ZETA_SERIES_TERMS + 1, dtype=np.float64)
    probs = n ** (-beta) / z
    return float(-np.sum(u * probs * np.log(probs)))


def _cmd_closed_form(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    if args.entropy and args.t is not None:
        raise ValidationError("give either --t or --entropy, not both")
    if not args.entropy and args.t is None:
        raise ValidationError("closed-form needs --t for an IGF value or --entropy")
    if args.t is not None and args.t < 1.0 and not args.extended_t:
        raise DomainError(
            f"t = {args.t} is below the default domain t >= 1; pass --extended-t"
        )

    name = args.family
    if args.entropy:
        if name == "uniform":
            value = closed_forms.uniform_entropy(args.n, args.u)
            direct = None if not args.check else weighted_entropy(
                constant_utility_scheme(realize_family(family), args.u)
            )
        elif name == "geometric":
            value = closed_forms.geometric_entropy(args.p, args.u)
            direct = None if not args.check else _geometric_direct_entropy(args.p, args.u)
        else:
            value = closed_forms.beta_power_entropy(args.beta, args.u)
            direct = None if not args.check else _beta_power_direct_entropy(args.beta, args.u)
    else:
        if name == "uniform":
            value = closed_forms.uniform_igf(args.n, args.u, args.t)
            direct = None if not args.check else weighted_igf(
                constant_utility_scheme(realize_family(family), args.u),
                args.t,
                extended=args.extended_t,
            )
        elif name == "geometric":
            value = closed_forms.geometric_igf(args.p, args.u, args.t)
            direct = None if not args.check else _geometric_direct_igf(args.p, args.u, args.t)
        else:
            value = closed_forms.beta_power_igf(args.beta, args.u, args.t)
            direct = None if not args.check else _beta_power_direct_igf(args.beta, args.u, args.t)

    if not args.check:
        print(_fmt(value, args.digits))
        return 0
    print(f"closed_form: {_fmt(value, args.digits)}")
    print(f"direct: {_fmt(direct, args.digits)}")
    print(f"abs_diff: {format(abs(value - direct), '.6e')}")
    return 0


def _cmd_escort(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.input, args.format)
    dist: ProbabilityDistribution = scheme.dist
    if args.verify_identity and args.t is None:
        raise ValidationError("--verify-identity needs --t")
    pair = escort_transform(dist, args.beta)
    print("escort: " + " ".join(_fmt(p, args.digits) for p in pair.normalized.probs))
    print(f"mass: {_fmt(pair.mass, args.digits)}")
    if args.t is not None:
        scheme_b = constant_utility_scheme(pair.normalized, args.u)
        value = weighted_igf(scheme_b, args.t, extended=args.extended_t)
        print(f"generalized_igf: {_fmt(value, args.digits)}")
    if not args.verify_identity:
        return 0
    report = verify_scaling_identity(
        dist, args.u, args.beta, args.t, extended=args.extended_t
    )
    print(f"lhs: {_fmt(report.lhs, args.digits)}")
    print(f"rhs: {_fmt(report.rhs, args.digits)}")
    print(f"abs_diff: {format(report.abs_diff, '.6e')}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 4


def _cmd_normalize(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.input, args.format)
    sys.stdout.write(render_scheme_json(scheme))
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="scheme file to read")
    parser.add_argument(
        "--format", choices=("json", "csv"), default="json",
        help="input file format (default json)",
    )
    parser.add_argument(
        "--base", choices=("e", "2"), default="e",
        help="logarithm base for entropy output (default e)",
    )
    parser.add_argument(
        "--extended-t", action="store_true",
        help="allow t below 1 wherever every term stays defined",
    )
    parser.add_argument(
        "--digits", type=_check_digits, default=DEFAULT_DIGITS,
        help=f"significant digits to print (1..{MAX_DIGITS}, default {DEFAULT_DIGITS})",
    )


def _add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="outcome count for the uniform family")
    parser.add_argument("--p", type=float, help="ratio for the geometric family")
    parser.add_argument("--beta", type=float, help="exponent for the beta-power family")
    parser.add_argument("--u", type=float, default=1.0, help="constant utility (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igf",
        description="Utility-weighted information generating functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one generating function at one t")
    _add_common(p_eval)
    p_eval.add_argument(
        "--measure", choices=[m.value for m in _MEASURE_ORDER], default="weighted"
    )
    p_eval.add_argument("--t", type=float, required=True)
    p_eval.set_defaults(handler=_cmd_eval)

    p_entropy = sub.add_parser("entropy", help="weighted entropy of a scheme")
    _add_common(p_entropy)
    p_entropy.set_defaults(handler=_cmd_entropy)

    p_moments = sub.add_parser("moments", help="weighted self-information moments")
    _add_common(p_moments)
    p_moments.add_argument("--r-max", type=int, required=True)
    p_moments.set_defaults(handler=_cmd_moments)

    p_curve = sub.add_parser("curve", help="sample measures over a t grid into CSV")
    _add_common(p_curve)
    p_curve.add_argument("--family", choices=("uniform", "geometric", "beta-power"))
    _add_family_flags_curve(p_curve)
    p_curve.add_argument("--t-min", type=float, default=1.0)
    p_curve.add_argument("--t-max", type=float, default=3.0)
    p_curve.add_argument("--steps", type=int, default=101)
    p_curve.add_argument(
        "--measures", default="weighted",
        help="comma-separated subset of weighted,golomb,hooda_bhaker",
    )
    p_curve.add_argument("--out", required=True, help="CSV file to write")
    p_curve.set_defaults(handler=_cmd_curve)

    p_cf = sub.add_parser("closed-form", help="closed-form family values")
    _add_common(p_cf)
    p_cf.add_argument("family", choices=("uniform", "geometric", "beta-power"))
    _add_family_flags(p_cf)
    p_cf.add_argument("--t", type=float)
    p_cf.add_argument("--entropy", action="store_true")
    p_cf.add_argument(
        "--check", action="store_true",
        help="also print a direct-summation value and the difference",
    )
    p_cf.set_defaults(handler=_cmd_closed_form)

    p_escort = sub.add_parser("escort", help="escort transform and scaling identity")
    _add_common(p_escort)
    p_escort.add_argument("--beta", type=float, required=True)
    p_escort.add_argument("--u", type=float, default=1.0)
    p_escort.add_argument("--t", type=float)
    p_escort.add_argument("--verify-identity", action="store_true")
    p_escort.set_defaults(handler=_cmd_escort)

    p_norm = sub.add_parser("normalize", help="re-emit a scheme in canonical JSON")
    _add_common(p_norm)
    p_norm.set_defaults(handler=_cmd_normalize)

    return parser


def _add_family_flags_curve(parser: argparse.ArgumentParser) -> None:
    _add_family_flags(parser)
    parser.add_argument(
        "--truncation", type=int,
        help="number of leading outcomes for infinite-support families",
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
