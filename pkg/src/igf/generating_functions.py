"""Information generating functions and the measures derived from them.

The central object is the utility-weighted generating function of a scheme,

    I(P, U, t) = sum_i p_i ** (1 - u_i * (1 - t)),

alongside the classical unweighted form ``sum_i p_i ** t`` and the
utility-premultiplied form ``sum_i u_i * p_i ** t``.  Differentiating the
weighted form r times in t multiplies each term by ``(u_i * ln p_i) ** r``,
so at t = 1 the first derivative recovers minus the weighted entropy and
higher derivatives recover signed self-information moments.  Those identities
are what the test suite leans on.

Conventions: outcomes with zero probability contribute nothing (0 * log 0 and
0 ** e for e > 0 are both taken as 0), all logarithms are natural with an
optional base-2 conversion on output, and sums are accumulated with
``math.fsum`` so 1e-12 tolerances stay honest for vectors up to 1e6 entries.
By default t must be at least 1; passing ``extended=True`` lifts that and
allows any t for which every term is defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .distributions import ProbabilityDistribution, UtilityInformationScheme
from .errors import DomainError, InvalidParameter


class LogBase(Enum):
    """Output logarithm base for entropy-like quantities."""

    NATURAL = "e"
    TWO = "2"


@dataclass(frozen=True)
class EvaluationPoint:
    """A point (t, r) at which generating functions are evaluated.

    ``t`` is the function argument (default domain t >= 1) and ``r`` the
    derivative order, a non-negative integer.
    """

    t: float
    r: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.t, bool) or not isinstance(self.t, (int, float)):
            raise InvalidParameter(f"t must be a real number, got {self.t!r}")
        if math.isnan(self.t):
            raise InvalidParameter("t must not be NaN")
        object.__setattr__(self, "t", float(self.t))
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 0:
            raise InvalidParameter(f"r must be a non-negative integer, got {self.r!r}")


def _checked_t(t: float, extended: bool) -> float:
    point = EvaluationPoint(t)
    if not extended and point.t < 1.0:
        raise DomainError(
            f"t = {point.t} is below the default domain t >= 1; "
            f"pass extended=True to evaluate there"
        )
    return point.t


def _pow(base: float, exp: float) -> float:
    # Python raises OverflowError for finite operands with huge results,
    # which only extended-domain evaluations can trigger.
    try:
        return base**exp
    except OverflowError:
        raise DomainError(f"term {base!r} ** {exp!r} overflows") from None


def weighted_igf(
    scheme: UtilityInformationScheme, t: float, *, extended: bool = False
) -> float:
    """Evaluate sum_i p_i ** (1 - u_i * (1 - t)).

    Equals the total probability mass at t = 1 (so exactly 1 for complete
    schemes) and reduces to :func:`golomb_igf` when every utility is 1.
    Non-increasing and convex in t on the default domain.
    """
    t = _checked_t(t, extended)

    def terms():
        for p, u in zip(scheme.dist.probs, scheme.util.utils):
            e = 1.0 - u * (1.0 - t)
            if p == 0.0:
                if e <= 0.0:
                    raise DomainError(
                        f"zero probability with exponent {e} <= 0 at t = {t}"
                    )
                continue
            yield _pow(p, e)

    return math.fsum(terms())


def golomb_igf(
    dist: ProbabilityDistribution, t: float, *, extended: bool = False
) -> float:
    """Evaluate the unweighted generating function sum_i p_i ** t."""
    t = _checked_t(t, extended)

    def terms():
        for p in dist.probs:
            if p == 0.0:
                if t <= 0.0:
                    raise DomainError(f"zero probability with exponent t = {t} <= 0")
                continue
            yield _pow(p, t)

    return math.fsum(terms())


def hooda_bhaker_igf(
    scheme: UtilityInformationScheme, t: float, *, extended: bool = False
) -> float:
    """Evaluate the utility-premultiplied form sum_i u_i * p_i ** t."""
    t = _checked_t(t, extended)

    def terms():
        for p, u in zip(scheme.dist.probs, scheme.util.utils):
            if p == 0.0:
                if t <= 0.0:
                    raise DomainError(f"zero probability with exponent t = {t} <= 0")
                continue
            yield u * _pow(p, t)

    return math.fsum(terms())


def weighted_igf_derivative(
    scheme: UtilityInformationScheme, t: float, r: int, *, extended: bool = False
) -> float:
    """r-th t-derivative of :func:`weighted_igf`, computed analytically.

    Each surviving term is ``(u_i * ln p_i) ** r * p_i ** (1 - u_i * (1 - t))``.
    At t = 1 the value equals ``(-1) ** r`` times the r-th weighted
    self-information moment; in particular minus the first derivative at
    t = 1 is the weighted entropy.
    """
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidParameter(f"derivative order r must be a positive integer, got {r!r}")
    t = _checked_t(t, extended)

    def terms():
        for p, u in zip(scheme.dist.probs, scheme.util.utils):
            e = 1.0 - u * (1.0 - t)
            if p == 0.0:
                if e <= 0.0:
                    raise DomainError(
                        f"zero probability with exponent {e} <= 0 at t = {t}"
                    )
                continue
            yield (u * math.log(p)) ** r * _pow(p, e)

    return math.fsum(terms())


def shannon_entropy(
    dist: ProbabilityDistribution, base: LogBase = LogBase.NATURAL
) -> float:
    """Entropy -sum_i p_i * log(p_i), in nats or bits."""
    h = -math.fsum(p * math.log(p) for p in dist.probs if p > 0.0)
    return h / math.log(2.0) if base is LogBase.TWO else h


def weighted_entropy(
    scheme: UtilityInformationScheme, base: LogBase = LogBase.NATURAL
) -> float:
    """Utility-weighted entropy -sum_i u_i * p_i * log(p_i)."""
    h = -math.fsum(
        u * p * math.log(p)
        for p, u in zip(scheme.dist.probs, scheme.util.utils)
        if p > 0.0
    )
    return h / math.log(2.0) if base is LogBase.TWO else h


def _check_moment_order(r: int) -> None:
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise InvalidParameter(f"moment order r must be a non-negative integer, got {r!r}")


def self_information_moment(dist: ProbabilityDistribution, r: int) -> float:
    """r-th moment of self-information, sum_i p_i * (-log p_i) ** r.

    Non-negative for every r; r = 0 returns the total mass and r = 1 the
    Shannon entropy.
    """
    _check_moment_order(r)
    if r == 0:
        return math.fsum(dist.probs)
    return math.fsum(p * (-math.log(p)) ** r for p in dist.probs if p > 0.0)


def weighted_self_information_moment(
    scheme: UtilityInformationScheme, r: int
) -> float:
    """r-th weighted moment, sum_i p_i * (-u_i * log p_i) ** r.

    Non-negative for every r (the signed variant is ``(-1) ** r`` times
    this); r = 1 recovers the weighted entropy.
    """
    _check_moment_order(r)
    if r == 0:
        return math.fsum(scheme.dist.probs)
    return math.fsum(
        (-(u * math.log(p))) ** r * p
        for p, u in zip(scheme.dist.probs, scheme.util.utils)
        if p > 0.0
    )


# Second-order central stencils, as (offset, coefficient) pairs; the raw
# combination still needs dividing by h**r.
_CENTRAL_STENCILS: dict[int, tuple[tuple[int, float], ...]] = {
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
    4: ((-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)),
}

#: Default step sizes balancing truncation against cancellation error.
DEFAULT_FD_STEP = {1: 1e-5, 2: 1e-3, 3: 1e-3, 4: 1e-3}


def finite_difference_derivative(
    scheme: UtilityInformationScheme,
    t: float,
    r: int,
    h: float | None = None,
    *,
    extended: bool = False,
    richardson: bool = False,
) -> float:
    """Central-difference estimate of the r-th t-derivative of the weighted IGF.

    Supports r in 1..4 with O(h**2) truncation error; ``richardson=True``
    applies one extrapolation step, combining estimates at h and h/2 into an
    O(h**4) one.  The stencil reaches ``t +- 2h`` for r >= 3, so keep
    ``t - r*h`` inside the valid domain or evaluate with ``extended=True``.
    Exists as an independent cross-check of
    :func:`weighted_igf_derivative`, not as a replacement.
    """
    if r not in _CENTRAL_STENCILS:
        raise InvalidParameter(f"finite differences support r in 1..4, got {r!r}")
    if h is None:
        h = DEFAULT_FD_STEP[r]
    if isinstance(h, bool) or not isinstance(h, (int, float)) or not (0.0 < h < math.inf):
        raise InvalidParameter(f"step h must be a positive finite number, got {h!r}")
    t = _checked_t(t, extended)
    stencil = _CENTRAL_STENCILS[r]

    def estimate(step: float) -> float:
        reach = min(k for k, _ in stencil) * step
        if not extended and t + reach < 1.0:
            raise DomainError(
                f"stencil point t = {t + reach} falls below the default domain; "
                f"evaluate at t >= {1.0 - reach} or pass extended=True"
            )
        raw = math.fsum(
            c * weighted_igf(scheme, t + k * step, extended=extended)
            for k, c in stencil
        )
        return raw / step**r

    if not richardson:
        return estimate(float(h))
    coarse = estimate(float(h))
    fine = estimate(float(h) / 2.0)
    return (4.0 * fine - coarse) / 3.0
