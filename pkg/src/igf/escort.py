"""Power (escort) transforms of distributions and the scaling identity.

Raising every probability to a power beta > 0 and renormalizing yields the
escort distribution p_i**beta / sum_j p_j**beta, which is always complete
regardless of the input's kind.  Keeping the powered vector unnormalized
instead relates to the escort through a closed identity: for a constant
utility u and s = 1 - u * (1 - t),

    sum_i p_i**(beta*s)  =  I(escort, u, t) * (sum_j p_j**beta) ** s

where I is the weighted generating function.  ``verify_scaling_identity``
evaluates both sides independently and reports whether they agree to the
relative tolerance ``SCALING_IDENTITY_RTOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import (
    Kind,
    ProbabilityDistribution,
    UtilityDistribution,
    UtilityInformationScheme,
)
from .errors import AllZeroProbabilities, DomainError, InvalidParameter, ValidationError
from .generating_functions import _checked_t, _pow, weighted_igf

#: Relative tolerance for declaring the scaling identity verified.
SCALING_IDENTITY_RTOL = 1e-10


def _check_beta(beta: float) -> float:
    if isinstance(beta, bool) or not isinstance(beta, (int, float)) or not (0.0 < beta < math.inf):
        raise InvalidParameter(f"escort power must be positive and finite, got {beta!r}")
    return float(beta)


def _check_u(u: float) -> float:
    if isinstance(u, bool) or not isinstance(u, (int, float)) or not (0.0 < u < math.inf):
        raise InvalidParameter(f"constant utility must be positive and finite, got {u!r}")
    return float(u)


@dataclass(frozen=True)
class EscortPair:
    """An escort distribution together with the mass that normalized it.

    ``mass`` is sum_j p_j**beta of the source vector, so ``normalized``
    scaled by ``mass`` recovers the raw powered vector.
    """

    normalized: ProbabilityDistribution
    mass: float
    beta: float

    def __post_init__(self) -> None:
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise ValidationError(f"escort mass must be positive, got {self.mass!r}")
        total = math.fsum(self.normalized.probs)
        if not (abs(total - 1.0) <= 1e-12):
            raise ValidationError(
                f"escort distribution must sum to 1 within 1e-12, got {total!r}"
            )


def escort_transform(dist: ProbabilityDistribution, beta: float) -> EscortPair:
    """Normalize the powered vector p_i**beta into a complete distribution.

    Works for generalized inputs as well; the only failure mode is a vector
    whose entries are all zero after powering.
    """
    beta = _check_beta(beta)
    powered = [p**beta for p in dist.probs]
    mass = math.fsum(powered)
    if mass == 0.0:
        raise AllZeroProbabilities(
            "all probabilities are zero (or underflow to zero) after powering"
        )
    normalized = ProbabilityDistribution(
        tuple(w / mass for w in powered), Kind.COMPLETE
    )
    return EscortPair(normalized=normalized, mass=mass, beta=beta)


def generalized_igf(
    dist: ProbabilityDistribution,
    util: UtilityDistribution,
    beta: float,
    t: float,
    *,
    extended: bool = False,
) -> float:
    """Weighted IGF of the escort of ``dist`` under ``util``."""
    pair = escort_transform(dist, beta)
    scheme = UtilityInformationScheme(pair.normalized, util)
    return weighted_igf(scheme, t, extended=extended)


def unnormalized_power_igf(
    dist: ProbabilityDistribution,
    u: float,
    beta: float,
    t: float,
    *,
    extended: bool = False,
) -> float:
    """Weighted IGF of the raw powered vector: sum_i p_i ** (beta * s).

    Constant utility only; s = 1 - u * (1 - t) as usual.  Zero entries
    contribute nothing as long as their exponent stays positive.
    """
    u = _check_u(u)
    beta = _check_beta(beta)
    t = _checked_t(t, extended)
    s = 1.0 - u * (1.0 - t)

    def terms():
        for p in dist.probs:
            if p == 0.0:
                if s <= 0.0:
                    raise DomainError(
                        f"zero probability with exponent beta * s = {beta * s} <= 0"
                    )
                continue
            yield _pow(p, beta * s)

    return math.fsum(terms())


@dataclass(frozen=True)
class ScalingIdentityReport:
    """Both sides of the scaling identity and whether they agree."""

    lhs: float
    rhs: float
    abs_diff: float
    passed: bool


def verify_scaling_identity(
    dist: ProbabilityDistribution,
    u: float,
    beta: float,
    t: float,
    *,
    extended: bool = False,
) -> ScalingIdentityReport:
    """Check sum p**(beta*s) == I(escort, u, t) * mass**s numerically.

    The two sides are computed along independent code paths (direct powered
    sum versus escort normalization followed by the weighted IGF).  They are
    declared in agreement when |lhs - rhs| <= SCALING_IDENTITY_RTOL *
    max(1, |lhs|).
    """
    u = _check_u(u)
    lhs = unnormalized_power_igf(dist, u, beta, t, extended=extended)
    util = UtilityDistribution((u,) * len(dist))
    pair = escort_transform(dist, beta)
    s = 1.0 - u * (1.0 - _checked_t(t, extended))
    rhs = generalized_igf(dist, util, beta, t, extended=extended) * _pow(pair.mass, s)
    abs_diff = abs(lhs - rhs)
    passed = abs_diff <= SCALING_IDENTITY_RTOL * max(1.0, abs(lhs))
    return ScalingIdentityReport(lhs=lhs, rhs=rhs, abs_diff=abs_diff, passed=passed)
