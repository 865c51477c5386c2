"""Finite discrete probability distributions paired with positive utilities.

A scheme couples a probability vector with a utility vector of the same
length.  Distributions come in two kinds: ``complete`` vectors must sum to 1
within ``COMPLETENESS_TOL``, ``generalized`` vectors may sum to anything in
(0, 1].  Zero probabilities are allowed; utilities must be strictly positive.
Every type validates itself on construction and is immutable afterwards.

Three parametric families (uniform, geometric, power law) can be realized
into explicit vectors.  The infinite-support families require an explicit
truncation length so that nothing silently approximates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import (
    AllZeroProbabilities,
    EmptyInput,
    InvalidParameter,
    LengthMismatch,
    NegativeProbability,
    NonPositiveUtility,
    ProbabilityAboveOne,
    SumExceedsOne,
    SumNotOne,
    TruncationRequired,
    ValidationError,
)

#: Absolute tolerance on |sum(p) - 1| for complete distributions, and the
#: slack allowed above 1 for generalized ones.
COMPLETENESS_TOL = 1e-9


class Kind(Enum):
    """Whether a probability vector must sum to 1 or may sum to less."""

    COMPLETE = "complete"
    GENERALIZED = "generalized"


def _as_float_tuple(values: Iterable[object], what: str) -> tuple[float, ...]:
    out = []
    for x in values:
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ValidationError(f"{what} entries must be numbers, got {x!r}")
        out.append(float(x))
    return tuple(out)


@dataclass(frozen=True)
class ProbabilityDistribution:
    """An immutable probability vector with its completeness kind.

    Parameters
    ----------
    probs:
        Probabilities, each in [0, 1].  Zeros are permitted.
    kind:
        ``Kind.COMPLETE`` requires the sum to be 1 within
        ``COMPLETENESS_TOL``; ``Kind.GENERALIZED`` requires it to be
        positive and at most 1 (plus the same slack).
    """

    probs: tuple[float, ...]
    kind: Kind

    def __post_init__(self) -> None:
        probs = _as_float_tuple(self.probs, "probability")
        object.__setattr__(self, "probs", probs)
        if not isinstance(self.kind, Kind):
            raise ValidationError(f"kind must be a Kind, got {self.kind!r}")
        if len(probs) == 0:
            raise EmptyInput("probability vector must not be empty")
        # min/max instead of a per-element loop: vectors can hold 1e6 entries.
        if not (min(probs) >= 0.0):
            raise NegativeProbability(
                f"probabilities must be >= 0, smallest entry is {min(probs)!r}"
            )
        if not (max(probs) <= 1.0):
            raise ProbabilityAboveOne(
                f"probabilities must be <= 1, largest entry is {max(probs)!r}"
            )
        total = math.fsum(probs)
        if self.kind is Kind.COMPLETE:
            # NaN entries fail this comparison too and end up here.
            if not (abs(total - 1.0) <= COMPLETENESS_TOL):
                raise SumNotOne(
                    f"complete distribution must sum to 1 within "
                    f"{COMPLETENESS_TOL}, got sum {total!r}"
                )
        else:
            if not (total <= 1.0 + COMPLETENESS_TOL):
                raise SumExceedsOne(
                    f"generalized distribution must sum to at most 1, "
                    f"got sum {total!r}"
                )
            if not (total > 0.0):
                raise AllZeroProbabilities(
                    "generalized distribution must have positive total mass"
                )

    def __len__(self) -> int:
        return len(self.probs)

    @property
    def total(self) -> float:
        """Exactly rounded sum of the probability entries."""
        return math.fsum(self.probs)


@dataclass(frozen=True)
class UtilityDistribution:
    """An immutable vector of strictly positive, finite utilities."""

    utils: tuple[float, ...]

    def __post_init__(self) -> None:
        utils = _as_float_tuple(self.utils, "utility")
        object.__setattr__(self, "utils", utils)
        if len(utils) == 0:
            raise EmptyInput("utility vector must not be empty")
        for u in utils:
            if not (0.0 < u < math.inf):
                raise NonPositiveUtility(
                    f"utilities must be positive finite numbers, got {u!r}"
                )

    def __len__(self) -> int:
        return len(self.utils)


@dataclass(frozen=True)
class UtilityInformationScheme:
    """A probability distribution paired with per-outcome utilities.

    Optional ``labels`` name the outcomes; they take no part in any
    computation and are only carried through serialization.
    """

    dist: ProbabilityDistribution
    util: UtilityDistribution
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.dist, ProbabilityDistribution):
            raise ValidationError("dist must be a ProbabilityDistribution")
        if not isinstance(self.util, UtilityDistribution):
            raise ValidationError("util must be a UtilityDistribution")
        if len(self.dist) != len(self.util):
            raise LengthMismatch(
                f"{len(self.dist)} probabilities but {len(self.util)} utilities"
            )
        if self.labels is not None:
            labels = tuple(self.labels)
            for lab in labels:
                if not isinstance(lab, str):
                    raise ValidationError(f"labels must be strings, got {lab!r}")
            if len(labels) != len(self.dist):
                raise LengthMismatch(
                    f"{len(self.dist)} probabilities but {len(labels)} labels"
                )
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.dist)


def make_complete(probs: Sequence[float]) -> ProbabilityDistribution:
    """Build a complete distribution (entries must sum to 1)."""
    return ProbabilityDistribution(tuple(probs), Kind.COMPLETE)


def make_generalized(probs: Sequence[float]) -> ProbabilityDistribution:
    """Build a generalized distribution (entries may sum to less than 1)."""
    return ProbabilityDistribution(tuple(probs), Kind.GENERALIZED)


def make_scheme(
    probs: Sequence[float],
    utils: Sequence[float],
    *,
    generalized: bool = False,
    labels: Sequence[str] | None = None,
) -> UtilityInformationScheme:
    """Build a scheme from parallel probability and utility vectors."""
    if len(tuple(probs)) != len(tuple(utils)):
        raise LengthMismatch(
            f"{len(tuple(probs))} probabilities but {len(tuple(utils))} utilities"
        )
    dist = make_generalized(probs) if generalized else make_complete(probs)
    return UtilityInformationScheme(
        dist, UtilityDistribution(tuple(utils)),
        labels=None if labels is None else tuple(labels),
    )


def constant_utility_scheme(
    dist: ProbabilityDistribution, u: float
) -> UtilityInformationScheme:
    """Pair a distribution with the constant utility vector (u, u, ...)."""
    return UtilityInformationScheme(dist, UtilityDistribution((float(u),) * len(dist)))


class FamilyKind(Enum):
    UNIFORM = "uniform"
    GEOMETRIC = "geometric"
    BETA_POWER = "beta_power"


@dataclass(frozen=True)
class ParametricFamily:
    """One of the three built-in distribution families.

    ``uniform(n)`` puts mass 1/n on n outcomes.  ``geometric(p)`` puts mass
    (1-p) * p**i on outcome i = 0, 1, 2, ...  ``beta_power(beta)`` puts mass
    proportional to i**-beta on outcome i = 1, 2, 3, ... and needs beta > 1
    to normalize.
    """

    kind: FamilyKind
    n: int | None = None
    p: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        if self.kind is FamilyKind.UNIFORM:
            n = self.n
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise InvalidParameter(f"uniform family needs integer n >= 1, got {n!r}")
        elif self.kind is FamilyKind.GEOMETRIC:
            p = self.p
            if not isinstance(p, (int, float)) or isinstance(p, bool) or not (0.0 < float(p) < 1.0):
                raise InvalidParameter(f"geometric family needs 0 < p < 1, got {p!r}")
            object.__setattr__(self, "p", float(p))
        elif self.kind is FamilyKind.BETA_POWER:
            b = self.beta
            if not isinstance(b, (int, float)) or isinstance(b, bool) or not (float(b) > 1.0) or math.isinf(float(b)):
                raise InvalidParameter(f"power-law family needs beta > 1, got {b!r}")
            object.__setattr__(self, "beta", float(b))
        else:
            raise InvalidParameter(f"unknown family kind {self.kind!r}")

    @classmethod
    def uniform(cls, n: int) -> "ParametricFamily":
        return cls(FamilyKind.UNIFORM, n=n)

    @classmethod
    def geometric(cls, p: float) -> "ParametricFamily":
        return cls(FamilyKind.GEOMETRIC, p=p)

    @classmethod
    def beta_power(cls, beta: float) -> "ParametricFamily":
        return cls(FamilyKind.BETA_POWER, beta=beta)


def _check_truncation(truncation: int | None) -> int:
    if truncation is None:
        raise TruncationRequired(
            "this family has infinite support; pass a truncation length"
        )
    if isinstance(truncation, bool) or not isinstance(truncation, int) or truncation < 1:
        raise InvalidParameter(f"truncation must be an integer >= 1, got {truncation!r}")
    return truncation


def realize_family(
    family: ParametricFamily, truncation: int | None = None
) -> ProbabilityDistribution:
    """Materialize a family as an explicit probability vector.

    The uniform family is finite and comes back complete; ``truncation`` is
    ignored for it.  The geometric and power-law families are truncated to
    the first ``truncation`` outcomes and come back generalized, with total
    mass 1 - p**T and sum(i**-beta, i <= T)/zeta(beta) respectively.
    """
    if family.kind is FamilyKind.UNIFORM:
        n = family.n
        assert n is not None
        return ProbabilityDistribution((1.0 / n,) * n, Kind.COMPLETE)

    t = _check_truncation(truncation)
    if family.kind is FamilyKind.GEOMETRIC:
        p = family.p
        assert p is not None
        q = 1.0 - p
        return ProbabilityDistribution(
            tuple(q * p**i for i in range(t)), Kind.GENERALIZED
        )

    # power law: normalize by the full infinite-support constant, so the
    # truncated vector is generalized with mass a bit under 1
    from .closed_forms import zeta

    beta = family.beta
    assert beta is not None
    z = zeta(beta)
    if t <= 4096:
        probs = tuple(i ** (-beta) / z for i in range(1, t + 1))
    else:
        import numpy as np

        arr = np.arange(1, t + 1, dtype=np.float64) ** (-beta) / z
        probs = tuple(arr.tolist())
    return ProbabilityDistribution(probs, Kind.GENERALIZED)


_SCHEME_KEYS = {"probabilities", "utilities", "kind", "labels"}


def scheme_from_dict(doc: Mapping[str, object]) -> UtilityInformationScheme:
    """Build a scheme from a parsed JSON document.

    Expected shape: ``{"probabilities": [...], "utilities": [...]?,
    "kind": "complete"|"generalized"?, "labels": [...]?}``.  Missing
    utilities default to 1 everywhere; missing kind defaults to complete.
    Unknown keys are rejected so typos do not pass silently.
    """
    if not isinstance(doc, Mapping):
        raise ValidationError(f"scheme document must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _SCHEME_KEYS
    if unknown:
        raise ValidationError(f"unknown scheme keys: {sorted(unknown)}")
    if "probabilities" not in doc:
        raise ValidationError('scheme document must contain "probabilities"')
    probs = doc["probabilities"]
    if not isinstance(probs, (list, tuple)):
        raise ValidationError('"probabilities" must be an array')

    utils = doc.get("utilities")
    if utils is None:
        utils = [1.0] * len(probs)
    elif not isinstance(utils, (list, tuple)):
        raise ValidationError('"utilities" must be an array')

    kind = doc.get("kind", "complete")
    if kind not in ("complete", "generalized"):
        raise ValidationError(f'"kind" must be "complete" or "generalized", got {kind!r}')

    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, (list, tuple)):
        raise ValidationError('"labels" must be an array of strings')

    return make_scheme(
        probs, utils,
        generalized=(kind == "generalized"),
        labels=labels,
    )


def scheme_to_dict(scheme: UtilityInformationScheme) -> dict[str, object]:
    """Inverse of :func:`scheme_from_dict`; always writes explicit fields."""
    doc: dict[str, object] = {
        "probabilities": list(scheme.dist.probs),
        "utilities": list(scheme.util.utils),
        "kind": scheme.dist.kind.value,
    }
    if scheme.labels is not None:
        doc["labels"] = list(scheme.labels)
    return doc
