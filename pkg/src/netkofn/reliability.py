"""System failure probability from a K distribution and an edge failure model."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import InvalidParameter, InvalidProbability, NegativeTime
from .recurrence import KDistribution

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class ConstantP:
    """Every edge is failed with probability ``p``, independent of time."""

    p: Number

    def __post_init__(self) -> None:
        if not 0 <= self.p <= 1:
            raise InvalidParameter(f"p={self.p} outside [0, 1]")

    def cdf(self, t: float) -> Number:
        return self.p

    def spec(self) -> str:
        return f"const:{self.p}"


@dataclass(frozen=True)
class Exponential:
    rate: float

    def __post_init__(self) -> None:
        if not self.rate > 0:
            raise InvalidParameter(f"rate must be positive, got {self.rate}")

    def cdf(self, t: float) -> float:
        return -math.expm1(-self.rate * t)

    def spec(self) -> str:
        return f"exp:{self.rate}"


@dataclass(frozen=True)
class Weibull:
    shape: float
    scale: float

    def __post_init__(self) -> None:
        if not (self.shape > 0 and self.scale > 0):
            raise InvalidParameter(f"shape and scale must be positive, got {self.shape}, {self.scale}")

    def cdf(self, t: float) -> float:
        return -math.expm1(-((t / self.scale) ** self.shape))

    def spec(self) -> str:
        return f"weibull:{self.shape},{self.scale}"


EdgeFailureModel = Union[ConstantP, Exponential, Weibull]


def parse_model(text: str) -> EdgeFailureModel:
    """Parse ``const:p``, ``exp:rate`` or ``weibull:shape,scale``."""
    name, _, args = text.partition(":")
    try:
        values = [float(a) for a in args.split(",")] if args else []
    except ValueError:
        raise InvalidParameter(f"bad model parameters in {text!r}") from None
    arity = {"const": 1, "exp": 1, "weibull": 2}
    if name not in arity or len(values) != arity[name]:
        raise InvalidParameter(f"unknown model spec {text!r}; expected const:p, exp:rate or weibull:shape,scale")
    if name == "const":
        return ConstantP(values[0])
    if name == "exp":
        return Exponential(values[0])
    return Weibull(values[0], values[1])


def edge_cdf(model: EdgeFailureModel, t: float) -> Number:
    if t < 0:
        raise NegativeTime(f"t={t} is negative")
    return model.cdf(t)


def system_failure_prob(dist: KDistribution, q: Number) -> Number:
    """Probability the graph is disconnected when each edge fails independently with prob ``q``.

    Sums C(M,k) q^k (1-q)^(M-k) P_k over k, indexing by the number of failed
    edges. Rational ``q`` gives an exact Fraction, anything else a float.
    """
    if not 0 <= q <= 1:
        raise InvalidProbability(f"q={q} outside [0, 1]")
    m = dist.m
    if isinstance(q, Rational):
        q = Fraction(q)
        return sum((dist.d[k] * q**k * (1 - q) ** (m - k) for k in range(1, m + 1)), Fraction(0))
    q = float(q)
    # d[k] = C(M,k) P_k exactly, so no rational P_k is needed here
    terms = [dist.d[k] * q**k * (1.0 - q) ** (m - k) for k in range(1, m + 1)]
    return math.fsum(terms)


@dataclass(frozen=True)
class FailureCurve:
    points: tuple[tuple[float, Number], ...]


def time_grid(t0: float, t1: float, steps: int) -> list[float]:
    if t0 < 0:
        raise NegativeTime(f"t0={t0} is negative")
    if not t1 > t0:
        raise InvalidParameter(f"need t0 < t1, got {t0}, {t1}")
    if steps < 1:
        raise InvalidParameter(f"steps must be positive, got {steps}")
    return [t0 + (t1 - t0) * i / steps for i in range(steps)] + [t1]


def failure_curve(dist: KDistribution, model: EdgeFailureModel, t0: float, t1: float, steps: int) -> FailureCurve:
    pts = tuple((t, system_failure_prob(dist, edge_cdf(model, t))) for t in time_grid(t0, t1, steps))
    return FailureCurve(pts)


def pmf(dist: KDistribution) -> list[Fraction]:
    """Exact P(K = k) for k = 1..M."""
    return dist.pmf()
