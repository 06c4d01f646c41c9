"""Exponent intervals, weight functions and spectral measures on them.

A spectral measure lives on an interval of Lebesgue exponents [a, b] and
weights the p-norms of a function.  Three variants are supported: a Dirac
mass, a finite atomic measure, and an absolutely continuous measure given
by a density together with a quadrature rule.  All values are immutable
and every operation here is pure, so concurrent use is safe.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import ConvergenceError, DomainError, EvaluationError

__all__ = [
    "ExponentInterval",
    "PsiFunction",
    "QuadratureSpec",
    "DiracMeasure",
    "AtomicMeasure",
    "DensityMeasure",
    "SpectralMeasure",
    "support_bounds",
    "total_mass",
    "integrate",
    "integrate_with_error",
    "log_integrate_exp",
    "density_lebesgue",
    "density_inverse_square",
    "density_poly",
]


@dataclass(frozen=True)
class ExponentInterval:
    """An interval of Lebesgue exponents, 1 <= a < b <= inf."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a >= 1.0):
            raise DomainError(f"lower exponent must be >= 1, got {self.a}")
        if not (self.b > self.a):
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.b)

    def contains(self, p: float, slack: float = 1e-9) -> bool:
        if math.isinf(p):
            return self.unbounded
        return self.a - slack <= p <= self.b + slack

    def open_window(self, rel: float = 1e-6, cap: float = 1e6) -> tuple[float, float]:
        """Open sub-interval used by sup-scans: endpoints are never probed."""
        lo = self.a * (1.0 + rel)
        hi = cap if self.unbounded else self.b * (1.0 - rel)
        if hi <= lo:
            mid = 0.5 * (self.a + min(self.b, cap))
            return mid, mid
        return lo, hi


@dataclass(frozen=True)
class PsiFunction:
    """A continuous positive weight on an open exponent interval.

    Outside the open interval the weight is +inf, which makes the
    corresponding sup-ratio vanish there.
    """

    interval: ExponentInterval
    fn: Callable[[float], float]

    def __call__(self, p: float) -> float:
        iv = self.interval
        if not (iv.a < p < iv.b):
            return math.inf
        v = float(self.fn(p))
        if not v > 0.0 or math.isnan(v):
            raise EvaluationError(f"psi must be positive, got {v} at p={p}", node=p, value=v)
        return v

    @staticmethod
    def power(beta: float, interval: ExponentInterval) -> "PsiFunction":
        return PsiFunction(interval, lambda p: p**beta)

    @staticmethod
    def constant(interval: ExponentInterval, c: float = 1.0) -> "PsiFunction":
        if not c > 0:
            raise DomainError("constant psi must be positive")
        return PsiFunction(interval, lambda p: c)


@dataclass(frozen=True)
class QuadratureSpec:
    """Parameters of the adaptive Gauss-Kronrod rule for density measures.

    ``nodes`` is the number of initial panels on [a, b]; each panel is
    bisected adaptively until the relative tolerance is met.
    """

    nodes: int = 8
    scheme: str = "gk15"
    rel_tol: float = 1e-10
    max_panels: int = 4096

    def __post_init__(self) -> None:
        if self.nodes < 2:
            raise DomainError(f"node count must be >= 2, got {self.nodes}")
        if not self.rel_tol > 0:
            raise DomainError(f"relative tolerance must be positive, got {self.rel_tol}")
        if self.scheme != "gk15":
            raise DomainError(f"unknown quadrature scheme {self.scheme!r}")


@dataclass(frozen=True)
class DiracMeasure:
    """Unit point mass at exponent p0 (p0 = inf selects the sup norm)."""

    p0: float

    def __post_init__(self) -> None:
        if not self.p0 >= 1.0:
            raise DomainError(f"Dirac exponent must be >= 1, got {self.p0}")


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite atomic measure: positive weights c_k at exponents p_k."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise DomainError("atomic measure needs at least one atom")
        for p, c in self.points:
            if not p >= 1.0:
                raise DomainError(f"atom exponent must be >= 1, got {p}")
            if not c > 0.0:
                raise DomainError(f"atom weight must be positive, got {c} at p={p}")


@dataclass(frozen=True)
class DensityMeasure:
    """Absolutely continuous measure h(p) dp on a finite interval [a, b]."""

    h: Callable[[float], float]
    a: float
    b: float
    rule: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self) -> None:
        if math.isinf(self.b):
            raise DomainError("density measures require a finite upper exponent")
        if not (1.0 <= self.a < self.b):
            raise DomainError(f"need 1 <= a < b, got [{self.a}, {self.b}]")


SpectralMeasure = Union[DiracMeasure, AtomicMeasure, DensityMeasure]


def support_bounds(measure: SpectralMeasure) -> tuple[float, float]:
    """Smallest and largest exponent carrying mass."""
    if isinstance(measure, DiracMeasure):
        return measure.p0, measure.p0
    if isinstance(measure, AtomicMeasure):
        ps = [p for p, _ in measure.points]
        return min(ps), max(ps)
    return measure.a, measure.b


# 15-point Kronrod nodes with the embedded 7-point Gauss rule.
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


def _gk15(fn: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """One Gauss-Kronrod 15(7) panel; returns (value, error estimate)."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = _eval(fn, mid)
    k15 = _WGK[7] * fc
    g7 = _WG[3] * fc
    for i in range(7):
        x = half * _XGK[i]
        f1 = _eval(fn, mid - x)
        f2 = _eval(fn, mid + x)
        k15 += _WGK[i] * (f1 + f2)
        if i % 2 == 1:
            g7 += _WG[i // 2] * (f1 + f2)
    k15 *= half
    g7 *= half
    return k15, abs(k15 - g7)


def _eval(fn: Callable[[float], float], x: float) -> float:
    v = float(fn(x))
    if not math.isfinite(v):
        raise EvaluationError(f"integrand non-finite at p={x!r} (value {v})", node=x, value=v)
    return v


def _adaptive(fn: Callable[[float], float], lo: float, hi: float, rule: QuadratureSpec) -> tuple[float, float]:
    step = (hi - lo) / rule.nodes
    heap: list[tuple[float, float, float, float, float]] = []
    total = 0.0
    total_err = 0.0
    for i in range(rule.nodes):
        a = lo + i * step
        b = hi if i == rule.nodes - 1 else lo + (i + 1) * step
        v, e = _gk15(fn, a, b)
        heapq.heappush(heap, (-e, a, b, v, e))
        total += v
        total_err += e
    panels = rule.nodes
    while total_err > rule.rel_tol * max(abs(total), 1e-300):
        if panels >= rule.max_panels:
            raise ConvergenceError(
                f"quadrature stalled at {panels} panels "
                f"(estimate {total!r}, error {total_err!r})",
                best_estimate=total,
                error_estimate=total_err,
            )
        _, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        v1, e1 = _gk15(fn, a, m)
        v2, e2 = _gk15(fn, m, b)
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, a, m, v1, e1))
        heapq.heappush(heap, (-e2, m, b, v2, e2))
        panels += 1
    return total, total_err


def integrate_with_error(measure: SpectralMeasure, g: Callable[[float], float]) -> tuple[float, float]:
    """Integrate g against the measure; returns (value, error estimate).

    Dirac and atomic measures are exact sums with zero error.
    """
    if isinstance(measure, DiracMeasure):
        return _eval(g, measure.p0), 0.0
    if isinstance(measure, AtomicMeasure):
        return math.fsum(c * _eval(g, p) for p, c in measure.points), 0.0
    h = measure.h
    return _adaptive(lambda p: _eval(g, p) * float(h(p)), measure.a, measure.b, measure.rule)


def integrate(measure: SpectralMeasure, g: Callable[[float], float]) -> float:
    """Integral of g against the spectral measure."""
    return integrate_with_error(measure, g)[0]


def total_mass(measure: SpectralMeasure) -> float:
    """Mass of the full exponent interval (reported, never normalized away)."""
    return integrate(measure, lambda p: 1.0)


def log_integrate_exp(
    measure: SpectralMeasure,
    phi: Callable[[float], float],
    phi_max: float | None = None,
) -> float:
    """log of the integral of exp(phi(p)) against the measure, overflow-safe.

    ``phi_max`` should bound phi on the support; when omitted it is taken
    from the support endpoints (sufficient for the monotone exponents used
    throughout this package).
    """
    if isinstance(measure, DiracMeasure):
        return float(phi(measure.p0))
    if isinstance(measure, AtomicMeasure):
        terms = [math.log(c) + float(phi(p)) for p, c in measure.points]
        m = max(terms)
        if math.isinf(m):
            return m
        return m + math.log(math.fsum(math.exp(t - m) for t in terms))
    if phi_max is None:
        phi_max = max(float(phi(measure.a)), float(phi(measure.b)))
    if math.isinf(phi_max):
        return phi_max
    val, _ = _adaptive(
        lambda p: math.exp(float(phi(p)) - phi_max) * float(measure.h(p)),
        measure.a,
        measure.b,
        measure.rule,
    )
    if val <= 0.0:
        return -math.inf
    return phi_max + math.log(val)


def density_lebesgue(a: float, b: float, rule: QuadratureSpec | None = None) -> DensityMeasure:
    return DensityMeasure(lambda p: 1.0, a, b, rule or QuadratureSpec())


def density_inverse_square(a: float, b: float, rule: QuadratureSpec | None = None) -> DensityMeasure:
    return DensityMeasure(lambda p: p**-2, a, b, rule or QuadratureSpec())


def density_poly(alpha: float, a: float, b: float, rule: QuadratureSpec | None = None) -> DensityMeasure:
    return DensityMeasure(lambda p: p**alpha, a, b, rule or QuadratureSpec())
