"""Square-MQAM error-rate analytics over Rayleigh fading.

The average bit error rate as a function of the mean bit SNR is computed
in moment-generating-function form: averaging the two-term AWGN symbol
error expression over an exponential SNR density collapses each Q-function
integral into a finite integral of (1 + c/sin^2(phi))^-1. Inverting that
curve under a BER constraint gives the required mean bit SNR and, from it,
the minimum average received power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .numerics import DEFAULT_QUADRATURE, QuadratureSpec, gaussian_q, integrate, solve_monotone

__all__ = [
    "ALLOWED_BITS_PER_SYMBOL",
    "ModulationScheme",
    "BerTarget",
    "RadioConfig",
    "InfeasibleTargetError",
    "avg_ber",
    "required_gamma_b",
    "min_received_power_watts",
    "instantaneous_ser",
]

# Square constellations only: even exponent, 2 .. 10 bits per symbol.
ALLOWED_BITS_PER_SYMBOL = (2, 4, 6, 8, 10)

# Bisection bracket cap; any feasible BER target is reached far earlier
# because the Rayleigh-averaged BER decays like 1/snr.
_BRACKET_CAP = 2.0**60

DEFAULT_BER_TOL = 1e-10


class InfeasibleTargetError(ValueError):
    """BER target cannot be met by the given constellation at any SNR."""


@dataclass(frozen=True)
class ModulationScheme:
    """Square MQAM constellation with b bits per symbol (M = 2^b points)."""

    b: int

    def __post_init__(self) -> None:
        if self.b not in ALLOWED_BITS_PER_SYMBOL:
            raise ValueError(
                f"b must be one of {ALLOWED_BITS_PER_SYMBOL} (square MQAM), got {self.b}"
            )

    @property
    def m(self) -> int:
        return 2**self.b


@dataclass(frozen=True)
class BerTarget:
    """Average-BER constraint; must lie below the zero-SNR ceiling 0.375."""

    pb_bar: float

    def __post_init__(self) -> None:
        if not 0.0 < self.pb_bar < 0.375:
            raise ValueError(f"pb_bar must lie in (0, 0.375), got {self.pb_bar}")


@dataclass(frozen=True)
class RadioConfig:
    """Receiver noise and framing parameters."""

    n0_w_per_hz: float = 4e-21  # one-sided noise spectral density (W/Hz)
    bandwidth_hz: float = 1e4
    packet_bits: int = 20000  # payload bits per packet

    def __post_init__(self) -> None:
        if self.n0_w_per_hz <= 0:
            raise ValueError(f"n0_w_per_hz must be positive, got {self.n0_w_per_hz}")
        if self.bandwidth_hz <= 0:
            raise ValueError(f"bandwidth_hz must be positive, got {self.bandwidth_hz}")
        if self.packet_bits <= 0:
            raise ValueError(f"packet_bits must be positive, got {self.packet_bits}")


def _mgf_fraction(gamma_b_bar: float, scheme: ModulationScheme) -> float:
    """Coefficient c in the integrand sin^2/(sin^2 + c)."""
    m = scheme.m
    return 3.0 * gamma_b_bar * scheme.b / (2.0 * (m - 1))


def avg_ber(
    gamma_b_bar: float,
    scheme: ModulationScheme,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Average BER of square MQAM over Rayleigh fading at mean bit SNR gamma_b_bar.

    Difference of two finite integrals of sin^2(phi)/(sin^2(phi) + c) over
    [0, pi/2] and [0, pi/4]; the second term is subtracted (it descends
    from the squared-Q term of the symbol error expression). Strictly
    decreasing in gamma_b_bar, tending to 0 as the SNR grows.
    """
    if gamma_b_bar < 0:
        raise ValueError(f"gamma_b_bar must be nonnegative, got {gamma_b_bar}")
    b = scheme.b
    a = 1.0 - 1.0 / math.sqrt(scheme.m)
    c = _mgf_fraction(gamma_b_bar, scheme)

    def integrand(phi: float) -> float:
        s2 = math.sin(phi) ** 2
        return s2 / (s2 + c)

    term_half = (4.0 * a / (math.pi * b)) * integrate(integrand, 0.0, math.pi / 2, spec)
    term_quarter = (4.0 * a * a / (math.pi * b)) * integrate(integrand, 0.0, math.pi / 4, spec)
    return term_half - term_quarter


@lru_cache(maxsize=None)
def _required_gamma_b(pb_bar: float, b: int, tol: float, node_count: int) -> float:
    scheme = ModulationScheme(b)
    spec = QuadratureSpec(node_count)
    ceiling = avg_ber(0.0, scheme, spec)
    if pb_bar >= ceiling:
        if abs(pb_bar - ceiling) <= tol:
            return 0.0
        raise InfeasibleTargetError(
            f"BER target {pb_bar} is at or above the zero-SNR ceiling "
            f"{ceiling} for b = {b}"
        )
    hi = 1.0
    while avg_ber(hi, scheme, spec) >= pb_bar:
        hi *= 2.0
        if hi > _BRACKET_CAP:
            raise InfeasibleTargetError(
                f"could not bracket BER target {pb_bar} for b = {b} below SNR {_BRACKET_CAP}"
            )
    return solve_monotone(lambda g: avg_ber(g, scheme, spec), pb_bar, 0.0, hi, tol)


def required_gamma_b(
    target: BerTarget,
    scheme: ModulationScheme,
    tol: float = DEFAULT_BER_TOL,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Mean bit SNR at which avg_ber meets the target, by monotone bisection.

    The bracket auto-expands upward from 1 by doubling. Results are
    memoized per (target, constellation, tolerance) pair since they are
    independent of distance and transmit power.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return _required_gamma_b(target.pb_bar, scheme.b, tol, spec.node_count)


def min_received_power_watts(
    gamma_b_bar: float, scheme: ModulationScheme, radio: RadioConfig
) -> float:
    """Minimum average received power (W) sustaining the given mean bit SNR."""
    if gamma_b_bar < 0:
        raise ValueError(f"gamma_b_bar must be nonnegative, got {gamma_b_bar}")
    return gamma_b_bar * radio.n0_w_per_hz * radio.bandwidth_hz * scheme.b


def instantaneous_ser(gamma_s: float, scheme: ModulationScheme) -> float:
    """AWGN symbol error probability of square MQAM at symbol SNR gamma_s.

    Two-term expression 4*a*Q(z) - 4*a^2*Q(z)^2 with a = 1 - 1/sqrt(M)
    and z = sqrt(3*gamma_s/(M - 1)). Always in [0, 1).
    """
    if gamma_s < 0:
        raise ValueError(f"gamma_s must be nonnegative, got {gamma_s}")
    m = scheme.m
    a = 1.0 - 1.0 / math.sqrt(m)
    q = gaussian_q(math.sqrt(3.0 * gamma_s / (m - 1)))
    return 4.0 * a * q - 4.0 * a * a * q * q
