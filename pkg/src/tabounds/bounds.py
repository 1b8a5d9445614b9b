"""Capacity bounds for qubit and bosonic thermal attenuators, plus the report.

Qubit bounds come from numerical maximization of coherent information over
diagonal inputs; the bosonic bounds are closed forms.  Everything is a pure
function of (eta, noise), so grids of report() calls can run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gaussian
from .gaussian import g_function
from .optimize import maximize_scalar
from .qubit import QubitAttenuatorParams, QubitState, coherent_information_qubit

QUBIT = "qubit"
GAUSSIAN = "gaussian"
GAUSSIAN_UPPER_NAMES = ("extended", "twist", "plob", "swat")


@dataclass(frozen=True)
class BoundsReport:
    """Lower bound, named upper bounds, their finite minimum, and the gap."""

    channel_kind: str
    eta: float
    noise: float
    lower: float
    uppers: dict[str, float]
    best_upper: float
    gap: float


def _log_ratio(eta: float) -> float:
    """log2(eta / (1 - eta)) as an extended real."""
    if eta >= 1.0:
        return math.inf
    if eta <= 0.0:
        return -math.inf
    return math.log2(eta / (1.0 - eta))


def qubit_lower(eta: float, noise: float, tol: float = 1e-9) -> float:
    """Single-letter coherent information of the qubit attenuator.

    Maximized over diagonal inputs (gamma = 0), which are numerically
    optimal for this channel; exactly 0 for eta <= 1/2.
    """
    params = QubitAttenuatorParams(eta, noise)
    if eta <= 0.5:
        return 0.0
    res = maximize_scalar(
        lambda p: coherent_information_qubit(QubitState(p), params, "direct"),
        0.0,
        1.0,
        tol,
    )
    return max(0.0, res.value)


def qubit_upper_extended(eta: float, noise: float, tol: float = 1e-9) -> float:
    """Capacity of the extended qubit channel: max over p of the extended
    coherent information at gamma = 0; exactly 0 for eta <= 1/2."""
    params = QubitAttenuatorParams(eta, noise)
    if eta <= 0.5:
        return 0.0
    res = maximize_scalar(
        lambda p: coherent_information_qubit(QubitState(p), params, "extended"),
        0.0,
        1.0,
        tol,
    )
    return max(0.0, res.value)


def qubit_lower_audit_2d(
    eta: float, noise: float, p_points: int = 41, gamma_points: int = 21
) -> float:
    """Slow audit of the diagonal-input restriction: maximize the direct
    coherent information over a full (p, |gamma|) grid instead of gamma = 0."""
    params = QubitAttenuatorParams(eta, noise)
    best = -math.inf
    for i in range(p_points):
        p = i / (p_points - 1)
        r_max = math.sqrt(p * (1.0 - p))
        for j in range(gamma_points):
            r = r_max * j / (gamma_points - 1)
            val = coherent_information_qubit(QubitState(p, r), params, "direct")
            if val > best:
                best = val
    return max(0.0, best)


def gauss_lower(eta: float, noise: float) -> float:
    """max{0, log2(eta/(1-eta)) - g(N)}; +inf at eta = 1."""
    if eta >= 1.0:
        return math.inf
    return max(0.0, _log_ratio(eta) - g_function(noise))


def gauss_upper_extended(eta: float, noise: float) -> float:
    """max{0, log2(eta/(1-eta)) + g(N)}: capacity of the extended channel.

    Exceeds gauss_lower by exactly 2 g(N) whenever both are positive.
    """
    if eta >= 1.0:
        return math.inf
    return max(0.0, _log_ratio(eta) + g_function(noise))


def gauss_upper_twist(eta: float, noise: float) -> float:
    """Bottleneck bound through the amplifier-then-attenuator factorization.

    Entanglement-breaking channels (N >= eta/(1-eta)) have zero capacity and
    report 0 directly; otherwise the bound is the quantum-limited-attenuator
    capacity max{0, log2(eta'/(1-eta'))} with eta' = eta - N(1-eta).
    """
    if eta >= 1.0:
        return math.inf
    params = gaussian.attenuator_as_phase_insensitive(eta, noise)
    if gaussian.is_entanglement_breaking(params):
        return 0.0
    factors = gaussian.twisted_decompose(params)
    return max(0.0, _log_ratio(factors.eta_prime))


def gauss_upper_plob(eta: float, noise: float) -> float:
    """max{0, -log2[(1-eta) eta^N] - g(N)}: two-way-assisted benchmark bound."""
    if eta >= 1.0:
        return math.inf
    if eta <= 0.0:
        return 0.0 if noise == 0.0 else math.inf
    term = -math.log2(1.0 - eta) - noise * math.log2(eta)
    return max(0.0, term - g_function(noise))


def gauss_upper_swat(eta: float, noise: float) -> float:
    """max{0, log2(eta/(1-eta)) - log2(N+1)}: unassisted benchmark bound."""
    if eta >= 1.0:
        return math.inf
    return max(0.0, _log_ratio(eta) - math.log2(noise + 1.0))


def report(channel_kind: str, eta: float, noise: float) -> BoundsReport:
    """All bounds for one channel, the tightest finite upper, and the gap.

    Gaussian channels in the entanglement-breaking regime have exactly zero
    capacity, so every entry is reported as 0 there.  At eta = 1 the bosonic
    formulas genuinely diverge; both bounds are +inf and the gap is reported
    as 0 since the capacity is pinned (infinite) rather than uncertain.
    """
    if channel_kind == QUBIT:
        QubitAttenuatorParams(eta, noise)  # range validation
        lower = qubit_lower(eta, noise)
        uppers = {"extended": qubit_upper_extended(eta, noise)}
    elif channel_kind == GAUSSIAN:
        if not 0.0 <= eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {eta!r}")
        if noise < 0.0:
            raise ValueError(f"noise must be nonnegative, got {noise!r}")
        if eta >= 1.0:
            lower = math.inf
            uppers = {name: math.inf for name in GAUSSIAN_UPPER_NAMES}
        elif noise >= eta / (1.0 - eta):
            lower = 0.0
            uppers = {name: 0.0 for name in GAUSSIAN_UPPER_NAMES}
        else:
            lower = gauss_lower(eta, noise)
            uppers = {
                "extended": gauss_upper_extended(eta, noise),
                "twist": gauss_upper_twist(eta, noise),
                "plob": gauss_upper_plob(eta, noise),
                "swat": gauss_upper_swat(eta, noise),
            }
    else:
        raise ValueError(f"channel kind must be 'qubit' or 'gaussian', got {channel_kind!r}")

    finite = [v for v in uppers.values() if math.isfinite(v)]
    best_upper = min(finite) if finite else math.inf
    if math.isinf(best_upper) and math.isinf(lower):
        gap = 0.0
    else:
        gap = max(0.0, best_upper - lower)
    return BoundsReport(
        channel_kind=channel_kind,
        eta=eta,
        noise=noise,
        lower=lower,
        uppers=uppers,
        best_upper=best_upper,
        gap=gap,
    )
