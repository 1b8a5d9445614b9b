#!/usr/bin/env python3
# Factoring phase-insensitive Gaussian channels as a quantum-limited
# amplifier followed by a quantum-limited attenuator.
#
# Any channel (tau, y) below the entanglement-breaking threshold y < 1 + tau
# factors with gain kappa' = tau / eta' and attenuation eta' = (1+tau-y)/2.
# Because capacities obey the bottleneck inequality, the exactly known
# capacity of the trailing quantum-limited attenuator caps the capacity of
# the whole channel.

import numpy as np

from tabounds import (
    GaussianState,
    PhaseInsensitiveParams,
    apply_amplifier_gaussian,
    apply_attenuator_gaussian,
    apply_phase_insensitive,
    attenuator_as_phase_insensitive,
    is_entanglement_breaking,
    twisted_decompose,
)

rng = np.random.default_rng(7)

cases = [
    ("attenuator eta=0.9, N=0.1", attenuator_as_phase_insensitive(0.9, 0.1)),
    ("attenuator eta=0.7, N=0.5", attenuator_as_phase_insensitive(0.7, 0.5)),
    ("additive noise tau=1, y=0.5", PhaseInsensitiveParams(1.0, 0.5)),
]

for label, params in cases:
    factors = twisted_decompose(params)
    print(f"{label}: eta' = {factors.eta_prime:.6f}, kappa' = {factors.kappa_prime:.6f}")

    # Check the factorization on a random squeezed thermal state.
    theta = rng.uniform(0, 2 * np.pi)
    rot = np.array([[np.cos(theta), np.sin(theta)], [-np.sin(theta), np.cos(theta)]])
    v = 3.0 * rot @ np.diag([np.e, 1 / np.e]) @ rot.T
    state = GaussianState(rng.normal(size=2), (v + v.T) / 2)

    direct = apply_phase_insensitive(state, params)
    rebuilt = apply_attenuator_gaussian(
        apply_amplifier_gaussian(state, factors.kappa_prime, 0.0), factors.eta_prime, 0.0
    )
    err = max(np.abs(direct.cov - rebuilt.cov).max(), np.abs(direct.mean - rebuilt.mean).max())
    print(f"  reconstruction error on a random state: {err:.2e}")

print()
print("Past the threshold the factorization stops existing, which is no loss:")
print("entanglement-breaking channels have zero quantum capacity anyway.")
for eta, noise in ((0.4, 1.0), (0.6, 2.0)):
    params = attenuator_as_phase_insensitive(eta, noise)
    print(f"eta={eta}, N={noise}: entanglement-breaking = {is_entanglement_breaking(params)}")
    try:
        twisted_decompose(params)
    except ValueError as exc:
        print(f"  twisted_decompose -> ValueError: {exc}")
