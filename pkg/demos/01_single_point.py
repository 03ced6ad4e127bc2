"""Score the entanglement of one working point, step by step.

Builds a parameter set on the entangled part of the reference landscape,
walks through the pipeline pieces (thermal occupations, drift matrix,
stability, stationary covariance), and prints the logarithmic negativity
of two mode pairs.
"""

import numpy as np

from magnomech import (Mode, ModePair, baseline_params, build_diffusion,
                       build_drift, entanglement_at, log_negativity,
                       reduce_covariance, solve_lyapunov, stability,
                       symplectic_eigenvalues, thermal_occupations)
from magnomech.params import TWO_PI

omega_1 = TWO_PI * 10e6

# the magnon drive sits above resonance (negative detuning) with a negative
# Kerr coefficient; the Coulomb coupling is strong but below the omega_1
# stability limit
params = baseline_params(delta_m=-omega_1, delta_K=-0.65 * omega_1,
                         G_c=0.7 * omega_1, delta_c=0.0)

occ = thermal_occupations(params)
print(f"bath occupations: mechanical {occ.n_1:.2f}, "
      f"cavity {occ.n_c:.2e}, magnon {occ.n_m:.2e}")

drift = build_drift(params)
is_stable, margin = stability(drift)
print(f"drift margin: {margin:,.0f} rad/s ({'stable' if is_stable else 'unstable'})")

covariance = solve_lyapunov(drift, build_diffusion(params, occ))
spectrum = symplectic_eigenvalues(covariance)
print("symplectic spectrum of V:", np.array2string(spectrum, precision=3))

for pair in (ModePair(Mode.M1, Mode.M2), ModePair(Mode.CAVITY, Mode.M1)):
    en = log_negativity(reduce_covariance(covariance, pair))
    print(f"E_N({pair.labels()[0]}, {pair.labels()[1]}) = {en:.4f}")

# the one-call form bundles the same pipeline with the stability gate
point = entanglement_at(params, ModePair(Mode.M1, Mode.M2))
print(f"entanglement_at: en={point.en:.4f} stable={point.stable}")

# pushing the Coulomb coupling past omega_1 turns the potential over;
# the gate reports instead of returning a bogus zero
unstable = entanglement_at(params.replace(G_c=1.2 * omega_1),
                           ModePair(Mode.M1, Mode.M2))
print(f"G_c = 1.2 omega_1: stable={unstable.stable} "
      f"(margin {unstable.margin:,.0f} rad/s)")
