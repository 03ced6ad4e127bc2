"""Mechanical-pair entanglement landscapes versus Coulomb coupling.

Reruns the bundled landscape configs (cavity detuning against
photon-magnon coupling) at reduced resolution and prints how the peak
negativity grows with the electrostatic coupling between the resonators:
nothing at all without it, a small island at 0.1 omega_1, about 0.3 near
0.7 omega_1.  Full-resolution CSV output goes next to this script.
"""

from dataclasses import replace
from pathlib import Path

import numpy as np

from magnomech import AxisSpec, run_sweep, save_result
from magnomech.config import bundled_config_path, load_sweep_spec

HERE = Path(__file__).resolve().parent

for tag in ("000", "010", "030", "070"):
    spec = load_sweep_spec(bundled_config_path(f"coulomb_landscape_gc{tag}.cfg"))
    coarse = replace(spec, axes=tuple(
        AxisSpec(a.param, a.lo, a.hi, 41, a.scale) for a in spec.axes))
    result = run_sweep(coarse)
    finite = result.en[np.isfinite(result.en)]
    peak = finite.max() if finite.size else 0.0
    unstable = result.status.count("unstable")
    print(f"G_c = 0.{tag[1:]} omega_1: peak E_N = {peak:.4f} "
          f"({unstable} of {len(result.status)} grid points unstable)")

# persist one landscape at full resolution for plotting
spec = load_sweep_spec(bundled_config_path("coulomb_landscape_gc070.cfg"))
csv_path, json_path = save_result(run_sweep(spec, jobs=2),
                                  HERE / "coulomb_landscape_gc070.csv")
print(f"wrote {csv_path.name} and {json_path.name}")
