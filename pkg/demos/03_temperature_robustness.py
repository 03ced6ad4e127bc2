"""How long does mechanical entanglement survive against the bath?

Traces E_N along the bundled temperature lines and bisects for the exact
survival temperature of each.  Stronger Coulomb coupling buys an order of
magnitude in temperature; the weakly coupled line dies in the tens of
millikelvin.
"""

import numpy as np

from magnomech import Mode, ModePair, entanglement_at, find_threshold
from magnomech.config import bundled_config_path, load_sweep_spec

PAIR = ModePair(Mode.M1, Mode.M2)

LINES = ["temp_line_gc010_gm11p3.cfg",
         "temp_line_gc050_geff080_gm11p3.cfg",
         "temp_line_gc090_gm11p3.cfg",
         "temp_line_gc090_gm14p0.cfg"]

for name in LINES:
    spec = load_sweep_spec(bundled_config_path(name))
    base = spec.base
    samples = []
    for temperature in np.geomspace(0.002, spec.axes[0].hi, 6):
        point = entanglement_at(base.replace(temperature=float(temperature)),
                                PAIR)
        samples.append(f"{temperature*1e3:7.1f} mK -> {point.en:.4f}")
    survival = find_threshold(base, "temperature", 0.002, 5.0, PAIR)
    print(name)
    for line in samples:
        print("   ", line)
    print(f"    survival temperature: {survival*1e3:.1f} mK")
