import pytest

from magnomech import ModePair, Mode, baseline_params
from magnomech.params import TWO_PI

OMEGA_1 = TWO_PI * 10e6


def entangling_params(**overrides):
    """Working point on the entangled part of the reference landscape.

    The magnon drive sits above resonance with a negative Kerr coefficient,
    so the detunings enter with a minus sign; at G_c = 0.7 omega_1 and zero
    cavity detuning the mechanical pair is strongly entangled.
    """
    values = dict(delta_m=-OMEGA_1, delta_K=-0.65 * OMEGA_1,
                  G_c=0.7 * OMEGA_1, delta_c=0.0)
    values.update(overrides)
    return baseline_params(**values)


@pytest.fixture
def mech_pair():
    return ModePair(Mode.M1, Mode.M2)


@pytest.fixture
def photon_mech_pair():
    return ModePair(Mode.CAVITY, Mode.M1)
