import pytest

from capedu import EconState, ModelParams

# parameter set of the baseline phase-plane experiment
BASELINE = dict(s_k=0.4, s_r=0.1, delta_k=0.15, delta_r=0.25,
                alpha=0.2, beta=0.35)


@pytest.fixture
def baseline_params():
    return ModelParams(**BASELINE)


@pytest.fixture
def start_4_1():
    return EconState(K=4.0, E=1.0)
