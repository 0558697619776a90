import math
import pytest
import numpy as np
from utils.bodies import make_quarter_disk, make_regular_reduced_polygon, make_reuleaux_odd_gon
from utils.sphere import DEFAULT_TOLERANCE, SpherePoint

"""
Shared fixtures: the tolerance, a seeded generator and the standard bodies.
"""


@pytest.fixture
def tol():
    return DEFAULT_TOLERANCE

@pytest.fixture
def rng():
    return np.random.default_rng(1)

@pytest.fixture
def north():
    return SpherePoint(0.0, 0.0, 1.0)

@pytest.fixture
def reuleaux_triangle(north):
    return make_reuleaux_odd_gon(north, 3, 1.0)

@pytest.fixture
def reduced_triangle(north):
    return make_regular_reduced_polygon(north, 3, 0.8)

@pytest.fixture
def quarter_disk(north):
    return make_quarter_disk(north, math.pi / 3)

# Runs the command line inside a scratch folder, returns (exit status, stdout)
@pytest.fixture
def run_cli(tmp_path, monkeypatch, capsys):
    from lune import main

    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("LUNE_SEED", raising=False)
    monkeypatch.delenv("LUNE_CONFIG", raising=False)

    def run(*argv: str) -> tuple[int, str]:
        capsys.readouterr()
        status = main(list(argv))
        return status, capsys.readouterr().out

    return run
