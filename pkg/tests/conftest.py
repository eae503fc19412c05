import random
from pathlib import Path

import pytest
from hypothesis import settings

from lti_opacity import AttackChannel, LtiSystem, Mat, parse_model, rank
from lti_opacity.lti import is_observable

MODELS = Path(__file__).resolve().parents[1] / "src" / "lti_opacity" / "models"


def model(name):
    return parse_model(MODELS / f"{name}.json")


@pytest.fixture
def ex1():
    return model("example1")


@pytest.fixture
def ex1_sys():
    return model("example1").system


@pytest.fixture
def feed_sys():
    return model("example1_feedthrough").system


@pytest.fixture
def full_out_sys():
    return model("example1_full_output").system


@pytest.fixture
def auto():
    return model("automotive")


def rand_mat(rng, r, c, lo=-2, hi=2):
    return Mat([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)])


def random_system(rng, nmax=4, mmax=3, pmax=3, standing=True):
    """Random system with entries in {-2..2}.

    With ``standing`` the draw is repeated until the system is observable and
    [B; D] has full column rank.
    """
    while True:
        n, m, p = rng.randint(1, nmax), rng.randint(1, mmax), rng.randint(1, pmax)
        sys = LtiSystem(rand_mat(rng, n, n), rand_mat(rng, n, p), rand_mat(rng, m, n), rand_mat(rng, m, p))
        if not standing:
            return sys
        if is_observable(sys) and rank(sys.input_matrix) == p:
            return sys


def random_corpus(count=200, seed=2024, standing=True):
    rng = random.Random(seed)
    return [random_system(rng, standing=standing) for _ in range(count)]


def random_channel(rng, sys, qmax=3):
    while True:
        q = rng.randint(1, min(qmax, sys.n + sys.m))
        B, D = rand_mat(rng, sys.n, q), rand_mat(rng, sys.m, q)
        if rank(Mat.vstack(B, D)) == q:
            return AttackChannel(B, D)


settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    mod = terminalreporter.config.pluginmanager.get_plugin("test_acceptance") or __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
