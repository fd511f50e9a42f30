"""Shared fixtures: the kernels and damping bounds used across the suite."""

import pytest

from memspec import DampingBound, ExponentialKernel


@pytest.fixture
def k_one():
    """One-term kernel with unit amplitude and unit decay rate."""
    return ExponentialKernel((1.0,), (1.0,))


@pytest.fixture
def k_wave():
    """One-term kernel used by the constant-damping worked example."""
    return ExponentialKernel((0.9,), (0.5,))


@pytest.fixture
def k_two():
    """Two-term kernel used by the two-interval essential spectrum example."""
    return ExponentialKernel((1.0, 0.2), (1.0, 1.5))


@pytest.fixture
def d_graded():
    return DampingBound(0.5, 0.75)


@pytest.fixture
def d_half():
    return DampingBound(0.5, 0.5)
