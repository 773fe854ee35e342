"""
Pytest configuration and fixtures for testing.
"""

import shutil
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from config.config import Config
from verification.identity import IdentityChecker


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_path = Path(tempfile.mkdtemp())
    yield temp_path
    shutil.rmtree(temp_path, ignore_errors=True)


@pytest.fixture
def test_config(temp_dir):
    """A configuration with small sample counts."""
    return Config(
        cwd=temp_dir,
        seed=7,
        samples=4,
        coeff_bound=20,
        sigma_samples=4,
        ud_samples=30,
    )


@pytest.fixture
def checker(test_config):
    """Identity checker built from the small test configuration."""
    return IdentityChecker.from_config(test_config)


@pytest.fixture
def ones():
    """The point x0 = ... = x5 = 1."""
    return {f"x{k}": Fraction(1) for k in range(6)}


@pytest.fixture(autouse=True)
def isolated_user_config(temp_dir, mocker):
    """Keep the user's own config file out of every test."""
    mocker.patch(
        "config.loader.get_system_config_path",
        return_value=temp_dir / "no-user-config" / "config.toml",
    )
