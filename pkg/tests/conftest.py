# Copyright 2026, tcox developers
"""

Shared fixtures: the worked examples of the catalog, parsed into library objects.

"""
import pytest

from tcox.cox import config
from tcox.cox.catalog import load_fixtures
from tcox.cox.dialects import parse_document


@pytest.fixture(autouse=True)
def config_path(tmp_path, monkeypatch):
    """ Keep the user's own config file out of the tests; returns where a config file would live. """
    path = str(tmp_path / "tcox_config.yaml")
    monkeypatch.setattr(config, "CONFIG_PATHS", [path])
    return path


@pytest.fixture(scope="session")
def catalog_fixtures():
    return load_fixtures(include_delpezzo=False)


def _payload(catalog_fixtures, name):
    return parse_document(catalog_fixtures[name].input).payload


@pytest.fixture
def fan_2d4(catalog_fixtures):
    return _payload(catalog_fixtures, "2d4-fan").fan


@pytest.fixture
def group_basis_2d4(catalog_fixtures):
    return _payload(catalog_fixtures, "2d4-fan").group_basis


@pytest.fixture
def cotangent_fan(catalog_fixtures):
    return _payload(catalog_fixtures, "cotangent-p2-fan").fan


@pytest.fixture
def k3_divisor(catalog_fixtures):
    return _payload(catalog_fixtures, "k3-affine").fan.divisors[0]


@pytest.fixture
def graph_2d4(catalog_fixtures):
    return _payload(catalog_fixtures, "2d4-graph").graph
