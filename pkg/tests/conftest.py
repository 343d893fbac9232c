"""Shared fixtures: small synthetic cases cheap enough for exhaustive checks."""

import json

import pytest

from gitstrata.case_catalog import parse_case_config

TOY_CONFIG = json.dumps(
    {
        "label": "toy-2x2",
        "factors": [2, 2],
        "slots": [[1, "standard"], [2, "standard"]],
    }
)

WEDGE_CONFIG = json.dumps(
    {"label": "wedge-4", "factors": [4], "slots": [[1, "wedge2"]]}
)

LINE_CONFIG = json.dumps(
    {"label": "line-2", "factors": [2], "slots": [[1, "standard"]]}
)


@pytest.fixture
def toy_case():
    """N = 4, two GL(2) factors, Weyl order 4."""
    return parse_case_config(TOY_CONFIG)


@pytest.fixture
def wedge_case():
    """N = 6, one GL(4) factor acting on index pairs, Weyl order 24."""
    return parse_case_config(WEDGE_CONFIG)


@pytest.fixture
def line_case():
    """N = 2, one GL(2) factor; the two weights are opposite."""
    return parse_case_config(LINE_CONFIG)
