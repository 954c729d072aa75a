"""Multiset combinatorial Gray codes."""

import json

from ._core import *  # noqa: F401,F403
from ._core import simulate_json


def simulate(cells, m, slots, bits, seed, traj="uniform"):
    """Run the tracking simulator and return the report as a dict."""
    return json.loads(simulate_json(cells, m, slots, bits, seed, traj))
