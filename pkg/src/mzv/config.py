"""Runtime limits: weight cap, precision cap, cache sizes.

Values come from built-in defaults, overridden by an optional JSON config file
(path in ``MZV_CONFIG``), overridden in turn by the environment variables
``MZV_WEIGHT_CAP`` and ``MZV_DIGITS_CAP``.
"""

from __future__ import annotations

import json
import os

DEFAULTS = {
    "weight_cap": 12,
    "digits_cap": 200,
    "guard_digits": 15,
    "rational_denominator_bound": 10**12,
}


def get_config() -> dict:
    cfg = dict(DEFAULTS)
    path = os.environ.get("MZV_CONFIG")
    if path:
        with open(path) as fh:
            cfg.update(json.load(fh))
    if "MZV_WEIGHT_CAP" in os.environ:
        cfg["weight_cap"] = int(os.environ["MZV_WEIGHT_CAP"])
    if "MZV_DIGITS_CAP" in os.environ:
        cfg["digits_cap"] = int(os.environ["MZV_DIGITS_CAP"])
    return cfg


def weight_cap() -> int:
    return get_config()["weight_cap"]


def digits_cap() -> int:
    return get_config()["digits_cap"]
