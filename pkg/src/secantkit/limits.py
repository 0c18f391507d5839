"""Enumeration caps.

Every exhaustive routine takes an explicit ``limit`` argument; when it is
omitted the default below applies, unless the ``SECANTKIT_LIMIT``
environment variable is set, in which case that single value replaces
every default cap.
"""
import os

from .errors import LimitExceeded

DEFAULTS = {
    "chromatic": 20,
    "edge_secant": 16,
    "perfect": 12,
    "poset_matrix": 6,
    "hypergraph": 16,
}


def cap(name, limit=None):
    if limit is not None:
        return limit
    env = os.environ.get("SECANTKIT_LIMIT")
    if env:
        return int(env)
    return DEFAULTS[name]


def check(name, size, limit=None):
    bound = cap(name, limit)
    if size > bound:
        raise LimitExceeded(f"{name}: size {size} exceeds limit {bound} (set SECANTKIT_LIMIT to override)")
