"""Shared test helpers: samplers that stay clear of the log branch points."""

import numpy as np


def branch_distance(x: float, q: float) -> float:
    """Distance of the real shifted arguments x +- q/2 from the branch
    points +-1 (the y = 0 singular set)."""
    return min(abs(abs(x + s * q / 2.0) - 1.0) for s in (1.0, -1.0))


def random_points(n, seed, x_range=(-2.0, 2.0), y_range=(0.01, 3.0),
                  q_range=(0.1, 4.5), margin=1e-3):
    """Deterministic random (x, y, q) triples with the y = 0 branch set at
    least ``margin`` away (rejection sampling)."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        x = float(rng.uniform(*x_range))
        y = float(rng.uniform(*y_range))
        q = float(rng.uniform(*q_range))
        if branch_distance(x, q) < margin or abs(q - 2.0) < margin:
            continue
        out.append((x, y, q))
    return out
