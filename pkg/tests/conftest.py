"""Shared generators for seeded random test objects."""

import numpy as np

from spectral_geom import random_unitary


def interior_state(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random simplex point kept safely away from the boundary."""
    lam = 0.9 * rng.dirichlet(np.ones(n)) + 0.1 / n
    return lam / lam.sum()


def random_matrix(rng: np.random.Generator, max_dim: int = 8) -> np.ndarray:
    m = int(rng.integers(1, max_dim + 1))
    n = int(rng.integers(1, max_dim + 1))
    return rng.standard_normal((m, n))


def seeded_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    return random_unitary(n, int(rng.integers(2**31 - 1)))


def rank_r_matrix(rng: np.random.Generator, m: int, n: int, r: int) -> np.ndarray:
    """Matrix of exact rank r, built from r outer products of unitary columns."""
    q = seeded_unitary(rng, m)
    p = seeded_unitary(rng, n)
    sigma = np.sort(rng.uniform(0.5, 3.0, r))[::-1]
    return q[:, :r] @ np.diag(sigma) @ p[:, :r].T
