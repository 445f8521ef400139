"""Acceptance suite: one test per criterion, each at its stated tolerance.

Run with `pytest -v -s tests/test_acceptance.py` to see one PASS/FAIL line
per criterion.
"""

from contextlib import contextmanager

import numpy as np

from cli_cases import CASES, check_case
from conftest import interior_state, rank_r_matrix, seeded_unitary
from spectral_geom import (
    aligned_transport,
    analyze_composition,
    distortion_profile,
    entropy,
    fr_distance,
    geodesic,
    is_svd_aligned,
    random_unitary,
    spectral_state,
    spectrally_equivalent,
    triangle_excess,
)


@contextmanager
def criterion(num, description):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num:02d} FAIL: {description}")
        raise
    print(f"ACCEPTANCE {num:02d} PASS: {description}")


def test_criterion_01_invariance_suite():
    with criterion(1, "unitary and scale invariance over 200 seeded tuples"):
        rng = np.random.default_rng(101)
        for _ in range(200):
            m = int(rng.integers(2, 7))
            n = int(rng.integers(2, 7))
            o = rng.standard_normal((m, n))
            u = seeded_unitary(rng, m)
            v = seeded_unitary(rng, n)
            c = float(rng.choice([-1.0, 1.0]) * 10.0 ** rng.uniform(-6.0, 6.0))
            k = min(m, n)
            lam = spectral_state(o, k)
            assert np.max(np.abs(spectral_state(u @ o @ v, k) - lam)) <= 1e-9
            assert np.max(np.abs(spectral_state(c * o, k) - lam)) <= 1e-9


def test_criterion_02_paper_fixtures():
    with criterion(2, "rank-one vertex, barycentre, two-mode family, rank-1 stage"):
        rank_one = np.zeros((4, 4))
        rank_one[:2, 0] = [1.5, 2.0]
        assert np.array_equal(spectral_state(rank_one, 4), [1.0, 0.0, 0.0, 0.0])

        for n in (2, 3, 4, 5):
            assert np.array_equal(spectral_state(np.eye(n), n), np.full(n, 1.0 / n))

        for t in (np.pi / 6, np.pi / 4, np.pi / 3):
            lam = spectral_state(np.diag([np.cos(t), np.sin(t)]), 4)
            expected = np.zeros(4)
            expected[:2] = sorted([np.cos(t) ** 2, np.sin(t) ** 2], reverse=True)
            assert np.max(np.abs(lam - expected)) <= 1e-12

        rng = np.random.default_rng(102)
        for n in (3, 4):
            stage = rank_r_matrix(rng, n, n, 1)
            report = analyze_composition(stage, rng.standard_normal((n, n)), n)
            assert report.face_ba.codimension >= n - 1


def test_criterion_03_distance_geodesic_consistency():
    with criterion(3, "geodesic quadrature matches closed form; metric axioms"):
        rng = np.random.default_rng(103)
        states = []
        for i in range(100):
            n = (2, 3, 5)[i % 3]
            a = interior_state(rng, n)
            b = interior_state(rng, n)
            states.append((a, b))
            path = geodesic(a, b, 1001)
            delta = np.diff(path.states, axis=0)
            mid = 0.5 * (path.states[1:] + path.states[:-1])
            length = float(np.sum(np.sqrt(np.sum(delta**2 / mid, axis=1))))
            assert abs(length - fr_distance(a, b)) <= 1e-4
        for (a, b), (c, _) in zip(states, states[1:]):
            if a.size != c.size:
                continue
            assert fr_distance(a, a) <= 1e-9
            assert abs(fr_distance(a, b) - fr_distance(b, a)) <= 1e-9
            assert fr_distance(a, c) <= fr_distance(a, b) + fr_distance(b, c) + 1e-9


def test_criterion_04_curvature_estimate():
    with criterion(4, "spherical-excess curvature 0.25 within 5% at N in {3,4,5}"):
        rng = np.random.default_rng(104)
        for n in (3, 4, 5):
            for _ in range(20):
                base = interior_state(rng, n)
                p1 = np.zeros(n)
                p1[0], p1[1] = 1.0, -1.0
                p2 = np.zeros(n)
                p2[1], p2[2] = 1.0, -1.0
                scale = 0.1 * float(np.min(base))
                a = base + scale * p1
                b = base + scale * p2
                c = base - scale * (p1 + p2)
                a, b, c = a / a.sum(), b / b.sum(), c / c.sum()
                assert max(
                    fr_distance(a, b), fr_distance(b, c), fr_distance(c, a)
                ) <= 0.2
                excess, area = triangle_excess(a, b, c)
                assert abs(excess / area - 0.25) <= 0.05 * 0.25


def test_criterion_05_entropy_bounds():
    with criterion(5, "entropy within [0, log N]; equality at vertex/barycentre"):
        rng = np.random.default_rng(105)
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            lam = rng.dirichlet(np.ones(n) * rng.uniform(0.2, 3.0))
            lam = lam / lam.sum()
            h = entropy(lam)
            assert 0.0 <= h <= np.log(n) + 1e-12
        for n in (2, 4, 8):
            vertex = np.zeros(n)
            vertex[0] = 1.0
            assert abs(entropy(vertex)) <= 1e-12
            assert abs(entropy(np.full(n, 1.0 / n)) - np.log(n)) <= 1e-12


def test_criterion_06_keystone_transport_consistency():
    with criterion(6, "aligned transport matches matrix-level states, 300 pairs"):
        rng = np.random.default_rng(106)
        for _ in range(300):
            n = int(rng.integers(2, 7))
            alpha = np.sort(rng.uniform(0.2, 3.0, n))[::-1]
            beta = np.sort(rng.uniform(0.2, 3.0, n))[::-1]
            q = seeded_unitary(rng, n)
            w = seeded_unitary(rng, n)
            v = seeded_unitary(rng, n)
            a = w @ np.diag(alpha) @ v.T
            b = q @ np.diag(beta) @ w.T
            predicted = aligned_transport(spectral_state(a, n), beta)
            actual = spectral_state(b @ a, n)
            assert np.max(np.abs(predicted - actual)) <= 1e-9


def test_criterion_07_rank_laws():
    with criterion(7, "rank monotonicity and boundary attraction, 500 pairs"):
        rng = np.random.default_rng(107)
        checked = 0
        while checked < 500:
            n = int(rng.integers(2, 7))
            r_b = int(rng.integers(1, n + 1))
            r_a = int(rng.integers(1, n + 1))
            b = rank_r_matrix(rng, n, n, r_b)
            a = rank_r_matrix(rng, n, n, r_a)
            ba = b @ a
            if np.linalg.norm(ba) <= 1e-14 * np.linalg.norm(b) * np.linalg.norm(a):
                continue
            report = analyze_composition(b, a, n)
            assert report.rank_ba <= min(report.rank_a, report.rank_b)
            assert report.face_ba.codimension >= n - report.rank_b
            checked += 1


def test_criterion_08_isometry_dichotomy():
    with criterion(8, "uniform stages preserve distances; non-uniform distort"):
        rng = np.random.default_rng(108)
        pairs = [
            (interior_state(rng, 4), interior_state(rng, 4)) for _ in range(100)
        ]
        uniform = np.full(4, float(rng.uniform(0.5, 2.0)))
        for d_before, d_after in distortion_profile(uniform, pairs):
            assert abs(d_after - d_before) <= 1e-9
        sampled = pairs[:20]
        for _ in range(50):
            beta = np.sort(rng.uniform(0.5, 2.0, 4))[::-1]
            if (beta[0] - beta[-1]) / beta[0] < 1e-3:
                beta[0] *= 1.01
            profile = distortion_profile(beta, sampled)
            assert any(abs(d1 - d0) > 1e-8 for d0, d1 in profile)


def test_criterion_09_witnesses():
    with criterion(9, "non-identifiability and non-factoring witnesses"):
        a1 = np.diag([1.0, 2.0])
        a2 = random_unitary(2, 5) @ np.diag([1.0, 2.0]) @ random_unitary(2, 6).T
        assert np.max(np.abs(a1 - a2)) > 0.1
        assert spectrally_equivalent(
            spectral_state(a1, 2), spectral_state(a2, 2), 1e-12
        )

        c, s = np.cos(np.pi / 4), np.sin(np.pi / 4)
        b1 = np.diag([2.0, 1.0])
        b2 = np.array([[c, -s], [s, c]]) @ np.diag([2.0, 1.0])
        stage = np.diag([1.0, 0.1])
        assert spectrally_equivalent(
            spectral_state(b1, 2), spectral_state(b2, 2), 1e-12
        )
        assert not is_svd_aligned(stage, b2)[0]
        assert np.max(np.abs(
            spectral_state(stage @ b1, 2) - spectral_state(stage @ b2, 2)
        )) > 1e-3


def test_criterion_10_cli_golden(tmp_path):
    with criterion(10, "CLI subcommands reproduce committed outputs bitwise"):
        for case in CASES:
            check_case(case, tmp_path)
