#!/usr/bin/env python3
"""From matrices to points on the probability simplex.

Every non-zero real matrix gets a spectral state: its squared singular
values, normalised to sum to one. The state forgets basis and scale and
remembers only how the operator distributes energy across modes. This
script walks through the canonical landmarks: a vertex, the barycentre, a
curve along a boundary face, and the invariances that make the state
well-defined on equivalence classes.
"""

import numpy as np

from spectral_geom import (
    check_scale_invariance,
    check_unitary_invariance,
    entropy,
    face_of,
    random_unitary,
    spectral_state,
)

np.set_printoptions(precision=6, suppress=True)

print("=" * 70)
print("1. A rank-one operator sits on a vertex of the simplex")
print("=" * 70)
rank_one = np.zeros((4, 4))
rank_one[:2, 0] = [1.5, 2.0]  # one non-zero column, one non-zero mode
lam = spectral_state(rank_one, 4)
print("matrix:\n", rank_one)
print("state:       ", lam)
print("face:        ", face_of(lam))
print("entropy:     ", entropy(lam), "nats (a pure mode carries none)")

print()
print("=" * 70)
print("2. A spectrally uniform operator sits at the barycentre")
print("=" * 70)
lam = spectral_state(np.eye(4), 4)
print("state of I4: ", lam)
print("entropy:     ", entropy(lam), "= log 4 =", np.log(4.0))

print()
print("=" * 70)
print("3. A two-mode family traces a curve along a boundary face")
print("=" * 70)
for t in (np.pi / 6, np.pi / 4, np.pi / 3):
    lam = spectral_state(np.diag([np.cos(t), np.sin(t)]), 4)
    print(f"t = {t:.4f}  state = {lam}  codim = {face_of(lam).codimension}")
print("(two modes alive out of four: always codimension 2)")

print()
print("=" * 70)
print("4. The state is blind to unitary factors and to scale")
print("=" * 70)
rng = np.random.default_rng(0)
o = rng.standard_normal((4, 4))
u = random_unitary(4, 1)
v = random_unitary(4, 2)
print("lambda(UOV) == lambda(O):",
      check_unitary_invariance(o, u, v, 1e-9))
print("lambda(-3.7 O) == lambda(O):",
      check_scale_invariance(o, -3.7, 1e-9))
print()
print("Two very different matrices can share a state exactly:")
a1 = np.diag([1.0, 2.0])
a2 = random_unitary(2, 5) @ np.diag([1.0, 2.0]) @ random_unitary(2, 6).T
print("A1:\n", a1)
print("A2:\n", a2)
print("state(A1):", spectral_state(a1, 2))
print("state(A2):", spectral_state(a2, 2))
print("the mapping keeps the spectrum and forgets the singular vectors.")
