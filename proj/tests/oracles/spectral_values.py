# Copyright 2026 The swapbound Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values for the spectral unit tests.

Uses scipy.linalg.expm/logm directly on the matrices (no eigen-shortcuts),
so it shares no code path with the C++ implementation. Run with python3 and
paste the printed values into tests/test_spectral.cpp.
"""
import numpy as np
from scipy.linalg import expm, logm, sqrtm


def gibbs(L, beta):
    e = expm(-beta * L)
    return e / np.trace(e)


def vne(rho):
    return float(-np.trace(rho @ logm(rho)).real)


def qjsd(rho, sigma):
    return vne((rho + sigma) / 2) - (vne(rho) + vne(sigma)) / 2


def laplacian(n, edges):
    L = np.zeros((n, n))
    for u, v in edges:
        L[u, v] -= 1
        L[v, u] -= 1
        L[u, u] += 1
        L[v, v] += 1
    return L


p2 = gibbs(laplacian(2, [(0, 1)]), 0.5)
print("gibbs(P2, 0.5) eigenvalues", repr(np.sort(np.linalg.eigvalsh(p2))[::-1]))
print("S(gibbs(P2, 0.5))", repr(vne(p2)))

rho = np.diag([0.73106, 0.26894])
sigma = np.eye(2) / 2
print("QRE(diag(.73106,.26894) || I/2)",
      repr(float(np.trace(rho @ (logm(rho) - logm(sigma))).real)))

k3 = gibbs(laplacian(3, [(0, 1), (1, 2), (0, 2)]), 0.1)
print("qjsd(gibbs(K3, 0.1), I/3)", repr(qjsd(k3, np.eye(3) / 3)))

a = np.eye(2) / 2
b = np.diag([0.75, 0.25])
sb = sqrtm(b)
print("F(I/2, diag(.75,.25))", repr(float(np.trace(sqrtm(sb @ a @ sb)).real ** 2)))

# Edgeless 4-vertex IG against the path P4 at beta = 0.7.
p4 = gibbs(laplacian(4, [(0, 1), (1, 2), (2, 3)]), 0.7)
print("qjsd(I/4, gibbs(P4, 0.7))", repr(qjsd(np.eye(4) / 4, p4)))

# Edge erasure does not always raise the Gibbs entropy. Smallest instance:
# remove a pendant edge from the path 0-1-2 plus an isolated vertex? Search.
import itertools

best = None
for n in range(2, 6):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        for beta in (1e-3, 0.1, 1.0, 10.0):
            s = vne(gibbs(laplacian(n, edges), beta))
            for e in edges:
                rest = [x for x in edges if x != e]
                t = vne(gibbs(laplacian(n, rest), beta))
                if t < s - 1e-9:
                    best = (n, edges, e, beta, s, t)
                    break
            if best:
                break
        if best:
            break
    if best:
        break
print("erasure entropy drop", best)
