"""Independent closed-form oracles for small eigen/singular value problems.

Everything here is written from the quadratic/cubic root formulas and basic
Gram-matrix identities, with no calls into specnorm kernels, so it can check
them without sharing a code path.
"""

import numpy as np


def eig2x2(a):
    """Both roots of the characteristic polynomial of a 2x2 complex matrix."""
    a = np.asarray(a, dtype=complex)
    tr = a[0, 0] + a[1, 1]
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    disc = np.sqrt(complex(tr * tr - 4.0 * det))
    return np.array([(tr + disc) / 2.0, (tr - disc) / 2.0])


def _cbrt(z):
    if z == 0:
        return 0.0 + 0.0j
    return complex(z) ** (1.0 / 3.0)


def cubic_roots(b, c, d):
    """Roots of x^3 + b x^2 + c x + d with complex coefficients (Cardano)."""
    s = b / 3.0
    p = c - 3.0 * s * s
    q = 2.0 * s**3 - c * s + d
    disc = np.sqrt(complex((q / 2.0) ** 2 + (p / 3.0) ** 3))
    cand1 = -q / 2.0 + disc
    cand2 = -q / 2.0 - disc
    u3 = cand1 if abs(cand1) >= abs(cand2) else cand2
    u = _cbrt(u3)
    omega = np.exp(2j * np.pi / 3.0)
    roots = []
    for k in range(3):
        uk = u * omega**k
        vk = -p / (3.0 * uk) if uk != 0 else 0.0
        roots.append(uk + vk - s)
    return np.array(roots)


def eig3x3(a):
    """Characteristic-polynomial roots of a 3x3 complex matrix."""
    a = np.asarray(a, dtype=complex)
    tr = a[0, 0] + a[1, 1] + a[2, 2]
    minors = (
        a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]
        + a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0]
        + a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    )
    det = (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )
    return cubic_roots(-tr, minors, -det)


def sv2x2(a):
    """Singular values of a 2x2 complex matrix from the Gram trace/det."""
    a = np.asarray(a, dtype=complex)
    t = float(np.sum(np.abs(a) ** 2))
    d = abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    rad = np.sqrt(max(t * t - 4.0 * d * d, 0.0))
    s1 = np.sqrt((t + rad) / 2.0)
    s2 = np.sqrt(max((t - rad) / 2.0, 0.0))
    return np.array([s1, s2])


def hermitian_eig3x3(h):
    """Real eigenvalues of a 3x3 Hermitian matrix, trigonometric method."""
    h = np.asarray(h, dtype=complex)
    q = float(np.trace(h).real) / 3.0
    b = h - q * np.eye(3)
    p2 = float(np.sum(np.abs(b) ** 2)) / 6.0
    if p2 <= 0.0:
        return np.array([q, q, q])
    p = np.sqrt(p2)
    detb = (
        b[0, 0] * (b[1, 1] * b[2, 2] - b[1, 2] * b[2, 1])
        - b[0, 1] * (b[1, 0] * b[2, 2] - b[1, 2] * b[2, 0])
        + b[0, 2] * (b[1, 0] * b[2, 1] - b[1, 1] * b[2, 0])
    )
    r = float(detb.real) / (2.0 * p**3)
    r = min(max(r, -1.0), 1.0)
    phi = np.arccos(r) / 3.0
    eigs = [
        q + 2.0 * p * np.cos(phi),
        q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0),
        q + 2.0 * p * np.cos(phi + 4.0 * np.pi / 3.0),
    ]
    return np.sort(np.array(eigs))[::-1]


def sv3x3(a):
    """Singular values of a 3x3 complex matrix via the Hermitian Gram matrix."""
    a = np.asarray(a, dtype=complex)
    eigs = hermitian_eig3x3(a.conj().T @ a)
    return np.sqrt(np.maximum(eigs, 0.0))


def match_multisets(computed, expected):
    """Greedy nearest matching; returns the largest pairwise distance."""
    comp = list(np.asarray(computed, dtype=complex))
    worst = 0.0
    for e in np.asarray(expected, dtype=complex):
        dists = [abs(c - e) for c in comp]
        i = int(np.argmin(dists))
        worst = max(worst, dists[i])
        comp.pop(i)
    return worst
