"""Complex-plane grid scans of the distance gap."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, spectral
from .errors import SpecnormError
from .kernels import EPS, as_square, frob

KAPPA_RATIO = 1e-9

FLAG_OK = "ok"
FLAG_AT_EIGENVALUE = "at_eigenvalue"
FLAG_FAILED = "failed"


@dataclass
class GridSample:
    z: complex
    s: float
    d: float
    ratio: float
    flag: str


@dataclass
class GridScan:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int
    samples: list[GridSample]
    failures: int


def _at_eigenvalue_tol(a: np.ndarray, sigma1: float) -> float:
    return a.shape[0] * EPS * max(sigma1, 1.0)


def scan_grid(a, region: tuple[float, float, float, float], nx: int, ny: int) -> GridScan:
    """Sample s(z), d(z) and their ratio on a closed rectangular grid.

    Row-major ordering: the imaginary axis is the slow index. Nodes too close
    to an eigenvalue are flagged and their ratio pinned to 1 to avoid 0/0; a
    kernel failure marks the sample failed and the scan continues.
    """
    a = as_square(a)
    re_min, re_max, im_min, im_max = map(float, region)
    if nx < 1 or ny < 1:
        raise ValueError("grid dimensions must be >= 1")
    if re_max < re_min or im_max < im_min:
        raise ValueError("region bounds must be ordered")
    spectrum = spectral.spectrum_of(a)
    sigma1 = float(kernels.svd(a).sigma[0])
    eig_tol = _at_eigenvalue_tol(a, sigma1)
    res = np.linspace(re_min, re_max, nx) if nx > 1 else np.array([re_min])
    ims = np.linspace(im_min, im_max, ny) if ny > 1 else np.array([im_min])
    samples = []
    failures = 0
    for im in ims:
        for re in res:
            z = complex(re, im)
            d, _ = spectral.dist_to_spectrum(z, spectrum)
            try:
                s = spectral.shifted_smallest_singular(a, z)
            except SpecnormError:
                failures += 1
                samples.append(GridSample(z, float("nan"), d, float("nan"), FLAG_FAILED))
                continue
            if d <= eig_tol:
                samples.append(GridSample(z, s, d, 1.0, FLAG_AT_EIGENVALUE))
            else:
                samples.append(GridSample(z, s, d, s / d, FLAG_OK))
    return GridScan(re_min, re_max, im_min, im_max, nx, ny, samples, failures)


@dataclass
class CorollaryReport:
    """Randomized equality check over a disc around the spectrum centroid."""

    n_samples: int
    radius: float
    center: complex
    max_abs_gap: float
    worst_z: complex


def check_corollary(a, n_samples: int = 200, seed: int = 0) -> CorollaryReport:
    """Sample |d(z) - s(z)| at random z in a disc of radius 2*||A||_F.

    The disc is centered at the centroid of the distinct eigenvalues, where
    the equality is most discriminating.
    """
    a = as_square(a)
    spectrum = spectral.spectrum_of(a)
    center = complex(np.mean(spectrum.representatives))
    radius = 2.0 * max(frob(a), 1.0)
    rng = np.random.default_rng(seed)
    max_gap = -1.0
    worst = center
    for _ in range(n_samples):
        r = radius * np.sqrt(rng.uniform())
        theta = rng.uniform(0.0, 2.0 * np.pi)
        z = center + r * np.exp(1j * theta)
        g = abs(spectral.gap(a, z, spectrum))
        if g > max_gap:
            max_gap = g
            worst = z
    return CorollaryReport(
        n_samples=n_samples,
        radius=float(radius),
        center=center,
        max_abs_gap=float(max_gap),
        worst_z=complex(worst),
    )
