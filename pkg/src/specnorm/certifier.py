"""Normality certification via the spectral-distance probe criterion.

One probe point is placed next to each distinct eigenvalue; if the shifted
smallest singular value equals the distance to the spectrum at every probe,
the matrix is normal and an orthonormal eigenbasis is constructed as the
certificate. A failing probe is itself a nonnormality witness. The
definitional commutator residual ||A*A - AA*||_F is always computed as an
independent cross-check.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from . import kernels, spectral
from .errors import ConvergenceError, IndeterminateError
from .kernels import EPS, as_square, frob
from .spectral import Spectrum

TOL_EQ = 1e-8
TOL_CERT = 1e-8
STRUCT_TOL = 1e-7
TIE_MARGIN = 1e-3


@dataclass
class ProbePolicy:
    """How probe points are placed around each distinct eigenvalue."""

    angle: float = 0.0
    tie_margin: float = TIE_MARGIN


@dataclass
class Probe:
    z: complex
    cluster_index: int
    radius: float


@dataclass
class ProbeSet:
    probes: list[Probe]


@dataclass
class ProbeEvidence:
    z: complex
    lam: complex
    d: float
    s: float
    gap: float
    passed: bool


@dataclass
class EigspaceCluster:
    lam: complex
    algebraic_multiplicity: int
    geometric_multiplicity: int
    basis: list[np.ndarray]


@dataclass
class Residuals:
    commutator: float
    unitarity: float | None = None
    diagonalization: float | None = None


@dataclass
class NormalityCertificate:
    verdict: str  # "Normal" | "Nonnormal"
    evidence: list[ProbeEvidence]
    witness: ProbeEvidence | None
    eigenbasis: np.ndarray | None
    residuals: Residuals
    config_echo: dict


@dataclass
class CertifyConfig:
    """Absolute tolerances; None means the scaled default."""

    tol_eq: float | None = None
    cluster_tol: float | None = None
    probe_angle: float = 0.0
    tie_margin: float = TIE_MARGIN
    tol_cert: float = TOL_CERT
    struct_tol: float = STRUCT_TOL


def select_probes(spectrum: Spectrum, policy: ProbePolicy | None = None) -> ProbeSet:
    """One probe per distinct eigenvalue, strictly nearest to its own cluster.

    z_k = lambda_k + r_k * e^{i*angle} with r_k just under half the distance
    to the nearest other representative; a lone eigenvalue gets radius
    max(1, scale)/2.
    """
    if policy is None:
        policy = ProbePolicy()
    reps = spectrum.representatives
    p = len(reps)
    direction = np.exp(1j * policy.angle)
    probes = []
    for k in range(p):
        if p == 1:
            radius = max(1.0, spectrum.source_scale) / 2.0
        else:
            delta = min(abs(reps[j] - reps[k]) for j in range(p) if j != k)
            radius = (1.0 - policy.tie_margin) * delta / 2.0
        z = complex(reps[k] + radius * direction)
        probes.append(Probe(z=z, cluster_index=k, radius=float(radius)))
    # strict-nearest sanity check; guaranteed by construction
    for probe in probes:
        d_own = abs(probe.z - reps[probe.cluster_index])
        others = [
            abs(probe.z - reps[j]) for j in range(p) if j != probe.cluster_index
        ]
        if others and d_own >= min(others):
            raise IndeterminateError(
                f"probe {probe.z} is not strictly nearest to its eigenvalue"
            )
    return ProbeSet(probes)


def criterion_holds(a, probe: tuple[complex, complex], tol_eq: float) -> ProbeEvidence:
    """Test sigma_n(zI - A) = |z - lambda_k| at a single probe."""
    z, lam = probe
    a = as_square(a)
    d = abs(complex(z) - complex(lam))
    s = spectral.shifted_smallest_singular(a, z)
    g = d - s
    return ProbeEvidence(
        z=complex(z), lam=complex(lam), d=float(d), s=float(s),
        gap=float(g), passed=bool(g <= tol_eq),
    )


def left_eigvec_check(a, lam: complex, x, tol: float) -> bool:
    """True iff x is also a left eigenvector: ||x*A - lam x*|| <= tol*||A||_F."""
    a = as_square(a)
    x = np.asarray(x, dtype=np.complex128).reshape(-1)
    resid = float(np.linalg.norm(x.conj() @ a - lam * x.conj()))
    return resid <= tol * max(frob(a), EPS)


def semisimple_check(
    a, lam: complex, tol: float, multiplicity: int | None = None
) -> tuple[bool, int, int]:
    """Compare kernel dimensions of (lam I - A) and its square.

    Returns (is_semisimple, algebraic multiplicity m_k, geometric s_k). The
    algebraic multiplicity comes from the clustered spectrum when not given.
    """
    a = as_square(a)
    n = a.shape[0]
    scale = max(1.0, frob(a))
    b = complex(lam) * np.eye(n, dtype=np.complex128) - a
    s_k = n - kernels.rank_with_tol(b, tol * scale)
    b2 = b @ b
    sigma2 = kernels.svd(b2).sigma
    thresh2 = max((tol * scale) ** 2, n * EPS * float(sigma2[0]))
    k2 = n - int(np.sum(sigma2 > thresh2))
    if multiplicity is None:
        spect = spectral.spectrum_of(a)
        _, idx = spectral.dist_to_spectrum(lam, spect)
        multiplicity = spect.clusters[idx][1]
    return (s_k == k2), int(multiplicity), int(s_k)


def cross_orthogonality_check(clusters: list[EigspaceCluster], tol: float) -> bool:
    """All inter-cluster eigenvector inner products within tol of zero."""
    for i in range(len(clusters)):
        for j in range(i + 1, len(clusters)):
            for x in clusters[i].basis:
                for y in clusters[j].basis:
                    if abs(np.vdot(x, y)) > tol:
                        return False
    return True


def eigenspace_basis(a, lam: complex, s_k: int) -> list[np.ndarray]:
    """Orthonormal kernel basis of lam I - A from its smallest singular vectors."""
    a = as_square(a)
    n = a.shape[0]
    b = complex(lam) * np.eye(n, dtype=np.complex128) - a
    res = kernels.svd(b)
    return [res.v[:, n - 1 - i].copy() for i in range(s_k)]


def build_orthonormal_eigenbasis(a, clusters: list[EigspaceCluster]) -> np.ndarray:
    """Concatenate cluster bases and polish with modified Gram-Schmidt."""
    a = as_square(a)
    n = a.shape[0]
    total = sum(c.geometric_multiplicity for c in clusters)
    if total != n:
        raise IndeterminateError(
            f"eigenspace dimensions sum to {total}, expected {n}; "
            "the constructive pipeline cannot span the space"
        )
    vectors = [v for c in clusters for v in c.basis]
    ortho = kernels.gram_schmidt_orthonormalize(vectors)
    return np.column_stack(ortho)


def commutator_normality_oracle(a) -> float:
    """Definitional residual ||A*A - AA*||_F, independent of all spectral code."""
    a = as_square(a)
    return frob(a.conj().T @ a - a @ a.conj().T)


def offdiag_frobenius(m: np.ndarray) -> float:
    d = m - np.diag(np.diag(m))
    return frob(d)


def recheck_certificate(a, cert: NormalityCertificate) -> tuple[float, float]:
    """Independent re-verification of a Normal certificate's eigenbasis.

    Returns (||U*U - I||_F, offdiag ||U*AU||_F) computed directly from the
    attached basis, bypassing the certifier's own residual bookkeeping.
    """
    a = as_square(a)
    u = cert.eigenbasis
    if u is None:
        raise ValueError("certificate carries no eigenbasis")
    n = a.shape[0]
    unit = frob(u.conj().T @ u - np.eye(n))
    diag = offdiag_frobenius(u.conj().T @ a @ u)
    return float(unit), float(diag)


def certify(a, config: CertifyConfig | None = None) -> NormalityCertificate:
    """Full probe-and-construct pipeline deciding normality.

    Schur -> cluster -> probe placement -> per-probe equality tests; on a
    clean pass the orthonormal eigenbasis is built and attached. Kernel
    non-convergence or a contradiction between probe evidence and the
    constructive stage raises IndeterminateError rather than guessing.
    """
    a = as_square(a)
    if config is None:
        config = CertifyConfig()
    n = a.shape[0]
    anorm = frob(a)
    scale = max(1.0, anorm)
    tol_eq = config.tol_eq if config.tol_eq is not None else TOL_EQ * scale
    cluster_tol = (
        config.cluster_tol
        if config.cluster_tol is not None
        else spectral.default_cluster_tol(anorm)
    )
    config_echo = {
        "tol_eq": tol_eq,
        "cluster_tol": cluster_tol,
        "probe_angle": config.probe_angle,
        "tie_margin": config.tie_margin,
        "tol_cert": config.tol_cert,
        "struct_tol": config.struct_tol,
    }
    try:
        sch = kernels.schur(a)
        spectrum = spectral.cluster_spectrum(sch.eigenvalues, anorm, cluster_tol)
        probeset = select_probes(
            spectrum, ProbePolicy(angle=config.probe_angle, tie_margin=config.tie_margin)
        )
        reps = spectrum.representatives
        evidence = [
            criterion_holds(a, (p.z, reps[p.cluster_index]), tol_eq)
            for p in probeset.probes
        ]
        commutator = commutator_normality_oracle(a)
        failing = [e for e in evidence if not e.passed]
        if failing:
            return NormalityCertificate(
                verdict="Nonnormal",
                evidence=evidence,
                witness=failing[0],
                eigenbasis=None,
                residuals=Residuals(commutator=commutator),
                config_echo=config_echo,
            )
        # constructive stage: structural checks and eigenbasis assembly
        clusters = []
        for k, (lam, m_k) in enumerate(spectrum.clusters):
            is_ss, m_k, s_k = semisimple_check(
                a, lam, config.struct_tol, multiplicity=m_k
            )
            if not is_ss or m_k != s_k:
                raise IndeterminateError(
                    f"probes passed but eigenvalue {lam} is not numerically "
                    f"semisimple (m_k={m_k}, s_k={s_k})"
                )
            basis = eigenspace_basis(a, lam, s_k)
            for x in basis:
                eig_resid = float(np.linalg.norm(a @ x - complex(lam) * x))
                if eig_resid > config.tol_cert * scale * 10:
                    raise IndeterminateError(
                        f"kernel basis vector for {lam} has eigen-residual "
                        f"{eig_resid:.3e}"
                    )
                if not left_eigvec_check(a, lam, x, config.struct_tol):
                    raise IndeterminateError(
                        f"probes passed but a vector for {lam} fails the "
                        "left-eigenvector check"
                    )
            clusters.append(EigspaceCluster(complex(lam), m_k, s_k, basis))
        if not cross_orthogonality_check(clusters, config.struct_tol):
            raise IndeterminateError(
                "probes passed but eigenspaces are not mutually orthogonal"
            )
        u = build_orthonormal_eigenbasis(a, clusters)
        unitarity = frob(u.conj().T @ u - np.eye(n))
        diagonalization = offdiag_frobenius(u.conj().T @ a @ u)
        if unitarity > config.tol_cert * n or diagonalization > config.tol_cert * scale:
            raise IndeterminateError(
                f"constructed eigenbasis fails residual bounds "
                f"(unitarity {unitarity:.3e}, off-diagonal {diagonalization:.3e})"
            )
        return NormalityCertificate(
            verdict="Normal",
            evidence=evidence,
            witness=None,
            eigenbasis=u,
            residuals=Residuals(
                commutator=commutator,
                unitarity=float(unitarity),
                diagonalization=float(diagonalization),
            ),
            config_echo=config_echo,
        )
    except ConvergenceError as exc:
        raise IndeterminateError(f"kernel did not converge: {exc}") from exc


def matrix_hash(a) -> str:
    """SHA-256 of the row-major complex128 bytes, prefixed by the shape."""
    a = np.ascontiguousarray(np.asarray(a, dtype=np.complex128))
    h = hashlib.sha256()
    h.update(f"{a.shape[0]}x{a.shape[1]}:".encode())
    h.update(a.tobytes())
    return h.hexdigest()


def certificate_to_dict(cert: NormalityCertificate, a) -> dict:
    """JSON-ready certificate document."""

    def ev(e: ProbeEvidence) -> dict:
        return {
            "z": [e.z.real, e.z.imag],
            "lambda": [e.lam.real, e.lam.imag],
            "d": e.d,
            "s": e.s,
            "gap": e.gap,
            "passed": e.passed,
        }

    doc = {
        "verdict": cert.verdict,
        "probes": [ev(e) for e in cert.evidence],
        "witness": ev(cert.witness) if cert.witness is not None else None,
        "residuals": {
            "commutator": cert.residuals.commutator,
            "unitarity": cert.residuals.unitarity,
            "diagonalization": cert.residuals.diagonalization,
        },
        "tolerances": cert.config_echo,
        "matrix_hash": matrix_hash(a),
    }
    if cert.eigenbasis is not None:
        doc["eigenbasis"] = [
            [[z.real, z.imag] for z in row] for row in cert.eigenbasis
        ]
    return doc
