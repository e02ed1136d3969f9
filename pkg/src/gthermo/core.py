"""Covariance-matrix primitives for one- and two-mode bosonic Gaussian states.

Conventions used throughout the package:

* quadratures ``q = (a + a^dag)/sqrt(2)``, ``p = (a - a^dag)/(i sqrt(2))``,
  so the vacuum covariance matrix is ``I/2`` and every symplectic
  eigenvalue of a physical state satisfies ``d >= 1/2``;
* ``hbar = k_B = 1``, frequencies are plain positive reals;
* a two-mode covariance matrix is ordered ``(q_A, p_A, q_B, p_B)`` with
  block structure ``[[sigma_A, eps], [eps^T, sigma_B]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPhysical, NumericalDomain

#: absolute tolerance on symplectic-eigenvalue thresholds (physicality).
TOL_PHYS = 1e-9
#: relative tolerance for algebraic identities between computed quantities.
TOL_NUM = 1e-10
#: convergence tolerance of the inverse of the bosonic entropy function.
TOL_INV = 1e-12

_OMEGA2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
#: 4x4 symplectic form for the (q_A, p_A, q_B, p_B) ordering.
OMEGA = np.block([[_OMEGA2, np.zeros((2, 2))], [np.zeros((2, 2)), _OMEGA2]])


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic eigenvalues of a two-mode covariance matrix.

    ``d_plus >= d_minus`` are the eigenvalues of the matrix itself and
    ``d_tilde_minus`` is the smaller eigenvalue of its partial transpose,
    which decides separability.
    """

    d_plus: float
    d_minus: float
    d_tilde_minus: float


@dataclass(frozen=True)
class NormalForm:
    """Local-symplectic normal form ``diag blocks (a, b)`` plus ``(c_plus, c_minus)``.

    The four numbers reproduce the local and global invariants:
    ``det sigma_A = a^2``, ``det sigma_B = b^2``,
    ``det eps = c_plus * c_minus`` and
    ``det sigma = (a b - c_plus^2)(a b - c_minus^2)``.
    The overall sign ambiguity of the pair is fixed by ``c_plus >= 0``.
    """

    a: float
    b: float
    c_plus: float
    c_minus: float


def block_a(sigma: np.ndarray) -> np.ndarray:
    """Upper-left 2x2 block (mode A marginal covariance)."""
    return np.asarray(sigma)[:2, :2]


def block_b(sigma: np.ndarray) -> np.ndarray:
    """Lower-right 2x2 block (mode B marginal covariance)."""
    return np.asarray(sigma)[2:, 2:]


def block_eps(sigma: np.ndarray) -> np.ndarray:
    """Upper-right 2x2 correlation block."""
    return np.asarray(sigma)[:2, 2:]


def assemble_cov(sigma_a: np.ndarray, sigma_b: np.ndarray, eps: np.ndarray) -> np.ndarray:
    """Assemble a 4x4 covariance matrix from its 2x2 blocks."""
    sigma_a = np.asarray(sigma_a, dtype=float)
    sigma_b = np.asarray(sigma_b, dtype=float)
    eps = np.asarray(eps, dtype=float)
    return np.block([[sigma_a, eps], [eps.T, sigma_b]])


def _phys_tol(sigma: np.ndarray, tol: float = TOL_PHYS) -> float:
    """Physicality tolerance scaled with the matrix magnitude.

    Roundoff in the symplectic invariants grows with the square of the
    covariance entries (determinant cancellations), so the absolute
    threshold tolerance must grow accordingly for strongly amplified
    states; at laboratory scales (entries of order one) this reduces to
    the base tolerance.
    """
    return tol * max(1.0, float(np.abs(sigma).max()) ** 2)


def check_cov2(sigma: np.ndarray, tol: float = TOL_PHYS) -> np.ndarray:
    """Validate a single-mode covariance matrix.

    Requires symmetry, a positive trace and ``det sigma >= 1/4 - tol``
    (tolerance scaled with the matrix magnitude).  Returns the matrix
    unchanged so the call can be chained.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (2, 2):
        raise NonPhysical(f"expected a 2x2 covariance matrix, got shape {sigma.shape}")
    if abs(sigma[0, 1] - sigma[1, 0]) > tol * max(1.0, abs(sigma[0, 1])):
        raise NonPhysical("covariance matrix is not symmetric")
    if np.trace(sigma) <= 0.0:
        raise NonPhysical("covariance matrix has non-positive trace")
    if float(np.linalg.det(sigma)) < 0.25 - _phys_tol(sigma, tol):
        raise NonPhysical(f"det sigma = {np.linalg.det(sigma):.12g} < 1/4: uncertainty bound violated")
    return sigma


def check_cov4(sigma: np.ndarray, tol: float = TOL_PHYS) -> np.ndarray:
    """Validate a two-mode covariance matrix (symmetry and ``d_minus >= 1/2``)."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (4, 4):
        raise NonPhysical(f"expected a 4x4 covariance matrix, got shape {sigma.shape}")
    if not np.allclose(sigma, sigma.T, rtol=0.0, atol=tol * max(1.0, float(np.abs(sigma).max()))):
        raise NonPhysical("two-mode covariance matrix is not symmetric")
    spec = symplectic_spectrum(sigma)
    if spec.d_minus < 0.5 - _phys_tol(sigma, tol):
        raise NonPhysical(f"d_minus = {spec.d_minus:.12g} < 1/2: uncertainty bound violated")
    return sigma


def symplectic_spectrum(sigma: np.ndarray) -> SymplecticSpectrum:
    """Symplectic eigenvalues ``(d_plus, d_minus, d_tilde_minus)`` of a 4x4 covariance.

    Uses the invariant form ``d^2 = (Delta +- sqrt(Delta^2 - 4 det sigma))/2``
    with ``Delta = det sigma_A + det sigma_B + 2 det eps`` and, for the
    partial transpose, ``Delta~ = det sigma_A + det sigma_B - 2 det eps``.
    A discriminant within ``-TOL_NUM`` (relative) of zero is clamped to zero,
    which happens for degenerate spectra.
    """
    sigma = np.asarray(sigma, dtype=float)
    det_a = float(np.linalg.det(block_a(sigma)))
    det_b = float(np.linalg.det(block_b(sigma)))
    det_e = float(np.linalg.det(block_eps(sigma)))
    det_s = float(np.linalg.det(sigma))
    # the invariants arise from cancelling determinant terms; their
    # roundoff is set by the terms' magnitudes, not by the results
    parts = abs(det_a) + abs(det_b) + 2.0 * abs(det_e)
    scale = max(1.0, parts * parts, 4.0 * abs(det_s))
    if det_s < -TOL_NUM * scale:
        raise NonPhysical(f"det sigma = {det_s:.12g} < 0")
    det_s = max(det_s, 0.0)

    def pair(delta: float) -> tuple[float, float]:
        disc = delta * delta - 4.0 * det_s
        if disc < -TOL_NUM * scale:
            raise NumericalDomain(
                f"negative symplectic discriminant {disc:.12g} beyond tolerance"
            )
        if disc < TOL_NUM * scale:
            disc = 0.0  # degenerate within the resolution of the subtraction
        hi = max((delta + math.sqrt(disc)) / 2.0, 0.0)
        # recover the small eigenvalue from the exact product d+^2 d-^2 = det sigma:
        # avoids the cancellation in (delta - root)/2 near the physical boundary
        lo = min(det_s / hi, hi) if hi > 0.0 else 0.0
        return math.sqrt(hi), math.sqrt(lo)

    d_plus, d_minus = pair(det_a + det_b + 2.0 * det_e)
    _, d_tilde_minus = pair(det_a + det_b - 2.0 * det_e)
    return SymplecticSpectrum(d_plus=d_plus, d_minus=d_minus, d_tilde_minus=d_tilde_minus)


def is_entangled(sigma: np.ndarray) -> bool:
    """PPT test for two-mode Gaussian states: entangled iff ``d~_minus < 1/2``.

    The test is necessary and sufficient for 1x1-mode Gaussian states.
    Raises :class:`NonPhysical` if the state itself is unphysical.
    """
    sigma = np.asarray(sigma, dtype=float)
    spec = symplectic_spectrum(sigma)
    tol = _phys_tol(sigma)
    if spec.d_minus < 0.5 - tol:
        raise NonPhysical(f"d_minus = {spec.d_minus:.12g} < 1/2")
    return spec.d_tilde_minus < 0.5 - tol


def normal_form(sigma: np.ndarray) -> NormalForm:
    """Extract the local-symplectic normal form ``(a, b, c_plus, c_minus)``.

    The values are recovered from the four symplectic invariants; the
    assignment is fixed by ``|c_plus| >= |c_minus|`` and ``c_plus >= 0``.
    """
    sigma = check_cov4(np.asarray(sigma, dtype=float))
    a = math.sqrt(max(float(np.linalg.det(block_a(sigma))), 0.0))
    b = math.sqrt(max(float(np.linalg.det(block_b(sigma))), 0.0))
    det_e = float(np.linalg.det(block_eps(sigma)))
    det_s = max(float(np.linalg.det(sigma)), 0.0)
    ab = a * b
    # c_plus^2 and c_minus^2 are the roots of t^2 - s t + det_e^2 = 0 where
    # s = c_plus^2 + c_minus^2 follows from det sigma = (ab - c+^2)(ab - c-^2).
    s = (ab * ab + det_e * det_e - det_s) / ab
    s = max(s, 0.0)
    disc = max(s * s - 4.0 * det_e * det_e, 0.0)
    hi = (s + math.sqrt(disc)) / 2.0
    c_plus = math.sqrt(max(hi, 0.0))
    if c_plus > 0.0:
        c_minus = det_e / c_plus
    else:
        c_minus = 0.0
    return NormalForm(a=a, b=b, c_plus=c_plus, c_minus=c_minus)


def g(x: float) -> float:
    """Bosonic entropy function ``g(x) = (x+1) ln(x+1) - x ln x``.

    Extended continuously by ``g(0) = 0``. Inputs within ``TOL_PHYS`` below
    zero are clamped; anything more negative raises :class:`NumericalDomain`.
    """
    if x < 0.0:
        if x < -TOL_PHYS:
            raise NumericalDomain(f"g(x) undefined for x = {x:.12g} < 0")
        return 0.0
    if x == 0.0:
        return 0.0
    # cancellation-free form of (x+1) ln(x+1) - x ln x
    return x * math.log1p(1.0 / x) + math.log1p(x)


def g_inv(s: float) -> float:
    """Inverse of :func:`g`: the mean photon number with entropy ``s``.

    Solved by bracketed Newton iteration with bisection fallback; the
    bracket ``[0, exp(s)]`` always contains the root because
    ``g(x) >= ln(1 + x)``.
    """
    if s < 0.0:
        if s < -TOL_PHYS:
            raise NumericalDomain(f"g_inv(s) undefined for s = {s:.12g} < 0")
        return 0.0
    if s == 0.0:
        return 0.0
    lo, hi = 0.0, math.exp(s)
    while g(hi) < s:
        hi *= 2.0
    # Asymptotics: g(x) ~ ln x + 1 for large x, g(x) ~ x (1 - ln x) for small x.
    if s >= 1.4:
        x = min(math.exp(s - 1.0), hi)
    else:
        x = min(max(s / (1.0 - math.log(s / 2.0)), 1e-300), hi)
    for _ in range(200):
        fx = g(x) - s
        if fx > 0.0:
            hi = x
        else:
            lo = x
        dgdx = math.log1p(1.0 / x) if x > 0.0 else math.inf
        step = fx / dgdx if math.isfinite(dgdx) and dgdx > 0.0 else math.nan
        x_new = x - step if math.isfinite(step) else 0.5 * (lo + hi)
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= TOL_INV * abs(x_new):
            return x_new
        x = x_new
    return x


def thermal_photons(sigma: np.ndarray) -> float:
    """Mean photon number of the thermal state with the same entropy.

    ``N_th = sqrt(det sigma) - 1/2``; values within ``TOL_PHYS`` below zero
    are clamped to zero.
    """
    sigma = check_cov2(sigma)
    n = math.sqrt(max(float(np.linalg.det(sigma)), 0.0)) - 0.5
    return max(n, 0.0)


def entropy_vn_single(sigma: np.ndarray) -> float:
    """Von Neumann entropy of a single-mode Gaussian state.

    Depends on the covariance matrix only through its determinant:
    ``S = g(sqrt(det sigma) - 1/2)``.
    """
    return g(thermal_photons(sigma))


def entropy_vn_two_mode(sigma: np.ndarray) -> float:
    """Von Neumann entropy of a two-mode Gaussian state.

    Standard normal-mode decomposition: ``S = g(d_plus - 1/2) + g(d_minus - 1/2)``.
    """
    spec = symplectic_spectrum(check_cov4(sigma))
    return g(max(spec.d_plus - 0.5, 0.0)) + g(max(spec.d_minus - 0.5, 0.0))


def renyi2_entropy(sigma: np.ndarray) -> float:
    """Renyi-2 entropy ``S_2 = (1/2) ln det sigma`` of a 2x2 or 4x4 covariance.

    In this normalization the single-mode vacuum has ``S_2 = -ln 2`` and
    ``S_2 = -ln(2 mu)`` with ``mu`` the purity.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape == (2, 2):
        check_cov2(sigma)
    elif sigma.shape == (4, 4):
        check_cov4(sigma)
    else:
        raise NonPhysical(f"expected a 2x2 or 4x4 covariance matrix, got shape {sigma.shape}")
    return 0.5 * math.log(float(np.linalg.det(sigma)))


def renyi2_mutual_information(sigma: np.ndarray) -> float:
    """Renyi-2 mutual information ``I_2 = (1/2) ln(det sigma_A det sigma_B / det sigma)``."""
    sigma = check_cov4(np.asarray(sigma, dtype=float))
    det_a = float(np.linalg.det(block_a(sigma)))
    det_b = float(np.linalg.det(block_b(sigma)))
    det_s = float(np.linalg.det(sigma))
    return 0.5 * math.log(det_a * det_b / det_s)


def purity(sigma: np.ndarray) -> float:
    """State purity ``mu = 1/(2 sqrt(det sigma))`` of a single-mode Gaussian state.

    Clamped to 1 when the determinant sits within tolerance of the pure
    value 1/4.
    """
    sigma = check_cov2(sigma)
    mu = 1.0 / (2.0 * math.sqrt(max(float(np.linalg.det(sigma)), 0.25 - TOL_PHYS)))
    return min(mu, 1.0)


def intrinsic_temperature(n_th: float, omega: float) -> float:
    """Temperature of the thermal state with ``n_th`` mean photons at frequency ``omega``.

    ``T = omega / ln((1 + N)/N)`` with the continuous extension ``T(0) = 0``.
    """
    if omega <= 0.0:
        raise NumericalDomain(f"frequency must be positive, got {omega:.12g}")
    if n_th < 0.0:
        if n_th < -TOL_PHYS:
            raise NonPhysical(f"negative thermal photon number {n_th:.12g}")
        return 0.0
    if n_th == 0.0:
        return 0.0
    return omega / math.log1p(1.0 / n_th)


def temperature_of(sigma: np.ndarray, omega: float) -> float:
    """Intrinsic temperature of the single-mode Gaussian state with covariance ``sigma``."""
    return intrinsic_temperature(thermal_photons(sigma), omega)
