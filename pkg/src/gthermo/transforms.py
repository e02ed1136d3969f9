"""Bilinear two-mode transformations acting on Gaussian states.

Two interactions are supported, each parametrized by a magnitude and a
phase:

* frequency converter / beam splitter (``kind="fc"``), a passive mixing
  with angle ``theta in [0, pi/2]`` and phase ``phi``;
* parametric amplifier (``kind="pa"``), an active two-mode squeezing with
  gain ``r >= 0`` and phase ``psi``.

Phase conventions.  The symplectic matrices are

    FC: [[cos(theta) I,        sin(theta) R_phi],
         [-sin(theta) R_phi^T, cos(theta) I     ]]

    PA: [[cosh(r) I,          sinh(r) Rt_psi],
         [sinh(r) Rt_psi,     cosh(r) I     ]]

with ``R_phi`` the rotation and ``Rt_psi`` the reflection defined below.
At the mode-operator level the FC matrix corresponds to
``a' = cos(theta) a + e^{-i phi} sin(theta) b`` (note the sign of ``phi``);
:func:`displacement_evolution` follows the same convention so that it
agrees exactly with the action of the symplectic matrix on the mean
vector.  The single-mode squeezer :func:`squeeze_symplectic` is phased so
that squeezing a thermal state reproduces the covariance elements of
:func:`gthermo.states.make_single_mode`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OMEGA, TOL_NUM, check_cov4
from .errors import DomainError

FC = "fc"
PA = "pa"

_TWO_PI = 2.0 * math.pi


def rotation(phi: float) -> np.ndarray:
    """Rotation matrix ``R_phi = [[cos, sin], [-sin, cos]]``."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, s], [-s, c]])


def reflection(psi: float) -> np.ndarray:
    """Reflection matrix ``Rt_psi = [[cos, sin], [sin, -cos]]`` (squares to I)."""
    c, s = math.cos(psi), math.sin(psi)
    return np.array([[c, s], [s, -c]])


def squeeze_symplectic(r: float, theta: float = 0.0) -> np.ndarray:
    """Single-mode squeezer ``cosh(r) I + sinh(r) Rt_{-theta}``.

    For ``theta = 0`` this is ``diag(e^r, e^-r)``.  Acting on a thermal
    covariance ``(N + 1/2) I`` it yields the squeezed-thermal elements
    ``(N + 1/2)(cosh 2r +- cos(theta) sinh 2r)`` on the diagonal and
    ``-(N + 1/2) sin(theta) sinh 2r`` off it.
    """
    return math.cosh(r) * np.eye(2) + math.sinh(r) * reflection(-theta)


@dataclass(frozen=True)
class BilinearTransform:
    """A frequency-converter (``kind="fc"``) or parametric-amplifier (``kind="pa"``) setting.

    ``angle`` is the mixing angle ``theta`` for FC (must lie in
    ``[0, pi/2]``) or the gain ``r >= 0`` for PA; out-of-range values are
    rejected so caller bugs surface early.  ``phase`` is ``phi`` or ``psi``
    and, being 2*pi-periodic, is normalized into ``[0, 2*pi)``.
    """

    kind: str
    angle: float
    phase: float = 0.0

    def __post_init__(self):
        if self.kind not in (FC, PA):
            raise DomainError(f"unknown transform kind {self.kind!r}")
        if self.kind == FC and not 0.0 <= self.angle <= math.pi / 2.0 + 1e-15:
            raise DomainError(f"FC angle {self.angle:.12g} outside [0, pi/2]")
        if self.kind == PA and self.angle < 0.0:
            raise DomainError(f"PA gain {self.angle:.12g} must be >= 0")
        object.__setattr__(self, "phase", self.phase % _TWO_PI)


def fc(theta: float, phi: float = 0.0) -> BilinearTransform:
    """Frequency-converter transform with mixing angle ``theta`` and phase ``phi``."""
    return BilinearTransform(FC, theta, phi)


def pa(r: float, psi: float = 0.0) -> BilinearTransform:
    """Parametric-amplifier transform with gain ``r`` and phase ``psi``."""
    return BilinearTransform(PA, r, psi)


def fc_symplectic(theta: float, phi: float = 0.0) -> np.ndarray:
    """4x4 symplectic matrix of the frequency converter."""
    if not 0.0 <= theta <= math.pi / 2.0 + 1e-15:
        raise DomainError(f"FC angle {theta:.12g} outside [0, pi/2]")
    c, s = math.cos(theta), math.sin(theta)
    r = rotation(phi)
    return np.block([[c * np.eye(2), s * r], [-s * r.T, c * np.eye(2)]])


def pa_symplectic(r: float, psi: float = 0.0) -> np.ndarray:
    """4x4 symplectic matrix of the parametric amplifier."""
    if r < 0.0:
        raise DomainError(f"PA gain {r:.12g} must be >= 0")
    ch, sh = math.cosh(r), math.sinh(r)
    rt = reflection(psi)
    return np.block([[ch * np.eye(2), sh * rt], [sh * rt, ch * np.eye(2)]])


def symplectic_of(t: BilinearTransform) -> np.ndarray:
    """Symplectic matrix realizing ``t``."""
    if t.kind == FC:
        return fc_symplectic(t.angle, t.phase)
    return pa_symplectic(t.angle, t.phase)


def is_symplectic(gamma: np.ndarray, tol: float = 1e-10) -> bool:
    """Check ``Gamma Omega Gamma^T = Omega``."""
    gamma = np.asarray(gamma, dtype=float)
    return bool(np.allclose(gamma @ OMEGA @ gamma.T, OMEGA, rtol=0.0, atol=tol))


@dataclass(frozen=True)
class TwoModeState:
    """Gaussian state of two modes: mean vector, covariance and frequencies.

    ``mean`` is the 4-vector of quadrature expectations in the
    ``(q_A, p_A, q_B, p_B)`` ordering; ``cov`` the 4x4 covariance matrix.
    """

    mean: np.ndarray
    cov: np.ndarray
    omega_a: float = 1.0
    omega_b: float = 1.0

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(4)
        cov = np.array(self.cov, dtype=float)
        cov = 0.5 * (cov + cov.T)  # symmetrize roundoff before the physicality gate
        check_cov4(cov)
        if self.omega_a <= 0.0 or self.omega_b <= 0.0:
            raise DomainError("mode frequencies must be positive")
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def sigma_a(self) -> np.ndarray:
        return self.cov[:2, :2]

    @property
    def sigma_b(self) -> np.ndarray:
        return self.cov[2:, 2:]

    @property
    def eps(self) -> np.ndarray:
        return self.cov[:2, 2:]

    @property
    def mean_a(self) -> np.ndarray:
        return self.mean[:2]

    @property
    def mean_b(self) -> np.ndarray:
        return self.mean[2:]


def apply(t: BilinearTransform, state: TwoModeState) -> TwoModeState:
    """Evolve a state: ``mean -> Gamma mean`` and ``cov -> Gamma cov Gamma^T``."""
    gamma = symplectic_of(t)
    return TwoModeState(
        mean=gamma @ state.mean,
        cov=gamma @ state.cov @ gamma.T,
        omega_a=state.omega_a,
        omega_b=state.omega_b,
    )


def mean_from_displacements(alpha: complex, delta: complex) -> np.ndarray:
    """Quadrature mean vector ``sqrt(2) (Re a, Im a, Re d, Im d)``."""
    return math.sqrt(2.0) * np.array([alpha.real, alpha.imag, delta.real, delta.imag])


def displacements_from_mean(mean: np.ndarray) -> tuple[complex, complex]:
    """Inverse of :func:`mean_from_displacements`."""
    m = np.asarray(mean, dtype=float).reshape(4) / math.sqrt(2.0)
    return complex(m[0], m[1]), complex(m[2], m[3])


def displacement_evolution(
    alpha: complex, delta: complex, t: BilinearTransform
) -> tuple[complex, complex]:
    """Evolution of the two displacement amplitudes under ``t``.

    FC: ``alpha' = alpha cos(theta) + delta e^{-i phi} sin(theta)``,
    ``delta' = delta cos(theta) - alpha e^{+i phi} sin(theta)``.

    PA: ``alpha' = alpha cosh(r) + conj(delta) e^{+i psi} sinh(r)``,
    ``delta' = delta cosh(r) + conj(alpha) e^{+i psi} sinh(r)``.

    Identical to pushing the mean vector through :func:`apply` via the
    embedding of :func:`mean_from_displacements`.
    """
    if t.kind == FC:
        c, s = math.cos(t.angle), math.sin(t.angle)
        ph = complex(math.cos(t.phase), math.sin(t.phase))
        return alpha * c + delta * s / ph, delta * c - alpha * s * ph
    ch, sh = math.cosh(t.angle), math.sinh(t.angle)
    ph = complex(math.cos(t.phase), math.sin(t.phase))
    return alpha * ch + delta.conjugate() * ph * sh, delta * ch + alpha.conjugate() * ph * sh


_QQPP = np.ix_([0, 2, 1, 3], [0, 2, 1, 3])


def block_identities_ok(gamma: np.ndarray, tol: float = TOL_NUM) -> bool:
    """Check the symplectic block identities of ``gamma``.

    With blocks ``[[A, D], [C, B]]`` read off in the position-before-
    momentum ordering ``(q_A, q_B, p_A, p_B)`` a symplectic matrix
    satisfies ``A^T B - C^T D = I``, ``A^T C = C^T A`` and
    ``B^T D = D^T B``.  (The identities are ordering-specific; in the
    mode ordering used elsewhere in this package they do not take this
    form.)
    """
    gx = np.asarray(gamma, dtype=float)[_QQPP]
    a, d = gx[:2, :2], gx[:2, 2:]
    c, b = gx[2:, :2], gx[2:, 2:]
    scale = max(1.0, float(np.abs(gamma).max()) ** 2)
    return bool(
        np.allclose(a.T @ b - c.T @ d, np.eye(2), rtol=0.0, atol=tol * scale)
        and np.allclose(a.T @ c, c.T @ a, rtol=0.0, atol=tol * scale)
        and np.allclose(b.T @ d, d.T @ b, rtol=0.0, atol=tol * scale)
    )
