"""First-law ledger for one bilinear transformation applied to one Gaussian state.

Definitions (all in units ``hbar = k_B = 1``):

* internal energy ``E = (omega/2)(Tr sigma + |mean|^2)``;
* bound energy ``B = omega sqrt(det sigma)``, the energy of the thermal
  state with the same entropy (unextractable as work);
* free energy ``F = E - B >= 0``;
* heat ``dQ = dB_B``, the change of the bath's bound energy;
* external work ``W = dE_A + dE_B``;
* work on the system ``dW_A = W - dF_B = dE_A + dQ`` (first law).

The generalized Clausius statement
``(T_B - T_A) dS_A >= dF_A + dF_B + T_B dI - W`` is evaluated with the
*initial* intrinsic temperatures; in that convention the residual equals
a sum of Bregman divergences of the (convex) bound-energy-vs-entropy
curve and is therefore non-negative for every process.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import (
    TOL_NUM,
    check_cov2,
    entropy_vn_single,
    entropy_vn_two_mode,
    g_inv,
    renyi2_entropy,
    renyi2_mutual_information,
    temperature_of,
    thermal_photons,
)
from .errors import DegenerateEntropy, NumericalDomain
from .transforms import BilinearTransform, TwoModeState, apply, symplectic_of


def tol_num() -> float:
    """Relative tolerance for ledger identities.

    ``GTHERMO_TOL`` overrides the default for exploratory runs.
    """
    return float(os.environ.get("GTHERMO_TOL", TOL_NUM))


@dataclass(frozen=True)
class EnergyBreakdown:
    """Internal, bound and free energy of a single mode."""

    E: float
    B: float
    F: float


def internal_energy(sigma: np.ndarray, mean: np.ndarray, omega: float) -> float:
    """Internal energy ``(omega/2)(Tr sigma + |mean|^2) >= omega/2``."""
    sigma = check_cov2(sigma)
    mean = np.asarray(mean, dtype=float).reshape(2)
    return 0.5 * omega * (float(np.trace(sigma)) + float(mean @ mean))


def bound_energy(sigma: np.ndarray, omega: float) -> float:
    """Bound energy ``omega sqrt(det sigma) = omega (N_th + 1/2)``."""
    sigma = check_cov2(sigma)
    return omega * (thermal_photons(sigma) + 0.5)


def free_energy(sigma: np.ndarray, mean: np.ndarray, omega: float) -> EnergyBreakdown:
    """Energy split ``E = B + F``; ``F = 0`` iff the state is thermal with zero mean."""
    e = internal_energy(sigma, mean, omega)
    b = bound_energy(sigma, omega)
    return EnergyBreakdown(E=e, B=b, F=e - b)


def heat_from_dets(sigma_b: np.ndarray, sigma_b_prime: np.ndarray, omega_b: float) -> float:
    """Heat absorbed by the bath from the two bath covariance matrices.

    ``dQ = omega_B (sqrt(det sigma_B') - sqrt(det sigma_B))``.
    """
    return bound_energy(sigma_b_prime, omega_b) - bound_energy(sigma_b, omega_b)


def heat_from_entropies(s_b: float, s_b_prime: float, omega_b: float) -> float:
    """Heat absorbed by the bath from the two bath entropies.

    ``dQ = omega_B (g_inv(S_B') - g_inv(S_B))``; agrees with
    :func:`heat_from_dets` on Gaussian states because the entropy is a
    monotone function of the determinant.
    """
    if s_b < -1e-12 or s_b_prime < -1e-12:
        raise NumericalDomain("entropies must be non-negative")
    return omega_b * (g_inv(max(s_b_prime, 0.0)) - g_inv(max(s_b, 0.0)))


@dataclass(frozen=True)
class ThermoReport:
    """Complete first-law ledger of one transformation.

    Energies in units of the respective ``hbar omega``; ``dI`` is the von
    Neumann mutual-information change, ``dI2`` its Renyi-2 counterpart
    (never interchanged).  Temperatures are intrinsic (entropy-matched
    thermal) temperatures before and after the process.
    """

    dE_A: float
    dE_B: float
    W: float
    dQ: float
    dW_A: float
    dB_A: float
    dB_B: float
    dF_A: float
    dF_B: float
    dS_A: float
    dS_B: float
    dI: float
    dI2: float
    T_A_in: float
    T_B_in: float
    T_A_out: float
    T_B_out: float
    clausius_residual: float

    @property
    def net_gain(self) -> float:
        """Net extractable-work gain ``dF_A - W``."""
        return self.dF_A - self.W


def clausius_residual(report: ThermoReport, d_i: float) -> float:
    """Slack of the generalized Clausius inequality for a computed process.

    ``(T_B_in - T_A_in) dS_A - (dF_A + dF_B + T_B_in dI - W)``; must be
    ``>= 0`` up to roundoff for every entropy-preserving process when the
    initial temperatures are used.
    """
    lhs = (report.T_B_in - report.T_A_in) * report.dS_A
    rhs = report.dF_A + report.dF_B + report.T_B_in * d_i - report.W
    return lhs - rhs


def _check(label: str, lhs: float, rhs: float, tol: float) -> None:
    scale = max(1.0, abs(lhs), abs(rhs))
    if abs(lhs - rhs) > tol * scale:
        raise NumericalDomain(
            f"ledger identity {label} violated: {lhs!r} vs {rhs!r}"
        )


def ledger(t: BilinearTransform, state: TwoModeState) -> ThermoReport:
    """Evaluate the full thermodynamic ledger of ``t`` acting on ``state``.

    The system-energy change is computed both from the symplectic block
    formula and from the direct before/after difference, and the two are
    required to agree; the first-law identities are asserted before the
    report is returned.
    """
    tol = tol_num()
    out = apply(t, state)
    w_a, w_b = state.omega_a, state.omega_b

    e_a0 = internal_energy(state.sigma_a, state.mean_a, w_a)
    e_b0 = internal_energy(state.sigma_b, state.mean_b, w_b)
    e_a1 = internal_energy(out.sigma_a, out.mean_a, w_a)
    e_b1 = internal_energy(out.sigma_b, out.mean_b, w_b)
    de_a, de_b = e_a1 - e_a0, e_b1 - e_b0

    # independent route: block formula on the pre-transform state
    gam = symplectic_of(t)
    blk_a, blk_d = gam[:2, :2], gam[:2, 2:]
    sig_a_out = (
        blk_a @ state.sigma_a @ blk_a.T
        + blk_d @ state.sigma_b @ blk_d.T
        + blk_a @ state.eps @ blk_d.T
        + blk_d @ state.eps.T @ blk_a.T
    )
    mean_a_out = blk_a @ state.mean_a + blk_d @ state.mean_b
    de_a_block = 0.5 * w_a * (
        float(np.trace(sig_a_out))
        - float(np.trace(state.sigma_a))
        + float(mean_a_out @ mean_a_out)
        - float(state.mean_a @ state.mean_a)
    )
    _check("dE_A(block) = dE_A(direct)", de_a_block, de_a, tol)

    b_a0, b_b0 = bound_energy(state.sigma_a, w_a), bound_energy(state.sigma_b, w_b)
    b_a1, b_b1 = bound_energy(out.sigma_a, w_a), bound_energy(out.sigma_b, w_b)
    db_a, db_b = b_a1 - b_a0, b_b1 - b_b0
    dq = heat_from_dets(state.sigma_b, out.sigma_b, w_b)
    _check("dQ = dB_B", dq, db_b, tol)

    w = de_a + de_b
    df_a, df_b = de_a - db_a, de_b - db_b
    dw_a = w - df_b
    _check("dW_A = dE_A + dQ", dw_a, de_a + dq, tol)

    s_a0, s_b0 = entropy_vn_single(state.sigma_a), entropy_vn_single(state.sigma_b)
    s_a1, s_b1 = entropy_vn_single(out.sigma_a), entropy_vn_single(out.sigma_b)
    s_ab0, s_ab1 = entropy_vn_two_mode(state.cov), entropy_vn_two_mode(out.cov)
    ds_a, ds_b = s_a1 - s_a0, s_b1 - s_b0
    d_i = (s_a1 + s_b1 - s_ab1) - (s_a0 + s_b0 - s_ab0)
    # Global entropy is conserved, so the marginal changes exhaust dI.  The
    # achievable resolution is limited near purity: symplectic eigenvalues
    # carry roundoff ~ tol * |cov|^2 and the entropy function amplifies it
    # by |log| of the gap to the pure value.
    from .core import symplectic_spectrum

    eta = TOL_NUM * max(
        1.0, float(np.abs(state.cov).max()) ** 2, float(np.abs(out.cov).max()) ** 2
    )
    gap = max(symplectic_spectrum(state.cov).d_minus - 0.5, eta)
    s_tol = max(tol, 8.0 * eta * (1.0 + abs(math.log(gap))))
    _check("dS_A + dS_B = dI", ds_a + ds_b, d_i, s_tol)
    d_i2 = renyi2_mutual_information(out.cov) - renyi2_mutual_information(state.cov)

    report = ThermoReport(
        dE_A=de_a,
        dE_B=de_b,
        W=w,
        dQ=dq,
        dW_A=dw_a,
        dB_A=db_a,
        dB_B=db_b,
        dF_A=df_a,
        dF_B=df_b,
        dS_A=ds_a,
        dS_B=ds_b,
        dI=d_i,
        dI2=d_i2,
        T_A_in=temperature_of(state.sigma_a, w_a),
        T_B_in=temperature_of(state.sigma_b, w_b),
        T_A_out=temperature_of(out.sigma_a, w_a),
        T_B_out=temperature_of(out.sigma_b, w_b),
        clausius_residual=0.0,
    )
    residual = clausius_residual(report, d_i)
    return ThermoReport(**{**report.__dict__, "clausius_residual": residual})


def ledger_quantities(t: BilinearTransform, state: TwoModeState) -> dict[str, float]:
    """Ledger fields keyed for comparison against closed-form predictors.

    Adds ``netW`` and the final bath determinant to the plain report
    fields.
    """
    report = ledger(t, state)
    out = apply(t, state)
    values = dict(report.__dict__)
    values["netW"] = report.net_gain
    values["det_sigma_b_out"] = float(np.linalg.det(out.sigma_b))
    return values


def renyi_bound_energy_relation(
    state: TwoModeState, state_prime: TwoModeState
) -> tuple[float, float]:
    """Both sides of ``B(B') = exp(dI2 - dS2_A) B(B)`` for a symplectic step.

    Returns ``(lhs, rhs)``; they agree identically for any pair related by
    a global symplectic transformation.
    """
    lhs = bound_energy(state_prime.sigma_b, state_prime.omega_b)
    d_i2 = renyi2_mutual_information(state_prime.cov) - renyi2_mutual_information(state.cov)
    d_s2_a = renyi2_entropy(state_prime.sigma_a) - renyi2_entropy(state.sigma_a)
    rhs = math.exp(d_i2 - d_s2_a) * bound_energy(state.sigma_b, state.omega_b)
    return lhs, rhs


def infinitesimal_clausius_check(
    t_family: Callable[[float], BilinearTransform],
    state: TwoModeState,
    h: float = 1e-3,
    richardson: bool = False,
) -> float:
    """Deviation ``|dQ/dS_B - T_B|`` of the finite-difference Clausius ratio.

    ``t_family`` maps a small parameter to a transform (with
    ``t_family(0)`` the identity); the process at parameter ``h`` yields
    the increments.  Expected to vanish with ``h``.  Raises
    :class:`DegenerateEntropy` for a zero-temperature bath or when the
    entropy increment underflows.  With ``richardson=True`` the ratio is
    extrapolated from steps ``h`` and ``h/2``.
    """
    t_b = temperature_of(state.sigma_b, state.omega_b)
    if t_b == 0.0:
        raise DegenerateEntropy("bath at zero intrinsic temperature: Clausius ratio degenerate")

    def ratio(step: float) -> float:
        out = apply(t_family(step), state)
        ds_b = entropy_vn_single(out.sigma_b) - entropy_vn_single(state.sigma_b)
        if abs(ds_b) < 1e-14:
            raise DegenerateEntropy(f"bath entropy increment {ds_b!r} underflows")
        dq = heat_from_dets(state.sigma_b, out.sigma_b, state.omega_b)
        return dq / ds_b

    r = ratio(h)
    if richardson:
        r = 2.0 * ratio(h / 2.0) - r
    return abs(r - t_b)
