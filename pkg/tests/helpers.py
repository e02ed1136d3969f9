"""Shared samplers and independent oracles for the test suite."""

import math

import numpy as np

from gthermo import (
    OMEGA,
    BilinearTransform,
    CorrelatedSpec,
    SingleModeSpec,
    TwoModeState,
    build_state,
    make_product,
    make_tmsv,
)


#: pass/fail lines appended by the acceptance suite, echoed after the run
ACCEPTANCE_LINES = []


def record(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def brute_symplectic_eigs(sigma: np.ndarray) -> np.ndarray:
    """Symplectic eigenvalues as |eigvals(i Omega sigma)|, one per pair, ascending."""
    vals = np.abs(np.linalg.eigvals(1j * OMEGA @ sigma))
    return np.sort(vals)[::2]


def brute_ppt_min(sigma: np.ndarray) -> float:
    """Smaller symplectic eigenvalue of the partially transposed covariance."""
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    return float(brute_symplectic_eigs(flip @ sigma @ flip)[0])


def random_single_spec(rng, n_max=3.0, r_max=1.0, disp=1.0) -> SingleModeSpec:
    return SingleModeSpec(
        N=rng.uniform(0.0, n_max),
        r=rng.uniform(0.0, r_max),
        theta_sq=rng.uniform(0.0, 2.0 * math.pi),
        alpha=complex(rng.uniform(-disp, disp), rng.uniform(-disp, disp)),
        omega=rng.uniform(0.5, 2.0),
    )


def random_type1_spec(rng, n_max=4.0) -> CorrelatedSpec:
    n_a, n_b = rng.uniform(0.0, n_max, size=2)
    return CorrelatedSpec(
        "type1",
        N_A=n_a,
        N_B=n_b,
        c=rng.uniform(-1.0, 1.0) * math.sqrt(n_a * n_b),
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        delta=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega_a=rng.uniform(0.5, 2.0),
        omega_b=rng.uniform(0.5, 2.0),
    )


def random_type2_spec(rng, n_max=4.0) -> CorrelatedSpec:
    n_a, n_b = rng.uniform(0.0, n_max, size=2)
    bound = math.sqrt(min(n_a, n_b) * (1.0 + max(n_a, n_b)))
    return CorrelatedSpec(
        "type2",
        N_A=n_a,
        N_B=n_b,
        c=rng.uniform(-1.0, 1.0) * bound,
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        delta=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega_a=rng.uniform(0.5, 2.0),
        omega_b=rng.uniform(0.5, 2.0),
    )


def random_state(rng) -> TwoModeState:
    """Random physical two-mode state drawn across all supported families."""
    pick = rng.integers(0, 4)
    if pick == 0:
        return make_product(random_single_spec(rng), random_single_spec(rng))
    if pick == 1:
        return build_state(random_type1_spec(rng))
    if pick == 2:
        return build_state(random_type2_spec(rng))
    return make_tmsv(rng.uniform(0.0, 1.0), rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0))


def random_transform(rng, kind=None, r_max=1.2) -> BilinearTransform:
    if kind is None:
        kind = "fc" if rng.integers(0, 2) == 0 else "pa"
    if kind == "fc":
        return BilinearTransform("fc", rng.uniform(0.0, math.pi / 2.0), rng.uniform(0.0, 2 * math.pi))
    return BilinearTransform("pa", rng.uniform(0.0, r_max), rng.uniform(0.0, 2 * math.pi))
