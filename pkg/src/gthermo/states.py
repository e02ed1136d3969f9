"""Constructors for the Gaussian state families and their closed-form predictors.

The predictor registry maps a stable string tag to the closed-form
expressions for heat, work and bath determinants that are available for
specific state families.  Every predictor is exact on its validity
region, so it can be checked against the generic covariance pipeline to
full numerical precision; the registry is shared by the test suite and
the ``verify`` CLI verb.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Callable, Union

import numpy as np

from .core import TOL_PHYS, assemble_cov
from .errors import CorrelationBoundViolation, DomainError, UnknownScenario
from .transforms import (
    FC,
    PA,
    BilinearTransform,
    TwoModeState,
    mean_from_displacements,
)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SingleModeSpec:
    """Parameters of a displaced squeezed thermal mode.

    ``N`` thermal photons, squeeze magnitude ``r`` with phase ``theta_sq``,
    complex displacement ``alpha`` and angular frequency ``omega``.
    """

    N: float
    r: float = 0.0
    theta_sq: float = 0.0
    alpha: complex = 0j
    omega: float = 1.0

    def __post_init__(self):
        if self.N < 0.0:
            raise DomainError(f"thermal photon number N = {self.N:.12g} must be >= 0")
        if self.r < 0.0:
            raise DomainError(f"squeeze magnitude r = {self.r:.12g} must be >= 0")
        if self.omega <= 0.0:
            raise DomainError(f"frequency omega = {self.omega:.12g} must be > 0")
        object.__setattr__(self, "theta_sq", self.theta_sq % _TWO_PI)
        object.__setattr__(self, "alpha", complex(self.alpha))


@dataclass(frozen=True)
class CorrelatedSpec:
    """A two-mode family with locally thermal marginals plus correlations.

    Families:

    * ``"type1"``: correlation block ``c I`` (always separable),
      admissible for ``|c| <= sqrt(N_A N_B)``;
    * ``"type2"``: correlation block ``c diag(1, -1)`` (entangled iff
      ``|c| > sqrt(N_A N_B)``), admissible for
      ``|c| <= sqrt(N_min (1 + N_max))``;
    * ``"tmsv"``: two-mode squeezed vacuum with squeeze magnitude ``r``;
    * ``"custom"``: arbitrary 2x2 ``custom_eps``, gated only by the
      physicality of the assembled covariance matrix.
    """

    family: str
    N_A: float = 0.0
    N_B: float = 0.0
    c: float = 0.0
    alpha: complex = 0j
    delta: complex = 0j
    omega_a: float = 1.0
    omega_b: float = 1.0
    r: float = 0.0
    custom_eps: tuple | None = None

    def __post_init__(self):
        if self.family not in ("type1", "type2", "tmsv", "custom"):
            raise DomainError(f"unknown correlated family {self.family!r}")
        if self.N_A < 0.0 or self.N_B < 0.0:
            raise DomainError("thermal photon numbers must be >= 0")
        if self.omega_a <= 0.0 or self.omega_b <= 0.0:
            raise DomainError("frequencies must be > 0")
        if self.family == "tmsv" and self.r < 0.0:
            raise DomainError(f"tmsv squeeze r = {self.r:.12g} must be >= 0")
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "delta", complex(self.delta))


StateSpec = Union[tuple[SingleModeSpec, SingleModeSpec], CorrelatedSpec]


def make_single_mode(spec: SingleModeSpec) -> tuple[np.ndarray, np.ndarray]:
    """Covariance matrix and mean vector of a displaced squeezed thermal mode.

    ``sigma_11 = (N + 1/2)(cosh 2r + cos(theta) sinh 2r)``,
    ``sigma_22 = (N + 1/2)(cosh 2r - cos(theta) sinh 2r)``,
    ``sigma_12 = -(N + 1/2) sin(theta) sinh 2r``; ``det sigma = (N + 1/2)^2``.
    """
    n = spec.N + 0.5
    c2, s2 = math.cosh(2.0 * spec.r), math.sinh(2.0 * spec.r)
    ct, st = math.cos(spec.theta_sq), math.sin(spec.theta_sq)
    sigma = n * np.array([[c2 + ct * s2, -st * s2], [-st * s2, c2 - ct * s2]])
    mean = math.sqrt(2.0) * np.array([spec.alpha.real, spec.alpha.imag])
    return sigma, mean


def make_product(a: SingleModeSpec, b: SingleModeSpec) -> TwoModeState:
    """Uncorrelated product of two single-mode Gaussian states."""
    sig_a, mean_a = make_single_mode(a)
    sig_b, mean_b = make_single_mode(b)
    return TwoModeState(
        mean=np.concatenate([mean_a, mean_b]),
        cov=assemble_cov(sig_a, sig_b, np.zeros((2, 2))),
        omega_a=a.omega,
        omega_b=b.omega,
    )


def _locally_thermal(spec: CorrelatedSpec, eps: np.ndarray) -> TwoModeState:
    sigma = assemble_cov(
        (spec.N_A + 0.5) * np.eye(2), (spec.N_B + 0.5) * np.eye(2), eps
    )
    return TwoModeState(
        mean=mean_from_displacements(spec.alpha, spec.delta),
        cov=sigma,
        omega_a=spec.omega_a,
        omega_b=spec.omega_b,
    )


def make_type1(spec: CorrelatedSpec) -> TwoModeState:
    """Locally thermal state with correlation block ``c I`` (separable family)."""
    bound = math.sqrt(spec.N_A * spec.N_B)
    if abs(spec.c) > bound * (1.0 + TOL_PHYS) + TOL_PHYS:
        raise CorrelationBoundViolation(
            f"|c| = {abs(spec.c):.12g} exceeds sqrt(N_A N_B) = {bound:.12g}"
        )
    return _locally_thermal(spec, spec.c * np.eye(2))


def make_type2(spec: CorrelatedSpec) -> TwoModeState:
    """Locally thermal state with correlation block ``c diag(1, -1)``.

    Entangled exactly when ``|c| > sqrt(N_A N_B)``.
    """
    if spec.N_A <= spec.N_B:
        bound = math.sqrt(spec.N_A * (1.0 + spec.N_B))
        name = "sqrt(N_A (1 + N_B))"
    else:
        bound = math.sqrt(spec.N_B * (1.0 + spec.N_A))
        name = "sqrt(N_B (1 + N_A))"
    if abs(spec.c) > bound * (1.0 + TOL_PHYS) + TOL_PHYS:
        raise CorrelationBoundViolation(f"|c| = {abs(spec.c):.12g} exceeds {name} = {bound:.12g}")
    return _locally_thermal(spec, spec.c * np.diag([1.0, -1.0]))


def make_tmsv(r: float, omega_a: float = 1.0, omega_b: float = 1.0) -> TwoModeState:
    """Two-mode squeezed vacuum with squeeze magnitude ``r``.

    Marginals ``(cosh 2r)/2 I`` and correlation block
    ``(sinh 2r)/2 diag(1, -1)``; coincides with the parametric amplifier
    ``pa(r, 0)`` acting on the two-mode vacuum.
    """
    if r < 0.0:
        raise DomainError(f"squeeze magnitude r = {r:.12g} must be >= 0")
    c2, s2 = math.cosh(2.0 * r) / 2.0, math.sinh(2.0 * r) / 2.0
    sigma = assemble_cov(c2 * np.eye(2), c2 * np.eye(2), s2 * np.diag([1.0, -1.0]))
    return TwoModeState(mean=np.zeros(4), cov=sigma, omega_a=omega_a, omega_b=omega_b)


def make_custom(spec: CorrelatedSpec) -> TwoModeState:
    """Locally thermal state with an arbitrary correlation block.

    Admitted solely through the physicality gate of the assembled
    covariance matrix (raises ``NonPhysical`` when ``d_minus < 1/2``).
    """
    if spec.custom_eps is None:
        raise DomainError("custom family requires custom_eps")
    eps = np.asarray(spec.custom_eps, dtype=float)
    if eps.shape != (2, 2):
        raise DomainError(f"custom_eps must be 2x2, got shape {eps.shape}")
    return _locally_thermal(spec, eps)


def build_state(spec: StateSpec) -> TwoModeState:
    """Build a :class:`TwoModeState` from a product pair or a correlated spec."""
    if isinstance(spec, tuple):
        return make_product(*spec)
    if spec.family == "type1":
        return make_type1(spec)
    if spec.family == "type2":
        return make_type2(spec)
    if spec.family == "tmsv":
        return make_tmsv(spec.r, spec.omega_a, spec.omega_b)
    return make_custom(spec)


def fs_factor(r_a: float, r_b: float, theta_diff: float, phi: float) -> float:
    """Squeezing interference factor of the frequency converter (``>= 1``).

    ``cosh 2r_A cosh 2r_B - sinh 2r_A sinh 2r_B cos(theta_diff - 2 phi)``
    where ``theta_diff = theta_A - theta_B`` is the difference of the two
    squeeze phases.  Equal to 1 exactly under phase compensation
    ``theta_diff = 2 phi`` (or with no squeezing at all).
    """
    return math.cosh(2.0 * r_a) * math.cosh(2.0 * r_b) - math.sinh(2.0 * r_a) * math.sinh(
        2.0 * r_b
    ) * math.cos(theta_diff - 2.0 * phi)


def gs_factor(r_a: float, r_b: float, theta_sum: float, psi: float) -> float:
    """Squeezing interference factor of the parametric amplifier (``>= 1``).

    Same hyperbolic form as :func:`fs_factor` but the amplifier couples to
    the *sum* of the squeeze phases: the cosine argument is
    ``theta_sum + 2 psi`` with ``theta_sum = theta_A + theta_B``.
    Compensation (factor 1) happens at ``theta_sum + 2 psi = 0 mod 2 pi``.
    """
    return math.cosh(2.0 * r_a) * math.cosh(2.0 * r_b) - math.sinh(2.0 * r_a) * math.sinh(
        2.0 * r_b
    ) * math.cos(theta_sum + 2.0 * psi)


def type1_pa_negative_heat_threshold(n_a: float, n_b: float, r: float) -> float:
    """Correlation amplitude above which the amplifier cools the bath.

    For the ``c I`` family under a parametric amplifier of gain ``r`` the
    heat changes sign at
    ``|c| = sqrt((a sinh^2 r + b cosh^2 r)^2 - b^2) / sinh 2r`` with
    ``a = N_A + 1/2`` and ``b = N_B + 1/2``.  The threshold may exceed the
    admissible bound ``sqrt(N_A N_B)``, in which case no physical state of
    the family cools the bath at this gain.
    """
    if r <= 0.0:
        raise DomainError("amplifier gain must be positive")
    a, b = n_a + 0.5, n_b + 0.5
    inner = a * math.sinh(r) ** 2 + b * math.cosh(r) ** 2
    return math.sqrt(inner * inner - b * b) / math.sinh(2.0 * r)


def fc_balanced_cooling_threshold(n_a: float, fs: float) -> float:
    """Bath occupation above which a balanced converter can cool the bath.

    For equal squeeze magnitudes, ``theta = pi/4`` and zero converter
    phase, the bath loses heat iff ``N_B`` exceeds
    ``(F_S + 2 N_A F_S - 3)/6 + sqrt((3 + F_S^2)(1 + 2 N_A)^2)/6``.
    """
    return (fs + 2.0 * n_a * fs - 3.0) / 6.0 + math.sqrt((3.0 + fs * fs) * (1.0 + 2.0 * n_a) ** 2) / 6.0


# ---------------------------------------------------------------------------
# closed-form predictor registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Predictor:
    """A closed-form expression valid on a family of (transform, state) pairs.

    ``predict`` maps a transform plus the *spec* that generated the state
    to a dict of predicted ledger quantities; ``sample`` draws a random
    point of the validity region for verification sweeps.
    """

    tag: str
    doc: str
    predict: Callable[[BilinearTransform, StateSpec], dict[str, float]]
    sample: Callable[[np.random.Generator], tuple[BilinearTransform, StateSpec]]


PREDICTORS: dict[str, Predictor] = {}


def _register(tag, doc, predict, sample):
    PREDICTORS[tag] = Predictor(tag=tag, doc=doc, predict=predict, sample=sample)


def predict(tag: str, transform: BilinearTransform, spec: StateSpec) -> dict[str, float]:
    """Evaluate the registered closed form ``tag`` for the given scenario."""
    if tag not in PREDICTORS:
        raise UnknownScenario(f"no predictor registered under {tag!r}")
    return PREDICTORS[tag].predict(transform, spec)


def _coherent_cross(alpha: complex, delta: complex, phase: float) -> float:
    # interference term Re(conj(alpha) delta e^{-i phase}) of the converter
    return (alpha.conjugate() * delta * cmath.exp(-1j * phase)).real


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _fc_thermal_coherent(t, spec):
    _require(isinstance(spec, tuple) and t.kind == FC, "valid for FC on thermal products")
    a, b = spec
    _require(a.r == 0.0 and b.r == 0.0, "valid for unsqueezed thermal modes")
    th, phi = t.angle, t.phase
    s2, sin2 = math.sin(th) ** 2, math.sin(2.0 * th)
    de_a = a.omega * s2 * (b.N - a.N + abs(b.alpha) ** 2 - abs(a.alpha) ** 2)
    de_a += a.omega * sin2 * _coherent_cross(a.alpha, b.alpha, phi)
    dq = b.omega * s2 * (a.N - b.N)
    return {"dE_A": de_a, "dQ": dq, "dW_A": de_a + dq}


def _sample_fc_thermal_coherent(rng):
    a = SingleModeSpec(
        N=rng.uniform(0.0, 4.0),
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega=rng.uniform(0.5, 2.0),
    )
    b = SingleModeSpec(
        N=rng.uniform(0.0, 4.0),
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega=rng.uniform(0.5, 2.0),
    )
    t = BilinearTransform(FC, rng.uniform(0.0, math.pi / 2.0), rng.uniform(0.0, _TWO_PI))
    return t, (a, b)


def _bs_thermal_coherent_work(t, spec):
    a, b = spec
    _require(abs(a.omega - b.omega) == 0.0, "valid for equal frequencies (beam splitter)")
    out = _fc_thermal_coherent(t, spec)
    return {"dW_A": out["dW_A"]}


def _sample_bs_thermal_coherent(rng):
    t, (a, b) = _sample_fc_thermal_coherent(rng)
    return t, (a, replace(b, omega=a.omega))


def _product_dets(spec):
    a, b = spec
    return a.N + 0.5, b.N + 0.5


def _fc_product_bath_det(t, spec):
    _require(isinstance(spec, tuple) and t.kind == FC, "valid for FC on products")
    a, b = spec
    na, nb = _product_dets(spec)
    fs = fs_factor(a.r, b.r, a.theta_sq - b.theta_sq, t.phase)
    s2, c2 = math.sin(t.angle) ** 2, math.cos(t.angle) ** 2
    det = s2 * s2 * na * na + c2 * c2 * nb * nb + 2.0 * s2 * c2 * na * nb * fs
    return {"det_sigma_b_out": det, "dQ": b.omega * (math.sqrt(det) - nb)}


def _sample_squeezed_product(rng, kind):
    a = SingleModeSpec(
        N=rng.uniform(0.0, 3.0),
        r=rng.uniform(0.0, 1.2),
        theta_sq=rng.uniform(0.0, _TWO_PI),
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega=rng.uniform(0.5, 2.0),
    )
    b = SingleModeSpec(
        N=rng.uniform(0.0, 3.0),
        r=rng.uniform(0.0, 1.2),
        theta_sq=rng.uniform(0.0, _TWO_PI),
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        omega=rng.uniform(0.5, 2.0),
    )
    if kind == FC:
        t = BilinearTransform(FC, rng.uniform(0.0, math.pi / 2.0), rng.uniform(0.0, _TWO_PI))
    else:
        t = BilinearTransform(PA, rng.uniform(0.0, 1.2), rng.uniform(0.0, _TWO_PI))
    return t, (a, b)


def _pa_product_bath_det(t, spec):
    _require(isinstance(spec, tuple) and t.kind == PA, "valid for PA on products")
    a, b = spec
    na, nb = _product_dets(spec)
    gs = gs_factor(a.r, b.r, a.theta_sq + b.theta_sq, t.phase)
    sh2, ch2 = math.sinh(t.angle) ** 2, math.cosh(t.angle) ** 2
    det = sh2 * sh2 * na * na + ch2 * ch2 * nb * nb + 2.0 * sh2 * ch2 * na * nb * gs
    return {"det_sigma_b_out": det, "dQ": b.omega * (math.sqrt(det) - nb)}


def _fc_balanced_threshold(t, spec):
    a, b = spec
    _require(
        t.kind == FC and abs(t.angle - math.pi / 4.0) < 1e-12 and t.phase == 0.0,
        "valid for a balanced converter with zero phase",
    )
    _require(a.r == b.r and a.alpha == 0 and b.alpha == 0, "valid for equal squeezing, no signal")
    fs = math.cosh(2 * a.r) ** 2 - math.cos(a.theta_sq - b.theta_sq) * math.sinh(2 * a.r) ** 2
    return {"cooling_threshold_N_B": fc_balanced_cooling_threshold(a.N, fs)}


def _sample_fc_balanced(rng):
    r = rng.uniform(0.2, 1.0)
    a = SingleModeSpec(N=rng.uniform(0.0, 3.0), r=r, theta_sq=rng.uniform(0.0, _TWO_PI))
    b = SingleModeSpec(N=rng.uniform(0.0, 6.0), r=r, theta_sq=rng.uniform(0.0, _TWO_PI))
    return BilinearTransform(FC, math.pi / 4.0, 0.0), (a, b)


def _type_spec(spec, family):
    _require(isinstance(spec, CorrelatedSpec) and spec.family == family, f"valid for {family} states")
    return spec


def _fc_type1_heat(t, spec):
    s = _type_spec(spec, "type1")
    _require(t.kind == FC, "valid for FC")
    th, phi = t.angle, t.phase
    dq = s.omega_b * ((s.N_A - s.N_B) * math.sin(th) ** 2 - s.c * math.sin(2 * th) * math.cos(phi))
    de_a = s.omega_a * math.sin(th) ** 2 * (s.N_B - s.N_A + abs(s.delta) ** 2 - abs(s.alpha) ** 2)
    de_a += s.omega_a * math.sin(2 * th) * (s.c * math.cos(phi) + _coherent_cross(s.alpha, s.delta, phi))
    return {"dQ": dq, "dE_A": de_a}


def _fc_type1_work(t, spec):
    s = _type_spec(spec, "type1")
    out = _fc_type1_heat(t, spec)
    return {"dW_A": out["dE_A"] + out["dQ"]}


def _sample_type1(rng, kind, signal=True, equal_freq=False):
    n_a, n_b = rng.uniform(0.0, 4.0, size=2)
    c = rng.uniform(-1.0, 1.0) * math.sqrt(n_a * n_b)
    w_a = rng.uniform(0.5, 2.0)
    w_b = w_a if equal_freq else rng.uniform(0.5, 2.0)
    alpha = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) if signal else 0j
    delta = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) if signal else 0j
    spec = CorrelatedSpec(
        "type1", N_A=n_a, N_B=n_b, c=c, alpha=alpha, delta=delta, omega_a=w_a, omega_b=w_b
    )
    if kind == FC:
        t = BilinearTransform(FC, rng.uniform(0.0, math.pi / 2.0), rng.uniform(0.0, _TWO_PI))
    else:
        t = BilinearTransform(PA, rng.uniform(0.0, 1.2), rng.uniform(0.0, _TWO_PI))
    return t, spec


def _pa_type1_heat(t, spec):
    s = _type_spec(spec, "type1")
    _require(t.kind == PA, "valid for PA")
    r = t.angle
    a, b = s.N_A + 0.5, s.N_B + 0.5
    inner = a * math.sinh(r) ** 2 + b * math.cosh(r) ** 2
    dq = s.omega_b * (math.sqrt(inner * inner - (s.c * math.sinh(2 * r)) ** 2) - b)
    de_a = s.omega_a * math.sinh(r) ** 2 * (s.N_A + s.N_B + 1 + abs(s.delta) ** 2 + abs(s.alpha) ** 2)
    de_a += s.omega_a * math.sinh(2 * r) * (s.alpha * s.delta * cmath.exp(-1j * t.phase)).real
    return {"dQ": dq, "dE_A": de_a}


def _fc_type2_heat(t, spec):
    s = _type_spec(spec, "type2")
    _require(t.kind == FC, "valid for FC")
    th, phi = t.angle, t.phase
    inner = s.N_A * math.sin(th) ** 2 + s.N_B * math.cos(th) ** 2 + 0.5
    dq = s.omega_b * (math.sqrt(inner * inner - (s.c * math.sin(2 * th)) ** 2) - (s.N_B + 0.5))
    de_a = s.omega_a * math.sin(th) ** 2 * (s.N_B - s.N_A + abs(s.delta) ** 2 - abs(s.alpha) ** 2)
    de_a += s.omega_a * math.sin(2 * th) * _coherent_cross(s.alpha, s.delta, phi)
    return {"dQ": dq, "dE_A": de_a}


def _sample_type2(rng, kind, signal=True):
    n_a, n_b = rng.uniform(0.0, 4.0, size=2)
    bound = math.sqrt(min(n_a, n_b) * (1.0 + max(n_a, n_b)))
    spec = CorrelatedSpec(
        "type2",
        N_A=n_a,
        N_B=n_b,
        c=rng.uniform(-1.0, 1.0) * bound,
        alpha=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) if signal else 0j,
        delta=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) if signal else 0j,
        omega_a=rng.uniform(0.5, 2.0),
        omega_b=rng.uniform(0.5, 2.0),
    )
    if kind == FC:
        t = BilinearTransform(FC, rng.uniform(0.0, math.pi / 2.0), rng.uniform(0.0, _TWO_PI))
    else:
        t = BilinearTransform(PA, rng.uniform(0.0, 1.2), rng.uniform(0.0, _TWO_PI))
    return t, spec


def _pa_type2_heat(t, spec):
    s = _type_spec(spec, "type2")
    _require(t.kind == PA, "valid for PA")
    r, psi = t.angle, t.phase
    dq = s.omega_b * ((s.N_A + s.N_B + 1) * math.sinh(r) ** 2 + s.c * math.sinh(2 * r) * math.cos(psi))
    de_a = s.omega_a * math.sinh(r) ** 2 * (s.N_A + s.N_B + 1 + abs(s.delta) ** 2 + abs(s.alpha) ** 2)
    de_a += s.omega_a * math.sinh(2 * r) * (
        s.c * math.cos(psi) + (s.alpha * s.delta * cmath.exp(-1j * psi)).real
    )
    return {"dQ": dq, "dE_A": de_a}


def _fc_type1_net_gain(t, spec):
    s = _type_spec(spec, "type1")
    _require(t.kind == FC and s.alpha == 0, "valid for FC with no system signal")
    th, phi = t.angle, t.phase
    gain = (s.omega_b - s.omega_a) * (
        math.sin(th) ** 2 * (s.N_B - s.N_A) + s.c * math.sin(2 * th) * math.cos(phi)
    )
    gain += s.omega_b * math.sin(th) ** 2 * abs(s.delta) ** 2
    return {"netW": gain}


def _fc_type2_net_gain(t, spec):
    s = _type_spec(spec, "type2")
    _require(t.kind == FC and s.alpha == 0, "valid for FC with no system signal")
    th = t.angle
    inner = s.N_B * math.sin(th) ** 2 + s.N_A * math.cos(th) ** 2 + 0.5
    gain = s.omega_b * math.sin(th) ** 2 * (s.N_B - s.N_A + abs(s.delta) ** 2)
    gain += s.omega_a * (s.N_A + 0.5)
    gain -= s.omega_a * math.sqrt(inner * inner - (s.c * math.sin(2 * th)) ** 2)
    return {"netW": gain}


def _no_signal_type1(rng):
    t, spec = _sample_type1(rng, FC, signal=False)
    return t, replace(spec, delta=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))


def _no_signal_type2(rng):
    t, spec = _sample_type2(rng, FC, signal=False)
    return t, replace(spec, delta=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))


_register(
    "fc_thermal_coherent_heat",
    "heat exchanged by a converter acting on displaced thermal modes",
    _fc_thermal_coherent,
    _sample_fc_thermal_coherent,
)
_register(
    "fc_thermal_coherent_work",
    "work performed on the system by a converter on displaced thermal modes",
    lambda t, s: {"dW_A": _fc_thermal_coherent(t, s)["dW_A"]},
    _sample_fc_thermal_coherent,
)
_register(
    "bs_thermal_coherent_work",
    "work of an equal-frequency beam splitter on displaced thermal modes",
    _bs_thermal_coherent_work,
    _sample_bs_thermal_coherent,
)
_register(
    "fc_balanced_squeezed_cooling_threshold",
    "bath occupation above which a balanced converter cools a squeezed bath",
    _fc_balanced_threshold,
    _sample_fc_balanced,
)
_register(
    "fc_product_bath_det",
    "final bath determinant for a converter on squeezed thermal products",
    _fc_product_bath_det,
    lambda rng: _sample_squeezed_product(rng, FC),
)
_register(
    "pa_product_bath_det",
    "final bath determinant for an amplifier on squeezed thermal products",
    _pa_product_bath_det,
    lambda rng: _sample_squeezed_product(rng, PA),
)
_register(
    "fc_type1_heat",
    "heat for the c*I correlated family under a converter",
    _fc_type1_heat,
    lambda rng: _sample_type1(rng, FC),
)
_register(
    "fc_type1_work",
    "work for the c*I correlated family under a converter",
    _fc_type1_work,
    lambda rng: _sample_type1(rng, FC),
)
_register(
    "pa_type1_heat",
    "heat for the c*I correlated family under an amplifier",
    _pa_type1_heat,
    lambda rng: _sample_type1(rng, PA),
)
_register(
    "fc_type2_heat",
    "heat for the c*diag(1,-1) correlated family under a converter",
    _fc_type2_heat,
    lambda rng: _sample_type2(rng, FC),
)
_register(
    "pa_type2_heat",
    "heat for the c*diag(1,-1) correlated family under an amplifier",
    _pa_type2_heat,
    lambda rng: _sample_type2(rng, PA),
)
_register(
    "fc_type1_net_gain",
    "free-energy gain minus work cost for the c*I family under a converter",
    _fc_type1_net_gain,
    _no_signal_type1,
)
_register(
    "fc_type2_net_gain",
    "free-energy gain minus work cost for the c*diag(1,-1) family under a converter",
    _fc_type2_net_gain,
    _no_signal_type2,
)
