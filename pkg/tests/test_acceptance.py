"""Acceptance suite: one test per release criterion, with pinned tolerances.

Each criterion prints a PASS line into the terminal summary.  Two extra
strict-xfail tests document printed optimum formulas that are not
stationary points of the quantities they claim to maximize; the corrected
optima are verified in the corresponding criterion tests and the analysis
lives in the project notes.
"""

import math
import time
import zlib
from dataclasses import replace

import numpy as np
import pytest

from gthermo import (
    PREDICTORS,
    CorrelatedSpec,
    SingleModeSpec,
    build_state,
    fc,
    fc_symplectic,
    fs_factor,
    gs_factor,
    infinitesimal_clausius_check,
    ledger,
    ledger_quantities,
    make_product,
    make_tmsv,
    net_work,
    numeric_maximize,
    optimal_theta_type1,
    oracle_report,
    pa,
    pa_symplectic,
    pa_type2_optimum,
    squeeze_symplectic,
    tmsv_optimum,
    type1_pa_negative_heat_threshold,
)
from helpers import random_state, random_transform, record, rel_err

TWO_PI = 2.0 * math.pi


def test_criterion_01_ledger_identity_suite():
    rng = np.random.default_rng(101)
    start = time.monotonic()
    for _ in range(1000):
        state = random_state(rng)
        rep = ledger(random_transform(rng), state)
        assert rel_err(rep.dW_A, rep.dE_A + rep.dQ) < 1e-9
        assert rel_err(rep.dW_A, rep.W - rep.dF_B) < 1e-9
        assert rel_err(rep.dQ, rep.dB_B) < 1e-9
        assert rel_err(rep.dS_A + rep.dS_B, rep.dI) < 1e-9
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    record(f"criterion 01 PASS ledger identities on 1000 draws at 1e-9 ({elapsed:.1f} s)")


def test_criterion_02_closed_form_equivalence():
    start = time.monotonic()
    for tag, entry in sorted(PREDICTORS.items()):
        rng = np.random.default_rng(zlib.crc32(("acc2" + tag).encode()))
        for _ in range(1000):
            t, spec = entry.sample(rng)
            predicted = entry.predict(t, spec)
            if tag == "fc_balanced_squeezed_cooling_threshold":
                a, b = spec
                thr = predicted["cooling_threshold_N_B"]
                state = build_state((a, replace(b, N=max(thr, 0.0))))
                assert abs(ledger(t, state).dQ) < 1e-8
                continue
            actual = ledger_quantities(t, build_state(spec))
            for key, value in predicted.items():
                assert rel_err(value, actual[key]) < 1e-9, (tag, key)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    record(
        f"criterion 02 PASS 13 closed forms vs ledger, 1000 draws each at 1e-9 ({elapsed:.1f} s)"
    )


def test_criterion_03_inequalities_and_saturation():
    rng = np.random.default_rng(103)
    from helpers import random_single_spec

    for _ in range(500):
        a, b = random_single_spec(rng), random_single_spec(rng)
        state = make_product(a, b)
        t = random_transform(rng)
        rep = ledger(t, state)
        if t.kind == "fc":
            floor = b.omega * math.sin(t.angle) ** 2 * (a.N - b.N)
        else:
            floor = b.omega * math.sinh(t.angle) ** 2 * (a.N + b.N + 1.0)
        assert rep.dQ >= floor - 1e-9 * max(1.0, abs(floor))
    for _ in range(500):
        ra, rb, x, y = rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI)
        assert fs_factor(ra, rb, x, y) >= 1.0 - 1e-12
        assert gs_factor(ra, rb, x, y) >= 1.0 - 1e-12
    for _ in range(500):
        rep = ledger(random_transform(rng), random_state(rng))
        assert rep.clausius_residual >= -1e-9
    # phase compensation saturates both heat bounds exactly
    for _ in range(100):
        th_a, th_b = rng.uniform(0, TWO_PI, size=2)
        r_sq = rng.uniform(0.1, 1.2)
        n_a, n_b = rng.uniform(0, 3, size=2)
        state = make_product(
            SingleModeSpec(N=n_a, r=r_sq, theta_sq=th_a),
            SingleModeSpec(N=n_b, r=r_sq, theta_sq=th_b),
        )
        theta = rng.uniform(0, math.pi / 2)
        rep = ledger(fc(theta, ((th_a - th_b) / 2) % TWO_PI), state)
        target = math.sin(theta) ** 2 * (n_a - n_b)
        assert abs(rep.dQ - target) <= 1e-9 * max(1.0, abs(target))
        gain = rng.uniform(0, 1.2)
        rep = ledger(pa(gain, (-(th_a + th_b) / 2) % TWO_PI), state)
        target = math.sinh(gain) ** 2 * (n_a + n_b + 1.0)
        assert abs(rep.dQ - target) <= 1e-9 * max(1.0, abs(target))
    record("criterion 03 PASS heat bounds, factor bounds, Clausius slack, saturation cases")


def test_criterion_04_anomalous_heat_reproduction():
    spec = CorrelatedSpec("type2", N_A=1.0, N_B=1.0, c=1.2)
    state = build_state(spec)
    rep = ledger(fc(math.pi / 4.0), state)
    assert rel_err(rep.dQ, -0.6) < 1e-9
    assert abs(rep.W) < 1e-12
    assert rep.clausius_residual >= 0.0
    fock = oracle_report(fc(math.pi / 4.0), state)
    assert abs(fock.dQ - (-0.6)) < 1e-5
    # scaled bath frequency: heat scales with omega_B while W stays 0 only for equal freqs
    state2 = build_state(replace(spec, omega_b=1.0))
    assert ledger(fc(math.pi / 4.0), state2).dQ == pytest.approx(-0.6, rel=1e-9)
    record(
        "criterion 04 PASS type-II anomalous heat: dQ = -0.6 (closed form 1e-9, oracle 1e-5), "
        "W = 0, Clausius slack >= 0"
    )


def test_criterion_05_amplifier_cooling_window():
    c_m = math.sqrt(200.0)
    thr_unit_gain = type1_pa_negative_heat_threshold(20.0, 10.0, 1.0)
    assert thr_unit_gain == pytest.approx(14.411869709545426, rel=1e-12)
    flag = "empty (threshold above c_M)" if thr_unit_gain > c_m else "non-empty"
    record(
        f"criterion 05 PASS cooling window at unit gain: computed |c| > {thr_unit_gain:.6f} "
        f"vs admissible c_M = {c_m:.6f}; window {flag}"
    )
    assert thr_unit_gain > c_m  # no admissible correlation cools the bath at this gain
    rep = ledger(pa(1.0), build_state(CorrelatedSpec("type1", N_A=20, N_B=10, c=c_m)))
    assert rep.dQ > 0.0
    # self-consistency where the window is admissible: the ledger heat
    # changes sign exactly at the computed threshold
    thr = type1_pa_negative_heat_threshold(20.0, 10.0, 0.5)
    assert thr < c_m
    state_at = build_state(CorrelatedSpec("type1", N_A=20, N_B=10, c=thr))
    assert abs(ledger(pa(0.5), state_at).dQ) < 1e-9
    for c, sign in ((thr - 1e-6, 1.0), (thr + 1e-6, -1.0)):
        rep = ledger(pa(0.5), build_state(CorrelatedSpec("type1", N_A=20, N_B=10, c=c)))
        assert math.copysign(1.0, rep.dQ) == sign


def test_criterion_06_type1_converter_gain_optima():
    state = build_state(
        CorrelatedSpec("type1", N_A=5.0, N_B=10.0, c=math.sqrt(50.0), omega_a=1.0, omega_b=2.0)
    )
    opt = optimal_theta_type1(5.0, 10.0, math.sqrt(50.0), 1.0, 2.0)
    num = numeric_maximize("fc", state)
    assert num.argmax.angle == pytest.approx(opt.theta, abs=1e-6)
    assert num.net_gain == pytest.approx(opt.net_gain, rel=1e-9)
    assert opt.net_gain == pytest.approx(10.0, rel=1e-12)
    # the half-arctangent angle on the principal branch lies on the gain
    # curve at 25/3, on the rising flank below the true peak
    theta_principal = 0.5 * math.atan(2.0 * math.sqrt(50.0) / 5.0)
    on_curve = net_work(fc(theta_principal, 0.0), state).net_gain
    assert on_curve == pytest.approx(25.0 / 3.0, rel=1e-9)
    assert opt.net_gain > on_curve + 1.0
    # uncorrelated curve peaks at a full swap
    state0 = build_state(
        CorrelatedSpec("type1", N_A=5.0, N_B=10.0, c=0.0, omega_a=1.0, omega_b=2.0)
    )
    num0 = numeric_maximize("fc", state0)
    assert num0.argmax.angle == pytest.approx(math.pi / 2.0, abs=1e-6)
    assert num0.net_gain == pytest.approx(5.0, rel=1e-6)
    # reversed occupations with no correlations: nothing extractable
    state_rev = build_state(
        CorrelatedSpec("type1", N_A=10.0, N_B=5.0, c=0.0, omega_a=1.0, omega_b=2.0)
    )
    thetas = np.linspace(0.0, math.pi / 2.0, 181)
    gains = [net_work(fc(th, 0.0), state_rev).net_gain for th in thetas]
    assert max(gains) <= 1e-12
    record(
        "criterion 06 PASS correlated-converter gain: peak 10.0 at theta = 0.955317 "
        "(numeric = closed form at 1e-6); principal-branch angle 0.615480 lies on the curve "
        "at 25/3; uncorrelated peak 5.0 at pi/2; reversed case never positive"
    )


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the half-arctangent formula on its principal branch is not a stationary point "
        "of the gain curve when N_B > N_A: the true argmax sits on the (pi/4, pi/2) "
        "branch with gain 10, not 25/3"
    ),
)
def test_criterion_06_literal_principal_branch_peak():
    state = build_state(
        CorrelatedSpec("type1", N_A=5.0, N_B=10.0, c=math.sqrt(50.0), omega_a=1.0, omega_b=2.0)
    )
    num = numeric_maximize("fc", state)
    assert num.argmax.angle == pytest.approx(0.5 * math.atan(2.0 * math.sqrt(50.0) / 5.0), abs=1e-6)
    assert num.net_gain == pytest.approx(25.0 / 3.0, rel=1e-6)


def test_criterion_07_tmsv_and_amplifier_optima():
    for r in (0.25, 0.5, 1.0):
        theta, gain = tmsv_optimum(r, 1.0)
        num = numeric_maximize("fc", make_tmsv(r))
        assert num.argmax.angle == pytest.approx(theta, abs=1e-6)
        assert num.net_gain == pytest.approx(gain, rel=1e-6)
        assert gain == pytest.approx(math.sinh(r) ** 2, rel=1e-9)
    psi, r_max, gain = pa_type2_optimum(1.0, 0.0, 1.0)
    assert psi == pytest.approx(math.pi)
    assert r_max == pytest.approx(0.5 * math.atanh(2.0 * math.sqrt(2.0) / 3.0), rel=1e-9)
    assert gain == pytest.approx(2.0, rel=1e-9)
    state = build_state(CorrelatedSpec("type2", N_A=1.0, N_B=1.0, c=math.sqrt(2.0)))
    num = numeric_maximize("pa", state, r_cap=2.0)
    assert num.argmax.angle == pytest.approx(r_max, abs=1e-6)
    assert num.net_gain == pytest.approx(gain, rel=1e-6)
    # the half-gain point atanh(sqrt(2)/3) lies on the curve at 12/7
    r_half = math.atanh(math.sqrt(2.0) / 3.0)
    on_curve = net_work(pa(r_half, math.pi), state).net_gain
    assert on_curve == pytest.approx(12.0 / 7.0, rel=1e-9)
    assert gain > on_curve
    record(
        "criterion 07 PASS tmsv optimum sinh^2 r at pi/4 for r in {0.25, 0.5, 1}; amplifier "
        "optimum r = 0.881374, gain 2.0 (numeric at 1e-6); atanh(sqrt(2)/3) = 0.511875 lies "
        "on the curve at 12/7"
    )


@pytest.mark.xfail(
    strict=True,
    reason=(
        "atanh(2C/A) is not a stationary point of the amplifier gain curve; the true "
        "argmax is atanh(4C/A)/2, which exactly un-squeezes the input state"
    ),
)
def test_criterion_07_literal_amplifier_peak():
    state = build_state(CorrelatedSpec("type2", N_A=1.0, N_B=1.0, c=math.sqrt(2.0)))
    num = numeric_maximize("pa", state, r_cap=2.0)
    assert num.argmax.angle == pytest.approx(math.atanh(math.sqrt(2.0) / 3.0), abs=1e-6)
    assert num.net_gain == pytest.approx(12.0 / 7.0, rel=1e-6)


def _oracle_scenarios():
    quarter = math.pi / 4.0
    thermal = [
        (SingleModeSpec(N=0.0), SingleModeSpec(N=1.0)),
        (SingleModeSpec(N=1.0), SingleModeSpec(N=0.5, omega=1.6)),
        (SingleModeSpec(N=2.0, omega=0.7), SingleModeSpec(N=1.0)),
        (SingleModeSpec(N=1.0), SingleModeSpec(N=2.0)),
        (SingleModeSpec(N=0.5), SingleModeSpec(N=0.5)),
        (SingleModeSpec(N=0.0), SingleModeSpec(N=0.0)),
    ]
    for a, b in thermal:
        yield make_product(a, b), fc(quarter, 0.7)
        yield make_product(a, b), pa(0.3, 1.1)
    coherent = [
        (SingleModeSpec(N=1.0, alpha=0.8 + 0.3j), SingleModeSpec(N=0.5, alpha=-0.4 + 0.6j)),
        (SingleModeSpec(N=0.0, alpha=1.2), SingleModeSpec(N=1.0, alpha=0.5j, omega=1.4)),
        (SingleModeSpec(N=0.5, alpha=-0.6 - 0.6j), SingleModeSpec(N=0.0, alpha=1.4)),
    ]
    for a, b in coherent:
        yield make_product(a, b), fc(0.6, 2.0)
        yield make_product(a, b), pa(0.35, 0.4)
    squeezed = [
        (SingleModeSpec(N=0.5, r=0.3, theta_sq=1.0), SingleModeSpec(N=0.5, r=0.3, theta_sq=2.5)),
        (SingleModeSpec(N=1.0, r=0.5, theta_sq=0.0), SingleModeSpec(N=0.3, r=0.2, theta_sq=4.0)),
        (SingleModeSpec(N=0.0, r=0.7), SingleModeSpec(N=0.5)),
        (SingleModeSpec(N=0.8, r=0.4, theta_sq=3.0, alpha=0.5 + 0.3j),
         SingleModeSpec(N=0.5, r=0.3, theta_sq=2.2, alpha=-0.4 + 0.2j)),
    ]
    for a, b in squeezed:
        yield make_product(a, b), fc(0.9, 2.2)
        yield make_product(a, b), pa(0.25, 0.9)
    type1 = [
        CorrelatedSpec("type1", N_A=1.0, N_B=0.5, c=0.5),
        CorrelatedSpec("type1", N_A=2.0, N_B=1.0, c=1.2, omega_b=1.5),
        CorrelatedSpec("type1", N_A=1.0, N_B=1.0, c=-0.9),
        CorrelatedSpec("type1", N_A=1.5, N_B=1.0, c=1.1, delta=0.5 - 0.2j),
    ]
    type2 = [
        CorrelatedSpec("type2", N_A=1.0, N_B=1.0, c=1.2),
        CorrelatedSpec("type2", N_A=1.0, N_B=1.0, c=1.39),
        CorrelatedSpec("type2", N_A=2.0, N_B=1.0, c=-1.4, omega_a=1.3),
        CorrelatedSpec("type2", N_A=0.5, N_B=1.0, c=0.6, delta=0.4 + 0.4j),
    ]
    for spec in type1 + type2:
        yield build_state(spec), fc(quarter, 0.5)
        yield build_state(spec), pa(0.3, 2.6)
    for r in (0.25, 0.5, 0.7):
        yield make_tmsv(r), fc(quarter)
        yield make_tmsv(r), pa(0.4, 1.8)
    # envelope edges: maximal thermal occupation (converter only), maximal gain
    yield make_product(SingleModeSpec(N=4.0), SingleModeSpec(N=1.0)), fc(1.1, 0.5)
    yield make_product(SingleModeSpec(N=0.0), SingleModeSpec(N=0.0)), pa(0.7, 3.0)
    yield make_tmsv(0.7), pa(0.5, 1.0)
    yield build_state(CorrelatedSpec("type2", N_A=1.5, N_B=0.5, c=0.8)), fc(1.3, 4.0)


def test_criterion_08_oracle_agreement():
    start = time.monotonic()
    count = 0
    worst_q = worst_s = 0.0
    for state, t in _oracle_scenarios():
        gauss = ledger(t, state)
        fock = oracle_report(t, state)
        dq = abs(gauss.dQ - fock.dQ) / max(1.0, abs(gauss.dQ))
        ds = max(abs(gauss.dS_A - fock.dS_A), abs(gauss.dS_B - fock.dS_B))
        worst_q, worst_s = max(worst_q, dq), max(worst_s, ds)
        assert dq <= 1e-5, (count, dq)
        assert ds <= 1e-6, (count, ds)
        count += 1
    elapsed = time.monotonic() - start
    assert count >= 50
    assert elapsed < 300.0
    record(
        f"criterion 08 PASS oracle agreement on {count} scenarios: worst dQ {worst_q:.1e}, "
        f"worst entropy {worst_s:.1e} ({elapsed:.0f} s)"
    )


def test_criterion_09_symplectic_identities():
    rng = np.random.default_rng(109)

    def local(sa, sb):
        return np.block([[sa, np.zeros((2, 2))], [np.zeros((2, 2)), sb]])

    for _ in range(100):
        th_a, th_b = rng.uniform(0, TWO_PI, size=2)
        r_sq, r_pa = rng.uniform(0, 2), rng.uniform(0, 1.5)
        theta = rng.uniform(0, math.pi / 2)
        loc = local(squeeze_symplectic(r_sq, th_a), squeeze_symplectic(r_sq, th_b))
        g_fc = fc_symplectic(theta, ((th_a - th_b) / 2) % TWO_PI)
        assert np.abs(g_fc @ loc - loc @ g_fc).max() < 1e-10
        g_pa = pa_symplectic(r_pa, (-(th_a + th_b) / 2) % TWO_PI)
        assert np.abs(g_pa @ loc - loc @ g_pa).max() < 1e-10
        g_bal = fc_symplectic(math.pi / 4, ((th_a - th_b + math.pi) / 2) % TWO_PI)
        lhs = g_bal @ loc @ np.linalg.inv(g_bal)
        rhs = pa_symplectic(r_sq, (-math.pi / 2 - (th_a + th_b) / 2) % TWO_PI)
        assert np.abs(lhs - rhs).max() < 1e-10
    record(
        "criterion 09 PASS squeezer commutation and conjugation identities, 100 draws at 1e-10 "
        "(amplifier phase conditions follow the covariance conventions: see project notes)"
    )


def test_criterion_10_infinitesimal_clausius():
    for n_b in (0.5, 1.0, 5.0):
        state = make_product(SingleModeSpec(N=2.0), SingleModeSpec(N=n_b))
        t_b = 1.0 / math.log1p(1.0 / n_b)
        dev_fc = infinitesimal_clausius_check(lambda h: fc(h, 0.3), state, h=1e-3)
        dev_pa = infinitesimal_clausius_check(lambda h: pa(h, 1.2), state, h=1e-3)
        assert dev_fc <= 1e-2 * t_b
        assert dev_pa <= 1e-2 * t_b
    record("criterion 10 PASS dQ/dS_B matches T_B within 1% at h = 1e-3 for N_B in {0.5, 1, 5}")
