"""Benchmark hot paths and freeze remaining oracle values."""
import math
import time
import numpy as np

from cvxtalk.pipeline import (
    _post_channel_raw, _pair_ln_raw, _feedforward_raw, _two_mode_ln_raw,
    _interference_raw,
)
from cvxtalk.optimize import ScalarProblem, maximize_scalar, find_root

rng = np.random.default_rng(3)

# criterion 9 style: 1000 random points, optimized t_a
t0 = time.perf_counter()
n_viol = 0
for _ in range(200):
    v = rng.uniform(1.0, 40.0)
    tc = rng.uniform(0.5, 1.0)
    T1 = rng.uniform(0.05, 1.0)
    T2 = rng.uniform(0.05, 1.0)
    e = rng.uniform(0.0, 1.0)
    m = _post_channel_raw(v, tc, T1, T2, e)
    uncond = _pair_ln_raw(m, 1)[0]
    prob = ScalarProblem(objective=lambda x: _two_mode_ln_raw(_feedforward_raw(m, x, 1.0))[0], lo=0.0, hi=1.0)
    _, ln_ff = maximize_scalar(prob)
    if ln_ff < uncond - 1e-9:
        n_viol += 1
dt = time.perf_counter() - t0
print(f"200 optimized-ff points in {dt:.2f}s -> 1000 in ~{5*dt:.1f}s; violations {n_viol}")

# single ff eval and single pipeline-pair eval timing
m = _post_channel_raw(5.0, 0.9, 0.5, 0.4, 0.1)
t0 = time.perf_counter()
for _ in range(2000):
    _two_mode_ln_raw(_feedforward_raw(m, 0.37, 1.0))
print("ff eval:", (time.perf_counter() - t0) / 2000 * 1e6, "us")
t0 = time.perf_counter()
for _ in range(2000):
    _pair_ln_raw(_post_channel_raw(5.0, 0.9, 0.5, 0.4, 0.1), 1)
print("pipeline pair eval:", (time.perf_counter() - t0) / 2000 * 1e6, "us")

# eps_max / v_max roots via nu_min - 1
v, tc = 5.0, 0.9
for T in (0.1, 0.5, 0.9):
    prob = ScalarProblem(
        objective=lambda e: _pair_ln_raw(_post_channel_raw(v, tc, T, T, e), 1)[1] - 1.0,
        lo=0.0, hi=3.0, tol=1e-12)
    root = find_root(prob)
    print(f"T={T}: eps root = {root!r} (formula {1+tc-(1-tc)*v})")
tc, e, T = 0.9, 0.0, 0.3
prob = ScalarProblem(
    objective=lambda vv: _pair_ln_raw(_post_channel_raw(vv, tc, T, T, e), 1)[1] - 1.0,
    lo=1.0001, hi=40.0, tol=1e-12)
print("V root =", find_root(prob), "(formula", (1 + tc - e) / (1 - tc), ")")

# tr_bounds example value
T1, T2, tc = 10 ** (-0.9), 10 ** (-1.0), 0.9
print("tr_high_V =", repr(T2 * tc / (T2 * tc + T1 * (1 - tc))))

# small-T agreement example
def ln_xtalk_stable(v, tcx, T, eps):
    a, b = v, T * (v + eps - 1.0) + 1.0
    c2 = tcx * T * (v * v - 1.0)
    q = T * ((1.0 - tcx) * v * v + (eps - 1.0) * v + tcx) + v
    delta = a * a + b * b + 2.0 * c2
    disc = ((a - b) ** 2 + 4.0 * c2) * (a + b) ** 2
    nu2 = 2.0 * q * q / (delta + math.sqrt(disc))
    return max(0.0, -0.5 * math.log2(nu2))

def ln_small_T(v, tcx, T, eps):
    lead = T * (2.0 - eps - (1.0 - tcx) * (v + 1.0)) / math.log(2.0)
    corr = 1.0 + T / 2.0 * (2.0 - eps - (1.0 - tcx) * (v + 1.0)) - T * tcx * (v + 1.0) / (v - 1.0)
    return lead * corr

T, v, tcx, e = 1e-3, 2.0, 0.95, 0.1
exact = ln_xtalk_stable(v, tcx, T, e)
approx = ln_small_T(v, tcx, T, e)
print(f"small-T: exact={exact!r} approx={approx!r} rel={(approx-exact)/exact:.2e} bound={1e-2*T:.0e}")

# strong-loss approximations vs exact optimized (fig3 sanity)
def v_opt(tcx, T, eps):
    rc = 1.0 - tcx
    num = rc * (1 - T) * (1 - T + eps * T) + (T + 1) * math.sqrt(rc * tcx * T * (4 * tcx - eps * (2 - 2 * T + eps * T)))
    den = rc * (1 + T * (4 * tcx + T - 2))
    return num / den

def ln_opt_strong_loss(tcx, T, eps):
    h = eps / 2.0
    return 2 * T * (tcx - h - 2 * math.sqrt(tcx * (1 - tcx) * (tcx - h) * T)
                    + (3 * tcx * (1 - tcx) + h * (1 - h)) * T) / math.log(2.0)

def ln_opt_small_xtalk(tcx, T, eps):
    return (-math.log2((1 - T + eps * T) / (1 + T))
            - 2 * T * math.sqrt((2 - eps) * T * (2 + eps * T))
            / ((1 + T) * (1 - T + eps * T) * math.log(2.0)) * math.sqrt(1 - tcx))

T = 0.1
for e in (0.0, 0.05, 0.1):
    for tcx in (0.9, 0.99):
        exact = ln_xtalk_stable(v_opt(tcx, T, e), tcx, T, e)
        a1 = ln_opt_strong_loss(tcx, T, e)
        a2 = ln_opt_small_xtalk(tcx, T, e)
        print(f"fig3 eps={e} tc={tcx}: exact={exact:.5f} strongloss={a1:.5f} ({abs(a1-exact)/exact:.1%}) "
          f"smallxtalk={a2:.5f} ({abs(a2-exact)/exact:.1%})")

# values to freeze
print("initial_ln grid:", [(vv, repr(math.log2(vv + math.sqrt(vv*vv-1)))) for vv in (1.5, 50.0, 1e4)])
print("ln_xtalk(5, .9, .5, 0) =", repr(ln_xtalk_stable(5, .9, .5, 0)))
print("v_opt(0.9, 0.5, 0.3) =", repr(v_opt(0.9, 0.5, 0.3)))
print("vopt T=1 e=0 tc=.99:", repr(v_opt(0.99, 1.0, 0.0)))
