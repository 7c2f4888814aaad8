"""Scratch verification of closed forms against the numeric pipeline (not shipped)."""
import math
import numpy as np

from cvxtalk.pipeline import (
    _post_channel_raw, _pair_ln_raw, _interference_raw, _feedforward_raw,
    _two_mode_ln_raw, _two_pair_raw, _bs_raw,
)
from cvxtalk.optimize import ScalarProblem, maximize_scalar
from cvxtalk.entanglement import initial_ln

LOG2 = math.log(2.0)


def ln_xtalk_stable(v, tc, T, eps):
    """Reduced-pair LN via the stabilized algebraic rearrangement."""
    a = v
    b = T * (v + eps - 1.0) + 1.0
    c2 = tc * T * (v * v - 1.0)
    q = T * ((1.0 - tc) * v * v + (eps - 1.0) * v + tc) + v   # = a*b - c2
    delta = a * a + b * b + 2.0 * c2
    disc = ((a - b) ** 2 + 4.0 * c2) * (a + b) ** 2
    nu2 = 2.0 * q * q / (delta + math.sqrt(disc))
    return max(0.0, -0.5 * math.log2(nu2))


def ln_xtalk_naive(v, tc, T, eps):
    """Verbatim printed expression."""
    a = eps + v - 1.0
    inner = 1.0 + 2.0 * T * (eps + (v - 1.0) * (tc * v + tc + 1.0)) + T * T * a * a + v * v
    rad = T * T * a * a + (v - 1.0) ** 2 - 2.0 * T * (v - 1.0) * (eps - 2.0 * tc * (v + 1.0) + v - 1.0)
    inner -= (1.0 + v + T * a) * math.sqrt(rad)
    arg = 0.5 * inner
    if arg <= 0:
        return math.inf
    return max(0.0, -0.5 * math.log2(arg))


def v_opt(tc, T, eps):
    rc = 1.0 - tc
    num = rc * (1.0 - T) * (1.0 - T + eps * T) + (T + 1.0) * math.sqrt(
        rc * tc * T * (4.0 * tc - eps * (2.0 - 2.0 * T + eps * T))
    )
    den = rc * (1.0 + T * (4.0 * tc + T - 2.0))
    return num / den


rng = np.random.default_rng(42)

# --- 1. covmatct block structure ---
v, tc, T1, T2, eps = 5.0, 0.9, 0.7, 0.55, 0.3
m = _post_channel_raw(v, tc, T1, T2, eps)
k = math.sqrt(v * v - 1.0)
rc = 1.0 - tc
z = np.diag([1.0, -1.0])
blocks = {
    (0, 2): math.sqrt(tc * T1) * k * z,        # A1-B1
    (0, 3): -math.sqrt(rc * T2) * k * z,       # A1-B2
    (1, 2): math.sqrt(rc * T1) * k * z,        # A2-B1
    (1, 3): math.sqrt(tc * T2) * k * z,        # A2-B2
    (2, 3): np.zeros((2, 2)),                  # B1-B2
    (0, 1): np.zeros((2, 2)),                  # A1-A2
}
worst = 0.0
for (i, j), expect in blocks.items():
    got = m[2 * i:2 * i + 2, 2 * j:2 * j + 2]
    worst = max(worst, np.max(np.abs(got - expect)))
print("covmatct blocks max dev:", worst)
print("B1 diag:", m[4, 4], "expect", T1 * (v + eps - 1) + 1)
print("B2 diag:", m[6, 6], "expect", T2 * (v + eps - 1) + 1)

# --- 2. lni vs pipeline, stable + naive ---
worst_s, worst_n = 0.0, 0.0
for _ in range(400):
    v = rng.uniform(1.0, 40.0)
    tc = rng.uniform(0.5, 1.0)
    t1 = rng.uniform(0.05, 1.0)
    t2 = rng.uniform(0.05, 1.0)
    e = rng.uniform(0.0, 1.0)
    m = _post_channel_raw(v, tc, t1, t2, e)
    ln1, _ = _pair_ln_raw(m, 1)
    ln2, _ = _pair_ln_raw(m, 2)
    worst_s = max(worst_s, abs(ln1 - ln_xtalk_stable(v, tc, t1, e)),
                  abs(ln2 - ln_xtalk_stable(v, tc, t2, e)))
    worst_n = max(worst_n, abs(ln1 - min(ln_xtalk_naive(v, tc, t1, e), 1e9)))
print("lni stable vs pipeline worst:", worst_s)
print("lni naive  vs pipeline worst:", worst_n)

# value freezes
print("LN0(5) =", repr(initial_ln(5.0)))
print("ln_xtalk(5,0.9,0.9,0) =", repr(ln_xtalk_stable(5.0, 0.9, 0.9, 0.0)))

# --- 3. vopt exactness ---
worst_v = 0.0
for _ in range(40):
    tc = rng.uniform(0.5, 0.995)
    T = rng.uniform(0.05, 1.0)
    e = rng.uniform(0.0, 2.0 * tc * 0.9)
    vo = v_opt(tc, T, e)
    vm = (1.0 + tc - e) / (1.0 - tc)
    if not (1.05 <= vo <= min(vm - 0.1, 9e4)):
        continue
    prob = ScalarProblem(objective=lambda x: ln_xtalk_stable(x, tc, T, e),
                         lo=1.0, hi=min(vm - 1e-6, 1e5), tol=1e-12)
    arg, val = maximize_scalar(prob)
    worst_v = max(worst_v, abs(arg - vo))
print("vopt vs numeric argmax worst:", worst_v)

# --- 4. interference: balanced exactness + decoupling + bounds ---
v, tc, T, e = 5.0, 0.8, 0.6, 0.25
m = _post_channel_raw(v, tc, T, T, e)
comp = _interference_raw(m, math.pi, tc)
ref = _post_channel_raw(v, 1.0, T, T, e)
idx1 = np.array([0, 1, 4, 5]); idx2 = np.array([2, 3, 6, 7])
print("balanced pair1 dev:", np.max(np.abs(comp[np.ix_(idx1, idx1)] - ref[np.ix_(idx1, idx1)])))
print("balanced pair2 dev:", np.max(np.abs(comp[np.ix_(idx2, idx2)] - ref[np.ix_(idx2, idx2)])))

T1, T2, tc = 10 ** (-1.0), 10 ** (-1.05), 0.9
m = _post_channel_raw(5.0, tc, T1, T2, 0.0)
tr_inf = T2 * tc / (T2 * tc + T1 * (1 - tc))
tr_1 = T1 * tc / (T1 * tc + T2 * (1 - tc))
comp = _interference_raw(m, math.pi, tr_inf)
print("A2-B1 block at trInf:", np.max(np.abs(comp[2:4, 4:6])))   # A2 x B1
comp2 = _interference_raw(m, math.pi, tr_1)
print("A1-B2 block at tr1:", np.max(np.abs(comp2[0:2, 6:8])))

for tcc in (0.9, 0.8):
    m = _post_channel_raw(5.0, tcc, T1, T2, 0.0)
    for pair in (1, 2):
        lo_b = T1 * tcc / (T1 * tcc + T2 * (1 - tcc)) if pair == 1 else T2 * tcc / (T2 * tcc + T1 * (1 - tcc))
        hi_b = T2 * tcc / (T2 * tcc + T1 * (1 - tcc)) if pair == 1 else T1 * tcc / (T1 * tcc + T2 * (1 - tcc))
        prob = ScalarProblem(objective=lambda x, p=pair: _pair_ln_raw(_interference_raw(m, math.pi, x), p)[0], lo=0.0, hi=1.0)
        arg, val = maximize_scalar(prob)
        print(f" tc={tcc} pair={pair}: argmax={arg:.6f} bounds=({min(lo_b,hi_b):.6f},{max(lo_b,hi_b):.6f}) in={min(lo_b,hi_b)-1e-6 <= arg <= max(lo_b,hi_b)+1e-6}")
