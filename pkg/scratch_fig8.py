"""Investigate the fig8 gap profile and the homodyne-asymptote approach direction."""
import math
import numpy as np

from cvxtalk.pipeline import (
    _post_channel_raw, _pair_ln_raw, _interference_raw, _feedforward_raw,
    _two_mode_ln_raw,
)
from cvxtalk.optimize import ScalarProblem, maximize_scalar

LOG2 = math.log(2.0)
v8 = math.cosh(4.0 * LOG2)

print("=== fig8 profile (pair 1 target) ===")
for T2 in np.linspace(0.05, 0.83, 14):
    T1 = 1.2 * T2
    m = _post_channel_raw(v8, 0.8, T1, T2, 0.0)
    prob = ScalarProblem(objective=lambda x: _pair_ln_raw(_interference_raw(m, math.pi, x), 1)[0], lo=0.0, hi=1.0)
    tr, ln_i1 = maximize_scalar(prob)
    prob2 = ScalarProblem(objective=lambda x: _pair_ln_raw(_interference_raw(m, math.pi, x), 2)[0], lo=0.0, hi=1.0)
    tr2, ln_i2 = maximize_scalar(prob2)
    ref1 = _pair_ln_raw(_post_channel_raw(v8, 1.0, T1, T2, 0.0), 1)[0]
    ref2 = _pair_ln_raw(_post_channel_raw(v8, 1.0, T1, T2, 0.0), 2)[0]
    pff = ScalarProblem(objective=lambda x: _two_mode_ln_raw(_feedforward_raw(m, x, 1.0))[0], lo=0.0, hi=1.0)
    ta, ln_f = maximize_scalar(pff)
    print(f"T2={T2:.3f} T1={T1:.3f}: ref1={ref1:.4f} int1={ln_i1:.4f} gap1={ref1-ln_i1:+.4f} | "
          f"ref2={ref2:.4f} int2={ln_i2:.4f} gap2={ref2-ln_i2:+.4f} | ff={ln_f:.4f}")

print()
print("=== hom asymptote approach (fig7-right) ===")
T1, T2, tc = 10 ** (-0.9), 10 ** (-1.0), 0.9


def ln_hom_asym(tc, T1, T2):
    arg = (1 - T1) * (T1 * (1 - tc - T2) + tc * T2) / (tc * (1 + T1) ** 2 * T2)
    return -0.5 * math.log2(arg)


asym = ln_hom_asym(tc, T1, T2)
for V in (1e2, 1e3, 1e4, 1e5):
    m = _post_channel_raw(V, tc, T1, T2, 0.0)
    ln = _two_mode_ln_raw(_feedforward_raw(m, 0.0, 1.0))[0]
    print(f"V={V:.0e}: hom LN={ln:.8f} asym={asym:.8f} gap={asym-ln:+.2e}")

print()
print("=== all-method approach at fig7-left ===")
T1, T2, tc = 10 ** (-0.04), 10 ** (-0.05), 0.9


def ln_no_xtalk_asym(T, e):
    return -math.log2((1.0 - T * (1.0 - e)) / (1.0 + T))


def ln_int_asym(tc, T1, T2):
    return -math.log2((tc * T2 + T1 * (1 - tc - T2)) / (tc * T2 + T1 * (1 - tc + T2)))


def ln_het_asym(tc, T1, T2):
    num = (1 - tc * T1) * (1 - tc * (T1 - T2) - T2)
    den = (1 + tc * T1) ** 2 - (1 - tc) * T2 * (1 - tc * T1)
    return -0.5 * math.log2(num / den)


for V in (1e2, 1e3, 1e4, 1e5):
    m1 = _post_channel_raw(V, 1.0, T1, T2, 0.0)
    a = _pair_ln_raw(m1, 1)[0]
    m = _post_channel_raw(V, tc, T1, T2, 0.0)
    prob = ScalarProblem(objective=lambda x: _pair_ln_raw(_interference_raw(m, math.pi, x), 1)[0], lo=0.0, hi=1.0)
    _, b = maximize_scalar(prob)
    c = _two_mode_ln_raw(_feedforward_raw(m, 0.0, 1.0))[0]
    d = _two_mode_ln_raw(_feedforward_raw(m, 0.5, 1.0))[0]
    print(f"V={V:.0e}: gaps a={ln_no_xtalk_asym(T1,0)-a:+.2e} b={ln_int_asym(tc,T1,T2)-b:+.2e} "
          f"c={ln_hom_asym(tc,T1,T2)-c:+.2e} d={ln_het_asym(tc,T1,T2)-d:+.2e}")

print()
print("=== does phase optimization help fig8? ===")
T2 = 0.05
T1 = 1.2 * T2
m = _post_channel_raw(v8, 0.8, T1, T2, 0.0)
for phi in np.linspace(0.8 * math.pi, 1.2 * math.pi, 9):
    prob = ScalarProblem(objective=lambda x: _pair_ln_raw(_interference_raw(m, phi, x), 1)[0], lo=0.0, hi=1.0)
    tr, ln_i = maximize_scalar(prob)
    print(f"phi={phi/math.pi:.3f}pi: best ln1={ln_i:.6f} at tr={tr:.4f}")
