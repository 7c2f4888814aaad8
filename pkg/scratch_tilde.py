"""Derive the conditional (A1,B1) matrix symbolically and compare with the
printed sub-matrix expressions under the splitter-convention swap hypothesis."""
import sympy as sp

V, tc, T1, T2, tA, tB = sp.symbols("V t_c T_1 T_2 t_A t_B", positive=True)
rc, rA, rB = 1 - tc, 1 - tA, 1 - tB
K2 = V**2 - 1
K = sp.sqrt(K2)
b1 = T1 * (V - 1) + 1
b2 = T2 * (V - 1) + 1

# x sector: variables (x_A1, x_B1 | x_CA, x_CB); C arms carry sqrt(t) of the
# signal, D arms sqrt(1-t) with a sign flip (irrelevant for conditioning).
A_x = sp.Matrix([[V, sp.sqrt(tc * T1) * K], [sp.sqrt(tc * T1) * K, b1]])
C_x = sp.Matrix([
    [0, -sp.sqrt(tB) * sp.sqrt(rc * T2) * K],
    [sp.sqrt(tA) * sp.sqrt(rc * T1) * K, 0],
])
S_x = sp.Matrix([
    [tA * V + rA, sp.sqrt(tA * tB) * sp.sqrt(tc * T2) * K],
    [sp.sqrt(tA * tB) * sp.sqrt(tc * T2) * K, tB * b2 + rB],
])
G_x = sp.simplify(A_x - C_x * S_x.inv() * C_x.T)

# p sector: variables (p_A1, p_B1 | p_DA, p_DB); signs from the Z blocks.
A_p = sp.Matrix([[V, -sp.sqrt(tc * T1) * K], [-sp.sqrt(tc * T1) * K, b1]])
C_p = sp.Matrix([
    [0, -sp.sqrt(rB) * sp.sqrt(rc * T2) * K],
    [sp.sqrt(rA) * sp.sqrt(rc * T1) * K, 0],
])
S_p = sp.Matrix([
    [rA * V + tA, -sp.sqrt(rA * rB) * sp.sqrt(tc * T2) * K],
    [-sp.sqrt(rA * rB) * sp.sqrt(tc * T2) * K, rB * b2 + tB],
])
G_p = sp.simplify(A_p - C_p * S_p.inv() * C_p.T)

print("== derived entries (x-sector) ==")
print("A1 xx:", sp.simplify(G_x[0, 0]))
print("B1 xx:", sp.simplify(G_x[1, 1]))
print("C  xx:", sp.simplify(G_x[0, 1]))
print("== derived entries (p-sector) ==")
print("A1 pp:", sp.simplify(G_p[0, 0]))
print("B1 pp:", sp.simplify(G_p[1, 1]))
print("C  pp:", sp.simplify(G_p[0, 1]))

# Printed sub-matrices with the stray-symbol typos fixed (t -> t_c, "+1+1" -> +1),
# evaluated with the swapped splitter convention: printed (t_A, t_B) denote the
# fractions of the *p-measured* arms, i.e. substitute t_A -> 1-t_A, t_B -> 1-t_B.
pA, pB = 1 - tA, 1 - tB   # values to substitute for the printed symbols
prA, prB = 1 - pA, 1 - pB

printed_A1_xx = (T2 * prB * (V - 1) * (V - pA * (tc * V + tc + (V - 1))) + V * (pA * (V - 1) - V)) / (
    tc * T2 * prA * prB * (V**2 - 1) + (pA * (V - 1) - V) * (T2 * prB * (V - 1) + 1)
)
printed_A1_pp = (T2 * pB * (V - 1) * (pA * (V - 1) + 1 - tc * prA * (V + 1)) + V * (pA - pA * V - 1)) / (
    pA * (V - 1) * (T2 * pB * (1 + tc - rc * V) - 1) - T2 * pB * (V - 1) - 1
)
printed_B1_xx = 1 + T1 * (V - 1) - rc * T1 * prA * (V**2 - 1) / (
    pA + prA * (V - tc * T2 * prB * (V**2 - 1) / (1 + T2 * prB * (V - 1)))
)
printed_B1_pp = 1 + T1 * (V - 1) - rc * T1 * pA * (V**2 - 1) / (
    prA + pA * (V - tc * T2 * pB * (V**2 - 1) / (1 + T2 * pB * (V - 1)))
)
printed_C_xx = sp.sqrt(tc * T1) * sp.sqrt(V**2 - 1) * ((T2 * (1 - 2 * pA) * prB + pA) * (V - 1) - V) / (
    tc * T2 * prA * prB * (V**2 - 1) + (pA * (V - 1) - V) * (1 + T2 * prB * (V - 1))
)
printed_C_pp = sp.sqrt(tc * T1) * sp.sqrt(V**2 - 1) * (1 + (pA * (1 - 2 * T2 * pB) + T2 * pB) * (V - 1)) / (
    pA * (V - 1) * (T2 * pB * (1 + tc + rc * V) - 1) - T2 * pB * (V - 1) - 1
)

checks = [
    ("A1 xx", G_x[0, 0], printed_A1_xx),
    ("A1 pp", G_p[0, 0], printed_A1_pp),
    ("B1 xx", G_x[1, 1], printed_B1_xx),
    ("B1 pp", G_p[1, 1], printed_B1_pp),
    ("C  xx", G_x[0, 1], printed_C_xx),
    ("C  pp", G_p[0, 1], printed_C_pp),
]
subs = {V: sp.Rational(7, 2), tc: sp.Rational(4, 5), T1: sp.Rational(3, 5),
        T2: sp.Rational(7, 10), tA: sp.Rational(3, 10), tB: sp.Rational(9, 10)}
for name, mine, printed in checks:
    diff = sp.simplify(mine - printed)
    num = float(diff.subs(subs))
    print(f"{name}: symbolic zero={diff == 0}  numeric diff at test point = {num:.3e}")
