#!/usr/bin/env python3
"""Recompute the worked micro-case values by brute force.

Every quantity below is evaluated straight from its definition with naive
loops (numpy is used only to get eigenvalues of small Hermitian matrices).
The output file expected.json is committed and the C++ test suite compares
library results against it, so this script must stay independent of the
library code paths.

Conventions, fixed once for the whole project:
  * Z_4 = {0,1,2,3} with unit weight, characters chi_a(x) = exp(2*pi*i*a*x/4).
  * The subgroup {0,2} carries unit weight; its standalone copy is Z_2 with
    generator 2 (member order [0,2]), so its characters are chi_b(xi) with
    xi = 0,2 mapping to 0,1 in Z_2.
  * Dual weight of a group of order m and weight w is 1/(m*w).
  * Right cosets are indexed by their minimal representative, ascending.
"""

import json
import math
import numpy as np

TWO_PI = 2.0 * math.pi


def cx(z):
    return [z.real, z.imag]


def cxmat(rows):
    return [[cx(v) for v in row] for row in rows]


out = {}

# ---------------------------------------------------------------- Z_6 sum
out["z6_add_4_5"] = (4 + 5) % 6

# ------------------------------------------------- dihedral n=4: s*r*s
# element r^i s^j <-> index i + 4*j, product via s r^b = r^{-b} s
def d4_mul(x, y):
    a, e = x % 4, x // 4
    b, f = y % 4, y // 4
    if e == 0:
        return (a + b) % 4 + 4 * f
    return (a - b) % 4 + 4 * ((1 + f) % 2)

s, r = 4, 1
out["dihedral4_srs_index"] = d4_mul(d4_mul(s, r), s)  # expect r^3 = 3

# --------------------------------- semidirect Z_7 x| Z_3: multiplier orbit
# order-q subgroup of (Z_p)* : solutions of a^q = 1 mod p
p, q = 7, 3
mults = sorted(a for a in range(1, p) if pow(a, q, p) == 1)
out["axb_7_3_multipliers"] = mults  # expect [1,2,4]

# ------------------------------------ Heisenberg p=2: element order profile
def heis_mul(u, v, p=2):
    (x, y, z), (a, b, c) = u, v
    return ((x + a) % p, (y + b) % p, (z + c + x * b) % p)

orders = {}
for x in range(2):
    for y in range(2):
        for z in range(2):
            g = (x, y, z)
            acc, k = g, 1
            while acc != (0, 0, 0):
                acc = heis_mul(acc, g)
                k += 1
            orders[k] = orders.get(k, 0) + 1
# D_4 profile: one identity, five involutions, two elements of order 4
out["heisenberg2_order_profile"] = [orders.get(1, 0), orders.get(2, 0), orders.get(4, 0)]

# ---------------------------------------------------------- Z_2 Fourier
# f_hat(a) = sum_x f(x) conj(chi_a(x)) * w,  w = 1
def z2_chi(a, x):
    return complex(math.cos(TWO_PI * a * x / 2), math.sin(TWO_PI * a * x / 2))

delta0 = [1.0, 0.0]
ones = [1.0, 1.0]
out["fourier_z2_delta0"] = [cx(sum(delta0[x] * z2_chi(a, x).conjugate() for x in range(2))) for a in range(2)]
out["fourier_z2_ones"] = [cx(sum(ones[x] * z2_chi(a, x).conjugate() for x in range(2))) for a in range(2)]

# ------------------------------------------------- Z_4: annihilator of {0,2}
def z4_chi(a, x):
    t = TWO_PI * ((a * x) % 4) / 4
    return complex(math.cos(t), math.sin(t))

H = [0, 2]
out["annihilator_z4_h02"] = [a for a in range(4)
                             if all(abs(z4_chi(a, xi) - 1) < 1e-12 for xi in H)]

# ------------------------------------------- Zak of delta_0 on (Z_4, {0,2})
# cosets of {0,2} in Z_4: {0,2} rep 0, {1,3} rep 1
# (Zf)(alpha)(c) = sum_{xi in H} f(xi + gamma_c) conj(chi_alpha(xi)) * w_H
# alpha runs over characters of the standalone Z_2 (xi=0,2 -> 0,1)
reps = [0, 1]
f = [1.0, 0.0, 0.0, 0.0]
zak = []
for alpha in range(2):
    row = []
    for c in range(2):
        acc = 0j
        for j, xi in enumerate(H):
            acc += f[(xi + reps[c]) % 4] * z2_chi(alpha, j).conjugate()
        row.append(acc)
    zak.append(row)
out["zak_z4_h02_delta0"] = cxmat(zak)

# ------------------------------------- fiberization of delta_0 on (Z_4,{0,2})
# (Tf)(omega H*)(kappa) = f_hat(beta(omega H*) * kappa); f_hat == 1 here.
fhat = [sum(f[x] * z4_chi(a, x).conjugate() for x in range(4)) for a in range(4)]
hstar = out["annihilator_z4_h02"]            # [0, 2]
betas = [0, 1]                               # minimal character index per coset
# rows ordered so that row alpha matches the restriction beta|_H = chi_alpha:
# chi_0|_H trivial -> alpha 0, chi_1|_H sends 2 -> -1 -> alpha 1
fib = [[fhat[(b + k) % 4] for k in hstar] for b in betas]
out["fiber_z4_h02_delta0"] = cxmat(fib)

# ------------------------------- frame bounds for translates of delta_0
# system {L_xi delta_0 : xi in {0,2}}, analysis weight w_H = 1, ambient w_G = 1
# bounds on the span = extreme nonzero eigenvalues of w_H * w_G * Gram
U = np.zeros((4, 2), dtype=complex)
for col, xi in enumerate(H):
    for x in range(4):
        U[x, col] = f[(-xi + x) % 4]         # (L_xi f)(x) = f(xi^{-1} x)
gram = U.conj().T @ U
ev = np.linalg.eigvalsh(gram)
nz = [float(v) for v in ev if v > 1e-10 * ev[-1]]
out["frame_z4_h02_delta0"] = {"A": min(nz), "B": max(nz), "span_dim": len(nz)}
out["riesz_z4_h02_delta0"] = {"A": float(ev[0]), "B": float(ev[-1]),
                              "riesz": bool(ev[0] > 1e-10 * ev[-1])}

# --------------------------- Gabor system on Z_2 with H = G, single window
# H* = {trivial}, so the system is {L_0 d0, L_1 d0} = {d0, d1};
# weights: w_H = 1, w_{H*} = |H| w_H / (|G| w_G) = 1
UG = np.eye(2, dtype=complex)
evg = np.linalg.eigvalsh(UG.conj().T @ UG)
out["gabor_z2_full_delta0"] = {"A": float(evg[0]), "B": float(evg[-1])}

# ----------------------------------- swap representation of Z_2 on C^2
# bracket recovered from its defining identity
#   <phi, pi(x) psi> = sum_alpha [phi,psi](alpha) conj(chi_alpha(x)) w_dual
# by solving the 2x2 linear system; no spectral projections involved.
S = np.array([[0, 1], [1, 0]], dtype=complex)
pi = [np.eye(2, dtype=complex), S]
w_dual = 1.0 / 2.0
M = np.array([[z2_chi(a, x).conjugate() * w_dual for a in range(2)] for x in range(2)])
e = [np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)]
table = []
for i in range(2):
    row = []
    for j in range(2):
        b = np.array([np.vdot(pi[x] @ e[j], e[i]) for x in range(2)])
        # numpy vdot conjugates its first argument: vdot(a,b) = sum conj(a) b,
        # so <phi, pi psi> with <u,v> = sum u conj(v) is vdot(pi psi, phi)
        row.append(np.linalg.solve(M, b))
    table.append(row)
out["swap_bracket_basis"] = [[[cx(table[i][j][a]) for a in range(2)]
                              for j in range(2)] for i in range(2)]

# isometry values for the single orthogonal generator theta = e1:
# T(e1)(alpha) = [e1,theta](alpha) / sqrt([theta,theta](alpha))
t11 = table[0][0]
out["swap_isometry_e1"] = [cx(t11[a] / math.sqrt(t11[a].real)) for a in range(2)]

# orbit of e1+e2 under the swap rep: one line hit twice, norm^2 = 2
v = np.array([1, 1], dtype=complex)
orbit = np.column_stack([pi[0] @ v, pi[1] @ v])
evo = np.linalg.eigvalsh(orbit.conj().T @ orbit)
nzo = [float(x) for x in evo if x > 1e-10 * evo[-1]]
out["swap_orbit_sum_bounds"] = {"A": min(nzo), "B": max(nzo)}

with open("expected.json", "w") as fh:
    json.dump(out, fh, indent=2, sort_keys=True)
    fh.write("\n")
print("wrote expected.json")
