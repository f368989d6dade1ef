#!/usr/bin/env python3
"""Reference-value generator for the frozen test constants.

Recomputes, with plain numpy (independent of the Rust implementation),
the quantities that unit tests pin as literals: numerical radii via a
dense rotation sweep, polar/Aluthge factors, and every bound evaluator
on two fixed test matrices. Run and paste the printed constants into
the corresponding tests when they change (they should not).
"""
import numpy as np

np.set_printoptions(precision=17)


def w_dense(A, grid=200_000):
    """Numerical radius by dense theta sweep + golden-section refinement."""
    re = (A + A.conj().T) / 2
    im = (A - A.conj().T) / 2j
    th = np.linspace(0.0, 2 * np.pi, grid, endpoint=False)

    def f(t):
        H = np.cos(t) * re - np.sin(t) * im
        return np.linalg.eigvalsh(H)[-1]

    vals = np.array([f(t) for t in th])
    h = 2 * np.pi / grid
    best = vals.max()
    # refine every near-best local max bracket
    idx = [k for k in range(grid)
           if vals[k] >= vals[k - 1] and vals[k] >= vals[(k + 1) % grid]
           and vals[k] >= best - 1e-6]
    idx.sort(key=lambda k: -vals[k])
    out = best
    invphi = (np.sqrt(5) - 1) / 2
    for k in idx[:8]:
        a, b = th[k] - h, th[k] + h
        c, d = b - invphi * (b - a), a + invphi * (b - a)
        fc, fd = f(c), f(d)
        while b - a > 1e-13:
            if fc > fd:
                b, d, fd = d, c, fc
                c = b - invphi * (b - a)
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + invphi * (b - a)
                fd = f(d)
        out = max(out, fc, fd)
    return out


def opn(A):
    return np.linalg.norm(A, 2)


def psd_pow(M, p):
    lam, V = np.linalg.eigh((M + M.conj().T) / 2)
    band = 1e-10 * (1 + np.abs(lam).max())
    out = np.zeros_like(lam)
    for i, x in enumerate(lam):
        if abs(x) <= band:
            out[i] = 0.0
        elif p == 0.0:
            out[i] = 1.0
        else:
            out[i] = x ** p
    return (V * out) @ V.conj().T


def mod_a(A, p=1.0):     # |A|^p
    return psd_pow(A.conj().T @ A, p / 2)


def mod_as(A, p=1.0):    # |A*|^p
    return psd_pow(A @ A.conj().T, p / 2)


def polar_u(A):
    u, s, vh = np.linalg.svd(A)
    keep = s > 1e-10 * (1 + s[0])
    return u[:, keep] @ vh[keep, :]


def aluthge(A):
    h = mod_a(A, 0.5)
    return h @ polar_u(A) @ h


def cart(A):
    return (A + A.conj().T) / 2, (A - A.conj().T) / 2j


M1 = np.array([
    [0.70 + 0.20j, -1.10 + 0.50j, 0.30 - 0.40j, 0.25 + 0.00j],
    [0.00 + 1.30j, 0.40 - 0.10j, -0.60 + 0.70j, 1.20 - 0.30j],
    [-0.80 + 0.10j, 0.90 + 0.00j, 0.05 - 1.00j, 0.00 + 0.60j],
    [0.50 - 0.70j, -0.20 + 0.25j, 1.00 + 0.80j, -0.45 + 0.00j],
])

r0 = np.array([1, 1j, 0, 0.5])
r1 = np.array([2 - 1j, 1, 1, -0.25j])
M2 = np.vstack([r0, r1, r0 + r1, r0 - 2 * r1])

pr = lambda k, v: print(f"{k} = {v!r}")

# single-matrix quantities on M1
w1 = w_dense(M1)
n1 = opn(M1)
re1, im1 = cart(M1)
at1 = aluthge(M1)
wat1 = w_dense(at1)
pr("w_m1", w1)
pr("opnorm_m1", n1)
pr("w_m2", w_dense(M2))
s = opn(M1.conj().T @ M1 + M1 @ M1.conj().T)
pr("kittaneh_lower_m1", s / 4)
pr("kittaneh_upper_m1", s / 2)
pr("kittaneh_power_m1", 0.5 * (n1 + np.sqrt(opn(M1 @ M1))))
pr("w_aluthge_m1", wat1)
pr("yamazaki_m1", 0.5 * (n1 + wat1))
pr("rotated_cartesian_m1", n1 / 2 + abs(opn(re1 + im1) - opn(re1 - im1)) / (2 * np.sqrt(2)))
pr("cartesian_parts_m1", n1 / 2 + abs(opn(re1) - opn(im1)) / 2)
pr("sq_rotated_cartesian_m1", s / 4 + abs(opn(re1 + im1) ** 2 - opn(re1 - im1) ** 2) / 4)
pr("sq_cartesian_parts_m1", s / 4 + abs(opn(re1) ** 2 - opn(im1) ** 2) / 2)
absm1 = mod_a(M1)
pr("aluthge_refined_m1",
   0.5 * np.sqrt(n1 ** 2 + wat1 ** 2 + w_dense(absm1 @ at1 + at1 @ absm1)))


def alpha_val(A, al):
    t1 = opn(mod_a(A, 4 * al) + mod_as(A, 4 * (1 - al))) / 4
    t2 = w_dense(mod_as(A, 2 * (1 - al)) @ mod_a(A, 2 * al), grid=20_000) / 2
    return t1 + t2


pr("alpha_half_m1", alpha_val(M1, 0.5))
als = np.linspace(0, 1, 801)
vals = np.array([alpha_val(M1, a) for a in als])
k = vals.argmin()
a_lo, a_hi = als[max(k - 1, 0)], als[min(k + 1, 800)]
invphi = (np.sqrt(5) - 1) / 2
a, b = a_lo, a_hi
c, d = b - invphi * (b - a), a + invphi * (b - a)
fc, fd = alpha_val(M1, c), alpha_val(M1, d)
while b - a > 1e-11:
    if fc < fd:
        b, d, fd = d, c, fc
        c = b - invphi * (b - a)
        fc = alpha_val(M1, c)
    else:
        a, c, fc = c, d, fd
        d = a + invphi * (b - a)
        fd = alpha_val(M1, d)
pr("alpha_min_m1", min(fc, fd, vals[k]))
pr("alpha_argmin_m1", c if fc < fd else d)
print("alpha curve local minima count:",
      sum(1 for j in range(1, 800) if vals[j] <= vals[j-1] and vals[j] <= vals[j+1]))

pr("aluthge_m1_entries", [complex(z) for z in at1.ravel()])
u2 = polar_u(M2)
pr("sigma_m2", list(np.linalg.svd(M2, compute_uv=False)))
pr("polar_u_m2_entries", [complex(z) for z in u2.ravel()])

# pair quantities, (A, B) = (M1, M2)
A, B = M1, M2
pr("w_bta", w_dense(B.conj().T @ A))
pr("dragomir_raw_r2", opn(mod_a(A, 4) + mod_a(B, 4)) / 2)
pr("heydarbeygi_r15",
   0.5 * w_dense(mod_a(B, 2) @ mod_a(A, 2), grid=20_000) ** 1.5
   + 0.25 * opn(mod_a(B, 6) + mod_a(A, 6)))
pr("complex_moduli_r2", 0.5 * w_dense(mod_a(A, 4) + 1j * mod_a(B, 4), grid=20_000) ** 2)
pr("anticommutator_r15",
   0.5 * (opn(mod_a(B, 2) @ mod_a(A, 2) + mod_a(A, 2) @ mod_a(B, 2)) / 2) ** 1.5
   + 0.25 * opn(mod_a(B, 6) + mod_a(A, 6)))
corr_rot = abs(opn(re1 + im1) ** 2 - opn(re1 - im1) ** 2) / 4
corr_cart = abs(opn(re1) ** 2 - opn(im1) ** 2) / 2
pr("generalized_comm_m1m2", 2 * np.sqrt(2) * opn(B) * 1.0 * np.sqrt(w1 ** 2 - corr_rot))
pr("hirzallah_m1m2", 2 * np.sqrt(2) * opn(B) * np.sqrt(w1 ** 2 - corr_cart))
pr("fong_m1m2", 2 * np.sqrt(2) * opn(B) * w1)
pr("w_comm_plus", w_dense(A @ B + B @ A))
pr("w_comm_minus", w_dense(A @ B - B @ A))
pr("w_axxa", w_dense(A.conj().T @ B + B @ A))
pr("axxa_m1m2", 2 * n1 * w_dense(B))

# worked 3x3 example closed forms, printed for cross-checking only
A3 = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
t = (1 + np.sqrt(65)) / 2
print("check w(A3) =", w_dense(A3), "vs", np.sqrt(5) / 2)
print("check alpha_half(A3) =", alpha_val(A3, 0.5), "vs 2.25")
print("check min formula =", t / 4 + np.sqrt(t - 1) / 2)
print("check r0 =", np.log(t) / np.log(16))
