"""Independent oracle for the multipole example.

Uses only mpmath / sympy / numpy, never the C++ recursion or Taylor jets:
  * g_n = (-r)^n (1/r d/dr)^n (f(t-r)/r) by nested high-precision numerical differentiation,
  * the exact limit lim_{r->oo} r^2 g1 g2 at t = 0 (sympy),
  * a Monte-Carlo estimate of the angular moment of n1^2 n3^2 (numpy, 1e7 samples).
The printed numbers are frozen into tests/unit/oracle_values.hpp.
"""
import numpy as np
import sympy as sp
import mpmath as mp

mp.mp.dps = 50


def smooth_step(y):
    if y <= 0:
        return mp.mpf(0)
    if y >= 1:
        return mp.mpf(1)
    return 1 / (1 + mp.exp(1 / y - 1 / (1 - y)))


def log_linear(rho):
    return rho * mp.log(1 + rho)


def rational(power):
    return lambda rho: rho**power / (1 + rho)


def profile(body, width=1):
    # f(u) = F(rho) S(rho / width), rho = -u
    return lambda u: body(-u) * smooth_step(-u / width) if -u > 0 else mp.mpf(0)


def g_n(n, f, t, r, order=0):
    """(-r)^n (1/r d/dr)^n (f(t - r)/r) via nested numerical derivatives."""
    def op(k):
        if k == 0:
            return lambda tt, rr: f(tt - rr) / rr
        inner = op(k - 1)
        return lambda tt, rr: mp.diff(lambda x: inner(tt, x), rr) / rr
    base = op(n)
    return lambda tt, rr: (-rr) ** n * base(tt, rr)


def report(name, n, f, points):
    print(f"# {name}, n={n}")
    for (tv, rv) in points:
        g = g_n(n, f, tv, rv)
        val = g(mp.mpf(tv), mp.mpf(rv))
        dt = mp.diff(lambda x: g(x, mp.mpf(rv)), mp.mpf(tv))
        dr = mp.diff(lambda x: g(mp.mpf(tv), x), mp.mpf(rv))
        print(f"  {{{tv}, {rv}, {mp.nstr(val, 17)}, {mp.nstr(dt, 17)}, {mp.nstr(dr, 17)}}},")


points = [(0.0, 3.0), (0.25, 1.6), (0.5, 1.2), (0.1, 0.5), (0.0, 50.0)]
mp.mp.dps = 30
report("log_linear", 1, profile(log_linear), points)
report("rational p=3", 2, profile(rational(3)), points)
report("rational p=2 (asymptotics n at infinity)", 1, profile(rational(2)), points)
f2 = profile(rational(4))
fpp = lambda u: mp.diff(f2, u, 2)
report("h_3 for rational p=4 (profile f'')", 3, fpp, [(0.0, 3.0)])

# exact limit at t = 0 outside the cutoff shell: F1 = r log(1+r), F2 = r^3/(1+r)
r = sp.symbols("r", positive=True)


def g_sym(n, F):
    # at t = 0, f(t - r) = F(r); d/dr acts on F(r) directly
    e = F / r
    for _ in range(n):
        e = sp.diff(e, r) / r
    return sp.simplify((-r) ** n * e)


G1 = g_sym(1, r * sp.log(1 + r))
G2 = g_sym(2, r**3 / (1 + r))
print("# g1(0,r) =", G1, "; g2(0,r) =", sp.factor(G2))
prod = sp.factor(sp.simplify(r**2 * G1 * G2))
lim = sp.limit(prod, r, sp.oo)
print("# r^2 g1 g2 (t=0) =", prod, " limit =", lim)
G1c = g_sym(1, r**2 / (1 + r))
print("# with F1 = r^2/(1+r): r^2 g1 g2 =", sp.factor(sp.simplify(r**2 * G1c * G2)),
      " limit =", sp.limit(r**2 * G1c * G2, r, sp.oo))

# Monte-Carlo angular moment
rng = np.random.default_rng(20240615)
N = 10_000_000
v = rng.standard_normal((N, 3))
v /= np.linalg.norm(v, axis=1)[:, None]
w = v[:, 0] ** 2 * v[:, 2] ** 2 * 4 * np.pi
mc, se = w.mean(), w.std() / np.sqrt(N)
print(f"# MC int n1^2 n3^2 dOmega = {mc:.8f} +- {se:.1e}; 4pi/15 = {float(4 * sp.pi / 15):.15f}")
b1 = sp.Rational(1, 2) * (4 * sp.pi / 15) * lim
print("# b1 (hbar = m = 1) =", b1, "=", repr(float(b1)))
