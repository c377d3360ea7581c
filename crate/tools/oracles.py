#!/usr/bin/env python3
"""Independent high-precision reference values frozen into the test suite.

Every quantity is computed with mpmath from a formula that does not share
code paths with the Rust implementation (e.g. the archimedean term is taken
in the x-domain via Gauss's integral for the digamma function).
"""
import mpmath as mp

mp.mp.dps = 20


def g(mu, x):
    mu = mp.mpf(mu)
    if abs(x) >= 1:
        return mp.mpf(0)
    c = 2 ** (2 * mu) / (mp.pi * mp.sqrt(mu) * mp.binomial(2 * mu, mu))
    return c * (1 - x * x) ** (mu - mp.mpf(1) / 2)


def h_quad(mu, z):
    return mp.quad(lambda x: g(mu, x) * mp.exp(1j * z * x), [-1, 0, 1])


def h_bessel(mu, t):
    mu = mp.mpf(mu)
    t = abs(mp.mpf(t))
    return mp.gamma(mu + 1) / mp.sqrt(mu) * mp.besselj(mu, t) * (2 / t) ** mu


def arch_weil(log_q, factors, mu, L, t):
    """H = (1/2pi) int h(L(r-t)) (2 log Q + sum 2 lam Re psi(lam(1/2+ir)+m)) dr."""
    L = mp.mpf(L)
    u0 = g(mu, 0) / L

    def u(y):
        return mp.expj(-t * y) * g(mu, y / L) / L

    total = 2 * log_q * u0
    for lam, m in factors:
        lam = mp.mpf(lam)
        X = L / lam
        a = lam / 2 + m

        def f(x):
            return mp.exp(-x) / x * u0 - mp.exp(-a * x) * u(lam * x) / (1 - mp.exp(-x))

        # Gauss-Legendre keeps nodes away from x = 0, where the two 1/x terms
        # cancel; tanh-sinh at low precision loses every digit there.
        nodes = mp.linspace(0, X, int(abs(t) * lam * X / mp.pi) + 40)
        with mp.workdps(40):
            integral = mp.quad(f, nodes, method="gauss-legendre") + u0 * mp.e1(X)
        total += 2 * lam * mp.re(integral)
    return total


def tail_abs_integral(mu, cutoff, n_zeros=300):
    """int_{|y| >= cutoff} |h_mu(y)| dy, splitting at Bessel zeros."""
    zs = [mp.besseljzero(mu, k) for k in range(1, n_zeros + 1)]
    zs = [z for z in zs if z > cutoff]
    pts = [mp.mpf(cutoff)] + zs
    s = mp.mpf(0)
    for a, b in zip(pts, pts[1:]):
        s += abs(mp.quad(lambda y: h_bessel(mu, y), [a, b]))
    c_mu = mp.gamma(mu + 1) * 2 ** mu / mp.sqrt(mu)
    top = pts[-1]
    s += c_mu * (2 / mp.pi) * mp.sqrt(2 / mp.pi) * top ** (mp.mpf(1) / 2 - mu) / (mu - mp.mpf(1) / 2)
    return 2 * s


class Emit(dict):
    def __setitem__(self, k, v):
        print(f"{k} = {mp.nstr(v, 17)}", flush=True)


def main():
    out = Emit()
    out["g3_0"] = g(3, 0)
    out["h3_5_quad"] = mp.re(h_quad(3, 5))
    out["h3_i_quad"] = mp.re(h_quad(3, 1j))
    out["pole_zeta_t0_L2_mu3"] = 2 * mp.re(h_quad(3, 1j))
    out["prime_zeta_t0_L1_mu3"] = 2 * mp.log(2) / mp.sqrt(2) * g(3, mp.log(2))
    chi = [0, 1, 0, -1]
    out["logderiv_zeta_minus_chi4_at_2"] = (
        -mp.zeta(2, derivative=1) / mp.zeta(2) + mp.dirichlet(2, chi, 1) / mp.dirichlet(2, chi)
    )
    out["arch_zeta_t50_L4_mu3"] = arch_weil(-mp.log(mp.pi) / 2, [(0.5, 0)], 3, 4, 50)
    out["arch_zeta_t30_L4_mu3"] = arch_weil(-mp.log(mp.pi) / 2, [(0.5, 0)], 3, 4, 30)
    out["arch_chi4_t30_L4_mu3"] = arch_weil(mp.log(4 / mp.pi) / 2, [(0.5, 0.5)], 3, 4, 30)
    out["tail_mu4_cut8"] = tail_abs_integral(4, 8)
    out["tail_mu6_cut12"] = tail_abs_integral(6, 12)


if __name__ == "__main__":
    main()
