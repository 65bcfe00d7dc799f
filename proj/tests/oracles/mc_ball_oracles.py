"""Monte Carlo oracles for the Gaussian ball integrals.

Plain sampling of Y ~ N(0, sigma I_d); no reduction, no special functions.
The printed means and standard errors are frozen into the C++ unit tests.
"""
import numpy as np

N = 10_000_000
CHUNK = 1_000_000


def gaussian_ball_mc(weight, sigma, radius, d, seed):
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    for _ in range(N // CHUNK):
        y = rng.normal(0.0, np.sqrt(sigma), size=(CHUNK, d))
        inside = (y * y).sum(axis=1) <= radius * radius
        w = np.where(inside, weight(y[:, 0]), 0.0)
        total += w.sum()
        total_sq += (w * w).sum()
    mean = total / N
    var = total_sq / N - mean * mean
    return mean, np.sqrt(var / N)


if __name__ == "__main__":
    # alpha_{t,R}(lambda) with d=3, t=0.5, lambda=2, |rho|^2=1, R=1
    t, lam, rho_sq, radius = 0.5, 2.0, 1.0, 1.0
    c = np.sqrt(lam - rho_sq)
    pref = np.exp(-t * lam / 2 + t * rho_sq / 2)
    m, se = gaussian_ball_mc(lambda y1: pref * np.exp(c * y1), t, radius, 3, 20261019)
    print(f"v1 alpha(d=3,t=0.5,lam=2,rho2=1,R=1) = {m:.12g}  se = {se:.3g}")

    # reduce_ball_integral(c=2, sigma=0.5, P=1.5, d=4)
    m, se = gaussian_ball_mc(lambda y1: np.cosh(2.0 * y1), 0.5, 1.5, 4, 20261020)
    print(f"v2 reduce(c=2,sigma=0.5,P=1.5,d=4) = {m:.12g}  se = {se:.3g}")
