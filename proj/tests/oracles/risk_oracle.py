"""Independent oracles for the frozen risk / regret reference values.

* Monte Carlo: numpy generator, chi-square representation of the record MLEs,
  10^6 replicates, fixed seeds; prints mean and standard error.
* Closed-form cross-check at 40 digits with mpmath's own incomplete beta,
  used only for the regret reference value.
* Crossing points of the pooled risk with 1/n1: quadratic formula and
  bisection, both at 40 digits.
Run: python3 risk_oracle.py
"""
import numpy as np
import mpmath as mp
from scipy.stats import f as fdist

mp.mp.dps = 40


def mc(n1, n2, delta, alpha, k, reps=1_000_000, seed=0):
    rng = np.random.default_rng(seed)
    t1 = rng.chisquare(2 * n1, reps) / (2 * n1)
    t2 = delta * rng.chisquare(2 * n2, reps) / (2 * n2)
    c1, c2 = fdist.ppf(alpha / 2, 2 * n1, 2 * n2), fdist.ppf(1 - alpha / 2, 2 * n1, 2 * n2)
    ratio = t1 / t2
    acc = (ratio > c1) & (ratio < c2)
    pooled = (n1 * t1 + n2 * t2) / (n1 + n2)
    est = np.where(acc, k * pooled + (1 - k) * t1, t1)
    err = est - 1.0
    sq = err ** 2
    return err.mean(), err.std(ddof=1) / np.sqrt(reps), sq.mean(), sq.std(ddof=1) / np.sqrt(reps)


def closed_risk(n1, n2, delta, alpha, k):
    c1 = mp.mpf(fdist.ppf(alpha / 2, 2 * n1, 2 * n2))
    c2 = mp.mpf(fdist.ppf(1 - alpha / 2, 2 * n1, 2 * n2))
    d = [c * n1 * delta / (c * n1 * delta + n2) for c in (c1, c2)]
    J = lambda a, b: mp.betainc(a, b, d[0], d[1], regularized=True)
    lam = mp.mpf(n2) / (n1 + n2)
    w = k * lam
    return (delta ** 2 * w * w * mp.mpf(n2 + 1) / n2 * J(n1, n2 + 2)
            + delta * (2 * (w - w * w) * J(n1 + 1, n2 + 1) - 2 * w * J(n1, n2 + 1))
            + mp.mpf(1) / n1 + (w * w - 2 * w) * mp.mpf(n1 + 1) / n1 * J(n1 + 2, n2) + 2 * w * J(n1 + 1, n2))


def r0(n1, n2, d):
    return (n1 + n2 * d * d + n2 * n2 * d * d + n2 * n2 - 2 * n2 * n2 * d) / mp.mpf(n1 + n2) ** 2


def bisect(g, lo, hi, iters=200):
    glo = g(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        if (g(mid) > 0) == (glo > 0):
            lo, glo = mid, g(mid)
        else:
            hi = mid
    return (lo + hi) / 2


if __name__ == "__main__":
    np.set_printoptions(precision=10)
    print("pt  (5,6,d=1.5,a=.16,k=1):    bias %.6f se %.6f  mse %.6f se %.6f" % mc(5, 6, 1.5, 0.16, 1.0, seed=101))
    print("shr (5,6,d=1.5,a=.16,k=.21):  bias %.6f se %.6f  mse %.6f se %.6f" % mc(5, 6, 1.5, 0.16, 0.21, seed=102))
    print("pt  risk (5,6,d=1,a=.16):     bias %.6f se %.6f  mse %.6f se %.6f" % mc(5, 6, 1.0, 0.16, 1.0, seed=103))
    for i, d in enumerate((0.5, 1.0, 2.0)):
        print("shr risk (5,6,d=%.1f,k=.21):   bias %.6f se %.6f  mse %.6f se %.6f" % ((d,) + mc(5, 6, d, 0.16, 0.21, seed=110 + i)))
    n1, n2 = 5, 6
    A, B, C = n2 + n2 * n2, -2 * n2 * n2, n2 * n2 + n1 - mp.mpf(n1 + n2) ** 2 / n1
    disc = mp.sqrt(B * B - 4 * A * C)
    roots = ((-B - disc) / (2 * A), (-B + disc) / (2 * A))
    g = lambda d: r0(n1, n2, d) - mp.mpf(1) / n1
    bis = (bisect(g, mp.mpf("0.01"), mp.mpf(1)), bisect(g, mp.mpf(1), mp.mpf(3)))
    print("delta crossings (5,6): quadratic", [mp.nstr(r, 18) for r in roots], " bisection", [mp.nstr(r, 18) for r in bis])
    reg = closed_risk(5, 6, mp.mpf(1), 0.16, 1) - r0(5, 6, mp.mpf(1))
    print("regret_pt(5,6,a=.16,d=1) =", mp.nstr(reg, 16), " pt_risk =", mp.nstr(closed_risk(5, 6, mp.mpf(1), 0.16, 1), 16))
