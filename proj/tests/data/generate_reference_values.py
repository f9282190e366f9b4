#!/usr/bin/env python3
"""Generate frozen reference values used by the C++ test suite.

Everything here is computed with mpmath at 50 significant digits, straight
from defining series / integrals, independently of the C++ library.  Run and
paste the printed constants into the tests when they change (they should
never change).
"""

import mpmath as mp

mp.mp.dps = 50


def theta_sum(c, power=0, lo=None):
    """sum over n of n^power * exp(-c n^2); lo=None means n in Z, else n>=lo."""
    total = mp.mpf(0)
    n = lo if lo is not None else 1
    while True:
        term = mp.mpf(n) ** power * mp.e ** (-c * n * n)
        total += term
        if term < mp.mpf(10) ** (-60) * (1 + abs(total)):
            break
        n += 1
    if lo is None:
        zero = mp.mpf(0) if power else mp.mpf(1)
        # n and -n contribute equally for even powers, cancel for odd ones
        total = zero + (2 * total if power % 2 == 0 else 0 * total)
    return total


def vandermonde_sq(values):
    prod = mp.mpf(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            prod *= (values[i] - values[j]) ** 2
    return prod


def periodic_ratio(n_walkers, length, n_max=60):
    """Nested-sum evaluation of the periodic normalized reunion probability."""
    c = 2 * mp.pi ** 2 / length ** 2
    pref = (2 * mp.pi) ** (mp.mpf(n_walkers) / 2 - n_walkers ** 2)
    for j in range(n_walkers):
        pref *= mp.gamma(j + 2)
    pref = 1 / pref
    total = mp.mpf(0)
    idx = [-n_max] * n_walkers

    def rec(k, partial):
        nonlocal total
        if k == n_walkers:
            total += partial
            return
        for n in range(-n_max, n_max + 1):
            idx[k] = n
            w = mp.e ** (-c * n * n)
            v = mp.mpf(1)
            for m in range(k):
                v *= (idx[m] - n) ** 2
            rec(k + 1, partial * w * v)

    rec(0, mp.mpf(1))
    return pref * total / length ** (n_walkers ** 2)


def absorbing_ratio(n_walkers, length, n_max=80):
    c = mp.pi ** 2 / (2 * length ** 2)
    pref = mp.pi ** (2 * n_walkers ** 2 + n_walkers) / (
        2 ** (n_walkers ** 2 - mp.mpf(n_walkers) / 2))
    for j in range(n_walkers):
        pref /= mp.gamma(2 + j) * mp.gamma(mp.mpf(3) / 2 + j)
    total = mp.mpf(0)
    idx = [0] * n_walkers

    def rec(k, partial):
        nonlocal total
        if k == n_walkers:
            total += partial
            return
        for n in range(1, n_max + 1):
            idx[k] = n
            w = n * n * mp.e ** (-c * n * n)
            v = mp.mpf(1)
            for m in range(k):
                v *= (idx[m] ** 2 - n ** 2) ** 2
            rec(k + 1, partial * w * v)

    rec(0, mp.mpf(1))
    return pref * total / length ** (2 * n_walkers ** 2 + n_walkers)


def reflecting_ratio(n_walkers, length, n_max=80):
    # Rate pi^2/(2L^2) and constant pi^(2N^2-N) 2^(N/2-N^2) / prod(G(2+j)G(1/2+j)):
    # these make the large-L limit equal 1 (checked below), consistent with the
    # N=1 half-line reflecting propagator.
    c = mp.pi ** 2 / (2 * length ** 2)
    pref = mp.pi ** (2 * n_walkers ** 2 - n_walkers) * \
        2 ** (mp.mpf(n_walkers) / 2 - n_walkers ** 2)
    for j in range(n_walkers):
        pref /= mp.gamma(2 + j) * mp.gamma(mp.mpf(1) / 2 + j)
    total = mp.mpf(0)
    idx = [0] * n_walkers

    def rec(k, partial):
        nonlocal total
        if k == n_walkers:
            total += partial
            return
        for n in range(-n_max, n_max + 1):
            idx[k] = n
            w = mp.e ** (-c * n * n)
            v = mp.mpf(1)
            for m in range(k):
                v *= (idx[m] ** 2 - n ** 2) ** 2
            rec(k + 1, partial * w * v)

    rec(0, mp.mpf(1))
    return pref * total / length ** (2 * n_walkers ** 2 - n_walkers)


def show(name, value, digits=30):
    print(f"{name} = {mp.nstr(value, digits)}")


print("# moments")
show("mu0_absorbing_L1", theta_sum(mp.pi ** 2 / 2, power=2, lo=1))
show("mu0_reflecting_c1", 1 + 2 * theta_sum(mp.mpf(1), power=0, lo=1) - 1
     + 0 * mp.mpf(1))  # identity check below
show("mu0_reflecting_c1_direct", theta_sum(mp.mpf(1), power=0))

print("# airy")
show("Ai(0)", mp.airyai(0))
show("Ai'(0)", mp.airyai(0, 1))
show("Ai(-2)", mp.airyai(-2))
show("Ai(2)", mp.airyai(2))
show("Ai(-4.5)", mp.airyai(-4.5))
show("Ai(6)", mp.airyai(6))
show("Ai'(6)", mp.airyai(6, 1))
show("Ai(-10)", mp.airyai(-10))
show("Ai(12)", mp.airyai(12))
show("Int_6^inf Ai", mp.quad(mp.airyai, [6, 10, mp.inf]))

print("# elliptic")
show("K(0.5)", mp.ellipk(mp.mpf(1) / 4))   # mpmath uses m = k^2
show("E(0.5)", mp.ellipe(mp.mpf(1) / 4))

print("# reunion ratios")
show("G1(2)", periodic_ratio(1, 2))
show("G1(2)_poisson", mp.nsum(lambda n: mp.e ** (-2 * n * n),
                              [-mp.inf, mp.inf]))
show("G2(2)", periodic_ratio(2, 2))
show("G2(1)", periodic_ratio(2, 1))
show("F1(1)", absorbing_ratio(1, 1))
show("F2(1.5)", absorbing_ratio(2, mp.mpf(3) / 2))
show("E1(1)", reflecting_ratio(1, 1))
show("E2(1)", reflecting_ratio(2, 1))

print("# normalization sanity (should all be ~1)")
show("G2(12)", periodic_ratio(2, 12, n_max=40))
show("F2(12)", absorbing_ratio(2, 12, n_max=60))
show("E2(12)", reflecting_ratio(2, 12, n_max=60))

print("# hastings-mcleod anchors via mpmath taylor ODE (30 digits)")
mp.mp.dps = 30
t0 = mp.mpf(8)


def rhs(s, y):
    # s = -t so the integration runs forward; q'' = 2q^3 + t q
    return [y[1], 2 * y[0] ** 3 - s * y[0]]


f = mp.odefun(rhs, -t0, [mp.airyai(t0), -mp.airyai(t0, 1)])
for t in [2, 0, -2, -6]:
    q = f(-mp.mpf(t))[0]
    show(f"q({t})", q, digits=20)
