#!/usr/bin/env python3
"""Independent arbitrary-precision reference values for the test suites.

Everything here goes through mpmath (log-gamma based theta, Riemann-Siegel /
Euler-Maclaurin at 40+ digits, mpmath's own zero locator), never through the
C++ code paths it is used to check. Output is frozen into the tests by hand or
written to tests/data/.

Run: python3 tests/oracles/make_oracles.py [--zeros] [--siegelz]
"""
import random
import sys

import mpmath as mp
from sympy import primerange

mp.mp.dps = 40
HERE = __file__.rsplit("/", 2)[0]


def shifted_gram(n):
    # gram point t_n with theta(t_n) = (n - 1) pi
    return mp.grampoint(n - 1)


def theta_by_loggamma(t):
    s = mp.mpf(1) / 4 + 1j * mp.mpf(t) / 2
    return mp.im(mp.loggamma(s)) - mp.mpf(t) / 2 * mp.log(mp.pi)


def main():
    print("theta (loggamma) vs siegeltheta:")
    for t in [10, 20 * mp.pi, 50, 100, 1000, 10**4, 10**5, 10**6]:
        a = theta_by_loggamma(t)
        b = mp.siegeltheta(t)
        print(f"  t={mp.nstr(t, 20)} theta={mp.nstr(a, 25)} diff={mp.nstr(a - b, 3)}")
    for t in [mp.mpf(100), 2 * mp.pi * mp.e]:
        print(f"  theta'({mp.nstr(t, 20)}) = {mp.nstr(mp.diff(mp.siegeltheta, t), 22)}")
        print(f"  theta''({mp.nstr(t, 20)}) = {mp.nstr(mp.diff(mp.siegeltheta, t, 2), 22)}")

    print("gram points t_n (theta = (n-1)pi):")
    for n in [0, 1, 2, 3, 126, 127, 128, 134, 135, 136, 1041, 1042]:
        print(f"  t_{n} = {mp.nstr(shifted_gram(n), 22)}")

    print("zeta values:")
    for s in [mp.mpf(2), mp.mpf(0.5), mp.mpc(0.5, 25), mp.mpc(0.5, 100),
              mp.mpc(0.7, 40), mp.mpc(1.5, 3), mp.mpc(0.5, 1000)]:
        z = mp.zeta(s)
        print(f"  zeta({mp.nstr(s, 10)}) = {mp.nstr(mp.re(z), 22)} + {mp.nstr(mp.im(z), 22)}i")

    print("Z at selected Gram points:")
    for n in [97281]:
        t = shifted_gram(n)
        print(f"  n={n} t={mp.nstr(t, 22)} Z={mp.nstr(mp.siegelz(t), 15)}")

    print("zeros:")
    for k in [1, 2, 3, 126, 127, 128, 129, 134, 135, 136, 137]:
        print(f"  gamma_{k} = {mp.nstr(mp.zetazero(k).imag, 20)}")

    print(f"Mertens constant = {mp.nstr(mp.mertens, 30)}")
    print(f"sum 1/p, p<=10 = {mp.nstr(sum(mp.mpf(1) / p for p in primerange(2, 11)), 25)}")
    v = sum(mp.sin(100 * mp.log(p)) / mp.sqrt(p) for p in primerange(2, 10**4)) / mp.pi
    print(f"V_y(100, 1e4) = {mp.nstr(v, 25)}")
    print(f"half ln(0.2 ln 1e6) = {mp.nstr(mp.log(0.2 * mp.log(10**6)) / 2, 20)}")

    if "--zeros" in sys.argv:
        with open(f"{HERE}/data/first100_zeros.txt", "w") as f:
            for k in range(1, 101):
                f.write(f"{mp.nstr(mp.zetazero(k).imag, 15, min_fixed=0, max_fixed=10)}\n")
        print("wrote first100_zeros.txt")

    if "--siegelz" in sys.argv:
        rng = random.Random(20240917)
        with open(f"{HERE}/data/siegelz_reference.csv", "w") as f:
            f.write("t,z\n")
            pts = [10.0, 12.5, 17.0, 29.9, 30.0, 31.0, 64.0, 150.0, 200.0, 1000.0]
            pts += [rng.uniform(10.0, 5.0e4) for _ in range(60)]
            for t in pts:
                tt = mp.mpf(t)  # exact binary64 value
                f.write(f"{t!r},{mp.nstr(mp.siegelz(tt), 20)}\n")
        print("wrote siegelz_reference.csv")


if __name__ == "__main__":
    main()
