#!/usr/bin/env python3
"""Generate Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

With p the fractional part of sqrt(t/2pi) and x = p - 1/2,

    Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p) = -cos(2pi x^2 - 5pi/8) / cos(2pi x)

is entire, so each C_j is a power series in x that converges on |x| <= 1/2.
The series division cancels heavily, so it runs at 120 digits.

Usage: gen_rs_coefficients.py > src/rs_coefficients.inc
"""
import mpmath as mp

mp.mp.dps = 120
DEGREE = 110
CUTOFF = mp.mpf("1e-24")  # drop terms with |c_i| * 0.5^i below this


def cos_series(scale, shift, deg, power):
    """Series of cos(scale * x^power + shift) up to x^deg."""
    out = [mp.mpf(0)] * (deg + 1)
    # cos(a + s) = cos(s) cos(a) - sin(s) sin(a)
    cs, sn = mp.cos(shift), mp.sin(shift)
    k = 0
    while k * power <= deg:
        coef = scale ** k / mp.factorial(k)
        if k % 4 == 0:
            c = cs * coef
        elif k % 4 == 1:
            c = -sn * coef
        elif k % 4 == 2:
            c = -cs * coef
        else:
            c = sn * coef
        out[k * power] += c
        k += 1
    return out


def divide(num, den, deg):
    q = [mp.mpf(0)] * (deg + 1)
    for i in range(deg + 1):
        acc = num[i]
        for j in range(1, i + 1):
            acc -= den[j] * q[i - j]
        q[i] = acc / den[0]
    return q


def derivative(series, order):
    s = list(series)
    for _ in range(order):
        s = [s[i] * i for i in range(1, len(s))] + [mp.mpf(0)]
    return s


def main():
    num = [-c for c in cos_series(2 * mp.pi, -5 * mp.pi / 8, DEGREE, 2)]
    den = cos_series(2 * mp.pi, mp.mpf(0), DEGREE, 1)
    psi = divide(num, den, DEGREE)
    d = lambda k: derivative(psi, k)
    pi = mp.pi

    def comb(*terms):
        out = [mp.mpf(0)] * (DEGREE + 1)
        for w, s in terms:
            for i in range(DEGREE + 1):
                out[i] += w * s[i]
        return out

    c = [
        d(0),
        comb((-1 / (96 * pi**2), d(3))),
        comb((1 / (64 * pi**2), d(2)), (1 / (18432 * pi**4), d(6))),
        comb((-1 / (64 * pi**2), d(1)), (-1 / (3840 * pi**4), d(5)),
             (-1 / (5308416 * pi**6), d(9))),
        comb((1 / (128 * pi**2), d(0)), (19 / (24576 * pi**4), d(4)),
             (11 / (5898240 * pi**6), d(8)),
             (1 / (2038431744 * pi**8), d(12))),
    ]
    limit = DEGREE - 12  # derivatives lose up to 12 trailing coefficients
    print("// Generated by tools/gen_rs_coefficients.py. Do not edit.")
    print("// Taylor coefficients in x = p - 1/2 of the Riemann-Siegel corrections C0..C4.")
    for j, series in enumerate(c):
        last = 0
        for i in range(limit + 1):
            if abs(series[i]) * mp.mpf(0.5) ** i > CUTOFF:
                last = i
        coeffs = series[: last + 1]
        print(f"inline constexpr long double kRsC{j}[] = {{")
        for v in coeffs:
            print(f"    {mp.nstr(v, 25, min_fixed=1, max_fixed=0)}L,")
        print("};")


if __name__ == "__main__":
    main()
