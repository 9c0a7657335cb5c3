#!/usr/bin/env python3
"""Independent reference values for the zetagap test suites.

Everything here is computed with mpmath at 40 significant digits, or, for the
GUE moments, with a separate numpy implementation of the sine-kernel
determinant integrated by parts (no numerical differentiation). The printed
values are frozen into tests/oracle_values.hpp; rerun this script to
regenerate them.
"""

import random

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def fmt(x):
    return mp.nstr(mp.mpf(x), 20, strip_zeros=False)


def theta_values():
    print("// theta")
    print(f"constexpr double kTheta100 = {fmt(mp.siegeltheta(100))};")
    print(f"constexpr double kTheta12 = {fmt(mp.siegeltheta(12))};")
    print(f"constexpr double kTheta5 = {fmt(mp.siegeltheta(5))};")
    print(f"constexpr double kTheta1000 = {fmt(mp.siegeltheta(1000))};")
    g0 = mp.findroot(lambda t: mp.siegeltheta(t), 17.8)
    g1 = mp.findroot(lambda t: mp.siegeltheta(t) - mp.pi, 23.2)
    gm1 = mp.findroot(lambda t: mp.siegeltheta(t) + mp.pi, 9.7)
    print(f"constexpr double kGram0 = {fmt(g0)};")
    print(f"constexpr double kGram1 = {fmt(g1)};")
    print(f"constexpr double kGramMinus1 = {fmt(gm1)};")


def z_values():
    print("// Z and zeta")
    print(f"constexpr double kZetaHalf = {fmt(mp.zeta(0.5))};")
    print(f"constexpr double kZeta2Plus100iRe = {fmt(mp.zeta(mp.mpc(2, 100)).real)};")
    print(f"constexpr double kZeta2Plus100iIm = {fmt(mp.zeta(mp.mpc(2, 100)).imag)};")
    rng = random.Random(20240601)
    pts = []
    for _ in range(100):
        # log-uniform over [10, 1e4] so both evaluation regimes are exercised
        t = 10 ** rng.uniform(1, 4)
        t = float(f"{t:.6f}")
        pts.append((t, mp.siegelz(t)))
    print("constexpr std::array<std::pair<double, double>, 100> kHardyZSamples{{")
    for t, z in pts:
        print(f"    {{{t!r}, {fmt(z)}}},")
    print("}};")


def zeros():
    print("// first 30 ordinates")
    print("constexpr std::array<double, 30> kFirstZeros{")
    for n in range(1, 31):
        print(f"    {fmt(mp.zetazero(n).imag)},")
    print("};")
    print(f"constexpr double kZero649 = {fmt(mp.zetazero(649).imag)};")
    print(f"constexpr double kZero650 = {fmt(mp.zetazero(650).imag)};")
    for T in (50, 100, 500, 1000, 10000):
        print(f"constexpr int kCount{T} = {mp.nzeros(T)};")


# S(T) = N(T) - theta(T)/pi - 1 away from ordinates
def s_values():
    print("// S(T)")
    print("constexpr std::array<std::pair<double, double>, 5> kSValues{{")
    for T in (30, 100, 500, 1000, 2000):
        s = mp.nzeros(T) - mp.siegeltheta(T) / mp.pi - 1
        print(f"    {{{T}.0, {fmt(s)}}},")
    print("}};")


# GUE: E(s) = det(I - K_s) by Gauss-Legendre Nystrom. With E'' = p and
# boundary terms vanishing, c1(k) = k(k-1) * int_0^inf u^(k-2) E(u) du for k>=2.
def fredholm_E(s, order):
    x, w = np.polynomial.legendre.leggauss(order)
    x = 0.5 * s * (x + 1.0)
    w = 0.5 * s * w
    d = x[:, None] - x[None, :]
    K = np.sinc(d)  # numpy sinc is sin(pi x)/(pi x)
    sw = np.sqrt(w)
    A = np.eye(order) - sw[:, None] * K * sw[None, :]
    return np.linalg.det(A)


def gue_moments():
    order = 80
    xs, ws = np.polynomial.legendre.leggauss(200)
    # E decays like exp(-pi^2 u^2 / 8); beyond 8 it is below 1e-30
    a, b = 0.0, 8.0
    u = 0.5 * (b - a) * (xs + 1.0) + a
    wu = 0.5 * (b - a) * ws
    E = np.array([fredholm_E(v, order) for v in u])
    int0 = np.sum(wu * E)
    int2 = np.sum(wu * u * u * E)
    print("// GUE")
    print(f"constexpr double kC1_2 = {float(2.0 * int0)!r};")
    print(f"constexpr double kC1_4 = {float(12.0 * int2)!r};")
    print(f"constexpr double kE1 = {float(fredholm_E(1.0, order))!r};")
    print(f"constexpr double kE2 = {float(fredholm_E(2.0, order))!r};")
    print(f"constexpr double kE5 = {float(fredholm_E(5.0, order))!r};")


if __name__ == "__main__":
    print("#pragma once")
    print("// Generated by tests/oracles/oracle.py; do not edit by hand.")
    print()
    print("#include <array>")
    print("#include <utility>")
    print()
    print("namespace zetagap::oracle {")
    print()
    theta_values()
    z_values()
    zeros()
    s_values()
    gue_moments()
    print()
    print("}  // namespace zetagap::oracle")
