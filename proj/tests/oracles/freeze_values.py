#!/usr/bin/env python3
"""Regenerates tests/unit/oracle_values.hpp from mpmath at 40 digits.

Run from the repository root:  python3 tests/oracles/freeze_values.py
"""
import pathlib

import mpmath as mp

mp.mp.dps = 40
OUT = pathlib.Path(__file__).resolve().parent.parent / "unit" / "oracle_values.hpp"


def s(x):
    return mp.nstr(mp.mpf(x), 17, min_fixed=-3, max_fixed=3)


def cplx(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (s(z.real), s(z.imag))


# --- special functions -----------------------------------------------------
gamma_pts = [0.5, -0.5, 3.7, -2.3, mp.mpc(1, 2), mp.mpc(-1.5, 0.5), mp.mpc(0.1, -3), 10.3, mp.mpc(-4.2, -1.1)]
kummer_pts = [
    (0.3, 1.7, 2.5),
    (-2.7, 0.5, 4.0),
    (1.2, 1.5, -6.0),
    (-0.25, 1.5, 8.0),
    (mp.mpc(0.5, 0.5), 1.5, mp.mpc(-2, 1)),
    (-3.5, 0.5, -9.0),
    (0.75, 1.5, -12.0),
]
pcf_pts = [
    (0.5, 0.0),
    (0.37, 1.3),
    (-1.37, 1.3),
    (2.5, -3.0),
    (-0.63, 2.2),
    (5.25, 4.0),
    (1.37, -2 * mp.sqrt(2) * 2),
    (-1.37, mp.mpc(0, 1.3)),
    (-2.2, mp.mpc(0, -2 * mp.sqrt(2))),
    (mp.mpc(0.3, 0.4), mp.mpc(-1.1, 0.6)),
]
hermite_pts = [(0.5, 0.3), (2.7, -1.1), (-1.3, 0.8), (4.5, 1.9), (-2.5, -1.5), (7.25, 2.5)]
laguerre_pts = [(0.5, 0.5, 0.7), (-0.25, 0.5, 1.0), (2.3, 0.5, 3.1), (-1.7, 1.2, 0.4), (3.5, 0.5, 4.0)]


# --- true spectrum of the collapsed-boundary oscillator ---------------------
# Zeros in c of M((3-c)/4; 3/2; 4 b^2): where the boundary determinant vanishes.
def ho_roots(b, lo=0.0, hi=14.0):
    f = lambda c: mp.hyp1f1((3 - c) / 4, 1.5, 4 * b * b)
    roots, step, c = [], mp.mpf("0.01"), mp.mpf(lo)
    while c < hi:
        if mp.sign(f(c)) != mp.sign(f(c + step)):
            roots.append(mp.findroot(f, (c, c + step), solver="anderson"))
        c += step
    return roots


# --- gravity determinant, independent implementation -------------------------
def frob_regular(q, a, g, d, e, sigma, n):
    """a_k of x^sigma sum a_k x^k."""
    co = [mp.mpf(1)]
    for k in range(1, n):
        prev2 = co[k - 2] if k >= 2 else 0
        den = (k + sigma) * (k + sigma - 1 + g)
        co.append(-((d * (k + sigma - 1) - q) * co[k - 1] + (e * (k + sigma - 2) + a) * prev2) / den)
    return co


def frob_log(q, a, d, e, n):
    """gamma = 0: y = kappa Y ln|x| + sum d_k x^k, Y = x sum a_k x^k."""
    am = frob_regular(q, a, 0, d, e, 1, n + 2)
    kappa = q
    A = lambda m: am[m] if 0 <= m < len(am) else 0
    dk = [mp.mpf(1), mp.mpf(0)]
    for m in range(1, n):
        rhs = -kappa * ((2 * m + 1) * A(m) + d * A(m - 1) + e * A(m - 2))
        rhs -= (d * m - q) * dk[m] + (e * (m - 1) + a) * dk[m - 1]
        dk.append(rhs / (m * (m + 1)))
    return kappa, am, dk


def poly(co, x, shift=0):
    return mp.fsum(c * x ** (k + shift) for k, c in enumerate(co))


def gravity_det(b, c, K, n=160):
    b, c, K = mp.mpf(b), mp.mpf(c), mp.mpf(K)
    q, a, d, e = -K, c - 1, 2 * b, mp.mpf(-2)
    kappa, am, dk = frob_log(q, a, d, e, n)
    y1 = lambda x: kappa * poly(am, x, 1) * mp.log(abs(x)) + poly(dk, x)
    y2 = lambda x: poly(am, x, 1)
    return y1(-b) * y2(b) - y1(b) * y2(-b)


def gravity_roots(b, K, lo=0.0, hi=10.0):
    f = lambda c: gravity_det(b, c, K)
    roots, step, c = [], mp.mpf("0.05"), mp.mpf(lo)
    prev = f(c)
    while c < hi - 1e-12:
        nxt = f(c + step)
        if mp.sign(prev) != mp.sign(nxt):
            roots.append(mp.findroot(f, (c, c + step), solver="anderson"))
        c, prev = c + step, nxt
    return roots


def main():
    lines = [
        "#pragma once",
        "// Generated by tests/oracles/freeze_values.py (mpmath, 40 digits). Do not edit.",
        "",
        "#include <complex>",
        "#include <vector>",
        "",
        "namespace oracle {",
        "",
        "using cplx = std::complex<double>;",
        "",
        "struct GammaCase { cplx z; cplx value; };",
        "struct KummerCase { cplx a, b, z, value; };",
        "struct PcfCase { cplx nu, z, value; };",
        "struct HermiteCase { double nu, x, value; };",
        "struct LaguerreCase { double nu, lam, x, value; };",
        "struct RootSet { double b; double K; std::vector<double> roots; };",
        "",
    ]
    lines.append("inline const std::vector<GammaCase> gamma_cases = {")
    for z in gamma_pts:
        lines.append("    {%s, %s}," % (cplx(z), cplx(mp.gamma(z))))
    lines.append("};\n")
    lines.append("inline const std::vector<KummerCase> kummer_cases = {")
    for a, b, z in kummer_pts:
        lines.append("    {%s, %s, %s, %s}," % (cplx(a), cplx(b), cplx(z), cplx(mp.hyp1f1(a, b, z))))
    lines.append("};\n")
    lines.append("inline const std::vector<PcfCase> pcf_cases = {")
    for nu, z in pcf_pts:
        lines.append("    {%s, %s, %s}," % (cplx(nu), cplx(z), cplx(mp.pcfd(nu, z))))
    lines.append("};\n")
    lines.append("inline const std::vector<HermiteCase> hermite_cases = {")
    for nu, x in hermite_pts:
        lines.append("    {%s, %s, %s}," % (s(nu), s(x), s(mp.hermite(nu, x))))
    lines.append("};\n")
    lines.append("inline const std::vector<LaguerreCase> laguerre_cases = {")
    for nu, lam, x in laguerre_pts:
        lines.append("    {%s, %s, %s, %s}," % (s(nu), s(lam), s(x), s(mp.laguerre(nu, lam, x))))
    lines.append("};\n")
    lines.append("// Boundary-determinant zeros for c in [0, 14], K = 0.")
    lines.append("inline const std::vector<RootSet> oscillator_roots = {")
    for b in (0.5, 1.0, 2.0):
        rs = ", ".join(s(r) for r in ho_roots(b))
        lines.append("    {%s, 0.0, {%s}}," % (s(b), rs))
    lines.append("};\n")
    lines.append("// Gravity determinant zeros for c in [0, 10].")
    lines.append("inline const std::vector<RootSet> gravity_roots = {")
    for b, K in ((1.0, 0.0), (2.0, 0.0), (1.0, 1e-3), (1.0, 0.1), (1.0, 0.5), (0.5, 0.5), (2.0, 0.3)):
        rs = ", ".join(s(r) for r in gravity_roots(b, K))
        lines.append("    {%s, %s, {%s}}," % (s(b), s(K), rs))
    lines.append("};\n")
    lines.append("}  // namespace oracle")
    OUT.write_text("\n".join(lines) + "\n")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
