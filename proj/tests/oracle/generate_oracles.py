#!/usr/bin/env python3
"""Regenerates tests/oracle_values.hpp from sympy.

Every table is produced by a method unrelated to the library's own route:
central factorials by polynomial expansion, arcsin powers by series(),
A_k by solving the eigenvalue equations exp(i m theta) = sum A_k (2im)^k/k!,
inverses by Matrix.inv(), integrals by integrate(), and the spin-1
rotation by symbolic matrix exponentiation.
"""
import sys
from pathlib import Path

import sympy as sp

x, z, s, c, th = sp.symbols("x z s c theta", real=True)


def q(v):
    v = sp.nsimplify(v)
    return f'"{sp.numer(v)}/{sp.denom(v)}"' if sp.denom(v) != 1 else f'"{v}"'


def cfn_rows(max_m):
    out = []
    for m in range(max_m + 1):
        poly = sp.Integer(1) if m == 0 else x * sp.prod([x - sp.Rational(m, 2) + l for l in range(1, m)])
        p = sp.Poly(sp.expand(poly), x)
        for n in range(m + 1):
            out.append((m, n, p.coeff_monomial(x**n)))
    return out


def arcsin_rows(max_n, order):
    out = []
    for n in range(max_n + 1):
        ser = sp.series(sp.asin(z) ** n, z, 0, order + 1).removeO()
        p = sp.Poly(ser, z)
        for m in range(order + 1):
            v = p.coeff_monomial(z**m)
            if v != 0:
                out.append((n, m, v))
    return out


def coefficient_rows(max_two_j):
    out = []
    for two_j in range(max_two_j + 1):
        dim = two_j + 1
        ms = [sp.Rational(two_j - 2 * r, 2) for r in range(dim)]
        M = sp.Matrix(dim, dim, lambda r, k: (2 * sp.I * ms[r]) ** k / sp.factorial(k))
        rhs = sp.Matrix([(c + sp.I * s) ** int(2 * m) if m >= 0 else (c - sp.I * s) ** int(-2 * m) for m in ms])
        sol = M.LUsolve(rhs)
        for k in range(dim):
            a = sp.expand(sol[k])
            a = sp.expand(sp.rem(sp.Poly(a, c), sp.Poly(c**2 - 1 + s**2, c)).as_expr())
            even = sp.expand(a.subs(c, 0))
            odd = sp.expand((a - even) / c)
            assert sp.simplify(sp.im(even)) == 0 and sp.simplify(sp.im(odd)) == 0
            assert even == 0 or odd == 0
            eps, body = (1, odd) if odd != 0 else (0, even)
            p = sp.Poly(body, s)
            for (power,), v in sorted(p.terms()):
                out.append((two_j, k, eps, power, v))
    return out


def vandermonde_rows(two_js):
    inv_rows, metric_rows = [], []
    for two_j in two_js:
        dim = two_j + 1
        V = sp.Matrix(dim, dim, lambda r, col: sp.Integer(two_j - 2 * r) ** col)
        Vi = V.inv()
        G = Vi.T * Vi
        for r in range(dim):
            for col in range(dim):
                inv_rows.append((two_j, r + 1, col + 1, Vi[r, col]))
                metric_rows.append((two_j, r + 1, col + 1, G[r, col]))
    return inv_rows, metric_rows


def integral_rows(max_m, max_p):
    out = []
    for p in range(max_p + 1):
        for m in range(max_m + 1):
            v = sp.integrate(sp.cos(m * th) * sp.sin(th / 2) ** (2 * p), (th, -sp.pi, sp.pi)) / (2 * sp.pi)
            out.append((m, p, sp.nsimplify(sp.simplify(v))))
    return out


def generating_rows(max_n, order):
    out = []
    for n in range(max_n + 1):
        ser = sp.series((1 + x) / (1 - x) ** (2 * n + 1), x, 0, order + 1).removeO()
        p = sp.Poly(ser, x)
        for k in range(order + 1):
            out.append((n, k, p.coeff_monomial(x**k)))
    return out


def spin1_rotation():
    r2 = sp.sqrt(2)
    jx = sp.Matrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / r2
    jy = sp.Matrix([[0, -sp.I, 0], [sp.I, 0, -sp.I], [0, sp.I, 0]]) / r2
    jz = sp.diag(1, 0, -1)
    nx, ny, nz = sp.Rational(2, 7), sp.Rational(3, 7), sp.Rational(6, 7)
    theta = sp.Rational(7, 10)
    gen = sp.I * theta * (nx * jx + ny * jy + nz * jz)
    U = sp.simplify(gen.exp())
    return [(r, col, sp.re(U[r, col]).evalf(30), sp.im(U[r, col]).evalf(30)) for r in range(3) for col in range(3)]


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "oracle_values.hpp"
    lines = ["#pragma once", "", "// Generated by tests/oracle/generate_oracles.py. Do not edit.", "",
             "namespace oracle {", ""]

    declared = set()

    def table(struct, name, fields, rows, fmt):
        if struct not in declared:
            declared.add(struct)
            lines.append(f"struct {struct} {{ {fields} }};")
        lines.append(f"inline constexpr {struct} {name}[] = {{")
        for row in rows:
            lines.append("    {" + fmt(row) + "},")
        lines.append("};")
        lines.append("")

    table("CfnEntry", "kCentralFactorials", "int m; int n; const char* value;", cfn_rows(10),
          lambda r: f"{r[0]}, {r[1]}, {q(r[2])}")
    table("ArcsinEntry", "kArcsinPowers", "int n; int power; const char* value;", arcsin_rows(5, 11),
          lambda r: f"{r[0]}, {r[1]}, {q(r[2])}")
    table("CoefficientEntry", "kCoefficients", "int two_j; int k; int epsilon; int power; const char* value;",
          coefficient_rows(7), lambda r: f"{r[0]}, {r[1]}, {r[2]}, {r[3]}, {q(r[4])}")
    inv, met = vandermonde_rows([5, 6])
    table("MatrixEntry", "kVandermondeInverse", "int two_j; int row; int col; const char* value;", inv,
          lambda r: f"{r[0]}, {r[1]}, {r[2]}, {q(r[3])}")
    table("MatrixEntry", "kMetric", "int two_j; int row; int col; const char* value;", met,
          lambda r: f"{r[0]}, {r[1]}, {r[2]}, {q(r[3])}")
    table("IntegralEntry", "kCosSineIntegrals", "int m; int p; const char* value;", integral_rows(6, 4),
          lambda r: f"{r[0]}, {r[1]}, {q(r[2])}")
    table("GeneratingEntry", "kGeneratingRows", "int n; int power; const char* value;", generating_rows(6, 7),
          lambda r: f"{r[0]}, {r[1]}, {q(r[2])}")
    table("ComplexEntry", "kSpinOneRotation", "int row; int col; double re; double im;", spin1_rotation(),
          lambda r: f"{r[0]}, {r[1]}, {sp.N(r[2], 20)}, {sp.N(r[3], 20)}")
    lines.append("}  // namespace oracle")
    target.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
