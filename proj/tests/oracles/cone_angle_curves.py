"""Independent oracle for the cone-angle curves of the two P1 x P1 examples.

Integrates R(x) Q(x) symbolically with R kept as a sum of simple fractions
(never multiplied out into a polynomial by hand), solves the boundary
conditions for the conical profile with sympy, and cross-checks every value
against mpmath quadrature. Prints a C++ initializer list of golden rationals.

    python3 tests/oracles/cone_angle_curves.py > tests/golden_curves.inc
"""
import sys
from fractions import Fraction

import mpmath
import sympy as sp

x, s0 = sp.symbols("x sigma0")
mpmath.mp.dps = 40


def beta_for(factors, b):
    # factors: (dim, einstein, exponent)
    Q = sp.Integer(1)
    R = sp.Integer(0)
    for n, k, l in factors:
        s = 1 - x * l * k
        Q *= s**n
        R += sp.Rational(n) * k / s
    Q = sp.expand(Q)
    integrand = sp.cancel(R * Q)
    # phi Q = 2 (t+b) Q(-b) - 2 int_{-b}^{t} (s0 - R)(t - x) Q dx, phi(b) = 0
    t = sp.Symbol("t")
    phiQ = 2 * (t + b) * Q.subs(x, -b) - 2 * sp.integrate(
        (s0 * Q - integrand) * (t - x), (x, -b, t))
    sol = sp.solve(sp.Eq(phiQ.subs(t, b), 0), s0)[0]
    phiQ = sp.expand(phiQ.subs(s0, sol))
    beta = -sp.diff(phiQ, t).subs(t, b) / (2 * Q.subs(x, b))
    beta = sp.Rational(beta)

    # quadrature cross-check of the closed form, using float R and Q
    def qf(y):
        out = mpmath.mpf(1)
        for n, k, l in factors:
            out *= (1 - y * l * k) ** n
        return out

    def rf(y):
        return sum(mpmath.mpf(n) * k / (1 - y * l * k) for n, k, l in factors)

    bf = mpmath.mpf(b.p) / b.q
    A = mpmath.quad(qf, [-bf, bf])
    B = mpmath.quad(lambda y: y * qf(y), [-bf, bf])
    IR = mpmath.quad(lambda y: rf(y) * qf(y), [-bf, bf])
    IxR = mpmath.quad(lambda y: y * rf(y) * qf(y), [-bf, bf])
    num = qf(-bf) * (bf * A + B) - A * IxR + B * IR
    den = qf(bf) * (bf * A - B)
    assert abs(num / den - mpmath.mpf(beta.p) / beta.q) < mpmath.mpf(10) ** -30
    return Fraction(int(beta.p), int(beta.q))


def main():
    configs = {
        "pair_m1_2": [(1, 1, -1), (1, 1, 2)],
        "pair_m2_1": [(1, 1, -2), (1, 1, 1)],
    }
    for name, factors in configs.items():
        print(f"// {name}: b = 1/100 + k/100, k = 0..48")
        print(f"inline const char* const k_golden_{name}[] = {{")
        for k in range(49):
            b = sp.Rational(1, 100) + sp.Rational(k, 100)
            beta = beta_for(factors, b)
            print(f'    "{beta.numerator}/{beta.denominator}",  // b = {b}, beta ~ {float(beta):.6f}')
        print("};")


if __name__ == "__main__":
    sys.exit(main())
