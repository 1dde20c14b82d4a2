"""Independent sympy computation of kappa_1..kappa_N for a quadratic map.

Usage: kappa_oracle.py "p0 p1 p2" "q0 q1 q2" "s0 t0" N [MACHINE_OUTPUT]
Prints one line per kappa. With MACHINE_OUTPUT (the output of
`arboreal kappa --format machine`), compares each kappa.i value against the
oracle instead and exits nonzero on any mismatch.
"""
import sys

import sympy as sp

X, Y, z = sp.symbols("X Y z")


def form(coeffs):
    return sum(sp.Rational(c) * X ** (2 - i) * Y ** i for i, c in enumerate(coeffs))


def apply(P, Q, pt):
    s, t = pt
    return (sp.expand(P.subs({X: s, Y: t}, simultaneous=True)), sp.expand(Q.subs({X: s, Y: t}, simultaneous=True)))


def canon(pt):
    s, t = pt
    if sp.simplify(t) == 0:
        return (sp.Integer(1), sp.Integer(0))
    return (sp.radsimp(sp.simplify(s / t)), sp.Integer(1))


def same(p, q):
    return sp.simplify(p[0] * q[1] - p[1] * q[0]) == 0


def orbit(P, Q, pt, n):
    out = [canon(pt)]
    for _ in range(n):
        out.append(canon(apply(P, Q, out[-1])))
    return out


def cross_ratio(a, b, c, d):
    det = lambda p, q: p[0] * q[1] - p[1] * q[0]
    num = sp.simplify(det(a, b) * det(c, d))
    den = sp.simplify(det(a, c) * det(b, d))
    if den == 0:
        return sp.Integer(0)  # infinity is re-defined as 0
    return sp.radsimp(num / den)


def form_disc(H):
    m = sp.Poly(H, X, Y).total_degree()
    if m == 1:
        return sp.Integer(1)
    poly = sp.Poly(sp.expand(H.subs(Y, 1)), X)
    assert poly.degree() == m, "leading coefficient vanished"
    return sp.discriminant(poly)


def iterate(P, Q, n):
    Pn, Qn = X, Y
    for _ in range(n):
        Pn, Qn = (sp.expand(P.subs({X: Pn, Y: Qn}, simultaneous=True)),
                  sp.expand(Q.subs({X: Pn, Y: Qn}, simultaneous=True)))
    return Pn, Qn


def main():
    P = form(sys.argv[1].split())
    Q = form(sys.argv[2].split())
    s0, t0 = (sp.Rational(v) for v in sys.argv[3].split())
    N = int(sys.argv[4])
    D = sp.expand(sp.cancel((sp.diff(P, X) * Q - P * sp.diff(Q, X)) / Y))
    e0, e1, e2 = (D.coeff(X, 2 - i).coeff(Y, i) for i in range(3))
    delta = sp.factorint(e1 ** 2 - 4 * e0 * e2)
    if e0 != 0:
        roots = sp.solve(sp.Poly(D.subs(Y, 1), X), X)
        crit = [(r, sp.Integer(1)) for r in roots]
    else:
        crit = [(sp.Integer(1), sp.Integer(0)), (-e2 / e1, sp.Integer(1))]
    # finite points first, ascending by real value; infinity last
    crit = sorted((canon(c) for c in crit), key=lambda c: (c[1] == 0, sp.N(c[0]) if c[1] != 0 else 0))
    o = [orbit(P, Q, c, N + 3) for c in crit]
    ell = next(k for k in range(1, N + 3) if same(o[0][k], o[1][k]))
    # xi2 must not lie in the forward orbit of xi1
    if any(same(o[0][k], crit[1]) for k in range(1, N + 3)):
        crit.reverse()
        o.reverse()
    rational_crit = all(c[0].is_rational for c in crit)
    x0 = (s0, t0)
    values = []
    for n in range(1, N + 1):
        if n < ell or (n == ell and not rational_crit):
            Pn, Qn = iterate(P, Q, n)
            val = form_disc(t0 * Pn - s0 * Qn)
        elif n == ell and ell >= 3:
            a, b, c = o[1][1], o[1][ell - 1], o[0][ell - 1]
            val = sp.radsimp((a[0] - b[0]) / (a[0] - c[0])) * cross_ratio(x0, o[0][1], o[1][ell], o[1][1])
        elif n == ell:
            eta, theta = crit[1]
            val = form_disc(sp.expand(theta * P - eta * Q)) * cross_ratio(x0, o[0][1], o[1][2], o[1][1])
        else:
            val = cross_ratio(x0, o[0][n - ell + 1], o[1][n], o[1][1])
        values.append(sp.radsimp(sp.nsimplify(val)))
    if len(sys.argv) > 5:
        return compare(values, sys.argv[5])
    for v in values:
        print(v)
    return 0


def parse_quad(text):
    return sp.sympify(text)


def compare(values, path):
    got = {}
    with open(path) as f:
        for line in f:
            key, _, rest = line.partition(":")
            if key.startswith("kappa."):
                got[int(key[6:])] = parse_quad(rest.split()[0])
    bad = 0
    for i, want in enumerate(values, start=1):
        ok = i in got and sp.simplify(got[i] - want) == 0
        print(f"kappa_{i}: {'ok' if ok else 'MISMATCH'} oracle={want} library={got.get(i)}")
        bad += not ok
    return 1 if bad or len(got) != len(values) else 0


if __name__ == "__main__":
    sys.exit(main())
