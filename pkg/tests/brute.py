"""Independent brute-force reference computations.

Nothing here imports the package's conversion or predicate code; perversities
are plain Python callables and upper sets are finite point sets on a window.
"""

import itertools
from fractions import Fraction

import sympy


def floor_half(n):
    return n // 2


NAMED = {
    "zero": lambda n: 0,
    "identity": lambda n: n,
    "middle": floor_half,
}


def chi(k):
    return lambda n: 1 if n >= k else 0


def step_sequences(length, lo, hi):
    """All tuples with values in [lo, hi] and steps in {0, 1}: filter the full box."""
    out = []
    for vals in itertools.product(range(lo, hi + 1), repeat=length):
        if all(b - a in (0, 1) for a, b in zip(vals, vals[1:])):
            out.append(vals)
    return out


def extend_constant(anchor, vals):
    """Window values extended by constant tails, as a callable."""
    last = anchor + len(vals) - 1

    def p(n):
        if n < anchor:
            return vals[0]
        if n > last:
            return vals[-1]
        return vals[n - anchor]

    return p


# -- upper sets as point sets -------------------------------------------------


def box(lo, hi):
    return [(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]


def phi_route_points(p, lo, hi):
    """phi(S_p) on the window, S_p = {(n, n') : n' >= p(n) - n}, phi(n, n') = (n + n', n')."""
    return {(a, m) for a, m in box(lo, hi) if m >= p(a - m) - (a - m)}


def op_route_points(p, lo, hi):
    """The complement of psi(S_p), psi(n, n') = (-n - n', -n')."""
    out = set()
    for a, b in box(lo, hi):
        n, m = -a + b, -b  # psi^{-1}(a, b)
        if not m >= p(n) - n:
            out.add((a, b))
    return out


def p_u(member, n, search=60):
    """n + min{n' : psi(n, n') not in U}, scanning n' upward."""
    for m in range(-search, search + 1):
        if not member((-n - m, -m)):
            return n + m
    raise ValueError("search range too small")


def is_upper(points, lo, hi):
    for a, b in points:
        for c, d in ((a + 1, b), (a, b + 1)):
            if lo <= c <= hi and lo <= d <= hi and (c, d) not in points:
                return False
    return True


# -- quiver representations: Hom and Ext^1 by explicit linear algebra ----------


def interval_dims(n, a, b):
    return [1 if a <= v <= b else 0 for v in range(1, n + 1)]


def quiver_hom_ext(n, i, j):
    """dim Hom and dim Ext^1 between interval modules of A_n with arrows v+1 -> v.

    Hom is the kernel of the map sum_v Hom(M_v, N_v) -> sum_arrows Hom(M_{v+1}, N_v),
    Ext^1 its cokernel; all maps in interval modules are identities or zero.
    """
    dm, dn = interval_dims(n, *i), interval_dims(n, *j)
    # variable for each vertex v with dm[v] = dn[v] = 1
    vars_ = [v for v in range(n) if dm[v] and dn[v]]
    col = {v: k for k, v in enumerate(vars_)}
    rows = []
    for v in range(n - 1):  # arrow v+1 -> v (0-based: v+1 -> v)
        if not (dm[v + 1] and dn[v]):
            continue
        row = [Fraction(0)] * len(vars_)
        # N_arrow . f_{v+1} - f_v . M_arrow
        if dn[v + 1] and v + 1 in col:
            row[col[v + 1]] += 1
        if dm[v] and v in col:
            row[col[v]] -= 1
        rows.append(row)
    if not vars_:
        rank = 0
    elif not rows:
        rank = 0
    else:
        rank = sympy.Matrix(rows).rank()
    hom = len(vars_) - rank
    ext = len(rows) - rank
    return hom, ext


# -- heart-level orthogonality predicates, straight from the definitions -------


def heart_vanish(rule):
    """heart_phi orthogonal to heart_psi[n]: automatic for n < 0 and for n = 0, phi > psi."""

    def v(phi, psi, n):
        if n < 0 or (n == 0 and phi > psi):
            return True
        return rule(phi, psi, n)

    return v


def brute_predicates(v, weights, shifts=(-8, 8)):
    ns = range(shifts[0], shifts[1] + 1)
    triples = [(a, b, n) for a in weights for b in weights for n in ns]
    perverse = all(v(a, b, n) for a, b, n in triples if a > b + n)
    grading = perverse and all(v(a, b, n) for a, b, n in triples if a == b + n and n >= 2)
    gluable = all(v(a, b, n) for a, b, n in triples if a > b and n > 0)
    return {"gluable": gluable, "grading": grading, "perverse": perverse}


def brute_f_compatible(v, f, labels):
    """Labels (a, phi) mean heart_phi[a]; f is a plain function on pairs."""
    for x in labels:
        for y in labels:
            if x <= y and f(x) > f(y):
                for n in (0, 1):
                    if not v(x[1], y[1], y[0] + n - x[0]):
                        return False
    return True
