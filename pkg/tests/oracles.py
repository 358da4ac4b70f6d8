"""Brute-force reference computations, deliberately naive and independent
of the package's own algorithms."""

from itertools import combinations

import sympy

q_sym, x_sym = sympy.symbols("q x")


def distinct_partitions_bruteforce(weight):
    """Every subset of {1..weight} summing to weight, as decreasing tuples."""
    if weight == 0:
        return [()]
    found = []
    for size in range(1, weight + 1):
        for combo in combinations(range(1, weight + 1), size):
            if sum(combo) == weight:
                found.append(tuple(sorted(combo, reverse=True)))
    return found


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def q_coeffs(expr, order):
    """Coefficients of q^0..q^order of a sympy polynomial in q."""
    poly = sympy.Poly(sympy.expand(expr), q_sym)
    return [int(poly.coeff_monomial(q_sym ** i)) for i in range(order + 1)]


def xq_rows(expr, qorder, xorder):
    """rows[b][a] = coefficient of x^a q^b of a sympy polynomial."""
    poly = sympy.Poly(sympy.expand(expr), x_sym, q_sym)
    return [[int(poly.coeff_monomial(x_sym ** a * q_sym ** b)) for a in range(xorder + 1)]
            for b in range(qorder + 1)]


def signed_sum_bruteforce(order, weight_fn):
    """sum over subsets-as-partitions of (-1)^n * weight_fn(parts) q^N."""
    out = [0] * (order + 1)
    for N in range(order + 1):
        for parts in distinct_partitions_bruteforce(N):
            n = len(parts)
            out[N] += (-1) ** n * weight_fn(parts)
    return out
