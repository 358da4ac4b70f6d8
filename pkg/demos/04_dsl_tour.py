"""
The expression language
=======================

Identities can be written as text and checked coefficient by coefficient.
The same strings work with the ``qfranklin`` command, e.g.::

    qfranklin verify "poch(q, inf)" "1 - q - q^2" --qorder 10
"""

from qfranklin.dsl import IDENTITY_SCRIPTS, DSLError, eval_expr, parse, run_verify

e = parse("sum(k, 1, inf, q^k / (1 - q^k))")
print(e)
print(eval_expr(e, 12))

for name, (lhs, rhs) in IDENTITY_SCRIPTS.items():
    print(name, run_verify(lhs, rhs, qorder=80, xorder=30).status)

# a wrong identity reports the first monomial where the sides differ
print(run_verify("poch(q, inf)", "1 - q - q^2 + q^5", qorder=10))

for bad in ["poch(q, inf", "1/(2 - q)", "sum(k, 0, inf, q)"]:
    try:
        eval_expr(bad, 10)
    except DSLError as exc:
        print(type(exc).__name__, exc)
