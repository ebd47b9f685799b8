"""Closed-form class counts over F_p against brute-force enumeration.

The oracle enumerates every det-1 matrix and every sqrt(ns)-multiple over
F_p, splits them into GL(2, p)-orbits up to sign and counts orbits per inner
order.  It has its own modular arithmetic.
"""

from sl2auto import FiniteField, count_classes, realizable_classes, verify_report

p = 7
print(verify_report(p, 12).to_text())

# m = 4 at p = 7: 8 does not divide 2(p - 1) = 12, yet 8 | p^2 - 1 = 48.
# The eigenvalues lie in F_49 with norm 1, the trace 2cos stays in F_7.
F7 = FiniteField(p)
(c,) = realizable_classes(4, F7)
a = c.representative
print("m=4 class over F_7:", a, "trace", c.trace)
print("A^4 =", a ** 4, " A^2 =", a ** 2)
print("closed form says", count_classes(4, F7))

# a pattern: the count is phi(m)/2 exactly when m | p - 1 or m | p + 1 (p not dividing m)
for q in (5, 11, 13):
    report = verify_report(q, 12, check_trace_criterion=False)
    off = [r.m for r in report.results if not r.agree]
    print(f"p={q}: divergent m = {off}, all with m | p + 1: {all((q + 1) % m == 0 for m in off)}")

# characteristic p: unipotent elements have order p and trace 2
r3 = verify_report(3, 6).result(3)
print("p=3, m=3:", r3.oracle_semisimple, "semisimple,", r3.oracle_exceptional, "exceptional, witness", r3.witnesses[0])
