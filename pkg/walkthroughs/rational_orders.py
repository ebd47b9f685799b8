"""Which orders m > 2 occur for inner automorphisms of SL(2, Q)?

An order-m class needs the trace 2cos(2*pi*r/l), l = m or 2m, to lie in Q or
in Q*sqrt(alpha).  Niven handles the rational case; the quadratic case needs
deg Psi_l = phi(l)/2 = 2.
"""

from sl2auto import Rationals, count_classes, euler_phi, inner_order, real_cyclotomic_minpoly, realizable_classes

Q = Rationals()

# degree of the minimal polynomial of 2cos(2*pi/l)
for l in range(3, 13):
    psi = real_cyclotomic_minpoly(l)
    print(f"l={l:<3} phi/2={euler_phi(l) // 2}  Psi = {psi}")

# only l with degree <= 2 can give a trace in Q or Q*sqrt(alpha)
short = [l for l in range(3, 201) if real_cyclotomic_minpoly(l).degree <= 2]
print("degree <= 2 for l in", short)

# scan orders
orders = [m for m in range(3, 101) if realizable_classes(m, Q)]
print("realizable orders m in [3, 100]:", orders)

for m in orders:
    (c,) = realizable_classes(m, Q)
    a = c.representative
    print(f"m={m}: {a}   trace {c.trace}   {inner_order(a)}   C({m}, Q) = {count_classes(m, Q)}")

# l = 5 and 10 have quadratic Psi but the root is not a rational multiple of one sqrt
print("m=5:", realizable_classes(5, Q))

# involutions: one class per square class, so infinitely many
for c in realizable_classes(2, Q, square_classes=[-1, 2, 3, 5, -7]):
    print(f"alpha={c.entry_class.representative}: {c.representative}")
