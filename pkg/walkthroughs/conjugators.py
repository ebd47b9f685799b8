"""Deciding isomorphy and producing the conjugating matrix."""

from sl2auto import FiniteField, Mat2, Rationals, conjugating_matrix, is_isomorphic, parse_matrix

Q = Rationals()

a = parse_matrix("1,1;-1,0", Q)
b = parse_matrix("0,1;-1,1", Q)
q = conjugating_matrix(a, b)
print("A =", a, " B =", b, " Q =", q)
print("Q^-1 A Q =", a.conjugate_by(q))

# same trace up to sign is not enough across entry classes
i2 = parse_matrix("0,sqrt(2);-1/2*sqrt(2),0", Q)
i3 = parse_matrix("0,sqrt(3);-1/3*sqrt(3),0", Q)
print("sqrt(2)-involution vs sqrt(3)-involution:", is_isomorphic(i2, i3))

# a conjugate of the sqrt(2) class
j = i2.conjugate_by(Mat2.of([[2, 1], [1, 1]], Q))
print(j, "->", conjugating_matrix(i2, j))

# over F_7 eigenvalues may lie in F_7 itself: diagonal against lower-triangular
F7 = FiniteField(7)
d = parse_matrix("2,0;0,4", F7)
low = parse_matrix("4,0;3,2", F7)
q = conjugating_matrix(d, low)
print("Q =", q, " Q^-1 D Q =", d.conjugate_by(q))

# a unipotent and its transpose
u = parse_matrix("1,1;0,1", F7)
print(conjugating_matrix(u, parse_matrix("1,0;1,1", F7)))
