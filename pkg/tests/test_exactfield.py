from fractions import Fraction

import pytest

from sl2auto.exactfield import (
    CountingOnly,
    DomainError,
    FiniteField,
    IntPolynomial,
    NoSuchRoot,
    PrimeFieldElem,
    QuadExtElem,
    Rationals,
    SquareClass,
    cyclotomic_poly,
    divisors,
    euler_phi,
    factorize,
    field_size,
    is_prime,
    least_nonresidue,
    mult_order,
    real_cyclotomic_minpoly,
    root_of_unity,
    split_square_class,
    square_class,
    squarefree_part,
)

Q = Rationals()
F7 = FiniteField(7)
F9 = FiniteField(3, 2)


# number theory

def test_small_number_theory():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert squarefree_part(-72) == -2
    assert squarefree_part(50) == 2


def test_least_nonresidue():
    assert [least_nonresidue(p) for p in (3, 5, 7, 11, 13, 17, 23)] == [2, 2, 3, 2, 2, 3, 5]


# F_p

def test_prime_field_arithmetic():
    a, b = F7.elem(3), F7.elem(5)
    assert a + b == 1 and a * b == 1 and a - b == 5
    assert a / b == 2
    assert a ** -1 == b
    assert F7.elem(Fraction(1, 2)) == 4
    assert F7.elem("-1") == 6
    with pytest.raises(ZeroDivisionError):
        a / F7.elem(0)


def test_prime_field_rejects_bad_p():
    for p in (1, 2, 9, 15):
        with pytest.raises(DomainError):
            FiniteField(p)
    with pytest.raises(DomainError):
        PrimeFieldElem(1, 4)


def test_sqrt_and_squares():
    for p in (3, 5, 7, 11, 13):
        f = FiniteField(p)
        squares = {(x * x).value for x in f.elements() if x}
        for x in f.elements():
            if not x:
                continue
            assert f.is_square(x) == (x.value in squares)
            if f.is_square(x):
                assert f.sqrt(x) ** 2 == x
    with pytest.raises(DomainError):
        Q.sqrt(2)
    assert Q.sqrt(Fraction(9, 4)) == Fraction(3, 2)


def test_mult_order_and_roots_of_unity():
    assert mult_order(F7.elem(3)) == 6
    assert mult_order(F7.elem(2)) == 3
    z = root_of_unity(3, F7)
    assert z == 2 and mult_order(z) == 3
    with pytest.raises(NoSuchRoot):
        root_of_unity(5, F7)
    z8 = root_of_unity(8, F9)
    assert mult_order(z8) == 8


# F_{p^2}

def test_quadratic_extension_field():
    x = F9.elem((1, 1))
    assert str(x) == "1+sqrt(2)"
    assert x ** 8 == 1
    assert x.norm() == 2
    assert x.conjugate() == F9.elem((1, 2))
    assert x * x.inverse() == 1
    assert len(F9.elements()) == 9
    assert field_size(x) == 9
    assert F9.nonsquare == F9.elem((1, 1))
    assert not F9.is_square(F9.nonsquare)
    # every element of F_3 is a square in F_9
    assert F9.is_square(F9.elem(2)) and F9.sqrt(F9.elem(2)) ** 2 == 2


def test_quad_ext_rejects_square_radicand():
    with pytest.raises(DomainError):
        QuadExtElem(Q.elem(1), Q.elem(1), Q.elem(4))


def test_quad_ext_base_equality_and_hash():
    t = QuadExtElem(Q.elem(3), Q.elem(0), Q.elem(2))
    assert t == 3 and hash(t) == hash(Fraction(3))
    assert t.in_base
    s = QuadExtElem(Q.elem(0), Q.elem(-1), Q.elem(2))
    assert s.is_sqrt_multiple and str(s) == "-sqrt(2)"
    assert s * s == 2


def test_counting_only_fields():
    f = FiniteField(5, 3)
    assert f.q == 125 and not f.has_arithmetic
    with pytest.raises(CountingOnly):
        f.elem(1)


# square classes

@pytest.mark.parametrize("x,rep", [(Fraction(-12), -3), (Fraction(18, 5), 10), (Fraction(4, 9), 1), (Fraction(-1), -1)])
def test_rational_square_class(x, rep):
    assert square_class(x, Q) == SquareClass(Fraction(rep))
    alpha, c = split_square_class(x, Q)
    assert alpha * c * c == x


def test_finite_square_class():
    assert square_class(F7.elem(5), F7).representative == 3
    assert square_class(F7.elem(2), F7).is_trivial
    alpha, c = split_square_class(F7.elem(5), F7)
    assert alpha * c * c == 5


# polynomials

def test_cyclotomic():
    assert str(cyclotomic_poly(1)) == "x - 1"
    assert str(cyclotomic_poly(12)) == "x^4 - x^2 + 1"
    for n in range(1, 40):
        assert cyclotomic_poly(n).degree == euler_phi(n)


def test_real_cyclotomic_small_cases():
    assert str(real_cyclotomic_minpoly(3)) == "x + 1"
    assert str(real_cyclotomic_minpoly(4)) == "x"
    assert str(real_cyclotomic_minpoly(6)) == "x - 1"
    assert str(real_cyclotomic_minpoly(7)) == "x^3 + x^2 - 2*x - 1"
    assert str(real_cyclotomic_minpoly(9)) == "x^3 - 3*x + 1"
    with pytest.raises(DomainError):
        real_cyclotomic_minpoly(2)


def test_polynomial_json_round_trip():
    psi = real_cyclotomic_minpoly(12)
    assert psi.to_json() == ["-3", "0", "1"]
    assert IntPolynomial.from_json(psi.to_json()) == psi
