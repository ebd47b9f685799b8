"""Exact field elements, field descriptors and square classes.

Three kinds of concrete elements are used throughout the package:

* ``fractions.Fraction`` for the rationals,
* ``PrimeFieldElem`` for F_p (p an odd prime),
* ``QuadExtElem`` for ``a + b*sqrt(alpha)`` over any of the above.  F_{p^2} is
  realized as ``F_p[sqrt(ns)]`` with ns the least quadratic non-residue, and
  ``QuadExtElem`` may be nested (an element of ``F_{p^2}[sqrt(alpha)]``).

``sqrt(alpha)`` is a formal symbol whose square is ``alpha``; no embedding is
chosen except where a caller says so (see ``sl2core.reference_trace``).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import factorize, is_prime, exact_isqrt, squarefree_part


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class NoSuchRoot(DomainError):
    """The requested root of unity does not exist in the field."""


class CountingOnly(DomainError):
    """The field is known only by its size; it has no element arithmetic."""


# ---------------------------------------------------------------- F_p


class PrimeFieldElem:
    """Residue class modulo an odd prime ``p``, stored reduced into ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if not (p > 2 and is_prime(p)):
            raise DomainError(f"modulus must be an odd prime, got {p}")
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DomainError(f"{value} has no image in F_{p}")
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = value % p
        self.p = p

    @classmethod
    def _raw(cls, value, p):
        e = object.__new__(cls)
        e.value = value
        e.p = p
        return e

    def _other(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise DomainError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return PrimeFieldElem(other, self.p).value
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem._raw((self.value + v) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem._raw((self.value - v) % self.p, self.p)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem._raw((v - self.value) % self.p, self.p)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem._raw(self.value * v % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem._raw(-self.value % self.p, self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElem._raw(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError(f"division by 0 in F_{self.p}")
        return PrimeFieldElem._raw(self.value * pow(v, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem._raw(v, self.p) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElem._raw(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def signed(self):
        """Representative in ``(-p/2, p/2)``."""
        return self.value if self.value <= self.p // 2 else self.value - self.p

    def __repr__(self):
        return f"PrimeFieldElem({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------- k[sqrt(alpha)]


def _depth(x):
    return x._depth if isinstance(x, QuadExtElem) else 0


def field_size(x):
    """Number of elements of the smallest supported field containing ``x``'s type.

    Returns None for characteristic zero.
    """
    if isinstance(x, PrimeFieldElem):
        return x.p
    if isinstance(x, QuadExtElem):
        base = field_size(x.alpha)
        return None if base is None else base * base
    return None


def _is_nonsquare_elem(alpha):
    if isinstance(alpha, (int, Fraction)):
        alpha = Fraction(alpha)
        if alpha == 0:
            return False
        return not (alpha > 0 and exact_isqrt(alpha.numerator) is not None
                    and exact_isqrt(alpha.denominator) is not None)
    q = field_size(alpha)
    if not alpha:
        return False
    return alpha ** ((q - 1) // 2) != 1


_nonsquare_cache = lru_cache(maxsize=1024)(_is_nonsquare_elem)


def _as_base(x, alpha):
    """Coerce a scalar into the coefficient domain that ``alpha`` lives in."""
    if isinstance(alpha, PrimeFieldElem):
        return x if isinstance(x, PrimeFieldElem) else PrimeFieldElem(x, alpha.p)
    if isinstance(alpha, QuadExtElem):
        if isinstance(x, QuadExtElem) and x._depth == alpha._depth:
            return x
        return QuadExtElem._raw(_as_base(x, alpha.alpha), _as_base(0, alpha.alpha), alpha.alpha)
    return Fraction(x)


class QuadExtElem:
    """``a + b*sqrt(alpha)`` with ``a``, ``b``, ``alpha`` in one base field.

    ``alpha`` must be a non-square of the base field, so the norm
    ``a^2 - alpha*b^2`` vanishes only at zero and every nonzero element is
    invertible.  Equality with base scalars is supported (``b == 0``).
    """

    __slots__ = ("a", "b", "alpha", "_depth")

    def __init__(self, a, b, alpha):
        if isinstance(alpha, int):
            alpha = Fraction(alpha)
        if not _nonsquare_cache(alpha):
            raise DomainError(f"radicand {alpha} is a square; store the value in the base field")
        self.alpha = alpha
        self.a = _as_base(a, alpha)
        self.b = _as_base(b, alpha)
        self._depth = _depth(alpha) + 1

    @classmethod
    def _raw(cls, a, b, alpha):
        e = object.__new__(cls)
        e.a = a
        e.b = b
        e.alpha = alpha
        e._depth = _depth(alpha) + 1
        return e

    def _split(self, other):
        d = _depth(other)
        if d == self._depth:
            if other.alpha != self.alpha:
                raise DomainError(f"cannot mix sqrt({self.alpha}) and sqrt({other.alpha})")
            return other.a, other.b
        if d < self._depth and isinstance(other, (int, Fraction, PrimeFieldElem, QuadExtElem)):
            return _as_base(other, self.alpha), _as_base(0, self.alpha)
        return None

    def _new(self, a, b):
        return QuadExtElem._raw(a, b, self.alpha)

    def __add__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self._new(self.a + parts[0], self.b + parts[1])

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self._new(self.a - parts[0], self.b - parts[1])

    def __rsub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self._new(parts[0] - self.a, parts[1] - self.b)

    def __mul__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        return self._new(self.a * c + self.b * d * self.alpha, self.a * d + self.b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.alpha

    def conjugate(self):
        return self._new(self.a, -self.b)

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("0 has no inverse")
        return self._new(self.a / n, -self.b / n)

    def __truediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self * self._new(*parts).inverse()

    def __rtruediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self._new(*parts) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._new(_as_base(1, self.alpha), _as_base(0, self.alpha))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtElem) and other._depth == self._depth:
            if not self.b and not other.b:
                return self.a == other.a
            return self.alpha == other.alpha and self.a == other.a and self.b == other.b
        if _depth(other) < self._depth and isinstance(other, (int, Fraction, PrimeFieldElem, QuadExtElem)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.alpha))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def in_base(self):
        return not self.b

    @property
    def is_sqrt_multiple(self):
        """True when the element is ``b*sqrt(alpha)`` (including 0)."""
        return not self.a

    def __repr__(self):
        return f"QuadExtElem({self.a!r}, {self.b!r}, {self.alpha!r})"

    def __str__(self):
        def paren(x):
            s = str(x)
            return f"({s})" if isinstance(x, QuadExtElem) and not (x.in_base or x.is_sqrt_multiple) else s

        if not self.b:
            return str(self.a)
        root = f"sqrt({paren(self.alpha)})"
        coeff = paren(self.b)
        term = root if coeff == "1" else f"-{root}" if coeff == "-1" else f"{coeff}*{root}"
        if not self.a:
            return term
        if isinstance(self.b, Fraction) and self.b < 0:
            neg = -self.b
            term = root if neg == 1 else f"{neg}*{root}"
            return f"{paren(self.a)}-{term}"
        return f"{paren(self.a)}+{term}"


# ---------------------------------------------------------------- descriptors


@lru_cache(maxsize=None)
def least_nonresidue(p):
    """Least quadratic non-residue modulo the odd prime ``p`` (Euler's criterion)."""
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise DomainError(f"no non-residue modulo {p}")


class Field:
    """Common interface of the four kinds of base field."""

    symbolic = False
    finite = False
    has_arithmetic = True

    def elem(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)


@dataclass(frozen=True)
class Rationals(Field):
    def elem(self, x):
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise DomainError(f"{x!r} is not a rational number")

    def is_square(self, x):
        x = Fraction(x)
        return x >= 0 and exact_isqrt(x.numerator) is not None and exact_isqrt(x.denominator) is not None

    def sqrt(self, x):
        x = Fraction(x)
        if not self.is_square(x):
            raise DomainError(f"{x} is not a square in Q")
        return Fraction(exact_isqrt(x.numerator), exact_isqrt(x.denominator))

    def contains(self, x):
        """True for native elements (int, Fraction); ``QuadExtElem`` values are not unwrapped."""
        return isinstance(x, (int, Fraction))

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class RealsSymbolic(Field):
    symbolic = True
    has_arithmetic = False

    def elem(self, x):
        raise DomainError("R is symbolic here: no element arithmetic")

    def __str__(self):
        return "R"


@dataclass(frozen=True)
class AlgClosedSymbolic(Field):
    symbolic = True
    has_arithmetic = False

    def elem(self, x):
        raise DomainError("an algebraically closed field is symbolic here: no element arithmetic")

    def __str__(self):
        return "Qbar"


@dataclass(frozen=True)
class FiniteField(Field):
    """F_q with ``q = p**r``.  Only ``r`` in {1, 2} has element arithmetic."""

    p: int
    r: int = 1

    finite = True

    def __post_init__(self):
        if not (self.p > 2 and is_prime(self.p)):
            raise DomainError(f"p must be an odd prime, got {self.p}")
        if self.r < 1:
            raise DomainError(f"exponent r must be positive, got {self.r}")

    @property
    def q(self):
        return self.p**self.r

    @property
    def has_arithmetic(self):
        return self.r <= 2

    def _need_arithmetic(self):
        if self.r > 2:
            raise CountingOnly(f"F_{self.p}^{self.r} is counting only")

    @property
    def ns(self):
        """Least non-residue mod p; the radicand used to build F_{p^2}."""
        return least_nonresidue(self.p)

    def elem(self, x):
        self._need_arithmetic()
        if self.r == 1:
            if isinstance(x, PrimeFieldElem):
                if x.p != self.p:
                    raise DomainError(f"{x!r} is not in F_{self.p}")
                return x
            if isinstance(x, str):
                x = Fraction(x.strip())
            return PrimeFieldElem(x, self.p)
        alpha = PrimeFieldElem(self.ns, self.p)
        if isinstance(x, QuadExtElem):
            if x._depth != 1 or x.alpha != alpha:
                raise DomainError(f"{x!r} is not in F_{self.q}")
            return x
        if isinstance(x, tuple):
            a, b = x  # a + b*sqrt(ns)
            return QuadExtElem._raw(PrimeFieldElem(a, self.p), PrimeFieldElem(b, self.p), alpha)
        if isinstance(x, str):
            x = Fraction(x.strip())
        return QuadExtElem._raw(PrimeFieldElem(x, self.p), PrimeFieldElem._raw(0, self.p), alpha)

    def elements(self):
        """All elements, in increasing ``value`` order (F_p) or lexicographic ``(a, b)`` order."""
        self._need_arithmetic()
        p = self.p
        if self.r == 1:
            return [PrimeFieldElem._raw(v, p) for v in range(p)]
        alpha = PrimeFieldElem._raw(self.ns, p)
        return [QuadExtElem._raw(PrimeFieldElem._raw(a, p), PrimeFieldElem._raw(b, p), alpha)
                for a in range(p) for b in range(p)]

    def contains(self, x):
        if self.r == 1:
            return isinstance(x, PrimeFieldElem) and x.p == self.p
        return isinstance(x, QuadExtElem) and x._depth == 1 and x.alpha == self.ns and x.a.p == self.p

    def is_square(self, x):
        self._need_arithmetic()
        x = self.elem(x)
        return not x or x ** ((self.q - 1) // 2) == 1

    @property
    def nonsquare(self):
        """Canonical non-square of F_q: least under the element order of ``elements``."""
        return _canonical_nonsquare(self)

    def sqrt(self, x):
        """A square root of ``x`` by Tonelli-Shanks; raises DomainError for non-squares."""
        x = self.elem(x)
        if not x:
            return x
        if not self.is_square(x):
            raise DomainError(f"{x} is not a square in F_{self.q}")
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.nonsquare ** t
        root = x ** ((t + 1) // 2)
        u = x**t
        while u != 1:
            i, u2 = 0, u
            while u2 != 1:
                u2 = u2 * u2
                i += 1
            b = z ** (2 ** (s - i - 1))
            root, z = root * b, b * b
            u, s = u * z, i
        return root

    def __str__(self):
        return f"F_{self.p}" if self.r == 1 else f"F_{self.p}^{self.r}"


@lru_cache(maxsize=None)
def _canonical_nonsquare(field):
    for x in field.elements()[1:]:
        if x ** ((field.q - 1) // 2) != 1:
            return x
    raise DomainError(f"no non-square in {field}")


# ---------------------------------------------------------------- square classes


@dataclass(frozen=True)
class SquareClass:
    """A coset of k* modulo squares, keyed by its canonical representative."""

    representative: object

    @property
    def is_trivial(self):
        return self.representative == 1

    def __str__(self):
        return str(self.representative)


def square_class(x, field):
    """Canonical square-class representative of the nonzero element ``x``.

    Q: signed squarefree integer.  F_q: 1 or the field's canonical non-square.
    R: +1 or -1 (``x`` given as a rational).  An algebraically closed field has
    the single class 1.
    """
    if isinstance(field, AlgClosedSymbolic):
        return SquareClass(1)
    if isinstance(field, RealsSymbolic):
        x = Fraction(x)
        if x == 0:
            raise DomainError("0 has no square class")
        return SquareClass(1 if x > 0 else -1)
    if isinstance(field, Rationals):
        x = Fraction(x)
        if x == 0:
            raise DomainError("0 has no square class")
        return SquareClass(Fraction(squarefree_part(x.numerator * x.denominator)))
    if isinstance(field, FiniteField):
        x = field.elem(x)
        if not x:
            raise DomainError("0 has no square class")
        return SquareClass(field.one if field.is_square(x) else field.nonsquare)
    raise DomainError(f"unsupported field {field!r}")


def split_square_class(x, field):
    """Write ``x = alpha * c**2`` with ``alpha`` the class representative; return ``(alpha, c)``."""
    alpha = square_class(x, field).representative
    c = field.sqrt(field.elem(x) / alpha)
    return alpha, c


# ---------------------------------------------------------------- roots of unity


def mult_order(x):
    """Multiplicative order of a nonzero element of F_p or F_{p^2}."""
    q = field_size(x)
    if q is None:
        raise DomainError(f"{x!r} is not a finite-field element")
    if not x:
        raise DomainError("0 has no multiplicative order")
    order = q - 1
    for prime in factorize(order):
        while order % prime == 0 and x ** (order // prime) == 1:
            order //= prime
    return order


@lru_cache(maxsize=4096)
def root_of_unity(l, field):
    """Least element (in ``field.elements()`` order) of multiplicative order exactly ``l``."""
    if not isinstance(field, FiniteField):
        raise DomainError("roots of unity are computed only in finite fields")
    field._need_arithmetic()
    if l < 1 or (field.q - 1) % l:
        raise NoSuchRoot(f"no element of order {l} in {field}: {l} does not divide {field.q - 1}")
    for x in field.elements()[1:]:
        if mult_order(x) == l:
            return x
    raise NoSuchRoot(f"no element of order {l} in {field}")  # unreachable for a cyclic group
