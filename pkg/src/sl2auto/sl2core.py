"""Tagged 2x2 matrices, inner-automorphism orders and the two canonical shapes.

An ``Sl2Rep`` stores a base-field matrix ``m`` and an optional radicand
``alpha``.  Untagged it represents ``m`` itself (det 1); tagged it represents
``sqrt(alpha) * m`` with ``alpha * det(m) == 1``.  Since ``Inn_A`` only depends
on ``A`` up to scalars, all automorphism questions can be answered on ``m``
while traces and powers keep track of the ``sqrt(alpha)`` factor.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactfield import (
    DomainError,
    FiniteField,
    PrimeFieldElem,
    QuadExtElem,
    Rationals,
    real_cyclotomic_minpoly,
    root_of_unity,
    split_square_class,
    square_class,
)
from .exactfield.fields import _as_base, _canonical_nonsquare


class InvariantViolation(AssertionError):
    """An internal consistency check failed; the input object is corrupt."""


# ---------------------------------------------------------------- Mat2


@dataclass(frozen=True)
class Mat2:
    e11: object
    e12: object
    e21: object
    e22: object

    @classmethod
    def of(cls, rows, field):
        (a, b), (c, d) = rows
        return cls(field.elem(a), field.elem(b), field.elem(c), field.elem(d))

    @classmethod
    def identity(cls, field):
        return cls(field.one, field.zero, field.zero, field.one)

    @classmethod
    def identity_like(cls, x):
        zero = x.e11 * 0
        return cls(zero + 1, zero, zero, zero + 1)

    @property
    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.entries
            e, f, g, h = other.entries
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return Mat2(*(x * other for x in self.entries))

    __rmul__ = __mul__

    def __truediv__(self, s):
        return Mat2(*(x / s for x in self.entries))

    def __neg__(self):
        return Mat2(*(-x for x in self.entries))

    def __add__(self, other):
        return Mat2(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return Mat2(*(x - y for x, y in zip(self.entries, other.entries)))

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self):
        return self.e11 + self.e22

    def inverse(self):
        d = self.det()
        if not d:
            raise DomainError("singular matrix has no inverse")
        return Mat2(self.e22 / d, -self.e12 / d, -self.e21 / d, self.e11 / d)

    def scalar_value(self):
        """``c`` if the matrix is ``c*I``, else None."""
        if not self.e12 and not self.e21 and self.e11 == self.e22:
            return self.e11
        return None

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in ((self.e11, self.e12), (self.e21, self.e22)))


# ---------------------------------------------------------------- Sl2Rep


def _lift(x, alpha):
    return QuadExtElem._raw(_as_base(0, alpha), x, alpha)


def _unlift(x, alpha):
    if alpha is None:
        return x
    if not isinstance(x, QuadExtElem) or x._depth != _depth_of(alpha) + 1:
        if not x:
            return _as_base(0, alpha)
        raise InvariantViolation(f"{x} is not a multiple of sqrt({alpha})")
    if x.a:
        raise InvariantViolation(f"{x} is not a multiple of sqrt({alpha})")
    return x.b


def _depth_of(x):
    return x._depth if isinstance(x, QuadExtElem) else 0


def is_positive(x):
    """Sign convention used to pick one of ``{A, -A}``: positive rationals, F_p values in [1, (p-1)/2]."""
    if isinstance(x, Fraction) or isinstance(x, int):
        return x > 0
    if isinstance(x, PrimeFieldElem):
        return 1 <= x.value <= (x.p - 1) // 2
    if isinstance(x, QuadExtElem):
        return is_positive(x.a) if x.a else is_positive(x.b)
    raise DomainError(f"no sign convention for {x!r}")


@dataclass(frozen=True)
class Sl2Rep:
    """``m`` (det 1) or ``sqrt(alpha) * m`` (``alpha * det(m) == 1``) over ``field``."""

    m: Mat2
    field: object
    alpha: object = None

    def __post_init__(self):
        if not self.field.has_arithmetic:
            raise DomainError(f"{self.field} has no element arithmetic")
        det = self.m.det()
        if self.alpha is None:
            if det != 1:
                raise DomainError(f"det = {det}, expected 1 (use normalize)")
        else:
            if square_class(self.alpha, self.field).representative != self.alpha or self.alpha == 1:
                raise DomainError(f"radicand {self.alpha} is not a canonical non-square class representative")
            if self.alpha * det != 1:
                raise DomainError(f"alpha * det = {self.alpha * det}, expected 1")

    @classmethod
    def from_rows(cls, rows, field, alpha=None):
        if alpha is not None:
            alpha = field.elem(alpha)
        return cls(Mat2.of(rows, field), field, alpha)

    @classmethod
    def identity(cls, field):
        return cls(Mat2.identity(field), field)

    @property
    def is_pure(self):
        return self.alpha is None

    @property
    def entries(self):
        """Entries of the represented matrix (lifted into ``k[sqrt(alpha)]`` when tagged)."""
        if self.alpha is None:
            return self.m.entries
        return tuple(_lift(x, self.alpha) for x in self.m.entries)

    @property
    def trace(self):
        t = self.m.trace()
        return t if self.alpha is None else _lift(t, self.alpha)

    @property
    def entry_class(self):
        return square_class(self.alpha if self.alpha is not None else 1, self.field)

    def __mul__(self, other):
        return mat_mul(self, other)

    def __neg__(self):
        return Sl2Rep(-self.m, self.field, self.alpha)

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative powers are not needed here")
        result = Sl2Rep.identity(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate_by(self, q):
        """``Q^-1 A Q`` for a base-field Q in GL(2, k)."""
        return Sl2Rep(q.inverse() * self.m * q, self.field, self.alpha)

    def scalar_sign(self):
        """+1 or -1 if the represented matrix is I or -I, else 0."""
        if self.alpha is not None:
            return 0
        c = self.m.scalar_value()
        if c is None:
            return 0
        if c == 1:
            return 1
        if c == -1:
            return -1
        return 0

    def sign_canonical(self):
        """The member of ``{A, -A}`` whose first nonzero base entry is positive."""
        for x in self.m.entries:
            if x:
                return self if is_positive(x) else -self
        raise InvariantViolation("zero matrix")

    def to_json(self):
        tag = "pure" if self.alpha is None else {"sqrt": str(self.alpha)}
        return {"entries": [str(x) for x in self.m.entries], "tag": tag}

    @classmethod
    def from_json(cls, data, field):
        e = [field.elem(x) for x in data["entries"]]
        tag = data["tag"]
        alpha = None if tag == "pure" else field.elem(tag["sqrt"])
        return cls(Mat2(*e), field, alpha)

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in (self.entries[:2], self.entries[2:]))


def mat_mul(x, y):
    """Product with tag algebra; two sqrt(alpha) factors give a pure ``alpha * m_x * m_y``."""
    if x.field != y.field:
        raise DomainError(f"cannot multiply matrices over {x.field} and {y.field}")
    if x.alpha is None:
        return Sl2Rep(x.m * y.m, x.field, y.alpha)
    if y.alpha is None:
        return Sl2Rep(x.m * y.m, x.field, x.alpha)
    if x.alpha != y.alpha:
        raise DomainError(f"cannot multiply sqrt({x.alpha}) and sqrt({y.alpha}) matrices")
    return Sl2Rep((x.m * y.m) * x.alpha, x.field)


def normalize(b, field):
    """Rescale an invertible ``b`` to det 1, possibly as a sqrt(alpha)-multiple.

    With ``det(b) = alpha * c^2`` (alpha the square-class representative) the
    represented matrix is ``b / (c * sqrt(alpha))``; it induces the same inner
    automorphism as ``b``.
    """
    if not isinstance(b, Mat2):
        b = Mat2.of(b, field)
    det = b.det()
    if not det:
        raise DomainError("singular matrix cannot be normalized")
    if field.is_square(det):
        return Sl2Rep(b / field.sqrt(det), field)
    alpha, c = split_square_class(det, field)
    return Sl2Rep(b / (c * alpha), field, alpha)


# ---------------------------------------------------------------- orders


@dataclass(frozen=True)
class InnerOrder:
    """``Finite(m, sign)`` with ``A^m = sign*I`` minimal, or ``NotFinite`` (``m is None``)."""

    m: object = None
    sign: int = 0

    @property
    def finite(self):
        return self.m is not None

    def __str__(self):
        if not self.finite:
            return "not of finite order"
        return f"order {self.m} (A^{self.m} = {'' if self.sign > 0 else '-'}I)"


NOT_FINITE = InnerOrder()


def default_cap(field):
    if isinstance(field, FiniteField):
        q = field.q
        return 2 * q * (q * q - 1)
    return 24


@lru_cache(maxsize=1 << 16)
def inner_order(a, cap=None):
    """Least ``m <= cap`` with ``A^m = +-I`` (the order of ``Inn_A``)."""
    if cap is None:
        cap = default_cap(a.field)
    power = a
    for j in range(1, cap + 1):
        s = power.scalar_sign()
        if s:
            return InnerOrder(j, s)
        power = power * a
    return NOT_FINITE


def is_exceptional(a):
    """Trace +-2 but not +-I: unipotent-type, outside the eigenpair framework."""
    t = a.trace
    return (t == 2 or t == -2) and not a.scalar_sign()


# ---------------------------------------------------------------- canonical forms


@dataclass(frozen=True)
class General:
    """``[[a, b], [-m_A(a)/b, -a + t]]`` with ``m_A(x) = x^2 - t*x + 1``."""

    a: object
    b: object
    t: object

    def entries(self):
        a, b, t = self.a, self.b, self.t
        return (a, b, -(a * a - t * a + 1) / b, t - a)


@dataclass(frozen=True)
class LowerTriangular:
    """``[[lam1, 0], [c, lam2]]`` with the eigenvalues on the diagonal."""

    lam1: object
    c: object
    lam2: object

    def entries(self):
        return (self.lam1, self.lam1 * 0, self.c, self.lam2)


def canonical_form(a):
    e11, e12, e21, e22 = a.entries
    if e12:
        form = General(e11, e12, a.trace)
    else:
        form = LowerTriangular(e11, e21, e22)
        if e11 * e22 != 1:
            raise InvariantViolation("lower-triangular matrix without det 1")
    if tuple(form.entries()) != (e11, e12, e21, e22):
        raise InvariantViolation(f"{a} disagrees with its canonical form {form}")
    return form


def from_canonical(form, field, alpha=None):
    """Rebuild the ``Sl2Rep`` described by a canonical form."""
    return Sl2Rep(Mat2(*(_unlift(x, alpha) for x in form.entries())), field, alpha)


# ---------------------------------------------------------------- traces and eigenpairs


def trace_power(t, r):
    """``lam^r + lam^-r`` from ``t = lam + lam^-1``: ``t_r = t*t_{r-1} - t_{r-2}``."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    prev, cur = t * 0 + 2, t
    if r == 0:
        return prev
    for _ in range(r - 1):
        prev, cur = cur, t * cur - prev
    return cur


@dataclass(frozen=True, order=True)
class Eigenpair:
    """``{zeta_l^r, zeta_l^-r}``: root order ``l``, exponent ``0 <= r <= l/2`` coprime to ``l``."""

    l: int
    r: int

    def __str__(self):
        return f"(l={self.l},r={self.r})"


def canonical_exponent(r, l):
    r %= l
    return min(r, l - r)


def _quadratic_real_root(psi):
    # larger root of x^2 + b x + c, i.e. 2cos(2*pi/l) under sqrt(d) > 0
    c, b = Fraction(psi[0]), Fraction(psi[1])
    disc = b * b - 4 * c
    q = Rationals()
    if q.is_square(disc):
        return (-b + q.sqrt(disc)) / 2
    alpha, mu = split_square_class(disc, q)
    return QuadExtElem(-b / 2, mu / 2, alpha)


def _psi_root(l, field):
    psi = real_cyclotomic_minpoly(l)
    for t in field.elements():
        if not psi(t):
            return t
    even, odd = psi.even_odd()
    alpha = _canonical_nonsquare(field)
    for t in field.elements()[1:]:
        u = t * t * alpha
        if not even(u) and not odd(u):
            return _lift(t, alpha)
    return None


@lru_cache(maxsize=None)
def reference_trace(l, field):
    """``zeta + zeta^-1`` for the reference primitive l-th root ``zeta`` of ``field``.

    Q: ``zeta = exp(2*pi*i/l)`` with ``sqrt(d) > 0``; defined when the trace is
    at most quadratic over Q.  F_p: ``zeta = root_of_unity(l, F_p)`` when
    ``l | p-1``, else ``root_of_unity(l, F_{p^2})``.  F_{p^2}: its own
    ``root_of_unity`` when ``l | q-1``, else the least root of Psi_l lying in
    F_q or in ``F_q*sqrt(ns)``.  The returned trace may lie outside both
    ``k`` and ``k*sqrt(alpha)``; None means no reference exists.
    """
    if l == 1:
        return field.elem(2)
    if l == 2:
        return field.elem(-2)
    if isinstance(field, Rationals):
        psi = real_cyclotomic_minpoly(l)
        if psi.degree == 1:
            return Fraction(-psi[0])
        if psi.degree == 2:
            return _quadratic_real_root(psi)
        return None
    if isinstance(field, FiniteField):
        if l % field.p == 0:
            return None
        q = field.q
        if (q - 1) % l == 0:
            z = root_of_unity(l, field)
            return z + z.inverse()
        if field.r == 1:
            if (q * q - 1) % l:
                return None
            z = root_of_unity(l, FiniteField(field.p, 2))
            t = z + z.inverse()
            return t.a if t.in_base else t
        return _psi_root(l, field)
    raise DomainError(f"no reference roots of unity over {field}")


def eigenpair_of(a):
    """Eigenpair ``(l, r)`` of a finite-order matrix, relative to ``reference_trace``."""
    order = inner_order(a)
    if not order.finite:
        raise DomainError("matrix does not induce a finite-order automorphism")
    if is_exceptional(a):
        raise DomainError("trace +-2 with A != +-I: repeated eigenvalue, not an eigenpair")
    l = order.m if order.sign > 0 else 2 * order.m
    if l == 1:
        return Eigenpair(1, 0)
    t1 = reference_trace(l, a.field)
    if t1 is None:
        raise DomainError(f"no reference {l}-th root of unity over {a.field}")
    t = a.trace
    for r in range(1, l // 2 + 1):
        if gcd(r, l) == 1 and trace_power(t1, r) == t:
            return Eigenpair(l, r)
    raise InvariantViolation(f"trace {t} matches no primitive {l}-th root pair")


# ---------------------------------------------------------------- parsing


_ENTRY = re.compile(r"^(?P<coef>[+-]?(?:\d+(?:/\d+)?)?)(?:\*?sqrt\((?P<rad>[+-]?\d+)\))?$")


def _parse_entry(text):
    m = _ENTRY.match(text.replace(" ", ""))
    if not m or (not m.group("coef").lstrip("+-") and m.group("rad") is None):
        raise ValueError(f"malformed matrix entry {text!r}")
    coef = m.group("coef")
    if coef in ("", "+"):
        coef = "1"
    elif coef == "-":
        coef = "-1"
    rad = m.group("rad")
    return Fraction(coef), (None if rad is None else int(rad))


def parse_matrix(text, field, sqrt=None):
    """Parse ``"e11,e12;e21,e22"``; entries ``n``, ``n/m`` or ``n/m*sqrt(a)``.

    Radicands must agree across entries; ``sqrt`` applies one radicand to all
    of them.  Matrices whose determinant is not 1 are passed through
    ``normalize`` (same inner automorphism).  Raises ``ValueError`` on
    malformed text.
    """
    rows = [r.split(",") for r in text.split(";")]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError(f"matrix literal must look like 'a,b;c,d', got {text!r}")
    coefs, rads = [], set()
    for row in rows:
        for entry in row:
            c, rad = _parse_entry(entry)
            coefs.append(c)
            if rad is not None:
                rads.add(rad)
    if sqrt is not None:
        rads.add(int(sqrt))
    if len(rads) > 1:
        raise ValueError(f"entries carry different radicands {sorted(rads)}")
    base = Mat2(*(field.elem(c) for c in coefs))
    if rads:
        raw = field.elem(rads.pop())
        if not raw:
            raise DomainError("radicand 0")
        if not field.is_square(raw):
            alpha, c = split_square_class(raw, field)
            scaled = base * c
            if alpha * scaled.det() == 1:
                return Sl2Rep(scaled, field, alpha)
    return normalize(base, field)
