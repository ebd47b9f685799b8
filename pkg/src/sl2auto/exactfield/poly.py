"""Integer polynomials, cyclotomic polynomials and the minimal polynomials of 2cos(2*pi/l)."""

import json
from dataclasses import dataclass
from functools import lru_cache

from .fields import DomainError
from .numtheory import divisors, euler_phi


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients, low degree first; no trailing zeros (zero polynomial is ``()``)."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def exact_div(self, divisor):
        """Quotient by a monic divisor; raises ValueError if the remainder is nonzero."""
        if divisor.leading != 1:
            raise ValueError("exact_div needs a monic divisor")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            if any(rem):
                raise ValueError("division is not exact")
            return IntPolynomial(())
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                quot[k - dd] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= c * d
        if any(rem):
            raise ValueError("division is not exact")
        return IntPolynomial(tuple(quot))

    def __call__(self, x):
        """Horner evaluation at any ring element supporting ``*`` and ``+`` with ints."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def even_odd(self):
        """``(E, O)`` with ``self(x) == E(x**2) + x*O(x**2)``."""
        return IntPolynomial(self.coeffs[0::2]), IntPolynomial(self.coeffs[1::2])

    def to_json(self):
        """Coefficients as decimal strings, low degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(int(c) for c in data))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _x_power_minus_one(n):
    return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))


@lru_cache(maxsize=None)
def cyclotomic_poly(l):
    """Phi_l: divide ``x^l - 1`` by Phi_d for every proper divisor d of l."""
    if l < 1:
        raise DomainError(f"cyclotomic_poly needs l >= 1, got {l}")
    poly = _x_power_minus_one(l)
    for d in divisors(l)[:-1]:
        poly = poly.exact_div(cyclotomic_poly(d))
    return poly


@lru_cache(maxsize=None)
def _dickson(j):
    # z^j + z^-j as a polynomial in x = z + 1/z
    if j == 0:
        return IntPolynomial((2,))
    if j == 1:
        return IntPolynomial.x()
    return IntPolynomial.x() * _dickson(j - 1) - _dickson(j - 2)


@lru_cache(maxsize=None)
def real_cyclotomic_minpoly(l):
    """Minimal polynomial of 2cos(2*pi/l) over Q, for ``l >= 3``.

    Phi_l is palindromic of degree 2n, so ``z^-n * Phi_l(z)`` is
    ``c_n + sum_j c_{n+j} (z^j + z^-j)``; substituting ``z^j + z^-j`` by its
    polynomial in ``z + 1/z`` gives Psi_l with ``Phi_l(z) = z^n Psi_l(z + 1/z)``.
    """
    if l < 3:
        raise DomainError(f"real_cyclotomic_minpoly needs l >= 3, got {l}")
    phi = cyclotomic_poly(l)
    n = phi.degree // 2
    assert phi.degree == euler_phi(l) and phi.coeffs == phi.coeffs[::-1]
    psi = IntPolynomial((phi[n],))
    for j in range(1, n + 1):
        psi = psi + _dickson(j) * phi[n + j]
    return psi
