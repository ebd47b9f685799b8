"""Eigenpairs, isomorphy with explicit conjugators, realizable classes and C(m, k).

Isomorphy over GL(2, k) is decided by two checks.  The two matrices must
have the same entry square class (both untagged, or both tagged with the same
canonical radicand), and their traces must agree up to sign.  For det-1
matrices, equal trace means equal eigenvalues.
"""

from dataclasses import dataclass, field as dc_field
from math import gcd

from .exactfield import (
    AlgClosedSymbolic,
    CountingOnly,
    DomainError,
    FiniteField,
    QuadExtElem,
    Rationals,
    RealsSymbolic,
    SquareClass,
    euler_phi,
    factorize,
    square_class,
)
from .exactfield.numtheory import lcm
from .sl2core import (
    Eigenpair,
    InvariantViolation,
    Mat2,
    Sl2Rep,
    inner_order,
    reference_trace,
    trace_power,
)


class NotIsomorphic(DomainError):
    pass


class NotRealizable(DomainError):
    pass


class UnboundedResult(DomainError):
    pass


CLOSED_FORM_NOTE = "paper formula; see verify for oracle comparison"


# ---------------------------------------------------------------- eigenpairs


def m_valid_eigenpairs(m):
    """All ``(2m, r)``, plus ``(m, r)`` for odd m; ``euler_phi(m)`` pairs in total."""
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    pairs = [Eigenpair(2 * m, r) for r in range(1, m + 1) if gcd(r, 2 * m) == 1]
    if m % 2:
        pairs += [Eigenpair(m, r) for r in range(1, m // 2 + 1) if gcd(r, m) == 1]
    return pairs


def negate_eigenpair(e):
    """The pair ``{-zeta_l^r, -zeta_l^-r}`` as a canonical ``(l', r')``."""
    big = lcm(e.l, 2)
    exponent = (e.r * (big // e.l) + big // 2) % big
    g = gcd(exponent, big)
    l2 = big // g
    r2 = (exponent // g) % l2
    return Eigenpair(l2, min(r2, l2 - r2))


def eigenpairs_up_to_sign(m):
    """Orbits of ``m_valid_eigenpairs(m)`` under ``lam -> -lam``, in first-member order."""
    pairs = m_valid_eigenpairs(m)
    seen, orbits = set(), []
    for e in pairs:
        if e in seen:
            continue
        orbit = tuple(sorted({e, negate_eigenpair(e)}, key=pairs.index))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


# ---------------------------------------------------------------- isomorphy


def is_isomorphic(a, b):
    """Whether ``Inn_A`` and ``Inn_B`` are isomorphic over GL(2, k).

    Automorphisms of different orders are never isomorphic.  This check only
    matters at trace +-2, where it separates +-I from the unipotent-type
    matrices that have the same trace.
    """
    if a.field != b.field:
        raise DomainError(f"matrices over different fields: {a.field}, {b.field}")
    oa, ob = inner_order(a), inner_order(b)
    if not (oa.finite and ob.finite):
        raise DomainError("is_isomorphic needs finite-order automorphisms")
    if oa.m != ob.m or a.alpha != b.alpha:
        return False
    ta, tb = a.trace, b.trace
    return ta == tb or ta == -tb


def _lower_diagonalizer(x):
    # P with P^-1 X P = diag(x11, x22) for lower-triangular X with distinct diagonal
    one, zero = x.e11 * 0 + 1, x.e11 * 0
    if not x.e21:
        return Mat2(one, zero, zero, one)
    return Mat2((x.e11 - x.e22) / x.e21, zero, one, one)


def _general_diagonalizer(x, mu1, mu2):
    # P with P^-1 X P = diag(mu1, mu2) for X with x12 != 0
    return Mat2(x.e12, x.e12, mu1 - x.e11, mu2 - x.e11)


def _diagonalizer(x, mu1, mu2):
    if x.e12:
        return _general_diagonalizer(x, mu1, mu2)
    p = _lower_diagonalizer(x)
    if (x.e11, x.e22) == (mu1, mu2):
        return p
    one, zero = x.e11 * 0 + 1, x.e11 * 0
    return p * Mat2(zero, one, one, zero)


def _nullspace(rows, zero):
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    pivots, rank = [], 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [u - f * v for u, v in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [zero] * ncols
        v[free] = zero + 1
        for i, col in enumerate(pivots):
            v[col] = -rows[i][free]
        basis.append(v)
    return basis


def _solve_conjugator(x, y):
    """Some invertible Q with ``X Q = Q Y``, by linear algebra (repeated-eigenvalue case)."""
    a, b, c, d = x.entries
    e, f, g, h = y.entries
    zero = a * 0
    # unknowns (q11, q12, q21, q22); rows are the entries of XQ - QY
    rows = [
        [a - e, -g, b, zero],
        [-f, a - h, zero, b],
        [c, zero, d - e, -g],
        [zero, c, -f, d - h],
    ]
    basis = [Mat2(*v) for v in _nullspace(rows, zero)]
    candidates = list(basis)
    if len(basis) >= 2:
        candidates += [basis[0] + basis[1] * (zero + t) for t in range(1, 4)]
    for q in candidates:
        if q.det():
            return q
    raise NotIsomorphic("no invertible conjugator exists")


def _base_conjugator(x, y):
    """Q in GL(2, k) with ``Q^-1 X Q = Y`` for base matrices of equal trace and det."""
    if x.scalar_value() is not None:
        return Mat2.identity_like(x)
    if x.e12 and y.e12:
        a, b, c, d = x.e11, x.e12, y.e11, y.e12
        return Mat2(b / d, b * 0, (c - a) / d, b * 0 + 1)
    tri = y if not y.e12 else x
    mu1, mu2 = tri.e11, tri.e22
    if mu1 == mu2:
        return _solve_conjugator(x, y)
    return _diagonalizer(x, mu1, mu2) * _diagonalizer(y, mu1, mu2).inverse()


def conjugating_matrix(a, b):
    """``Q`` in GL(2, k) with ``Q^-1 A Q`` equal to ``B`` or ``-B``, checked before returning.

    Both matrices are handled through their base parts.  That is the same as
    scaling the diagonalizer of a sqrt(alpha)-multiple by sqrt(alpha).
    """
    if not is_isomorphic(a, b):
        raise NotIsomorphic(f"Inn_A and Inn_B are not isomorphic: {a} vs {b}")
    target = b if a.trace == b.trace else -b
    q = _base_conjugator(a.m, target.m)
    image = a.conjugate_by(q)
    if image != b and image != -b:
        raise InvariantViolation(f"conjugator {q} failed: Q^-1 A Q = {image}")
    return q


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class IsomorphyClass:
    m: int
    eigenpair: Eigenpair
    orbit: tuple
    entry_class: SquareClass
    trace: object
    representative: object = None
    predicted: object = dc_field(default=None, compare=False)

    def to_json(self):
        out = {
            "m": self.m,
            "l": self.eigenpair.l,
            "r": self.eigenpair.r,
            "entry_class": str(self.entry_class),
            "trace": str(self.trace),
            "representative": None if self.representative is None else self.representative.to_json(),
        }
        if self.predicted is not None:
            out["predicted"] = self.predicted
        return out


@dataclass(frozen=True)
class ClassCount:
    """``finite`` count, or ``finite is None`` for infinitely many (one per square class)."""

    finite: object = None
    note: object = None

    @property
    def infinite(self):
        return self.finite is None

    def to_json(self):
        if self.finite is None:
            return {"infinite": "square_classes"}
        return {"finite": self.finite}

    def __str__(self):
        return "infinite (one class per square class)" if self.finite is None else str(self.finite)


def _split_trace(t, field):
    """``(t', None)`` for t in k, ``(t', alpha)`` for ``t = t'*sqrt(alpha)``, else None."""
    if field.contains(t):
        return t, None
    if isinstance(t, QuadExtElem):
        if t.in_base and field.contains(t.a):
            return t.a, None
        if t.is_sqrt_multiple and field.contains(t.b):
            return t.b, t.alpha
    return None


def _symbolic_trace(e):
    return f"2cos(2*pi*{e.r}/{e.l})"


def _orbit_trace(e, field):
    t1 = reference_trace(e.l, field)
    if t1 is None:
        return None
    return trace_power(t1, e.r)


def _check_arithmetic(field):
    if isinstance(field, FiniteField) and not field.has_arithmetic:
        raise CountingOnly(f"{field} is counting only")


def representative(m, orbit, entry_class, field):
    """A checked matrix for the class given by ``orbit`` and ``entry_class``.

    Trace t in k gives the companion ``[[0, 1], [-1, t]]``.  Trace
    ``t'*sqrt(alpha)`` gives ``sqrt(alpha) * [[1, 1], [-(alpha - t'alpha + 1)/alpha, t' - 1]]``.
    When ``t' = 0`` it gives ``sqrt(alpha) * [[0, 1], [-1/alpha, 0]]`` instead.
    """
    _check_arithmetic(field)
    if field.symbolic:
        raise DomainError(f"{field} has no element arithmetic; classes there carry no matrix")
    if isinstance(orbit, Eigenpair):
        orbit = (orbit,)
    if not isinstance(entry_class, SquareClass):
        entry_class = square_class(entry_class, field)
    if m == 2:
        parts = (field.zero, None if entry_class.is_trivial else field.elem(entry_class.representative))
    else:
        t = _orbit_trace(orbit[0], field)
        parts = None if t is None else _split_trace(t, field)
        if parts is None:
            raise NotRealizable(f"{orbit[0]} has no trace in {field} or a sqrt-multiple of it")
        want = None if entry_class.is_trivial else field.elem(entry_class.representative)
        if parts[1] != want:
            raise NotRealizable(f"{orbit[0]} is realized with entry class {parts[1] or 1}, not {entry_class}")
    tp, alpha = parts
    one, zero = field.one, field.zero
    if alpha is None:
        rep = Sl2Rep(Mat2(zero, one, -one, tp), field)
    elif not tp:
        rep = Sl2Rep(Mat2(zero, one, -one / alpha, zero), field, alpha)
    else:
        rep = Sl2Rep(Mat2(one, one, -(alpha - tp * alpha + 1) / alpha, tp - 1), field, alpha)
    if inner_order(rep).m != m or rep.entry_class != entry_class:
        raise InvariantViolation(f"representative {rep} does not induce an order-{m} automorphism")
    return rep


def _closed_form(m, q):
    if m == 2:
        return 2
    if m % 2 == 0:
        return euler_phi(m) // 2 if (2 * (q - 1)) % (2 * m) == 0 else 0
    return euler_phi(m) // 2 if (q - 1) % m == 0 else 0


def realizable_classes(m, field, square_classes=None):
    """One ``IsomorphyClass`` per eigenpair orbit that ``field`` realizes.

    Q and F_q are computed from the trace of each orbit: the class exists
    when the trace lies in k or in ``k*sqrt(alpha)``.  Over F_q each class
    also records whether the closed-form divisibility count predicts it
    (``predicted``).  For ``m = 2`` over Q, pass ``square_classes``.
    """
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    _check_arithmetic(field)
    orbits = eigenpairs_up_to_sign(m)
    if field.symbolic:
        if m == 2:
            reps = [1] if isinstance(field, AlgClosedSymbolic) else [1, -1]
            return [IsomorphyClass(2, orbits[0][0], orbits[0], SquareClass(s), "0") for s in reps]
        return [IsomorphyClass(m, o[0], o, SquareClass(1), _symbolic_trace(o[0])) for o in orbits]

    wanted = None
    if square_classes is not None:
        wanted = []
        for s in square_classes:
            sc = s if isinstance(s, SquareClass) else square_class(s, field)
            if sc not in wanted:
                wanted.append(sc)

    predicted = None
    if isinstance(field, FiniteField):
        predicted = _closed_form(m, field.q) > 0

    classes = []
    if m == 2:
        if wanted is None:
            if isinstance(field, Rationals):
                raise UnboundedResult("C(2, Q) is infinite: pass an explicit list of square classes")
            wanted = [SquareClass(field.one), SquareClass(field.nonsquare)]
        o = orbits[0]
        for sc in wanted:
            rep = representative(2, o, sc, field)
            classes.append(IsomorphyClass(2, o[0], o, sc, rep.trace, rep, predicted))
        return classes

    for o in orbits:
        t = _orbit_trace(o[0], field)
        parts = None if t is None else _split_trace(t, field)
        if parts is None:
            continue
        sc = SquareClass(field.one if parts[1] is None else parts[1])
        if wanted is not None and sc not in wanted:
            continue
        rep = representative(m, o, sc, field)
        classes.append(IsomorphyClass(m, o[0], o, sc, t, rep, predicted))
    return classes


def finite_field_from_size(q):
    f = factorize(q)
    if len(f) != 1:
        raise DomainError(f"{q} is not a prime power")
    (p, r), = f.items()
    return FiniteField(p, r)


def count_classes(m, field):
    """C(m, k).  F_q (an int q is accepted) uses the closed-form divisibility count as stated."""
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    if isinstance(field, int):
        field = finite_field_from_size(field)
    half = euler_phi(m) // 2
    if isinstance(field, AlgClosedSymbolic):
        return ClassCount(1 if m == 2 else half)
    if isinstance(field, RealsSymbolic):
        return ClassCount(2 if m == 2 else half)
    if isinstance(field, Rationals):
        if m == 2:
            return ClassCount(None)
        return ClassCount(len(realizable_classes(m, field)))
    if isinstance(field, FiniteField):
        return ClassCount(_closed_form(m, field.q), CLOSED_FORM_NOTE)
    raise DomainError(f"unsupported field {field!r}")
