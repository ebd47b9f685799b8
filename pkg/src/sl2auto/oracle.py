"""Brute-force ground truth over small prime fields.

Matrices are plain 4-tuples ``(a, b, c, d)`` of ints in ``[0, p)``.  A
"twisted" tuple M stands for ``sqrt(ns) * M`` with ``det M = ns^-1``.  This
module does its own modular arithmetic.  It never calls the closed-form
classification except to compare against it.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .classify import count_classes, is_isomorphic, realizable_classes
from .exactfield import DomainError, FiniteField, PrimeFieldElem, euler_phi, least_nonresidue
from .exactfield.numtheory import factorize
from .sl2core import InvariantViolation, Mat2, Sl2Rep

PURE = "pure"
TWISTED = "twisted"


@dataclass(frozen=True)
class EnumerationDomain:
    p: int
    variant: str = PURE

    def __post_init__(self):
        FiniteField(self.p)  # validates p
        if self.variant not in (PURE, TWISTED):
            raise DomainError(f"variant must be {PURE!r} or {TWISTED!r}")

    @property
    def ns(self):
        return least_nonresidue(self.p)

    @property
    def det(self):
        return 1 if self.variant == PURE else pow(self.ns, -1, self.p)

    def matrices(self):
        p, det = self.p, self.det
        return [(a, b, c, d) for a, b, c, d in product(range(p), repeat=4) if (a * d - b * c) % p == det]


def _mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _neg(x, p):
    return tuple(-v % p for v in x)


def _scale(x, s, p):
    return tuple(v * s % p for v in x)


def _inverse(x, p):
    a, b, c, d = x
    inv = pow((a * d - b * c) % p, -1, p)
    return (d * inv % p, -b * inv % p, -c * inv % p, a * inv % p)


def _conj(q, qinv, x, p):
    return _mul(_mul(qinv, x, p), q, p)


def raw_inner_order(x, p, variant=PURE):
    """Least m with ``A^m = +-I``, returned as ``(m, sign)``; brute force by repeated multiplication.

    For a twisted tuple, ``A^j = ns^(j/2) * M^j`` when j is even and is never
    scalar when j is odd.
    """
    ident, minus = (1, 0, 0, 1), (p - 1, 0, 0, p - 1)
    ns = least_nonresidue(p)
    power, j = x, 1
    bound = 2 * p * (p * p - 1)
    while j <= bound:
        if variant == PURE:
            image = power
        else:
            image = _scale(power, pow(ns, j // 2, p), p) if j % 2 == 0 else None
        if image == ident:
            return j, 1
        if image == minus:
            return j, -1
        power = _mul(power, x, p)
        j += 1
    raise InvariantViolation(f"{x} has no finite order mod {p}")  # impossible in a finite group


def is_exceptional_raw(x, p, variant=PURE):
    """Trace +-2 and not +-I.  A twisted matrix never qualifies: its trace lies in F_p*sqrt(ns)."""
    if variant == TWISTED:
        return False
    t = (x[0] + x[3]) % p
    scalar = x[1] == 0 and x[2] == 0 and x[0] == x[3]
    return t in (2, p - 2) and not scalar


def enumerate_finite_order(domain, m_max):
    """Bucket every matrix of ``domain`` by inner order, keeping orders ``<= m_max``."""
    buckets = {}
    for x in domain.matrices():
        m, _ = raw_inner_order(x, domain.p, domain.variant)
        if m <= m_max:
            buckets.setdefault(m, []).append(x)
    return buckets


def _primitive_root(p):
    primes = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in primes):
            return g
    return 1  # p = 3 reaches here only if 2 fails, which it does not


def gl2_generators(p):
    """``diag(g, 1)``, an upper transvection and the swap; together they generate GL(2, p)."""
    return [(_primitive_root(p), 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 0)]


def gl2_elements(p):
    return [x for x in product(range(p), repeat=4) if (x[0] * x[3] - x[1] * x[2]) % p]


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


@dataclass
class OrbitPartition:
    """Orbits under ``X -> Q^-1 X Q`` (Q in GL(2, p)) together with ``X -> -X``."""

    orbits: list
    _index: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.orbits = sorted((frozenset(o) for o in self.orbits), key=min)
        self._index = {x: i for i, o in enumerate(self.orbits) for x in o}

    def orbit_index(self, x):
        return self._index[x]

    def same_orbit(self, x, y):
        return self._index[x] == self._index[y]

    def __len__(self):
        return len(self.orbits)


def _partition_by_generators(items, p):
    gens = [(q, _inverse(q, p)) for q in gl2_generators(p)]
    uf = UnionFind(items)
    for x in items:
        neg = _neg(x, p)
        if neg not in uf.parent:
            raise DomainError("matrix set is not closed under negation")
        uf.union(x, neg)
        for q, qinv in gens:
            y = _conj(q, qinv, x, p)
            if y not in uf.parent:
                raise DomainError("matrix set is not closed under GL(2, p)-conjugation")
            uf.union(x, y)
    return uf.groups()


def _partition_by_full_action(items, p):
    group = [(q, _inverse(q, p)) for q in gl2_elements(p)]
    remaining, orbits = set(items), []
    for x in items:
        if x not in remaining:
            continue
        orbit = set()
        for q, qinv in group:
            y = _conj(q, qinv, x, p)
            orbit.add(y)
            orbit.add(_neg(y, p))
        if not orbit <= set(items):
            raise DomainError("matrix set is not closed under GL(2, p)-conjugation and negation")
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def orbit_partition(matrices, p, method="generators", self_check=True):
    """Exact orbit partition of a conjugation- and negation-closed set of tuples.

    The default closes over three generators of GL(2, p) with union-find.  For
    ``p <= 5`` it is also recomputed with the full group action when
    ``self_check`` is set, and any mismatch raises ``InvariantViolation``.
    """
    items = list(dict.fromkeys(matrices))
    if method == "full":
        return OrbitPartition(_partition_by_full_action(items, p))
    part = OrbitPartition(_partition_by_generators(items, p))
    if self_check and p <= 5:
        full = OrbitPartition(_partition_by_full_action(items, p))
        if set(part.orbits) != set(full.orbits):
            raise InvariantViolation(f"generator closure disagrees with the full GL(2, {p}) action")
    return part


# ---------------------------------------------------------------- checks


def _fp2_mul(x, y, p, ns):
    a, b = x
    c, d = y
    return ((a * c + b * d * ns) % p, (a * d + b * c) % p)


def verify_eigenpair_count(m, p):
    """Count unordered ``{lam, lam^-1}`` in F_{p^2} whose diagonal matrix has inner order m."""
    if m < 2 or (p * p - 1) % (2 * m):
        raise DomainError(f"need 2m | p^2 - 1, got m={m}, p={p}")
    ns = least_nonresidue(p)
    one, minus = (1, 0), (p - 1, 0)
    hits = 0
    for lam in product(range(p), repeat=2):
        if lam == (0, 0):
            continue
        power, j = lam, 1
        while power not in (one, minus):
            power = _fp2_mul(power, lam, p, ns)
            j += 1
        if j == m:
            hits += 1
    return hits // 2


def _as_rep(x, field, variant):
    m = Mat2(*(PrimeFieldElem._raw(v, field.p) for v in x))
    alpha = None if variant == PURE else PrimeFieldElem._raw(least_nonresidue(field.p), field.p)
    return Sl2Rep(m, field, alpha)


def verify_trace_criterion(p, max_counterexamples=20):
    """Compare ``is_isomorphic`` with orbit co-membership on all pairs in each entry class.

    Returns ``(ok, counterexamples)``.
    """
    field = FiniteField(p)
    bad = []
    total_bad = 0
    for variant in (PURE, TWISTED):
        dom = EnumerationDomain(p, variant)
        mats = dom.matrices()
        part = orbit_partition(mats, p)
        reps = [_as_rep(x, field, variant) for x in mats]
        for i in range(len(mats)):
            for j in range(i, len(mats)):
                truth = part.same_orbit(mats[i], mats[j])
                if truth != is_isomorphic(reps[i], reps[j]):
                    total_bad += 1
                    if len(bad) < max_counterexamples:
                        bad.append((variant, mats[i], mats[j], truth))
    return total_bad == 0, bad


# ---------------------------------------------------------------- report


def _witness(orbit, p, variant, exceptional):
    det = 1 if variant == PURE else pow(least_nonresidue(p), -1, p)
    if exceptional and (1, 1, 0, 1) in orbit:
        return (1, 1, 0, 1)
    companions = sorted(x for x in orbit if x[0] == 0 and x[1] == 1 and x[2] == (-det) % p)
    return companions[0] if companions else min(orbit)


@dataclass(frozen=True)
class Witness:
    kind: str
    matrix: tuple
    variant: str
    p: int

    @property
    def signed(self):
        """Entries as representatives in ``(-p/2, p/2)``."""
        return tuple(v - self.p if v > self.p // 2 else v for v in self.matrix)

    def to_json(self):
        out = {"kind": self.kind, "entries": [str(v) for v in self.signed]}
        out["tag"] = "pure" if self.variant == PURE else {"sqrt": str(least_nonresidue(self.p))}
        return out

    def __str__(self):
        a, b, c, d = self.signed
        body = f"[[{a},{b}],[{c},{d}]]"
        return body if self.variant == PURE else f"sqrt({least_nonresidue(self.p)})*{body}"


@dataclass(frozen=True)
class OrderResult:
    m: int
    oracle_semisimple: int
    oracle_exceptional: int
    closed_form: int
    realizable: int
    witnesses: tuple

    @property
    def agree(self):
        return self.oracle_semisimple == self.closed_form

    def to_json(self):
        return {
            "m": self.m,
            "oracle_semisimple": self.oracle_semisimple,
            "oracle_exceptional": self.oracle_exceptional,
            "paper": self.closed_form,
            "agree": self.agree,
            "witnesses": [w.to_json() for w in self.witnesses],
            "oracle_total": self.oracle_semisimple + self.oracle_exceptional,
            "realizable": self.realizable,
        }


@dataclass(frozen=True)
class VerifyReport:
    p: int
    results: tuple
    eigenpair_counts: tuple
    trace_criterion: object = None  # None when not checked, else (ok, n_counterexamples)
    mixed_entry_classes: tuple = ()  # orders m > 2 whose orbits use both entry classes

    @property
    def all_agree(self):
        return all(r.agree for r in self.results)

    def result(self, m):
        return next(r for r in self.results if r.m == m)

    def to_json(self):
        tc = {"checked": False} if self.trace_criterion is None else {
            "checked": True, "agree": self.trace_criterion[0], "counterexamples": self.trace_criterion[1]}
        return {
            "p": self.p,
            "results": [r.to_json() for r in self.results],
            "eigenpair_counts": [{"m": m, "oracle": n, "phi": phi} for m, n, phi in self.eigenpair_counts],
            "trace_criterion": tc,
            "single_entry_class": {"agree": not self.mixed_entry_classes, "violations": list(self.mixed_entry_classes)},
        }

    def to_text(self):
        header = ("m", "semisimple", "exceptional", "closed_form", "realizable", "status", "witnesses")
        rows = [header]
        for r in self.results:
            rows.append((str(r.m), str(r.oracle_semisimple), str(r.oracle_exceptional), str(r.closed_form),
                         str(r.realizable), "agree" if r.agree else "DIVERGE",
                         " ".join(f"{w.kind[0]}:{w}" for w in r.witnesses) or "-"))
        widths = [max(len(row[i]) for row in rows) for i in range(len(header) - 1)]
        lines = [f"verify p={self.p}"]
        for row in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[-1])
        for m, n, phi in self.eigenpair_counts:
            lines.append(f"eigenpairs m={m}: oracle {n}, phi(m) {phi}, {'ok' if n == phi else 'MISMATCH'}")
        if self.trace_criterion is None:
            lines.append("trace criterion: not checked (p > 7)")
        else:
            ok, n = self.trace_criterion
            lines.append(f"trace criterion: {'ok' if ok else 'FAILED'} ({n} counterexamples)")
        if self.mixed_entry_classes:
            lines.append(f"one entry class per order m > 2: FAILED at m = {list(self.mixed_entry_classes)}")
        else:
            lines.append("one entry class per order m > 2: ok")
        return "\n".join(lines)


def oracle_classes(p, m_max):
    """Per order m: the eigenpair-type and exceptional orbits as ``(variant, orbit)`` lists."""
    semisimple, exceptional = {}, {}
    for variant in (PURE, TWISTED):
        dom = EnumerationDomain(p, variant)
        buckets = enumerate_finite_order(dom, m_max)
        for m, mats in buckets.items():
            for orbit in orbit_partition(mats, p).orbits:
                x = min(orbit)
                target = exceptional if is_exceptional_raw(x, p, variant) else semisimple
                target.setdefault(m, []).append((variant, orbit))
    return semisimple, exceptional


def verify_report(p, m_max, check_trace_criterion=None):
    """Oracle class counts next to the closed-form F_p count for ``2 <= m <= m_max``."""
    if m_max < 2:
        raise DomainError("m_max must be at least 2")
    field = FiniteField(p)
    semisimple, exceptional = oracle_classes(p, m_max)
    results, mixed = [], []
    for m in range(2, m_max + 1):
        variants = {v for v, _ in semisimple.get(m, []) + exceptional.get(m, [])}
        if m > 2 and len(variants) > 1:
            mixed.append(m)
        wit = []
        for kind, found in (("semisimple", semisimple.get(m, [])), ("exceptional", exceptional.get(m, []))):
            for variant, orbit in found:
                wit.append(Witness(kind, _witness(orbit, p, variant, kind == "exceptional"), variant, p))
        results.append(OrderResult(
            m=m,
            oracle_semisimple=len(semisimple.get(m, [])),
            oracle_exceptional=len(exceptional.get(m, [])),
            closed_form=count_classes(m, field).finite,
            realizable=len(realizable_classes(m, field)),
            witnesses=tuple(wit),
        ))
    counts = tuple((m, verify_eigenpair_count(m, p), euler_phi(m))
                   for m in range(2, m_max + 1) if (p * p - 1) % (2 * m) == 0)
    if check_trace_criterion is None:
        check_trace_criterion = p <= 7
    tc = None
    if check_trace_criterion:
        ok, bad = verify_trace_criterion(p)
        tc = (ok, len(bad))
    return VerifyReport(p, tuple(results), counts, tc, tuple(mixed))
