"""Standard bases in local polynomial rings.

This implements the tangent cone algorithm: Buchberger's loop driven by a
Mora weak normal form, which is allowed to reduce with earlier partial
results when every reducer would raise the ecart. The orderings are local
(1 is the largest monomial), so leading terms pick out lowest-order parts
and quotient dimensions are counted at the origin.

Everything here is exact. The default coefficient field is the rationals;
a prime field can be substituted for probabilistic speedups, in which case
results are only correct for unexceptional primes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitError
from .poly import Monomial, Polynomial, parse_poly, substitute

NEGDEGREVLEX = "negdegrevlex"
NEGDEGLEX = "negdeglex"

DEFAULT_MAX_STEPS = 10**6

#: Bits of numerator plus denominator above which a rational Mora run is
#: declared swollen. Well-behaved reductions stay orders of magnitude
#: below this; runs that reach it are compounding heights multiplicatively
#: and would otherwise grind for hours inside single arithmetic operations.
_HEIGHT_CAP = 100_000

#: Sentinel for an infinite-dimensional quotient.
INFINITE = float("inf")


@dataclass(frozen=True)
class LocalOrdering:
    """A local monomial ordering on a fixed variable sequence."""

    kind: str = NEGDEGREVLEX
    variables: tuple = ()

    def __post_init__(self):
        if self.kind not in (NEGDEGREVLEX, NEGDEGLEX):
            raise ValueError(f"unknown ordering kind {self.kind!r}")

    def key(self, exp: tuple):
        """Sort key: larger key means larger monomial (1 is largest)."""
        if self.kind == NEGDEGREVLEX:
            return (-sum(exp), tuple(-e for e in reversed(exp)))
        return (-sum(exp), exp)


@dataclass(frozen=True)
class IdealPresentation:
    """An ordered list of generators in a declared ring."""

    ring: tuple
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            for v in g.ring:
                if g.degree_in(v) > 0 and v not in self.ring:
                    raise ValueError(f"generator uses {v!r} outside ring {self.ring}")


def ideal(ring, *gens) -> IdealPresentation:
    ring = tuple(ring)
    polys = tuple(g if isinstance(g, Polynomial) else parse_poly(g, ring) for g in gens)
    return IdealPresentation(ring, polys)


# ---------------------------------------------------------------------------
# Coefficient fields
# ---------------------------------------------------------------------------


class RationalField:
    name = "rational"

    @staticmethod
    def convert(c: Fraction):
        return c


RATIONAL = RationalField()


def _is_probable_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def prime_field(p: int):
    """Coefficient field Z/p for a word-sized prime p."""
    if not _is_probable_prime(p):
        raise ValueError(f"{p} is not prime")

    class Element:
        __slots__ = ("v",)

        def __init__(self, v):
            self.v = v % p

        def __add__(self, other):
            return Element(self.v + other.v)

        def __sub__(self, other):
            return Element(self.v - other.v)

        def __mul__(self, other):
            return Element(self.v * other.v)

        def __truediv__(self, other):
            return Element(self.v * pow(other.v, p - 2, p))

        def __neg__(self):
            return Element(-self.v)

        def __bool__(self):
            return self.v != 0

        def __eq__(self, other):
            return isinstance(other, Element) and self.v == other.v

        def __repr__(self):
            return f"{self.v} (mod {p})"

    class Field:
        name = f"fp:{p}"
        modulus = p

        @staticmethod
        def convert(c: Fraction):
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return Element(c.numerator * pow(den, p - 2, p))

    return Field()


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


class _EPoly:
    __slots__ = ("d", "lm", "lc", "maxdeg")

    def __init__(self, d, lm, lc, maxdeg):
        self.d = d
        self.lm = lm
        self.lc = lc
        self.maxdeg = maxdeg

    @property
    def ecart(self):
        return self.maxdeg - sum(self.lm)


def _divides(a: tuple, b: tuple) -> bool:
    for ai, bi in zip(a, b):
        if ai > bi:
            return False
    return True


class _Engine:
    """Mora's tangent cone algorithm over an abstract coefficient field.

    With truncate set to a degree bound D, every polynomial is reduced
    modulo monomials of degree > D, i.e. the computation happens in
    O/m^(D+1). That is exact for the ideal I + m^(D+1): the S-pairs
    against the implicit m^(D+1) generators consist entirely of terms of
    degree > D and vanish under truncation, so they never need forming.
    Truncation bounds degrees but not rational coefficient heights:
    reductions against earlier partial remainders can add the heights of
    both operands, which compounds exponentially down a reduction chain
    and content stripping does not help because the swollen coefficients
    are typically coprime. The height guard in make() turns such runs
    into a resource error instead of an unbounded grind; colength avoids
    the issue altogether by certifying through linear algebra.
    """

    def __init__(self, ordering: LocalOrdering, field, max_steps: int, truncate=None):
        self.ordering = ordering
        self.field = field
        self.max_steps = max_steps
        self.truncate = truncate
        self.steps = 0
        self._keys = {}

    def key(self, exp):
        k = self._keys.get(exp)
        if k is None:
            k = self._keys[exp] = self.ordering.key(exp)
        return k

    def make(self, d):
        if self.truncate is not None:
            d = {e: c for e, c in d.items() if sum(e) <= self.truncate}
        if not d:
            return None
        if self.field is RATIONAL:
            for c in d.values():
                if c.numerator.bit_length() + c.denominator.bit_length() > _HEIGHT_CAP:
                    raise ResourceLimitError(
                        f"rational coefficient height exceeded {_HEIGHT_CAP} bits"
                    )
        lm = max(d, key=self.key)
        maxdeg = max(sum(e) for e in d)
        return _EPoly(d, lm, d[lm], maxdeg)

    def primitive(self, d):
        """Rescale to integer coefficients with content 1 (rationals only)."""
        if self.field is not RATIONAL or not d:
            return d
        den = 1
        for c in d.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in d.values():
            num = math.gcd(num, c.numerator * (den // c.denominator))
        if num in (0, 1) and den == 1:
            return d
        scale = Fraction(den, num)
        return {e: c * scale for e, c in d.items()}

    def reduce_step(self, h: _EPoly, g: _EPoly):
        factor = h.lc / g.lc
        shift = tuple(a - b for a, b in zip(h.lm, g.lm))
        d = dict(h.d)
        for exp, c in g.d.items():
            e2 = tuple(a + b for a, b in zip(exp, shift))
            nc = d.get(e2)
            nc = -factor * c if nc is None else nc - factor * c
            if nc:
                d[e2] = nc
            else:
                d.pop(e2, None)
        self.steps += 1
        if self.steps > self.max_steps:
            raise ResourceLimitError(f"reduction budget of {self.max_steps} steps exhausted")
        # Strip content every step: letting numerators grow across steps
        # makes single reductions arbitrarily expensive, and the step
        # budget only bounds time if each step has bounded cost.
        return self.make(self.primitive(d))

    def normal_form(self, h, basis):
        """Mora weak normal form of h against basis; None means reduced to 0."""
        if h is None:
            return None
        local = []
        while h is not None:
            best = None
            for g in basis:
                if _divides(g.lm, h.lm) and (best is None or g.ecart < best.ecart):
                    best = g
            for g in local:
                if _divides(g.lm, h.lm) and (best is None or g.ecart < best.ecart):
                    best = g
            if best is None:
                return h
            if best.ecart > h.ecart:
                local.append(h)
            h = self.reduce_step(h, best)
        return None

    def spoly(self, f: _EPoly, g: _EPoly):
        u = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
        sf = tuple(a - b for a, b in zip(u, f.lm))
        sg = tuple(a - b for a, b in zip(u, g.lm))
        d = {}
        inv_f = f.lc
        for exp, c in f.d.items():
            d[tuple(a + b for a, b in zip(exp, sf))] = c / inv_f
        inv_g = g.lc
        for exp, c in g.d.items():
            e2 = tuple(a + b for a, b in zip(exp, sg))
            nc = d.get(e2)
            nc = -c / inv_g if nc is None else nc - c / inv_g
            if nc:
                d[e2] = nc
            else:
                d.pop(e2, None)
        return self.make(d)

    def basis(self, gens_dicts):
        zero_exp = None
        B = []
        for d in gens_dicts:
            p = self.make(self.primitive(d))
            if p is not None:
                if zero_exp is None:
                    zero_exp = (0,) * len(p.lm)
                B.append(p)
        if not B:
            return []
        if any(g.lm == zero_exp for g in B):
            one = self.field.convert(Fraction(1))
            return [_EPoly({zero_exp: one}, zero_exp, one, 0)]

        pairs = []
        for i in range(len(B)):
            for j in range(i):
                u = tuple(max(a, b) for a, b in zip(B[i].lm, B[j].lm))
                pairs.append((sum(u), u, j, i))
        pairs.sort()

        while pairs:
            _, _, i, j = pairs.pop(0)
            h = self.normal_form(self.spoly(B[i], B[j]), B)
            if h is None:
                continue
            h = self.make(self.primitive(h.d))
            if h.lm == zero_exp:
                one = self.field.convert(Fraction(1))
                return [_EPoly({zero_exp: one}, zero_exp, one, 0)]
            B.append(h)
            k = len(B) - 1
            for i in range(k):
                u = tuple(max(a, b) for a, b in zip(B[i].lm, B[k].lm))
                pairs.append((sum(u), u, i, k))
            pairs.sort()

        # minimal basis: drop elements whose leading monomial is divisible
        # by another kept leading monomial, preferring low degree
        B.sort(key=lambda g: (sum(g.lm), g.lm))
        kept = []
        for g in B:
            if not any(_divides(other.lm, g.lm) for other in kept):
                kept.append(g)
        for g in kept:
            inv = g.lc
            g.d = {e: c / inv for e, c in g.d.items()}
            g.lc = g.d[g.lm]
        return kept


def _resolve(I: IdealPresentation, ordering):
    if ordering is None:
        ordering = LocalOrdering(NEGDEGREVLEX, I.ring)
    elif not ordering.variables:
        ordering = LocalOrdering(ordering.kind, I.ring)
    if sorted(ordering.variables) != sorted(I.ring):
        raise ValueError("ordering variables must match the ideal's ring")
    return ordering


def _to_exp_dict(p: Polynomial, variables, field):
    d = {}
    for mono, coeff in p.terms.items():
        c = field.convert(coeff)
        if c:  # coefficients can vanish under reduction mod p
            d[tuple(mono.exponent(v) for v in variables)] = c
    return d


def _from_exp_dict(d, variables, ring):
    terms = {}
    for exp, coeff in d.items():
        mono = Monomial({v: e for v, e in zip(variables, exp)})
        terms[mono] = coeff if isinstance(coeff, Fraction) else Fraction(coeff.v)
    return Polynomial(ring, terms)


def standard_basis(
    I: IdealPresentation,
    ordering: LocalOrdering | None = None,
    field=RATIONAL,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> IdealPresentation:
    """Minimal standard basis of I, monic and deterministically sorted."""
    ordering = _resolve(I, ordering)
    engine = _Engine(ordering, field, max_steps)
    dicts = [_to_exp_dict(g, ordering.variables, field) for g in I.gens]
    basis = engine.basis(dicts)
    polys = tuple(_from_exp_dict(g.d, ordering.variables, I.ring) for g in basis)
    return IdealPresentation(I.ring, polys)


def _leading_exps(I, ordering, field, max_steps):
    ordering = _resolve(I, ordering)
    engine = _Engine(ordering, field, max_steps)
    dicts = [_to_exp_dict(g, ordering.variables, field) for g in I.gens]
    return [g.lm for g in engine.basis(dicts)], ordering


def leading_monomials(I, ordering=None, field=RATIONAL, max_steps=DEFAULT_MAX_STEPS):
    lms, ordering = _leading_exps(I, ordering, field, max_steps)
    return tuple(Monomial({v: e for v, e in zip(ordering.variables, exp)}) for exp in lms)


def _staircase_count(lms, nvars):
    zero_exp = (0,) * nvars
    if any(lm == zero_exp for lm in lms):
        return 0
    for i in range(nvars):
        if not any(all(e == 0 for j, e in enumerate(lm) if j != i) for lm in lms):
            return INFINITE
    exp = [0] * nvars
    count = 0

    def in_ideal():
        t = tuple(exp)
        return any(_divides(lm, t) for lm in lms)

    def walk(i):
        nonlocal count
        if i == nvars:
            count += 1
            return
        e = 0
        while True:
            exp[i] = e
            if in_ideal():
                break
            walk(i + 1)
            e += 1
        exp[i] = 0

    if not lms:
        return INFINITE if nvars else 1
    walk(0)
    return count


def _truncated_staircase(lms, nvars, bound):
    """Monomials of degree <= bound outside the monomial ideal (lms).

    Returns (count, highest degree seen). If the highest degree stays
    strictly below the bound, the degree-bound piece of the quotient is
    empty, so m^bound lies in the ideal by Nakayama and the count is the
    exact colength of the untruncated ideal.
    """
    if nvars == 0:
        return (0, -1) if any(lm == () for lm in lms) else (1, 0)
    exp = [0] * nvars
    count = 0
    maxdeg = -1

    def walk(i, used):
        nonlocal count, maxdeg
        if i == nvars:
            count += 1
            if used > maxdeg:
                maxdeg = used
            return
        e = 0
        while used + e <= bound:
            exp[i] = e
            t = tuple(exp)
            if any(_divides(lm, t) for lm in lms):
                break
            walk(i + 1, used + e)
            e += 1
        exp[i] = 0

    walk(0, 0)
    return count, maxdeg


def _exponents_up_to(nv, maxdeg):
    """All exponent tuples in nv variables of total degree at most maxdeg."""
    if maxdeg < 0:
        return
    if nv == 0:
        yield ()
        return
    for head in range(maxdeg + 1):
        for tail in _exponents_up_to(nv - 1, maxdeg - head):
            yield (head,) + tail


def _exponents_of_degree(nv, deg):
    if nv == 0:
        if deg == 0:
            yield ()
        return
    for head in range(deg + 1):
        for tail in _exponents_of_degree(nv - 1, deg - head):
            yield (head,) + tail


def _artinian_dims(J, bound, field):
    """Dimension data of O/(J + m^(bound+1)) by sparse row reduction.

    Returns (dim, sealed). dim is the vector-space dimension of the
    truncated quotient: monomials of degree <= bound minus the rank of
    the span of all truncated monomial multiples of the generators,
    which is exactly the image of J because every unit of the truncated
    ring is itself a polynomial image. sealed reports that every
    monomial of degree exactly bound lies in that span; then m^bound is
    contained in J + m^(bound+1), Nakayama pushes m^bound into J, and
    dim is the exact colength of J.

    Row reduction in a fixed finite-dimensional space keeps rational
    heights polynomial (entries are quotients of minors of the input),
    unlike iterated Mora normal forms whose heights can compound
    exponentially, so this is the preferred exact route over Q.
    """
    nv = len(J.ring)
    one = field.convert(Fraction(1))
    pivots = {}

    def reduce_row(v):
        # Stored rows never contain pivot columns created before their
        # own insertion, so clearing the earliest-created pivot present
        # strictly raises that minimum and the loop terminates.
        while v:
            lead = None
            for e in v:
                slot = pivots.get(e)
                if slot is not None and (lead is None or slot[0] < lead[1][0]):
                    lead = (e, slot)
            if lead is None:
                break
            e, (_, prow) = lead
            f = v.pop(e)
            for ee, cc in prow.items():
                if ee == e:
                    continue
                nc = v.get(ee)
                nc = -f * cc if nc is None else nc - f * cc
                if nc:
                    v[ee] = nc
                else:
                    v.pop(ee, None)
        return v

    for g in J.gens:
        d = _to_exp_dict(g, J.ring, field)
        if not d:
            continue
        mindeg = min(sum(e) for e in d)
        shifts = sorted(_exponents_up_to(nv, bound - mindeg), key=lambda s: (sum(s), s))
        for shift in shifts:
            row = {}
            for e, c in d.items():
                s = tuple(a + b for a, b in zip(e, shift))
                if sum(s) <= bound:
                    row[s] = c
            row = reduce_row(row)
            if row:
                lead = min(row, key=lambda e: (sum(e), e))
                inv = one / row[lead]
                pivots[lead] = (len(pivots), {e: c * inv for e, c in row.items()})

    dim = math.comb(bound + nv, nv) - len(pivots)
    sealed = all(not reduce_row({e: one}) for e in _exponents_of_degree(nv, bound))
    return dim, sealed


#: Monomial count above which an Artinian elimination is not attempted.
_CELL_LIMIT = 20000

#: Cheap-probe cell budget: large enough to seal most finite quotients
#: met in practice, small enough to waste only milliseconds elsewhere.
_PROBE_CELLS = 1500


def _artinian_ladder(J, field, cap, cell_limit=_CELL_LIMIT):
    """Colength by certified elimination up a degree ladder, or None.

    Runs _artinian_dims at growing degree bounds until a run seals its
    top degree, stopping once a bound's monomial count exceeds the cell
    budget. cap, when given, is a degree at which a zero-dimensional
    quotient must seal (m^cap lies in J whenever colength(J) <= cap), so
    the ladder stops there. None means no ladder step certified, which
    covers every infinite-colength ideal.
    """
    nv = len(J.ring)
    D = 2
    while True:
        if cap is not None:
            D = min(D, cap)
        if math.comb(D + nv, nv) > cell_limit:
            return None
        dim, sealed = _artinian_dims(J, D, field)
        if sealed:
            return dim
        if cap is not None and D >= cap:
            return None
        D += max(1, D // 2)


_QUICK_MORA_STEPS = 20000
_GUIDE_PRIMES = (2147483647, 2147483629, 2147483587)
_FIELDS = {}


def _guide_field(p):
    if p not in _FIELDS:
        _FIELDS[p] = prime_field(p)
    return _FIELDS[p]


def _truncated_colength(J, ordering, field, bound, max_steps):
    ordering = _resolve(J, ordering)
    engine = _Engine(ordering, field, max_steps, truncate=bound)
    dicts = [_to_exp_dict(g, ordering.variables, field) for g in J.gens]
    basis = engine.basis(dicts)
    return _truncated_staircase([g.lm for g in basis], len(J.ring), bound)


def _exact_colength(J, ordering, field, max_steps):
    """Colength over one fixed field, exact for that field.

    A cheap Artinian probe settles most finite quotients outright; Mora
    with a modest step budget then handles infinite answers and whatever
    the probe could not afford. The stubborn remainder goes through the
    full-budget ladder and finally full Mora, which is the only route
    that certifies an infinite colength.
    """
    count = _artinian_ladder(J, field, None, _PROBE_CELLS)
    if count is not None:
        return count
    try:
        lms, _ = _leading_exps(J, ordering, field, min(_QUICK_MORA_STEPS, max_steps))
        return _staircase_count(lms, len(J.ring))
    except ResourceLimitError:
        if max_steps <= _QUICK_MORA_STEPS:
            raise
    count = _artinian_ladder(J, field, None)
    if count is not None:
        return count
    lms, _ = _leading_exps(J, ordering, field, max_steps)
    return _staircase_count(lms, len(J.ring))


def colength(
    I: IdealPresentation,
    ordering: LocalOrdering | None = None,
    field=RATIONAL,
    max_steps: int = DEFAULT_MAX_STEPS,
):
    """Dimension of the local quotient ring by I; INFINITE when unbounded.

    Unit ideals have colength 0. The presentation is first simplified by
    splitting off variables a generator cuts transversally, which leaves
    the quotient unchanged.

    Everything returned is exact for the requested field. Over the
    rationals a cheap Artinian elimination probe, certified by Nakayama,
    settles most finite quotients outright. After that a prime-field
    pass steers the exact computation: ranks can only drop modulo p, so
    a finite prime-field colength bounds the rational one from above,
    and rational eliminations up a degree ladder capped at that bound
    are then certified the same way. Infinite answers are always
    certified by a full rational standard basis. Bad primes cost time,
    never correctness.
    """
    if any(g.constant_term() for g in I.gens):
        return 0
    J, _ = eliminate_linear_generators(I)
    nvars = len(J.ring)
    if ordering is not None and len(ordering.variables or ()) != nvars:
        kept = tuple(v for v in (ordering.variables or I.ring) if v in J.ring)
        ordering = LocalOrdering(ordering.kind, kept)
    if not any(not g.is_zero for g in J.gens):
        return INFINITE if nvars else 1
    if field is not RATIONAL:
        return _exact_colength(J, ordering, field, max_steps)

    count = _artinian_ladder(J, RATIONAL, None, _PROBE_CELLS)
    if count is not None:
        return count

    guide = None
    infinite_votes = 0
    for p in _GUIDE_PRIMES:
        try:
            g = _exact_colength(J, ordering, _guide_field(p), max_steps)
        except (ZeroDivisionError, ResourceLimitError):
            continue
        if g is not INFINITE:
            guide = g
            break
        infinite_votes += 1
        if infinite_votes == 2:
            break

    if guide is not None:
        bound = max(guide, 1)
        count = _artinian_ladder(J, RATIONAL, bound)
        if count is not None:
            return count
        # reachable only for a cell budget overflow or an unsound guide;
        # the truncated Mora certificate is the safety net
        count, maxdeg = _truncated_colength(J, ordering, RATIONAL, bound, max_steps)
        if maxdeg < bound:
            return count
    lms, _ = _leading_exps(J, ordering, RATIONAL, max_steps)
    return _staircase_count(lms, nvars)


def is_unit_ideal(I: IdealPresentation) -> bool:
    """Whether I is the whole local ring.

    A generator with nonzero value at the origin is invertible in the local
    ring; conversely if every generator vanishes at the origin the ideal
    sits inside the maximal ideal. No basis computation is needed.
    """
    return any(g.constant_term() for g in I.gens)


def in_ideal(
    p: Polynomial,
    I: IdealPresentation,
    ordering: LocalOrdering | None = None,
    field=RATIONAL,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> bool:
    """Local ideal membership, decided by Mora normal form against a standard basis."""
    ordering = _resolve(I, ordering)
    engine = _Engine(ordering, field, max_steps)
    dicts = [_to_exp_dict(g, ordering.variables, field) for g in I.gens]
    basis = engine.basis(dicts)
    h = engine.make(_to_exp_dict(p.with_ring(I.ring), ordering.variables, field))
    return engine.normal_form(h, basis) is None


def _fraction_det(rows):
    n = len(rows)
    m = [list(map(Fraction, row)) for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def random_invertible_matrix(size: int, rng: random.Random):
    """Invertible matrix with small random rational entries."""
    while True:
        rows = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 2)) for _ in range(size)]
            for _ in range(size)
        ]
        if _fraction_det(rows):
            return rows


def generic_linear_change(I: IdealPresentation, seed: int) -> IdealPresentation:
    """Apply a seeded random invertible linear change of coordinates.

    Seed 0 is the identity, by convention.
    """
    if seed == 0 or not I.ring:
        return I
    rng = random.Random(seed)
    rows = random_invertible_matrix(len(I.ring), rng)
    images = {}
    for i, var in enumerate(I.ring):
        value = Polynomial.zero(I.ring)
        for j, w in enumerate(I.ring):
            value = value + Polynomial.variable(w, I.ring) * rows[i][j]
        images[var] = value
    gens = tuple(substitute(g.with_ring(I.ring), images).with_ring(I.ring) for g in I.gens)
    return IdealPresentation(I.ring, gens)


def eliminate_linear_generators(I: IdealPresentation):
    """Split off variables that a generator cuts out transversally.

    Whenever some generator has the shape c*v + r with c a nonzero constant
    and v absent from r, the germ is isomorphic to the one presented by the
    remaining generators with v replaced by -r/c. Colengths, unit-ness and
    Milnor numbers are all preserved. Returns the reduced presentation and
    an audit list. Generators must vanish at the origin.
    """
    ring = list(I.ring)
    gens = [g.with_ring(tuple(ring)) for g in I.gens]
    audit = []
    while True:
        found = None
        for gi, g in enumerate(gens):
            if g.is_zero:
                continue
            for var in ring:
                if g.degree_in(var) != 1:
                    continue
                coeffs = g.coefficients_in(var)
                c1 = coeffs.get(1)
                if c1 is None or c1.degree() != 0:
                    continue
                found = (gi, var, c1.constant_term(), coeffs.get(0))
                break
            if found:
                break
        if not found:
            break
        gi, var, c, rest = found
        new_ring = tuple(v for v in ring if v != var)
        if rest is None or rest.is_zero:
            value = Polynomial.zero(new_ring)
        else:
            value = (rest * (Fraction(-1) / c)).with_ring(new_ring)
        audit.append({"variable": var, "generator": str(gens[gi])})
        gens = [
            substitute(h, {var: value}).with_ring(new_ring)
            for hi, h in enumerate(gens)
            if hi != gi
        ]
        ring = list(new_ring)
    return IdealPresentation(tuple(ring), tuple(gens)), audit
