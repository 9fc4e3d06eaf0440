"""Valuations in the endomorphism rings that control inseparable degrees.

Three kinds of ring are covered:

* rational integers with the p-adic valuation and its exponent-lifting
  identity v_p(x^n - y^n) = v_p(x - y) + v_p(n);
* imaginary quadratic orders Z[tau] with tau^2 = T*tau - N.  The prime
  above p attached to inseparable isogenies is represented implicitly by a
  Hensel-lifted unit root u of x^2 - T x + N: evaluating a + b*tau at u
  gives the conjugate prime's valuation, and v_frak(x) is recovered as
  v_p(norm(x)) minus that.  Which unit root is "the" one is an orientation
  choice the caller may pin; the default takes the (numerically least)
  unit root.
* the two explicit maximal quaternion orders that occur at p = 2 and
  p = 3: Hurwitz integers in (-1,-1 | Q), and the order with basis
  1, i, (1+j)/2, (i+k)/2 in (-1,-3 | Q).  Elements are stored by doubled
  coordinates, so (a + b i + c j + d k)/2 with the lattice parity
  constraints checked at construction.  On these orders the valuation at
  the unique two-sided maximal ideal above p is v_p of the reduced norm,
  and the exponent lift doubles: v(x^n - y^n) = v(x - y) + 2 v_p(n).
"""

from dataclasses import dataclass

from .errors import (HypothesisViolated, InvalidCombination, Mismatch,
                     PrecisionExhausted, SpecError, ZeroInput)
from .intarith import check_prime, v_p, v_p_strict
from .limits import PADIC_PRECISION_CAP

_DIRECT_CHECK_N_CAP = 32

# -- rational integers -----------------------------------------------------------


def v_p_int(x: int, p: int) -> int:
    """Exact p-adic valuation of a nonzero integer."""
    return v_p_strict(x, p)


def lte_int(x: int, y: int, p: int, n: int) -> int:
    """v_p(x^n - y^n) = v_p(x - y) + v_p(n) under the classical hypotheses."""
    if x % p == 0 or y % p == 0:
        raise HypothesisViolated("x and y must be units mod p")
    if (x - y) % p != 0:
        raise HypothesisViolated("x - y must be divisible by p")
    base = v_p_int(x - y, p) if x != y else None
    if base is None:
        raise HypothesisViolated("x == y makes the identity vacuous")
    if p == 2 and base < 2:
        raise HypothesisViolated("p = 2 requires v_2(x - y) >= 2")
    value = base + v_p(n, p)
    if n <= _DIRECT_CHECK_N_CAP:
        direct = v_p_int(x ** n - y ** n, p)
        if direct != value:
            raise Mismatch(f"integer exponent lift: {value} != direct {direct}")
    return value


# -- imaginary quadratic orders -----------------------------------------------------


@dataclass(frozen=True)
class QuadRing:
    """Z[tau] with tau^2 = trace*tau - norm and negative discriminant."""

    trace: int
    norm: int

    def __post_init__(self):
        if self.trace ** 2 - 4 * self.norm >= 0:
            raise SpecError("ring is not imaginary quadratic")

    @property
    def disc(self):
        return self.trace ** 2 - 4 * self.norm

    def elem(self, a, b=0):
        return QuadElem(self, a, b)

    def one(self):
        return QuadElem(self, 1, 0)

    def zero(self):
        return QuadElem(self, 0, 0)


@dataclass(frozen=True)
class QuadElem:
    """a + b*tau in a QuadRing; exact big-integer coordinates."""

    ring: QuadRing
    a: int
    b: int

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __add__(self, other):
        other = self._coerce(other)
        return QuadElem(self.ring, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        other = self._coerce(other)
        return QuadElem(self.ring, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuadElem(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        T, N = self.ring.trace, self.ring.norm
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadElem(self.ring,
                        a1 * a2 - b1 * b2 * N,
                        a1 * b2 + b1 * a2 + b1 * b2 * T)

    def __pow__(self, n):
        if n < 0:
            raise SpecError("negative powers not defined in the order")
        result = self.ring.one()
        acc = self
        while n:
            if n & 1:
                result = result * acc
            acc = acc * acc
            n >>= 1
        return result

    def conj(self):
        return QuadElem(self.ring, self.a + self.b * self.ring.trace, -self.b)

    def norm(self) -> int:
        T, N = self.ring.trace, self.ring.norm
        return self.a ** 2 + self.a * self.b * T + self.b ** 2 * N

    def trace(self) -> int:
        return 2 * self.a + self.b * self.ring.trace

    def _coerce(self, other):
        if isinstance(other, int):
            return QuadElem(self.ring, other, 0)
        if not isinstance(other, QuadElem) or other.ring != self.ring:
            raise SpecError("mixed quadratic rings")
        return other


@dataclass(frozen=True)
class PrimeContext:
    """Split prime of a quadratic ring, realized by a lifted unit root."""

    ring: QuadRing
    p: int
    unit_root: int       # root of x^2 - T x + N modulo p**precision
    precision: int

    def with_precision(self, precision):
        if precision > PADIC_PRECISION_CAP:
            raise PrecisionExhausted(f"p-adic precision cap {PADIC_PRECISION_CAP} hit")
        return prime_context(self.ring, self.p, precision=precision,
                             unit_root=self.unit_root % self.p)

    @property
    def coroot(self):
        """Residue of tau attached to the inseparable prime itself."""
        return (self.ring.trace - self.unit_root) % self.p


def _quadratic_roots_mod_p(T, N, p):
    if p < 1000:
        return [r for r in range(p) if (r * r - T * r + N) % p == 0]
    # Tonelli-Shanks on the discriminant for large p.
    disc = (T * T - 4 * N) % p
    if disc == 0:
        return [T * pow(2, p - 2, p) % p]
    if pow(disc, (p - 1) // 2, p) != 1:
        return []
    s = _sqrt_mod_p(disc, p)
    inv2 = pow(2, p - 2, p)
    return sorted({(T + s) * inv2 % p, (T - s) * inv2 % p})


def _sqrt_mod_p(a, p):
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def prime_context(ring: QuadRing, p: int, precision: int = 32,
                  unit_root: int | None = None) -> PrimeContext:
    """Build the split-prime context with a Hensel-lifted unit root.

    Requires x^2 - T x + N to have a simple unit root mod p.  When both
    roots are units the orientation is ambiguous; pass unit_root to pin it,
    otherwise the numerically smaller root is chosen.
    """
    check_prime(p)
    roots = _quadratic_roots_mod_p(ring.trace, ring.norm, p)
    simple_units = [r for r in roots
                    if r % p != 0 and (2 * r - ring.trace) % p != 0]
    if not simple_units:
        raise InvalidCombination(
            f"x^2 - {ring.trace}x + {ring.norm} has no simple unit root mod {p}")
    if unit_root is not None:
        if unit_root % p not in simple_units:
            raise InvalidCombination(f"{unit_root} is not a simple unit root mod {p}")
        u = unit_root % p
    else:
        u = min(simple_units)
    modulus = p
    target = p ** precision
    while modulus < target:
        modulus = min(modulus * modulus, target)
        f = (u * u - ring.trace * u + ring.norm) % modulus
        df_inv = pow((2 * u - ring.trace) % modulus, -1, modulus)
        u = (u - f * df_inv) % modulus
    return PrimeContext(ring, p, u, precision)


def v_frak_p(x: QuadElem, ctx: PrimeContext) -> int:
    """Valuation at the oriented split prime: v_p(norm) minus the
    conjugate valuation read off from the unit root."""
    if x.is_zero():
        raise ZeroInput("valuation of zero")
    nv = v_p_int(x.norm(), ctx.p) if x.norm() != 0 else None
    if nv is None:
        raise ZeroInput("norm vanishes only at zero in an imaginary ring")
    work = ctx
    while work.precision <= nv:
        work = work.with_precision(work.precision * 2)
    residue = (x.a + x.b * work.unit_root) % (work.p ** work.precision)
    if residue == 0:
        raise PrecisionExhausted("conjugate valuation unresolved at max precision")
    vbar = v_p(residue, ctx.p)
    vbar = min(vbar, nv)
    return nv - vbar


def lte_quad(x: QuadElem, y: QuadElem, ctx: PrimeContext, n: int) -> int:
    """Exponent lift at a split prime: v(x^n - y^n) = v(x - y) + v_p(n)."""
    if v_frak_p(x, ctx) != 0 or v_frak_p(y, ctx) != 0:
        raise HypothesisViolated("x, y must be units at the prime")
    diff = x - y
    if diff.is_zero():
        raise HypothesisViolated("x == y makes the identity vacuous")
    base = v_frak_p(diff, ctx)
    if base < 1:
        raise HypothesisViolated("x - y must lie in the prime")
    if ctx.p == 2 and base < 2:
        raise HypothesisViolated("p = 2 requires valuation >= 2 of x - y")
    value = base + v_p(n, ctx.p)
    if n <= _DIRECT_CHECK_N_CAP:
        direct = v_frak_p(x ** n - y ** n, ctx)
        if direct != value:
            raise Mismatch(f"quadratic exponent lift: {value} != direct {direct}")
    return value


# -- quaternion orders ----------------------------------------------------------------


@dataclass(frozen=True)
class QuatOrder:
    """One of the two hardcoded maximal orders, tagged by its prime."""

    p: int        # 2 for the Hurwitz order, 3 for the (-1,-3) order
    alpha: int    # i^2
    beta: int     # j^2

    def elem(self, a, b=0, c=0, d=0, halves=False):
        """Element with the given coordinates; doubled unless halves=True
        in which case (a,b,c,d) are already the doubled numerators."""
        if halves:
            return QuatElem(self, a, b, c, d)
        return QuatElem(self, 2 * a, 2 * b, 2 * c, 2 * d)

    def one(self):
        return self.elem(1, 0, 0, 0)

    def zero(self):
        return self.elem(0, 0, 0, 0)


HURWITZ = QuatOrder(2, -1, -1)
B3_ORDER = QuatOrder(3, -1, -3)


@dataclass(frozen=True)
class QuatElem:
    """(a + b i + c j + d k)/2 by doubled integer coordinates."""

    order: QuatOrder
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.order.p == 2:
            # Hurwitz lattice: all four halves share one parity.
            if len({self.a % 2, self.b % 2, self.c % 2, self.d % 2}) != 1:
                raise SpecError("coordinates outside the Hurwitz lattice")
        else:
            # basis 1, i, (1+j)/2, (i+k)/2
            if (self.a - self.c) % 2 or (self.b - self.d) % 2:
                raise SpecError("coordinates outside the p=3 order lattice")

    def is_zero(self):
        return self.a == self.b == self.c == self.d == 0

    def __add__(self, other):
        other = self._coerce(other)
        return QuatElem(self.order, self.a + other.a, self.b + other.b,
                        self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        other = self._coerce(other)
        return QuatElem(self.order, self.a - other.a, self.b - other.b,
                        self.c - other.c, self.d - other.d)

    def __neg__(self):
        return QuatElem(self.order, -self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        other = self._coerce(other)
        al, be = self.order.alpha, self.order.beta
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        e = a1 * a2 + al * b1 * b2 + be * c1 * c2 - al * be * d1 * d2
        f = a1 * b2 + b1 * a2 - be * (c1 * d2 - d1 * c2)
        g = a1 * c2 + c1 * a2 + al * (b1 * d2 - d1 * b2)
        h = a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2
        for v in (e, f, g, h):
            if v % 2:
                raise SpecError("product left the order lattice (internal)")
        return QuatElem(self.order, e // 2, f // 2, g // 2, h // 2)

    def __pow__(self, n):
        if n < 0:
            raise SpecError("negative powers not defined in the order")
        result = self.order.one()
        acc = self
        while n:
            if n & 1:
                result = result * acc
            acc = acc * acc
            n >>= 1
        return result

    def conj(self):
        return QuatElem(self.order, self.a, -self.b, -self.c, -self.d)

    def reduced_norm(self) -> int:
        al, be = self.order.alpha, self.order.beta
        val = (self.a ** 2 - al * self.b ** 2 - be * self.c ** 2
               + al * be * self.d ** 2)
        if val % 4:
            raise SpecError("norm not integral (internal)")
        return val // 4

    def reduced_trace(self) -> int:
        return self.a

    def _coerce(self, other):
        if isinstance(other, int):
            return QuatElem(self.order, 2 * other, 0, 0, 0)
        if not isinstance(other, QuatElem) or other.order != self.order:
            raise SpecError("mixed quaternion orders")
        return other


def v_I(x: QuatElem, p: int | None = None) -> int:
    """Valuation at the two-sided maximal ideal above p: v_p(reduced norm)."""
    if x.is_zero():
        raise ZeroInput("valuation of zero")
    if p is not None and p != x.order.p:
        raise SpecError(f"order belongs to p = {x.order.p}, not {p}")
    return v_p_int(x.reduced_norm(), x.order.p)


def lte_quat(x: QuatElem, y: QuatElem, n: int) -> int:
    """Quaternionic exponent lift: v(x^n - y^n) = v(x - y) + 2*v_p(n).

    The inputs must commute: the geometric-sum and binomial expansions
    behind the identity need xy = yx, and noncommuting pairs satisfying
    the valuation hypotheses genuinely break it (e.g. in the p = 3 order,
    x = (3+2i-3j+2k)/2 and y = (-4i+6j-10k)/2 have v(x-y) = 2 but
    v(x^3 - y^3) = 3, not 4).  Every intended use compares a power of one
    element against a central root of unity, which always commutes.
    """
    if x.order != y.order:
        raise SpecError("mixed quaternion orders")
    p = x.order.p
    if not (x * y - y * x).is_zero():
        raise HypothesisViolated("x and y must commute")
    if v_I(x) != 0 or v_I(y) != 0:
        raise HypothesisViolated("x, y must be units at the ideal")
    diff = x - y
    if diff.is_zero():
        raise HypothesisViolated("x == y makes the identity vacuous")
    base = v_I(diff)
    if base < 1:
        raise HypothesisViolated("x - y must lie in the ideal")
    if p == 3 and base < 2:
        raise HypothesisViolated("p = 3 requires valuation >= 2 of x - y")
    if p == 2 and base < 3:
        raise HypothesisViolated("p = 2 requires valuation >= 3 of x - y")
    value = base + 2 * v_p(n, p)
    if n <= _DIRECT_CHECK_N_CAP:
        direct = v_I(x ** n - y ** n)
        if direct != value:
            raise Mismatch(f"quaternion exponent lift: {value} != direct {direct}")
    return value


# -- unit groups and the gamma tables ----------------------------------------------------


def hurwitz_units():
    """All 24 units of the Hurwitz order."""
    units = []
    for axis in range(4):
        for s in (1, -1):
            co = [0, 0, 0, 0]
            co[axis] = 2 * s
            units.append(QuatElem(HURWITZ, *co))
    for sa in (1, -1):
        for sb in (1, -1):
            for sc in (1, -1):
                for sd in (1, -1):
                    units.append(QuatElem(HURWITZ, sa, sb, sc, sd))
    return units


def b3_units():
    """All 12 units of the p = 3 order."""
    units = []
    for s in (1, -1):
        units.append(QuatElem(B3_ORDER, 2 * s, 0, 0, 0))
        units.append(QuatElem(B3_ORDER, 0, 2 * s, 0, 0))
    for sa in (1, -1):
        for sc in (1, -1):
            units.append(QuatElem(B3_ORDER, sa, 0, sc, 0))
            units.append(QuatElem(B3_ORDER, 0, sa, 0, sc))
    return units


def quad_roots_of_unity(ring: QuadRing):
    """Roots of unity in Z[tau], grouped as {order: [elements]}."""
    found = {}
    disc = -ring.disc  # 4N - T^2 > 0
    for t in (-2, -1, 0, 1, 2):
        num = 4 - t * t
        sols = []
        if num == 0:
            sols = [(t // 2, 0)]
        elif num % disc == 0:
            from .intarith import isqrt_exact
            b2 = num // disc
            broot = isqrt_exact(b2)
            if broot is not None:
                for b in {broot, -broot}:
                    if (t - b * ring.trace) % 2 == 0:
                        sols.append(((t - b * ring.trace) // 2, b))
        for a, b in sols:
            g = QuadElem(ring, a, b)
            if g.norm() != 1:
                continue
            order = _unit_order(g)
            found.setdefault(order, [])
            if g not in found[order]:
                found[order].append(g)
    return found


def _unit_order(g):
    acc = g
    for k in range(1, 13):
        if acc == g.ring.one():
            return k
        acc = acc * g
    raise SpecError("not a root of unity of small order")


def aut_group_table(p: int, j_zero: bool, flavor: str, ring: QuadRing | None = None):
    """Automorphism-group data with the valuation of 1 - gamma per element.

    flavor "quaternion": the full unit group of the hardcoded order for
    p in {2, 3} (j invariant 0), each entry (gamma, v_I(1 - gamma),
    p**v_I(1 - gamma)).  flavor "quadratic": the cyclic groups available in
    the given ring, entries (order k, [(gamma, norm(1 - gamma))]).
    """
    if flavor == "quaternion":
        if p == 2 and j_zero:
            units, order = hurwitz_units(), HURWITZ
        elif p == 3 and j_zero:
            units, order = b3_units(), B3_ORDER
        else:
            raise InvalidCombination("explicit quaternion units exist only for "
                                     "p in {2, 3} with j invariant 0")
        one = order.one()
        table = []
        for g in units:
            if g == one:
                table.append((g, 0, 1))
                continue
            v = v_I(one - g)
            table.append((g, v, p ** v))
        return table
    if flavor == "quadratic":
        if ring is None:
            raise InvalidCombination("quadratic table needs ring parameters")
        by_order = quad_roots_of_unity(ring)
        groups = []
        for k in (2, 3, 4, 6):
            if k not in by_order:
                continue
            gammas = _cyclic_subgroup(ring, by_order, k)
            if gammas is None:
                continue
            entries = [(g, (ring.one() - g).norm() if g != ring.one() else 0)
                       for g in gammas]
            groups.append((k, entries))
        return groups
    raise InvalidCombination(f"unknown flavor {flavor!r}")


def _cyclic_subgroup(ring, by_order, k):
    gens = by_order.get(k)
    if not gens:
        return None
    g = gens[0]
    out = []
    acc = ring.one()
    for _ in range(k):
        out.append(acc)
        acc = acc * g
    return out


# -- norm sequences and their recurrence ---------------------------------------------------


@dataclass(frozen=True)
class NormSequenceReport:
    terms: tuple          # norm(sigma^n - gamma) mod ell, n = 0, 1, ...
    ell: int
    char_poly: tuple      # monic degree-4 recurrence polynomial mod ell
    least_period: int
    preperiod: int
    bound_exponent: int   # least A <= 4 with period | (ell-1)(ell^2-1)ell^A


def _norm_of(x):
    return x.reduced_norm() if isinstance(x, QuatElem) else x.norm()


def _trace_of(x):
    return x.reduced_trace() if isinstance(x, QuatElem) else x.trace()


def _one_like(x):
    return x.order.one() if isinstance(x, QuatElem) else x.ring.one()


def norm_sequence(sigma, gamma, ell: int, length: int) -> NormSequenceReport:
    """norm(sigma^n - gamma) mod ell, computed two independent ways.

    The direct route powers sigma exactly; the second route runs the
    order-4 linear recurrence with characteristic polynomial
    (x-1)(x-N)(x^2-Tx+N) mod ell.  Any disagreement raises Mismatch, as
    does a least period that fails to divide (ell-1)(ell^2-1)ell^A for
    every A <= 4.
    """
    check_prime(ell)
    if length < 8:
        raise SpecError("need at least 8 terms")
    T = _trace_of(sigma) % ell
    N = _norm_of(sigma) % ell
    # (x-1)(x-N) = x^2 - (1+N)x + N ; times (x^2 - Tx + N)
    q1 = [N % ell, (-(1 + N)) % ell, 1]
    q2 = [N % ell, (-T) % ell, 1]
    char = [0] * 5
    for i, ci in enumerate(q1):
        for j, cj in enumerate(q2):
            char[i + j] = (char[i + j] + ci * cj) % ell
    # a_n = r3 a_{n-1} + r2 a_{n-2} + r1 a_{n-3} + r0 a_{n-4}
    rec = [(-char[i]) % ell for i in range(4)]

    one = _one_like(sigma)
    direct = []
    power = one
    for _ in range(max(length, 8)):
        direct.append(_norm_of(power - gamma) % ell)
        power = power * sigma
    seq = list(direct[:4])
    for i in range(4, len(direct)):
        nxt = (rec[3] * seq[i - 1] + rec[2] * seq[i - 2]
               + rec[1] * seq[i - 3] + rec[0] * seq[i - 4]) % ell
        seq.append(nxt)
        if nxt != direct[i]:
            raise Mismatch(f"norm recurrence disagrees at index {i}")

    preperiod, period = _state_cycle(seq[:4], rec, ell)
    bound_a = None
    base = (ell - 1) * (ell * ell - 1)
    for a in range(5):
        if (base * ell ** a) % period == 0:
            bound_a = a
            break
    if bound_a is None:
        raise Mismatch(f"least period {period} violates the recurrence bound")
    return NormSequenceReport(tuple(direct[:length]), ell, tuple(char),
                              period, preperiod, bound_a)


def _state_cycle(state0, rec, ell):
    """Preperiod and least period of the order-4 recurrence orbit."""
    seen = {}
    state = tuple(state0)
    idx = 0
    while state not in seen:
        seen[state] = idx
        nxt = (rec[3] * state[3] + rec[2] * state[2]
               + rec[1] * state[1] + rec[0] * state[0]) % ell
        state = (state[1], state[2], state[3], nxt)
        idx += 1
    first = seen[state]
    return first, idx - first
