"""Exact arithmetic over F_p, its extensions, and the function field F_p(u).

Representation conventions:

* A prime field F_p stores elements as ints in [0, p).
* An extension of degree k over a base context stores elements as length-k
  tuples of base elements (ascending powers of the adjoined root).  The
  modulus is a monic irreducible polynomial over the base, chosen
  deterministically so every run of the library reproduces the same field.
  Towers are allowed; ``field_make(p, k)`` always builds directly over F_p.
* F_p(u) stores a reduced fraction of sparse polynomials in u: tuples of
  (exponent, coefficient) pairs with ascending exponents, denominator
  monic and coprime to the numerator.  Sparseness matters because the
  Frobenius c(u) -> c(u)^p multiplies exponents by p.

Polynomials over any of these contexts are dense ascending coefficient
lists (class Poly).  Over a prime field the heavy operations are routed
through the int-list kernel in ``modpoly``.
"""

from . import modpoly
from .errors import (DivisionByZeroPoly, NoIrreducibleFound, ScaleExceeded,
                     SpecError, ZeroPolynomial)
from .intarith import check_prime, factorize
from .limits import EXTENSION_DEGREE_CAP, poly_degree_cap

_RF_GCD_DEGREE_CAP = 4096


class FieldCtx:
    """Immutable description of a field; shared freely between values."""

    __slots__ = ("p", "k", "flavor", "base", "modulus", "_sig", "_order")

    def __init__(self, p, k, flavor, base=None, modulus=None):
        self.p = p
        self.k = k
        self.flavor = flavor
        self.base = base
        self.modulus = modulus
        if flavor == "ratfunc":
            self._sig = ("rf", p)
            self._order = None
        elif base is None:
            self._sig = ("fp", p)
            self._order = p
        else:
            self._sig = ("ext", base._sig, tuple(c.rep for c in modulus))
            self._order = base.order ** k

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._sig == other._sig

    def __hash__(self):
        return hash(self._sig)

    def __repr__(self):
        if self.flavor == "ratfunc":
            return f"F_{self.p}(u)"
        if self.base is None:
            return f"F_{self.p}"
        return f"F_{self.order}"

    # -- basic data -------------------------------------------------------

    @property
    def order(self):
        if self._order is None:
            raise SpecError("F_p(u) is infinite")
        return self._order

    @property
    def is_prime_field(self):
        return self.flavor == "finite" and self.base is None

    def zero(self):
        return self._make(self._zero_rep())

    def one(self):
        return self.from_int(1)

    def _zero_rep(self):
        if self.flavor == "ratfunc":
            return ((), ((0, 1),))
        if self.base is None:
            return 0
        return (self.base.zero(),) * self.k

    def _make(self, rep):
        return FieldElem(self, rep)

    def from_int(self, n):
        if self.flavor == "ratfunc":
            c = n % self.p
            num = ((0, c),) if c else ()
            return self._make((num, ((0, 1),)))
        if self.base is None:
            return self._make(n % self.p)
        rep = (self.base.from_int(n),) + (self.base.zero(),) * (self.k - 1)
        return self._make(rep)

    def elem(self, value):
        """Coerce an int, a base-element vector, or an element of this ctx."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise SpecError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, (list, tuple)) and self.flavor == "finite" and self.base is not None:
            vec = [self.base.elem(v) for v in value]
            if len(vec) > self.k:
                raise SpecError("vector longer than extension degree")
            vec += [self.base.zero()] * (self.k - len(vec))
            return self._make(tuple(vec))
        raise SpecError(f"cannot coerce {value!r} into {self!r}")

    def u(self):
        """The transcendental generator of F_p(u)."""
        if self.flavor != "ratfunc":
            raise SpecError("u() only exists for the rational-function flavor")
        return self._make((((1, 1),), ((0, 1),)))

    # -- enumeration (finite flavor only) ----------------------------------

    def elements(self):
        for i in range(self.order):
            yield self.elem_at(i)

    def elem_at(self, index):
        if self.base is None:
            return self._make(index % self.p)
        q = self.base.order
        vec = []
        for _ in range(self.k):
            vec.append(self.base.elem_at(index % q))
            index //= q
        return self._make(tuple(vec))

    def index_of(self, elem):
        if self.base is None:
            return elem.rep
        q = self.base.order
        idx = 0
        for part in reversed(elem.rep):
            idx = idx * q + self.base.index_of(part)
        return idx


class FieldElem:
    """Element of a FieldCtx in canonical form.  Immutable."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx, rep):
        self.ctx = ctx
        self.rep = rep

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        if self.ctx.flavor == "ratfunc":
            return not self.rep[0]
        if self.ctx.base is None:
            return self.rep == 0
        return all(c.is_zero() for c in self.rep)

    def is_one(self):
        return self == self.ctx.one()

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if not isinstance(other, FieldElem) or other.ctx != self.ctx:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.ctx._sig, self._repkey()))

    def _repkey(self):
        if self.ctx.flavor == "ratfunc" or self.ctx.base is None:
            return self.rep
        return tuple(c._repkey() for c in self.rep)

    def __repr__(self):
        return f"{self.rep!r} in {self.ctx!r}"

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if not isinstance(other, FieldElem) or other.ctx != self.ctx:
            raise SpecError("mixed-field arithmetic")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        ctx = self.ctx
        if ctx.flavor == "ratfunc":
            a_n, a_d = self.rep
            b_n, b_d = other.rep
            num = _sp_add(_sp_mul(a_n, b_d, ctx.p), _sp_mul(b_n, a_d, ctx.p), ctx.p)
            return ctx._make(_rf_normalize(num, _sp_mul(a_d, b_d, ctx.p), ctx.p))
        if ctx.base is None:
            return ctx._make((self.rep + other.rep) % ctx.p)
        return ctx._make(tuple(a + b for a, b in zip(self.rep, other.rep)))

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        if ctx.flavor == "ratfunc":
            num, den = self.rep
            return ctx._make((_sp_neg(num, ctx.p), den))
        if ctx.base is None:
            return ctx._make(-self.rep % ctx.p)
        return ctx._make(tuple(-a for a in self.rep))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        ctx = self.ctx
        if ctx.flavor == "ratfunc":
            a_n, a_d = self.rep
            b_n, b_d = other.rep
            num = _sp_mul(a_n, b_n, ctx.p)
            den = _sp_mul(a_d, b_d, ctx.p)
            return ctx._make(_rf_normalize(num, den, ctx.p))
        if ctx.base is None:
            return ctx._make(self.rep * other.rep % ctx.p)
        conv = [ctx.base.zero()] * (2 * ctx.k - 1)
        for i, a in enumerate(self.rep):
            if a.is_zero():
                continue
            for j, b in enumerate(other.rep):
                if not b.is_zero():
                    conv[i + j] = conv[i + j] + a * b
        return ctx._make(_ext_reduce(ctx, conv))

    __rmul__ = __mul__

    def inverse(self):
        ctx = self.ctx
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if ctx.flavor == "ratfunc":
            num, den = self.rep
            return ctx._make(_rf_normalize(den, num, ctx.p))
        if ctx.base is None:
            return ctx._make(pow(self.rep, ctx.p - 2, ctx.p))
        me = Poly.from_elems(ctx.base, list(self.rep))
        modulus = Poly.from_elems(ctx.base, list(ctx.modulus))
        g, s = _poly_half_xgcd(me, modulus)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible (modulus not irreducible?)")
        s = s * Poly.from_elems(ctx.base, [g.coeffs[0].inverse()])
        rep = list(s.coeffs) + [ctx.base.zero()] * (ctx.k - len(s.coeffs))
        return ctx._make(tuple(rep[:ctx.k]))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        ctx = self.ctx
        if ctx.base is None and ctx.flavor == "finite":
            return ctx._make(pow(self.rep, e, ctx.p))
        result = ctx.one()
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    # -- characteristic-p structure ------------------------------------------

    def frobenius(self, times=1):
        """Apply c -> c^p the given number of times."""
        ctx = self.ctx
        if ctx.flavor == "ratfunc":
            num, den = self.rep
            scale = ctx.p ** times
            num = tuple((e * scale, c) for e, c in num)
            den = tuple((e * scale, c) for e, c in den)
            return ctx._make((num, den))
        return self ** (ctx.p ** times)

    def pth_root(self):
        """Unique p-th root in a finite field (perfect field)."""
        ctx = self.ctx
        if ctx.flavor != "finite":
            raise SpecError("p-th roots only implemented for finite fields")
        return self ** (ctx.order // ctx.p)

    # -- rational-function extras ---------------------------------------------

    def is_constant(self):
        if self.ctx.flavor != "ratfunc":
            return True
        num, den = self.rep
        return den == ((0, 1),) and (not num or (len(num) == 1 and num[0][0] == 0))

    def constant_value(self):
        if not self.is_constant():
            raise SpecError("element is not constant")
        if self.ctx.flavor != "ratfunc":
            raise SpecError("constant_value is a rational-function accessor")
        num = self.rep[0]
        return num[0][1] if num else 0


# -- sparse F_p[u] helpers (exponent, coefficient) ------------------------------


def _sp_add(a, b, p):
    out = dict(a)
    for e, c in b:
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return tuple(sorted(out.items()))


def _sp_neg(a, p):
    return tuple((e, (-c) % p) for e, c in a)


def _sp_mul(a, b, p):
    out = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            v = (out.get(e, 0) + ca * cb) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return tuple(sorted(out.items()))


def _sp_to_dense(a):
    if not a:
        return []
    out = [0] * (a[-1][0] + 1)
    for e, c in a:
        out[e] = c
    return out


def _dense_to_sp(a):
    return tuple((e, c) for e, c in enumerate(a) if c)


def _rf_normalize(num, den, p):
    """Reduce a fraction of sparse polynomials to canonical form."""
    if not den:
        raise DivisionByZeroPoly("zero denominator in F_p(u)")
    if not num:
        return ((), ((0, 1),))
    shift = min(num[0][0], den[0][0])
    if shift:
        num = tuple((e - shift, c) for e, c in num)
        den = tuple((e - shift, c) for e, c in den)
    num_mono = len(num) == 1
    den_mono = len(den) == 1
    if not num_mono and not den_mono:
        if max(num[-1][0], den[-1][0]) > _RF_GCD_DEGREE_CAP:
            raise ScaleExceeded("rational-function gcd beyond degree cap")
        g = modpoly.gcd(_sp_to_dense(num), _sp_to_dense(den), p)
        if modpoly.deg(g) > 0:
            num = _dense_to_sp(modpoly.divrem(_sp_to_dense(num), g, p)[0])
            den = _dense_to_sp(modpoly.divrem(_sp_to_dense(den), g, p)[0])
    lead = den[-1][1]
    if lead != 1:
        inv = pow(lead, p - 2, p)
        num = tuple((e, c * inv % p) for e, c in num)
        den = tuple((e, c * inv % p) for e, c in den)
    return (num, den)


def _ext_reduce(ctx, conv):
    """Reduce a raw convolution by the monic modulus of an extension."""
    mod = ctx.modulus
    k = ctx.k
    for i in range(len(conv) - 1, k - 1, -1):
        c = conv[i]
        if c.is_zero():
            continue
        for j in range(k):
            conv[i - k + j] = conv[i - k + j] - c * mod[j]
    return tuple(conv[:k])


def embed(elem, target):
    """Inject an element into an extension built over its own context."""
    if elem.ctx == target:
        return elem
    if target.flavor == "finite" and target.base is not None:
        below = embed(elem, target.base)
        rep = (below,) + (target.base.zero(),) * (target.k - 1)
        return target._make(rep)
    raise SpecError("no embedding path to the requested field")


# -- polynomials -----------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over a FieldCtx (ascending, trimmed)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def from_elems(cls, ctx, elems):
        elems = list(elems)
        while elems and elems[-1].is_zero():
            elems.pop()
        return cls(ctx, tuple(elems))

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls.from_elems(ctx, [ctx.from_int(c) for c in ints])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls.from_ints(ctx, [1])

    @classmethod
    def x_power(cls, ctx, n, scale=1):
        return cls.from_ints(ctx, [0] * n + [scale])

    # -- views -------------------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of zero")
        return self.coeffs[-1]

    def _ints(self):
        return [c.rep for c in self.coeffs]

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ctx == self.ctx
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ctx._sig, tuple(c._repkey() for c in self.coeffs)))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        if self.ctx.is_prime_field:
            terms = [f"{c.rep}*x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
            return "Poly(" + " + ".join(terms) + f" over {self.ctx!r})"
        return f"Poly(deg {self.degree} over {self.ctx!r})"

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if self.ctx.is_prime_field:
            return Poly.from_ints(self.ctx, modpoly.add(self._ints(), other._ints(), self.ctx.p))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly.from_elems(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        if self.ctx.is_prime_field:
            return Poly.from_ints(self.ctx, modpoly.neg(self._ints(), self.ctx.p))
        return Poly.from_elems(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            other = Poly.from_elems(self.ctx, [other])
        self._check(other)
        if self.ctx.is_prime_field:
            return Poly.from_ints(self.ctx, modpoly.mul(self._ints(), other._ints(), self.ctx.p))
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ctx)
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly.from_elems(self.ctx, out)

    def scale(self, elem):
        return self * Poly.from_elems(self.ctx, [elem])

    def __pow__(self, e):
        if e < 0:
            raise SpecError("negative polynomial powers are not defined")
        result = Poly.one(self.ctx)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def divrem(self, other):
        """Quotient and remainder with deg r < deg other."""
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        if self.ctx.is_prime_field:
            q, r = modpoly.divrem(self._ints(), other._ints(), self.ctx.p)
            return Poly.from_ints(self.ctx, q), Poly.from_ints(self.ctx, r)
        if self.degree < other.degree:
            return Poly.zero(self.ctx), self
        lead_inv = other.leading.inverse()
        rem = list(self.coeffs)
        lb = len(other.coeffs)
        q = [self.ctx.zero()] * (len(rem) - lb + 1)
        for i in range(len(rem) - lb, -1, -1):
            c = rem[i + lb - 1]
            if c.is_zero():
                continue
            c = c * lead_inv
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        return Poly.from_elems(self.ctx, q), Poly.from_elems(self.ctx, rem[:lb - 1])

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        if self.leading.is_one():
            return self
        inv = self.leading.inverse()
        return Poly.from_elems(self.ctx, [c * inv for c in self.coeffs])

    def gcd(self, other):
        """Monic greatest common divisor."""
        self._check(other)
        if self.ctx.is_prime_field:
            return Poly.from_ints(self.ctx, modpoly.gcd(self._ints(), other._ints(), self.ctx.p))
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        if self.ctx.is_prime_field:
            return Poly.from_ints(self.ctx, modpoly.derivative(self._ints(), self.ctx.p))
        out = [self.ctx.from_int(i) * c for i, c in enumerate(self.coeffs)][1:]
        return Poly.from_elems(self.ctx, out)

    def eval(self, x):
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """Substitution self(other(x))."""
        self._check(other)
        acc = Poly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.from_elems(self.ctx, [c])
        return acc

    def pow_mod(self, e, modulus):
        if self.ctx.is_prime_field:
            out = modpoly.pow_mod(self._ints(), e, modulus._ints(), self.ctx.p)
            return Poly.from_ints(self.ctx, out)
        result = Poly.one(self.ctx)
        acc = self % modulus
        while e:
            if e & 1:
                result = (result * acc) % modulus
            acc = (acc * acc) % modulus
            e >>= 1
        return result

    def shift(self, n):
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return Poly(self.ctx, (self.ctx.zero(),) * n + self.coeffs)

    def map_coeffs(self, fn):
        return Poly.from_elems(self.ctx, [fn(c) for c in self.coeffs])

    def _check(self, other):
        if not isinstance(other, Poly) or other.ctx != self.ctx:
            raise SpecError("mixed-context polynomial arithmetic")


def _poly_half_xgcd(a, b):
    """Return (g, s) with s*a == g (mod b), g = gcd(a, b), not normalized."""
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    return r0, s0


# -- field construction -----------------------------------------------------------


def _irreducible_int(coeffs, p):
    """Rabin irreducibility test for a monic int-list polynomial over F_p."""
    k = modpoly.deg(coeffs)
    x = [0, 1]
    if modpoly.pow_mod(x, p ** k, coeffs, p) != x:
        return False
    for r in factorize(k):
        probe = modpoly.sub(modpoly.pow_mod(x, p ** (k // r), coeffs, p), x, p)
        if modpoly.deg(modpoly.gcd(probe, coeffs, p)) != 0:
            return False
    return True


def _irreducible_generic(poly, ctx):
    k = poly.degree
    q = ctx.order
    x = Poly.x_power(ctx, 1)
    if x.pow_mod(q ** k, poly) != x:
        return False
    for r in factorize(k):
        probe = x.pow_mod(q ** (k // r), poly) - x
        if probe.gcd(poly).degree != 0:
            return False
    return True


def field_make(p, k=1, seed=None):
    """Deterministic field constructor.

    The modulus is the (seed)-th monic irreducible of degree k in the
    ascending coefficient enumeration (seed None or 0 gives the least one),
    so runs are reproducible.
    """
    check_prime(p)
    if not 1 <= k <= EXTENSION_DEGREE_CAP:
        raise SpecError(f"extension degree {k} outside [1, {EXTENSION_DEGREE_CAP}]")
    prime = FieldCtx(p, 1, "finite")
    if k == 1:
        return prime
    skip = seed or 0
    for m in range(p ** k):
        coeffs = []
        mm = m
        for _ in range(k):
            coeffs.append(mm % p)
            mm //= p
        coeffs.append(1)
        if _irreducible_int(coeffs, p):
            if skip == 0:
                modulus = tuple(prime.from_int(c) for c in coeffs)
                return FieldCtx(p, k, "finite", base=prime, modulus=modulus)
            skip -= 1
    raise NoIrreducibleFound(f"no irreducible of degree {k} over F_{p}")


def extend_field(ctx, degree, seed=None):
    """Degree-`degree` extension of an existing finite context (tower step)."""
    if ctx.flavor != "finite":
        raise SpecError("can only extend finite fields")
    if degree == 1:
        return ctx
    if ctx.is_prime_field:
        return field_make(ctx.p, degree, seed=seed)
    skip = seed or 0
    q = ctx.order
    for m in range(q ** degree):
        vec = []
        mm = m
        for _ in range(degree):
            vec.append(ctx.elem_at(mm % q))
            mm //= q
        vec.append(ctx.one())
        cand = Poly.from_elems(ctx, vec)
        if cand.degree == degree and _irreducible_generic(cand, ctx):
            if skip == 0:
                return FieldCtx(ctx.p, degree, "finite", base=ctx,
                                modulus=tuple(cand.coeffs))
            skip -= 1
    raise NoIrreducibleFound(f"no irreducible of degree {degree} over {ctx!r}")


def ratfunc_field(p):
    check_prime(p)
    return FieldCtx(p, 1, "ratfunc")


# -- root structure -----------------------------------------------------------------


def separable_radical(f: Poly) -> Poly:
    """Monic squarefree polynomial with the same closure roots as f.

    Handles vanishing derivatives by taking coefficientwise p-th roots of
    f = g(x^p) and recursing; valid because finite fields are perfect.
    """
    if f.is_zero():
        raise ZeroPolynomial("radical of zero polynomial")
    ctx = f.ctx
    if ctx.flavor != "finite":
        raise SpecError("separable radical needs a finite coefficient field")
    if ctx.is_prime_field:
        rad = modpoly.separable_radical(f._ints(), ctx.p)
        return Poly.from_ints(ctx, rad)
    return _radical_generic(f.monic())


def _radical_generic(f):
    ctx = f.ctx
    if f.degree <= 0:
        return Poly.one(ctx)
    fp = f.derivative()
    if fp.is_zero():
        g = Poly.from_elems(ctx, [f.coeffs[i].pth_root()
                                  for i in range(0, len(f.coeffs), ctx.p)])
        return _radical_generic(g.monic())
    d = f.gcd(fp)
    if d.degree == 0:
        return f
    w = (f // d).monic()
    r = f
    g = r.gcd(w)
    while g.degree > 0:
        r = r // g
        g = r.gcd(w)
    if r.degree == 0:
        return w
    return (w * _radical_generic(r.monic())).monic()


def distinct_root_count(f: Poly) -> int:
    """Number of distinct roots of f in the algebraic closure."""
    return separable_radical(f).degree


def check_poly_scale(degree):
    cap = poly_degree_cap()
    if degree > cap:
        raise ScaleExceeded(f"polynomial degree {degree} exceeds cap {cap}")
